#pragma once

// Translation-invariant qubit states keyed by binary necklaces.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "timps/scalars.hpp"

namespace timps {

inline constexpr std::size_t kDefaultNecklaceCap = 24;

class CapExceeded : public std::length_error {
public:
  using std::length_error::length_error;
};

/// A binary string stored as its lexicographically minimal rotation.
class Necklace {
public:
  /// Canonicalizes `bits` (characters '0'/'1'); throws on empty or non-binary input.
  explicit Necklace(std::string_view bits);

  static Necklace zeros(std::size_t n) { return Necklace(std::string(n, '0')); }
  /// The class of 0...01 (a single one).
  static Necklace single_one(std::size_t n);

  const std::string& bits() const { return bits_; }
  std::size_t length() const { return bits_.size(); }
  std::size_t weight() const;
  /// Size of the rotation orbit (smallest p with the string p-periodic).
  std::size_t period() const;
  /// True if two ones are cyclically adjacent.
  bool has_adjacent_ones() const;

  /// Gap lengths (p_1, ..., p_l) between consecutive ones, read cyclically
  /// starting at some one; empty when the necklace has no ones.
  std::vector<std::size_t> gaps() const;

  friend auto operator<=>(const Necklace&, const Necklace&) = default;
  friend bool operator==(const Necklace&, const Necklace&) = default;

private:
  struct Canonical {};
  Necklace(std::string bits, Canonical) : bits_(std::move(bits)) {}
  friend std::vector<Necklace> enumerate_necklaces(std::size_t, std::size_t);

  std::string bits_;
};

/// Lexicographically minimal cyclic rotation of a nonempty bit string.
Necklace canonical_rotation(std::string_view bits);

/// All binary necklaces of length n in increasing order. Throws CapExceeded
/// when n is above `cap`.
std::vector<Necklace> enumerate_necklaces(std::size_t n, std::size_t cap = kDefaultNecklaceCap);

/// (1/n) sum_{p | n} phi(p) 2^(n/p), the number of binary necklaces of length n.
std::uint64_t polya_count(unsigned n);

std::uint64_t euler_totient(std::uint64_t m);

/// A TI state of n qubits: one exact coefficient per necklace class,
/// absent classes meaning zero.
class TIState {
public:
  explicit TIState(std::size_t n);

  std::size_t n() const { return n_; }
  const std::map<Necklace, GaussianRational>& coeffs() const { return coeffs_; }
  GaussianRational coefficient(const Necklace& key) const;
  /// Sets (or clears, when zero) the coefficient of the class of `key`.
  void set(const Necklace& key, const GaussianRational& value);

  bool is_zero() const { return coeffs_.empty(); }

  /// Full 2^n coefficient vector; bit string s maps to index sum_k s[k] 2^(n-1-k).
  std::vector<GaussianRational> expand(std::size_t cap = kDefaultNecklaceCap) const;

  friend bool operator==(const TIState&, const TIState&) = default;

private:
  std::size_t n_;
  std::map<Necklace, GaussianRational> coeffs_;
};

class NotRepresentable : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Weight-one superposition. Unnormalized: coefficient 1 on 0...01.
/// Normalized requires n to be a perfect square so that 1/sqrt(n) is rational.
TIState w_state(std::size_t n, bool normalized = false);

TIState scale_state(const TIState& s, const GaussianRational& lambda);

/// No supported necklace has two cyclically adjacent ones.
bool is_unit_sparse(const TIState& s);

/// Exchanges the roles of 0 and 1 in every necklace.
TIState flip_bits(const TIState& s);

}  // namespace timps
