#pragma once

// Sparse multivariate polynomials over Q(i) and Buchberger's algorithm.

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "timps/scalars.hpp"

namespace timps {

enum class MonomialOrder { Lex, GrevLex };

MonomialOrder parse_order(std::string_view name);
std::string to_string(MonomialOrder order);

class ArityMismatch : public std::invalid_argument {
public:
  ArityMismatch() : std::invalid_argument("polynomial arity mismatch") {}
};

class BudgetExceeded : public std::runtime_error {
public:
  explicit BudgetExceeded(std::uint64_t budget)
      : std::runtime_error("polynomial engine exceeded budget of " + std::to_string(budget) +
                           " monomial operations"),
        budget_(budget) {}
  std::uint64_t budget() const { return budget_; }

private:
  std::uint64_t budget_;
};

/// Exponent vector with inline storage. Arity is capped at kMaxArity and
/// individual exponents at 255; exceeding either throws.
class Monomial {
public:
  static constexpr std::size_t kMaxArity = 64;

  Monomial() = default;
  explicit Monomial(std::size_t arity);
  Monomial(std::initializer_list<unsigned> exponents);
  explicit Monomial(std::span<const unsigned> exponents);

  static Monomial variable(std::size_t arity, std::size_t index, unsigned power = 1);

  std::size_t arity() const { return arity_; }
  unsigned degree() const { return degree_; }
  unsigned operator[](std::size_t i) const { return exps_[i]; }
  bool is_one() const { return degree_ == 0; }
  /// Bit i set iff variable (i mod 64) occurs; a cheap divisibility pre-filter.
  std::uint64_t support_mask() const { return mask_; }

  bool divides(const Monomial& other) const;
  /// other / *this; requires divides(other).
  Monomial quotient_of(const Monomial& other) const;
  bool coprime(const Monomial& other) const { return (mask_ & other.mask_) == 0; }

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

private:
  void set(std::size_t i, unsigned e);

  std::array<std::uint8_t, kMaxArity> exps_{};
  std::uint32_t degree_ = 0;
  std::uint16_t arity_ = 0;
  std::uint64_t mask_ = 0;
};

/// Three-way comparison: negative if a < b, zero if equal, positive if a > b.
int compare(const Monomial& a, const Monomial& b, MonomialOrder order);

struct Term {
  Monomial mono;
  GaussianRational coeff;
};

/// Terms are kept sorted by decreasing monomial under the polynomial's order,
/// with no zero coefficients stored.
class MultiPoly {
public:
  MultiPoly() = default;
  explicit MultiPoly(std::size_t arity, MonomialOrder order = MonomialOrder::GrevLex);

  static MultiPoly constant(std::size_t arity, const GaussianRational& c,
                            MonomialOrder order = MonomialOrder::GrevLex);
  static MultiPoly variable(std::size_t arity, std::size_t index,
                            MonomialOrder order = MonomialOrder::GrevLex);
  /// Combines like terms and drops zeros.
  static MultiPoly from_terms(std::size_t arity, std::vector<Term> terms,
                              MonomialOrder order = MonomialOrder::GrevLex);

  std::size_t arity() const { return arity_; }
  MonomialOrder order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  /// Coefficient of the empty monomial.
  GaussianRational constant_term() const;
  GaussianRational coefficient(const Monomial& m) const;
  unsigned total_degree() const;

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  const GaussianRational& leading_coefficient() const { return terms_.front().coeff; }

  MultiPoly with_order(MonomialOrder order) const;
  MultiPoly monic() const;
  MultiPoly scaled(const GaussianRational& c) const;
  MultiPoly mul_term(const Monomial& m, const GaussianRational& c) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  MultiPoly operator-() const { return scaled(GaussianRational(-1)); }

  /// Structural equality; orders may differ.
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Human-readable dump, "coeff*x1^e1*x2^e2 + ...". Variables default to x1..xm.
  std::string str(std::span<const std::string> names = {}) const;

  /// this - c * m * g, accumulating work into *ops. Used by the reducer.
  void sub_mul_term(const GaussianRational& c, const Monomial& m, const MultiPoly& g, std::uint64_t* ops);

private:
  friend class Reducer;
  void check_arity(const MultiPoly& o) const {
    if (o.arity_ != arity_) throw ArityMismatch();
  }

  std::size_t arity_ = 0;
  MonomialOrder order_ = MonomialOrder::GrevLex;
  std::vector<Term> terms_;
};

MultiPoly poly_add(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_mul(const MultiPoly& p, const MultiPoly& q);
MultiPoly poly_pow(const MultiPoly& p, unsigned e);

/// Tracks monomial operations against a budget; throws BudgetExceeded.
class WorkBudget {
public:
  static constexpr std::uint64_t kDefault = 10'000'000;

  explicit WorkBudget(std::uint64_t limit = kDefault) : limit_(limit) {}
  void charge(std::uint64_t ops) {
    used_ += ops;
    if (used_ > limit_) throw BudgetExceeded(limit_);
  }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// Full normal form of p modulo basis: p - r lies in the ideal and no term
/// of r is divisible by a leading monomial of the basis.
MultiPoly reduce(const MultiPoly& p, std::span<const MultiPoly> basis,
                 MonomialOrder order = MonomialOrder::GrevLex);
MultiPoly reduce(const MultiPoly& p, std::span<const MultiPoly> basis, MonomialOrder order,
                 WorkBudget& budget);

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g);

struct GroebnerOptions {
  MonomialOrder order = MonomialOrder::GrevLex;
  std::uint64_t budget = WorkBudget::kDefault;
};

struct GroebnerStats {
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_reduced = 0;
  std::uint64_t zero_reductions = 0;
  std::uint64_t monomial_ops = 0;
};

/// Reduced Groebner basis, monic, sorted by increasing leading monomial.
/// Throws BudgetExceeded when the monomial-operation budget runs out.
std::vector<MultiPoly> buchberger(std::span<const MultiPoly> gens, const GroebnerOptions& options = {},
                                  GroebnerStats* stats = nullptr);
std::vector<MultiPoly> buchberger(std::span<const MultiPoly> gens, MonomialOrder order);

bool is_groebner_basis(std::span<const MultiPoly> basis);

/// True iff the reduced basis is {c} for a nonzero constant c.
bool contains_one(std::span<const MultiPoly> basis);

ComplexF eval_poly(const MultiPoly& p, std::span<const ComplexF> point);

}  // namespace timps
