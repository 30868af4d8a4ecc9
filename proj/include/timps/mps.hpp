#pragma once

// Translation-invariant MPS with periodic boundary conditions: a pair
// (A0, A1) of d x d matrices whose coefficient on a bit string is the trace
// of the ordered product.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>

#include "timps/matrix.hpp"
#include "timps/states.hpp"

namespace timps {

enum class ScalarDomain { Exact, Floating, Symbolic };

template <class T>
struct MPSRep {
  Matrix<T> a0;
  Matrix<T> a1;

  MPSRep() = default;
  MPSRep(Matrix<T> zero_site, Matrix<T> one_site) : a0(std::move(zero_site)), a1(std::move(one_site)) {
    if (a0.dim() == 0 || a0.dim() != a1.dim()) throw std::invalid_argument("MPS matrices must be square of equal dimension >= 1");
  }

  std::size_t bond_dim() const { return a0.dim(); }
  const Matrix<T>& site(char bit) const { return bit == '1' ? a1 : a0; }
};

using ExactRep = MPSRep<GaussianRational>;
using FloatRep = MPSRep<ComplexF>;
/// Entries are univariate polynomials in a formal variable x.
using SymbolicRep = MPSRep<MultiPoly>;

FloatRep to_floating(const ExactRep& rep);

/// Evaluates traces over one rep, caching powers of A0 so that runs of zeros
/// cost a lookup instead of repeated multiplications.
template <class T>
class TraceEvaluator {
public:
  explicit TraceEvaluator(const MPSRep<T>& rep) : rep_(rep) {}

  const Matrix<T>& a0_power(unsigned e) {
    auto it = powers_.find(e);
    if (it != powers_.end()) return it->second;
    Matrix<T> value;
    if (e == 0) {
      value = Matrix<T>::identity(rep_.bond_dim());
    } else if (e == 1) {
      value = rep_.a0;
    } else {
      const Matrix<T>& half = a0_power(e / 2);
      value = half * half;
      if (e % 2 == 1) value = value * rep_.a0;
    }
    return powers_.emplace(e, std::move(value)).first->second;
  }

  /// Trace of A_{b_1} ... A_{b_n} for any rotation of the necklace.
  T coefficient(const Necklace& key) {
    const std::vector<std::size_t> gaps = key.gaps();
    if (gaps.empty()) return a0_power(static_cast<unsigned>(key.length())).trace();
    Matrix<T> product = rep_.a1 * a0_power(static_cast<unsigned>(gaps[0]));
    for (std::size_t m = 1; m < gaps.size(); ++m) {
      product = product * rep_.a1;
      product = product * a0_power(static_cast<unsigned>(gaps[m]));
    }
    return product.trace();
  }

  /// Ordered product for an arbitrary (not necessarily canonical) bit string.
  T coefficient_of_string(std::string_view bits) {
    Matrix<T> product = Matrix<T>::identity(rep_.bond_dim());
    for (char b : bits) product = product * rep_.site(b);
    return product.trace();
  }

private:
  const MPSRep<T>& rep_;
  std::map<unsigned, Matrix<T>> powers_;
};

template <class T>
T eval_coefficient(const MPSRep<T>& rep, const Necklace& key) {
  TraceEvaluator<T> eval(rep);
  return eval.coefficient(key);
}

/// Canonicalizes `bits` before evaluating.
template <class T>
T eval_coefficient(const MPSRep<T>& rep, std::string_view bits) {
  return eval_coefficient(rep, Necklace(bits));
}

/// Trace coefficient of a univariate-symbolic rep, as a polynomial in x.
MultiPoly trace_polynomial(const SymbolicRep& rep, const Necklace& key);

struct VerifyOptions {
  double tol = 1e-9;
  /// Compare |eval - c| / max(1, |c|) instead of the absolute error.
  bool relative = false;
  std::size_t necklace_cap = kDefaultNecklaceCap;
};

struct VerifyReport {
  double max_abs_error = 0.0;
  std::optional<Necklace> worst_necklace;
  bool passed = true;
  std::size_t checked_classes = 0;
  double tolerance = 0.0;
};

/// Evaluates every necklace class of length n, including zero-coefficient
/// classes, against the expected coefficients.
VerifyReport verify(const FloatRep& rep, std::size_t n, const std::function<ComplexF(const Necklace&)>& expected,
                    const VerifyOptions& options = {});
VerifyReport verify(const FloatRep& rep, const TIState& s, const VerifyOptions& options = {});
VerifyReport verify(const FloatRep& rep, const TIState& s, double tol);

/// Multiplies both matrices by `root`; the represented coefficients of
/// length n scale by root^n.
template <class T>
MPSRep<T> scale_rep(const MPSRep<T>& rep, const T& root) {
  return {rep.a0.scaled(root), rep.a1.scaled(root)};
}

class IllConditioned : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

inline constexpr double kDefaultConditionCap = 1e8;

/// A_i -> S A_i S^{-1}. Throws IllConditioned when S is singular or its
/// 2-norm condition number exceeds `condition_cap`.
FloatRep conjugate_rep(const FloatRep& rep, const Matrix<ComplexF>& s, double condition_cap = kDefaultConditionCap);

/// A random matrix with condition number at most `max_condition`, for gauge tests.
Matrix<ComplexF> random_gauge(std::size_t dim, std::uint64_t seed, double max_condition = 100.0);

}  // namespace timps
