#pragma once

// Explicit TI MPS constructions: the floor(n/2)+1 dimensional W-state
// representation, the scaled-matrix-unit feasibility checker, and the
// canonical n x n representation of scaled-matrix-unit reps.

#include <optional>
#include <vector>

#include "timps/mps.hpp"

namespace timps {

inline constexpr double kRootTolerance = 1e-10;

class RootNotFound : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A root of a univariate polynomial with |p(root)| <= 1e-10. Among all
/// roots the one of minimal modulus is returned, ties going to the smallest
/// principal argument. Throws std::invalid_argument for constant input and
/// RootNotFound when refinement cannot reach the tolerance.
ComplexF solve_trace_root(const MultiPoly& p);

/// All complex roots, polished by Newton steps (unordered).
std::vector<ComplexF> polynomial_roots(const MultiPoly& p);

struct WConstruction {
  std::size_t n = 0;
  std::size_t d = 0;
  ComplexF x;
  /// Tr(A0^n) as a polynomial in x.
  MultiPoly trace_poly;
  FloatRep rep;
  SymbolicRep symbolic_rep;
  /// (A0^{n-1})_{d,1}, the common coefficient of every weight-one string.
  double const_value = 0.0;

  /// Exact rep when the trace polynomial is linear, so x is rational.
  std::optional<ExactRep> exact_rep() const;
};

/// Symbolic W matrices: A0 = sum_{k<d} (E_{1,k} + E_{k+1,k}) + x E_{1,d}, A1 = E_{1,d}.
SymbolicRep w_symbolic_rep(std::size_t d);

WConstruction build_w(std::size_t n);

/// Scales the W rep by (c sqrt(n))^{-1/n} so it represents the normalized W-state.
FloatRep normalize_w(const WConstruction& w);

/// Coefficients of the normalized W-state: 1/sqrt(n) on weight one, else 0.
ComplexF normalized_w_coefficient(const Necklace& key);

/// A1 = lambda E_{j,k} with j != k (0-based indices), paired with an exact A0.
struct UnitRepSpec {
  GaussianRational lambda{1};
  std::size_t j = 0;
  std::size_t k = 1;
  Matrix<GaussianRational> a0;

  ExactRep rep() const;
};

/// Recognizes A1 = lambda E_{j,k}, j != k.
std::optional<UnitRepSpec> detect_unit_spec(const ExactRep& rep);

struct UnitEquation {
  Necklace necklace = Necklace::zeros(1);
  /// Zero-run lengths (p_1, ..., p_l); empty for the all-zero trace equation.
  std::vector<std::size_t> gaps;
  /// lambda^l prod_m (A0^{p_m})_{k,j}, or Tr(A0^n) for the all-zero class.
  GaussianRational lhs;
  GaussianRational rhs;
  bool satisfied = false;
};

struct UnitRepReport {
  bool condition1 = true;
  /// Supported classes that contain cyclically adjacent ones.
  std::vector<Necklace> condition1_violations;
  UnitEquation trace_equation;
  std::vector<UnitEquation> sparse_equations;
  bool passed = false;

  std::vector<UnitEquation> violated_equations() const;
};

/// Sparse necklaces 1 0^{p_1} 1 0^{p_2} ... 1 0^{p_l} with all p_m > 0,
/// built from compositions and deduplicated by rotation.
std::vector<Necklace> sparse_necklaces(std::size_t n);

UnitRepReport check_unit_rep(const UnitRepSpec& spec, const TIState& s);

struct CanonicalParams {
  /// gamma_q = ((B0/lambda)^q)_{k,j}, q = 1..n-1.
  std::vector<GaussianRational> gammas;
  /// Principal n-th root of tau.
  ComplexF omega;
  /// tau = Tr((B0/lambda)^n), so omega^n = tau.
  GaussianRational omega_pow_n;
  GaussianRational lambda;
};

struct CanonicalResult {
  std::size_t n = 0;
  CanonicalParams params;
  FloatRep numeric;
  /// Entries are polynomials in a formal w standing for omega.
  SymbolicRep symbolic;
  /// Present when omega is itself exact (tau = 0 or a rational n-th power).
  std::optional<ExactRep> exact;
};

/// n x n representation A0 = lambda (sum gamma_{n-c} E_{1,c+1} + sum E_{r,r+1}
/// + omega E_{2,2}), A1 = lambda E_{n,1} of the state represented by
/// (B0, lambda E_{j,k}).
CanonicalResult canonicalize(const UnitRepSpec& input, std::size_t n);

/// Exact coefficient of the canonical rep, reducing w^n to tau.
GaussianRational canonical_coefficient(const CanonicalResult& result, const Necklace& key);

/// Unscaled upper shift A0 = sum E_{m,m+1}, A1 = E_{n,1} (n x n); represents
/// the unnormalized W-state.
ExactRep upper_shift_rep(std::size_t n);
UnitRepSpec upper_shift_spec(std::size_t n);
/// Both matrices scaled by n^{-1/(2n)}: the normalized W-state.
FloatRep upper_shift_normalized(std::size_t n);

/// sqrt(sum over all 2^n strings |c|^2) of the represented state.
double state_norm(const FloatRep& rep, std::size_t n, std::size_t necklace_cap = kDefaultNecklaceCap);

}  // namespace timps
