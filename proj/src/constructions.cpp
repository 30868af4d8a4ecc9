#include "timps/constructions.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include <Eigen/Eigenvalues>

namespace timps {

// ---------------------------------------------------------------------------
// Univariate roots

namespace {

std::vector<ComplexF> univariate_coeffs(const MultiPoly& p) {
  if (p.arity() != 1) throw ArityMismatch();
  std::vector<ComplexF> c(p.total_degree() + 1, ComplexF(0.0, 0.0));
  for (const auto& t : p.terms()) c[t.mono[0]] = to_complex(t.coeff);
  return c;
}

std::complex<long double> horner(const std::vector<ComplexF>& c, std::complex<long double> x,
                                 std::complex<long double>* deriv) {
  std::complex<long double> v = 0;
  std::complex<long double> dv = 0;
  for (std::size_t i = c.size(); i-- > 0;) {
    dv = dv * x + v;
    v = v * x + std::complex<long double>(c[i].real(), c[i].imag());
  }
  if (deriv != nullptr) *deriv = dv;
  return v;
}

}  // namespace

std::vector<ComplexF> polynomial_roots(const MultiPoly& p) {
  const std::vector<ComplexF> c = univariate_coeffs(p);
  const std::size_t deg = c.size() - 1;
  if (deg == 0) throw std::invalid_argument("root solve needs a polynomial of degree >= 1");
  if (deg == 1) {
    // Exact division avoids rounding the coefficients first.
    GaussianRational c0 = p.constant_term();
    GaussianRational c1 = p.coefficient(Monomial{1});
    return {to_complex(-c0 / c1)};
  }
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(deg, deg);
  for (std::size_t i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < deg; ++i) companion(i, deg - 1) = -c[i] / c[deg];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  if (solver.info() != Eigen::Success) throw RootNotFound("companion eigenvalue solve failed");
  std::vector<ComplexF> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    std::complex<long double> x(solver.eigenvalues()(i).real(), solver.eigenvalues()(i).imag());
    for (int it = 0; it < 8; ++it) {
      std::complex<long double> dp;
      std::complex<long double> v = horner(c, x, &dp);
      if (std::abs(dp) == 0.0L) break;
      std::complex<long double> step = v / dp;
      x -= step;
      if (std::abs(step) <= 1e-19L * std::max(1.0L, std::abs(x))) break;
    }
    roots.emplace_back(static_cast<double>(x.real()), static_cast<double>(x.imag()));
  }
  return roots;
}

ComplexF solve_trace_root(const MultiPoly& p) {
  std::vector<ComplexF> roots = polynomial_roots(p);
  auto before = [](const ComplexF& a, const ComplexF& b) {
    const double ma = std::abs(a);
    const double mb = std::abs(b);
    if (std::abs(ma - mb) > 1e-9 * std::max(1.0, std::max(ma, mb))) return ma < mb;
    return std::arg(a) < std::arg(b);
  };
  ComplexF best = roots.front();
  for (const auto& r : roots) {
    if (before(r, best)) best = r;
  }
  // Snap signed zeros so that the principal argument is well defined.
  if (best.imag() == 0.0) best = ComplexF(best.real(), 0.0);
  const std::vector<ComplexF> point{best};
  if (!(std::abs(eval_poly(p, point)) <= kRootTolerance)) {
    throw RootNotFound("root refinement did not reach |p(x)| <= 1e-10");
  }
  return best;
}

// ---------------------------------------------------------------------------
// W-state construction

SymbolicRep w_symbolic_rep(std::size_t d) {
  if (d < 2) throw std::invalid_argument("W construction needs d >= 2");
  Matrix<MultiPoly> a0(d);
  const MultiPoly one = MultiPoly::constant(1, GaussianRational(1));
  for (std::size_t k = 0; k + 1 < d; ++k) {
    a0(0, k) += one;
    a0(k + 1, k) += one;
  }
  a0(0, d - 1) += MultiPoly::variable(1, 0);
  Matrix<MultiPoly> a1(d);
  a1(0, d - 1) = one;
  return {std::move(a0), std::move(a1)};
}

WConstruction build_w(std::size_t n) {
  if (n < 2) throw std::invalid_argument("W construction needs n >= 2");
  WConstruction w;
  w.n = n;
  w.d = n / 2 + 1;
  w.symbolic_rep = w_symbolic_rep(w.d);
  TraceEvaluator<MultiPoly> eval(w.symbolic_rep);
  w.trace_poly = eval.coefficient(Necklace::zeros(n));
  w.x = solve_trace_root(w.trace_poly);

  const std::vector<ComplexF> point{w.x};
  auto at_x = [&point](const MultiPoly& e) { return eval_poly(e, point); };
  w.rep = FloatRep(w.symbolic_rep.a0.map(at_x), w.symbolic_rep.a1.map(at_x));

  const MultiPoly corner = eval.a0_power(static_cast<unsigned>(n - 1))(w.d - 1, 0);
  w.const_value = eval_poly(corner, point).real();

  if (n >= 3) {
    const double closed = std::ldexp(1.0, static_cast<int>(n - n / 2) - 2);
    if (!corner.is_constant() || std::abs(w.const_value - closed) > 1e-9 * closed) {
      throw std::logic_error("W construction: (A0^{n-1})_{d,1} = " + corner.str() +
                             " differs from 2^(n - floor(n/2) - 2)");
    }
  }
  return w;
}

std::optional<ExactRep> WConstruction::exact_rep() const {
  if (trace_poly.total_degree() != 1) return std::nullopt;
  const GaussianRational x_exact = -trace_poly.constant_term() / trace_poly.coefficient(Monomial{1});
  auto at_x = [&x_exact](const MultiPoly& e) {
    GaussianRational v;
    for (const auto& t : e.terms()) v += t.coeff * x_exact.pow(t.mono[0]);
    return v;
  };
  return ExactRep(symbolic_rep.a0.map(at_x), symbolic_rep.a1.map(at_x));
}

FloatRep normalize_w(const WConstruction& w) {
  const double n = static_cast<double>(w.n);
  const double factor = std::pow(w.const_value * std::sqrt(n), -1.0 / n);
  return scale_rep(w.rep, ComplexF(factor, 0.0));
}

ComplexF normalized_w_coefficient(const Necklace& key) {
  if (key.weight() != 1) return {0.0, 0.0};
  return {1.0 / std::sqrt(static_cast<double>(key.length())), 0.0};
}

// ---------------------------------------------------------------------------
// Scaled matrix unit representations

ExactRep UnitRepSpec::rep() const {
  const std::size_t d = a0.dim();
  if (j >= d || k >= d || j == k) throw std::invalid_argument("unit spec needs distinct j, k below d");
  if (lambda.is_zero()) throw std::invalid_argument("unit spec needs lambda != 0");
  return {a0, Matrix<GaussianRational>::unit(d, j, k).scaled(lambda)};
}

std::optional<UnitRepSpec> detect_unit_spec(const ExactRep& rep) {
  std::optional<UnitRepSpec> found;
  const std::size_t d = rep.bond_dim();
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      if (rep.a1(r, c).is_zero()) continue;
      if (found || r == c) return std::nullopt;
      found = UnitRepSpec{rep.a1(r, c), r, c, rep.a0};
    }
  }
  return found;
}

std::vector<UnitEquation> UnitRepReport::violated_equations() const {
  std::vector<UnitEquation> out;
  if (!trace_equation.satisfied) out.push_back(trace_equation);
  for (const auto& e : sparse_equations) {
    if (!e.satisfied) out.push_back(e);
  }
  return out;
}

std::vector<Necklace> sparse_necklaces(std::size_t n) {
  std::set<Necklace> seen;
  std::string bits;
  // Each block is "1" followed by p > 0 zeros; blocks must fill n exactly.
  auto extend = [&](auto&& self, std::size_t remaining) -> void {
    if (remaining == 0) {
      seen.insert(Necklace(bits));
      return;
    }
    for (std::size_t p = 1; p + 1 <= remaining; ++p) {
      const std::size_t mark = bits.size();
      bits += '1';
      bits.append(p, '0');
      self(self, remaining - p - 1);
      bits.resize(mark);
    }
  };
  extend(extend, n);
  return {seen.begin(), seen.end()};
}

UnitRepReport check_unit_rep(const UnitRepSpec& spec, const TIState& s) {
  if (s.n() < 2) throw std::invalid_argument("check_unit_rep needs n >= 2");
  const ExactRep rep = spec.rep();
  UnitRepReport report;

  for (const auto& [key, value] : s.coeffs()) {
    if (key.has_adjacent_ones()) report.condition1_violations.push_back(key);
  }
  report.condition1 = report.condition1_violations.empty();

  TraceEvaluator<GaussianRational> eval(rep);
  const Necklace zeros = Necklace::zeros(s.n());
  report.trace_equation.necklace = zeros;
  report.trace_equation.lhs = eval.a0_power(static_cast<unsigned>(s.n())).trace();
  report.trace_equation.rhs = s.coefficient(zeros);
  report.trace_equation.satisfied = report.trace_equation.lhs == report.trace_equation.rhs;

  bool all_sparse = true;
  for (const Necklace& key : sparse_necklaces(s.n())) {
    UnitEquation eq{key, key.gaps(), GaussianRational(1), s.coefficient(key), false};
    for (std::size_t p : eq.gaps) eq.lhs *= eval.a0_power(static_cast<unsigned>(p))(spec.k, spec.j);
    eq.lhs *= spec.lambda.pow(static_cast<unsigned>(eq.gaps.size()));
    eq.satisfied = eq.lhs == eq.rhs;
    all_sparse = all_sparse && eq.satisfied;
    report.sparse_equations.push_back(std::move(eq));
  }
  report.passed = report.condition1 && report.trace_equation.satisfied && all_sparse;
  return report;
}

// ---------------------------------------------------------------------------
// Canonical n x n construction

namespace {

// Exact n-th root of a rational when it exists in Q (or zero).
std::optional<GaussianRational> exact_nth_root(const GaussianRational& tau, std::size_t n) {
  if (tau.is_zero()) return GaussianRational();
  if (!tau.is_real() || sgn(tau.re()) < 0) return std::nullopt;
  mpz_class num;
  mpz_class den;
  const auto nn = static_cast<unsigned long>(n);
  if (mpz_root(num.get_mpz_t(), tau.re().get_num_mpz_t(), nn) == 0) return std::nullopt;
  if (mpz_root(den.get_mpz_t(), tau.re().get_den_mpz_t(), nn) == 0) return std::nullopt;
  return GaussianRational(mpq_class(num, den));
}

ComplexF principal_root(const ComplexF& z, std::size_t n) {
  if (z == ComplexF(0.0, 0.0)) return z;
  return std::polar(std::pow(std::abs(z), 1.0 / static_cast<double>(n)), std::arg(z) / static_cast<double>(n));
}

template <class T>
MPSRep<T> canonical_pair(std::size_t n, const std::vector<T>& gammas, const T& omega, const T& lambda) {
  Matrix<T> d0(n);
  for (std::size_t c = 1; c < n; ++c) d0(0, c) = gammas[n - c - 1];  // gamma_{n-c}
  for (std::size_t r = 1; r + 1 < n; ++r) d0(r, r + 1) = ScalarOps<T>::one();
  d0(1, 1) = omega;
  Matrix<T> d1 = Matrix<T>::unit(n, n - 1, 0);
  return {d0.scaled(lambda), d1.scaled(lambda)};
}

}  // namespace

CanonicalResult canonicalize(const UnitRepSpec& input, std::size_t n) {
  if (n < 2) throw std::invalid_argument("canonicalize needs n >= 2");
  const ExactRep b = input.rep();
  const Matrix<GaussianRational> c0 = b.a0.scaled(input.lambda.inv());
  const ExactRep c_rep(c0, Matrix<GaussianRational>::unit(c0.dim(), input.j, input.k));
  TraceEvaluator<GaussianRational> eval(c_rep);

  CanonicalResult out;
  out.n = n;
  out.params.lambda = input.lambda;
  for (std::size_t q = 1; q < n; ++q) {
    out.params.gammas.push_back(eval.a0_power(static_cast<unsigned>(q))(input.k, input.j));
  }
  out.params.omega_pow_n = eval.a0_power(static_cast<unsigned>(n)).trace();
  out.params.omega = principal_root(to_complex(out.params.omega_pow_n), n);

  std::vector<ComplexF> gammas_f;
  std::vector<MultiPoly> gammas_s;
  for (const auto& g : out.params.gammas) {
    gammas_f.push_back(to_complex(g));
    gammas_s.push_back(MultiPoly::constant(1, g));
  }
  out.numeric = canonical_pair(n, gammas_f, out.params.omega, to_complex(input.lambda));
  out.symbolic = canonical_pair(n, gammas_s, MultiPoly::variable(1, 0), MultiPoly::constant(1, input.lambda));
  if (auto root = exact_nth_root(out.params.omega_pow_n, n)) {
    out.exact = canonical_pair(n, out.params.gammas, *root, input.lambda);
  }

  // (A0^q)_{1,n} = lambda^q gamma_q and Tr A0^n = lambda^n w^n, exactly.
  TraceEvaluator<MultiPoly> sym(out.symbolic);
  for (std::size_t q = 1; q < n; ++q) {
    const MultiPoly want = MultiPoly::constant(1, input.lambda.pow(static_cast<unsigned>(q)) * out.params.gammas[q - 1]);
    if (!(sym.a0_power(static_cast<unsigned>(q))(0, n - 1) == want)) {
      throw std::logic_error("canonical construction: corner entry mismatch at q = " + std::to_string(q));
    }
  }
  const MultiPoly trace_want = MultiPoly::variable(1, 0).mul_term(
      Monomial{static_cast<unsigned>(n - 1)}, input.lambda.pow(static_cast<unsigned>(n)));
  if (!(sym.a0_power(static_cast<unsigned>(n)).trace() == trace_want)) {
    throw std::logic_error("canonical construction: Tr A0^n differs from (lambda w)^n");
  }
  return out;
}

GaussianRational canonical_coefficient(const CanonicalResult& result, const Necklace& key) {
  const MultiPoly p = trace_polynomial(result.symbolic, key);
  const MultiPoly relation = MultiPoly::variable(1, 0).mul_term(Monomial{static_cast<unsigned>(result.n - 1)},
                                                                GaussianRational(1)) -
                             MultiPoly::constant(1, result.params.omega_pow_n);
  const std::vector<MultiPoly> basis{relation};
  const MultiPoly r = reduce(p, basis);
  if (!r.is_constant()) throw std::logic_error("canonical coefficient depends on omega below degree n");
  return r.constant_term();
}

ExactRep upper_shift_rep(std::size_t n) { return upper_shift_spec(n).rep(); }

UnitRepSpec upper_shift_spec(std::size_t n) {
  if (n < 2) throw std::invalid_argument("upper shift needs n >= 2");
  Matrix<GaussianRational> a0(n);
  for (std::size_t m = 0; m + 1 < n; ++m) a0(m, m + 1) = GaussianRational(1);
  return UnitRepSpec{GaussianRational(1), n - 1, 0, std::move(a0)};
}

FloatRep upper_shift_normalized(std::size_t n) {
  const double factor = std::pow(static_cast<double>(n), -1.0 / (2.0 * static_cast<double>(n)));
  return scale_rep(to_floating(upper_shift_rep(n)), ComplexF(factor, 0.0));
}

double state_norm(const FloatRep& rep, std::size_t n, std::size_t necklace_cap) {
  TraceEvaluator<ComplexF> eval(rep);
  double sum = 0.0;
  for (const Necklace& key : enumerate_necklaces(n, necklace_cap)) {
    sum += static_cast<double>(key.period()) * std::norm(eval.coefficient(key));
  }
  return std::sqrt(sum);
}

}  // namespace timps
