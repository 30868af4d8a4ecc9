#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "timps/constructions.hpp"

using timps::ComplexF;
using timps::ExactRep;
using timps::GaussianRational;
using timps::Matrix;
using timps::MultiPoly;
using timps::Necklace;
using timps::TIState;
using timps::UnitRepSpec;

namespace {

MultiPoly x1() { return MultiPoly::variable(1, 0); }
MultiPoly c1(long v) { return MultiPoly::constant(1, GaussianRational(v)); }

GaussianRational eval_exact(const MultiPoly& p, const GaussianRational& x) {
  GaussianRational v;
  for (const auto& t : p.terms()) v += t.coeff * x.pow(t.mono[0]);
  return v;
}

oracle::Grid to_grid(const Matrix<GaussianRational>& m) {
  oracle::Grid g(m.dim(), std::vector<GaussianRational>(m.dim()));
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c) g[r][c] = m(r, c);
  return g;
}

/// The state a rep represents, from one-at-a-time matrix products.
TIState brute_state(const ExactRep& rep, std::size_t n) {
  const auto g0 = to_grid(rep.a0);
  const auto g1 = to_grid(rep.a1);
  TIState s(n);
  for (const auto& bits : oracle::necklaces(n)) s.set(Necklace(bits), oracle::trace_of(g0, g1, bits));
  return s;
}

UnitRepSpec random_spec(std::mt19937& rng, const GaussianRational& lambda) {
  const GaussianRational choices[] = {GaussianRational(-1), GaussianRational(0), GaussianRational(1), GaussianRational::i()};
  const std::size_t d = 2 + rng() % 2;
  UnitRepSpec spec;
  spec.lambda = lambda;
  spec.j = rng() % d;
  do {
    spec.k = rng() % d;
  } while (spec.k == spec.j);
  spec.a0 = Matrix<GaussianRational>(d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) spec.a0(r, c) = choices[rng() % 4];
  return spec;
}

}  // namespace

TEST(Roots, LinearIsExact) {
  const ComplexF r = timps::solve_trace_root(c1(1) + x1().scaled(GaussianRational(3)));
  EXPECT_EQ(r, ComplexF(-1.0 / 3.0, 0.0));
}

TEST(Roots, TieBreakOnArgument) {
  const ComplexF r = timps::solve_trace_root(x1() * x1() + c1(1));
  EXPECT_NEAR(r.real(), 0.0, 1e-12);
  EXPECT_NEAR(r.imag(), -1.0, 1e-12);
}

TEST(Roots, MinimalModulus) {
  // (x - 2)(x + 1)(x - 3)
  const MultiPoly p = (x1() - c1(2)) * (x1() + c1(1)) * (x1() - c1(3));
  EXPECT_NEAR(std::abs(timps::solve_trace_root(p) - ComplexF(-1.0, 0.0)), 0.0, 1e-12);
  // x^3 - 8: three roots of modulus 2, the one at argument -2pi/3 comes first.
  const MultiPoly q = x1() * x1() * x1() - c1(8);
  const ComplexF r = timps::solve_trace_root(q);
  EXPECT_NEAR(std::abs(r - std::polar(2.0, -2.0 * std::numbers::pi / 3.0)), 0.0, 1e-12);
  EXPECT_EQ(timps::polynomial_roots(q).size(), 3u);
}

TEST(Roots, ConstantRejected) {
  EXPECT_THROW(timps::solve_trace_root(c1(4)), std::invalid_argument);
  EXPECT_THROW(timps::solve_trace_root(MultiPoly(1)), std::invalid_argument);
}

TEST(WConstruction, Examples) {
  const auto w3 = timps::build_w(3);
  EXPECT_EQ(w3.d, 2u);
  EXPECT_EQ(w3.x, ComplexF(-1.0 / 3.0, 0.0));
  EXPECT_EQ(w3.const_value, 1.0);
  EXPECT_EQ(timps::build_w(7).d, 4u);
  EXPECT_EQ(timps::build_w(5).const_value, 2.0);
  EXPECT_EQ(timps::build_w(2).const_value, 1.0);
  EXPECT_THROW(timps::build_w(1), std::invalid_argument);
}

TEST(WConstruction, ExactRepMatchesHandMatrices) {
  const auto e = timps::build_w(3).exact_rep();
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(to_grid(e->a0), oracle::w_matrix_a0(2, GaussianRational::from_ratio(-1, 3)));
  EXPECT_EQ(to_grid(e->a1), oracle::unit(2, 0, 1));
}

TEST(WConstruction, TracePolynomialAgreesWithPointEvaluations) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto w = timps::build_w(n);
    const std::size_t d = n / 2 + 1;
    for (long t = 0; t <= static_cast<long>(w.trace_poly.total_degree()) + 1; ++t) {
      const GaussianRational x = GaussianRational::from_ratio(t - 2, 3);
      const auto a0 = oracle::w_matrix_a0(d, x);
      EXPECT_EQ(eval_exact(w.trace_poly, x), oracle::trace_of(a0, oracle::unit(d, 0, d - 1), std::string(n, '0'))) << n;
    }
    EXPECT_LE(std::abs(timps::eval_poly(w.trace_poly, std::vector<ComplexF>{w.x})), timps::kRootTolerance);
  }
}

TEST(WConstruction, ConstMatchesClosedFormAndVerifies) {
  for (std::size_t n = 3; n <= 14; ++n) {
    const auto w = timps::build_w(n);
    EXPECT_EQ(w.const_value, oracle::w_const_closed_form(n)) << n;
  }
  for (std::size_t n = 2; n <= 14; ++n) {
    const auto w = timps::build_w(n);
    const ComplexF c(w.const_value, 0.0);
    const auto r = timps::verify(w.rep, n, [c](const Necklace& k) { return k.weight() == 1 ? c : ComplexF(0.0, 0.0); });
    EXPECT_TRUE(r.passed) << n << " err " << r.max_abs_error;
  }
}

TEST(WConstruction, SymbolicInvariants) {
  for (std::size_t n = 3; n <= 12; ++n) {
    const auto sym = timps::w_symbolic_rep(n / 2 + 1);
    timps::TraceEvaluator<MultiPoly> eval(sym);
    for (const auto& key : timps::enumerate_necklaces(n)) {
      const MultiPoly p = eval.coefficient(key);
      if (key.weight() >= 2) {
        EXPECT_TRUE(p.is_zero()) << key.bits();
      } else if (key.weight() == 1) {
        EXPECT_TRUE(p.is_constant());
        EXPECT_EQ(timps::to_double(p.constant_term().re()), oracle::w_const_closed_form(n));
      } else {
        for (const auto& t : p.terms()) {
          EXPECT_TRUE(t.coeff.is_real());
          EXPECT_GE(sgn(t.coeff.re()), 0);
        }
      }
    }
  }
}

TEST(WConstruction, Normalized) {
  for (std::size_t n = 2; n <= 14; ++n) {
    const auto w = timps::build_w(n);
    const auto rep = timps::normalize_w(w);
    EXPECT_TRUE(timps::verify(rep, n, timps::normalized_w_coefficient).passed) << n;
    EXPECT_NEAR(timps::state_norm(rep, n), 1.0, 1e-9) << n;
  }
  const auto r4 = timps::normalize_w(timps::build_w(4));
  for (const char* bits : {"0001", "0010", "0100", "1000"}) {
    EXPECT_NEAR(std::abs(timps::eval_coefficient(r4, std::string_view(bits)) - ComplexF(0.5, 0.0)), 0.0, 1e-12);
  }
  const auto r3 = timps::normalize_w(timps::build_w(3));
  EXPECT_NEAR(r3.a1(0, 1).real(), std::pow(std::sqrt(3.0), -1.0 / 3.0), 1e-15);
  const auto r2 = timps::normalize_w(timps::build_w(2));
  EXPECT_NEAR(r2.a1(0, 1).real(), std::pow(std::sqrt(2.0), -1.0 / 2.0), 1e-15);
}

TEST(UnitRep, SparseNecklaces) {
  for (std::size_t n = 2; n <= 12; ++n) {
    std::vector<std::string> expected;
    for (const auto& bits : oracle::necklaces(n)) {
      const Necklace k(bits);
      if (k.weight() > 0 && !k.has_adjacent_ones()) expected.push_back(bits);
    }
    std::vector<std::string> got;
    for (const auto& k : timps::sparse_necklaces(n)) got.push_back(k.bits());
    EXPECT_EQ(got, expected) << n;
  }
}

TEST(UnitRep, WAtThreePasses) {
  const auto spec = timps::detect_unit_spec(*timps::build_w(3).exact_rep());
  ASSERT_TRUE(spec.has_value());
  EXPECT_EQ(spec->j, 0u);
  EXPECT_EQ(spec->k, 1u);
  const auto report = timps::check_unit_rep(*spec, timps::scale_state(timps::w_state(3), GaussianRational(1)));
  EXPECT_TRUE(report.passed);
  EXPECT_TRUE(report.violated_equations().empty());
}

TEST(UnitRep, AllOnesFailsConditionOne) {
  TIState ones(3);
  for (const auto& k : timps::enumerate_necklaces(3)) ones.set(k, GaussianRational(1));
  const auto report = timps::check_unit_rep(timps::upper_shift_spec(3), ones);
  EXPECT_FALSE(report.condition1);
  EXPECT_FALSE(report.passed);
  EXPECT_EQ(report.condition1_violations.size(), 2u);
}

TEST(UnitRep, UpperShift) {
  for (std::size_t n = 2; n <= 10; ++n) {
    const auto spec = timps::upper_shift_spec(n);
    EXPECT_EQ(spec.j, n - 1);
    EXPECT_EQ(spec.k, 0u);
    EXPECT_TRUE(timps::check_unit_rep(spec, timps::w_state(n)).passed) << n;
    EXPECT_EQ(brute_state(timps::upper_shift_rep(n), n), timps::w_state(n));
    const auto normalized = timps::upper_shift_normalized(n);
    EXPECT_TRUE(timps::verify(normalized, n, timps::normalized_w_coefficient).passed) << n;
  }
}

TEST(UnitRep, ScaleEntersAsLambdaToTheL) {
  // With A1 = 2 E_{n,1} each weight-one trace is 2, not 1/2.
  auto spec = timps::upper_shift_spec(4);
  spec.lambda = GaussianRational(2);
  const TIState truth = brute_state(spec.rep(), 4);
  EXPECT_EQ(truth.coefficient(Necklace("0001")), GaussianRational(2));
  EXPECT_TRUE(timps::check_unit_rep(spec, truth).passed);
  EXPECT_FALSE(timps::check_unit_rep(spec, timps::scale_state(timps::w_state(4), GaussianRational::from_ratio(1, 2))).passed);
}

TEST(UnitRep, EquivalenceWithBruteForceTraces) {
  std::mt19937 rng(123);
  for (int t = 0; t < 40; ++t) {
    const GaussianRational lambda = (t % 2 == 0) ? GaussianRational(1) : GaussianRational(mpq_class(1, 2), 1);
    const UnitRepSpec spec = random_spec(rng, lambda);
    const std::size_t n = 2 + rng() % 5;
    const TIState truth = brute_state(spec.rep(), n);
    const auto report = timps::check_unit_rep(spec, truth);
    ASSERT_TRUE(report.passed) << "trial " << t;

    const auto sparse = timps::sparse_necklaces(n);
    const Necklace target = sparse[rng() % sparse.size()];
    TIState perturbed = truth;
    perturbed.set(target, truth.coefficient(target) + GaussianRational(1));
    const auto bad = timps::check_unit_rep(spec, perturbed);
    EXPECT_FALSE(bad.passed);
    const auto violated = bad.violated_equations();
    ASSERT_EQ(violated.size(), 1u);
    EXPECT_EQ(violated[0].necklace, target);
  }
}

TEST(UnitRep, RejectsBadSpecs) {
  auto spec = timps::upper_shift_spec(3);
  spec.k = spec.j;
  EXPECT_THROW(timps::check_unit_rep(spec, timps::w_state(3)), std::invalid_argument);
  spec = timps::upper_shift_spec(3);
  spec.lambda = GaussianRational();
  EXPECT_THROW(spec.rep(), std::invalid_argument);
  EXPECT_FALSE(timps::detect_unit_spec(ExactRep(Matrix<GaussianRational>::identity(2), Matrix<GaussianRational>::identity(2))).has_value());
}

TEST(Canonical, WAtThree) {
  const auto spec = *timps::detect_unit_spec(*timps::build_w(3).exact_rep());
  const auto result = timps::canonicalize(spec, 3);
  EXPECT_EQ(result.params.gammas, (std::vector<GaussianRational>{GaussianRational(1), GaussianRational(1)}));
  EXPECT_EQ(result.params.omega, ComplexF(0.0, 0.0));
  ASSERT_TRUE(result.exact.has_value());
  const oracle::Grid a0{{0, 1, 1}, {0, 0, 1}, {0, 0, 0}};
  EXPECT_EQ(to_grid(result.exact->a0), a0);
  EXPECT_EQ(to_grid(result.exact->a1), oracle::unit(3, 2, 0));
  const auto g0 = to_grid(result.exact->a0);
  const auto g1 = to_grid(result.exact->a1);
  EXPECT_EQ(oracle::trace_of(g0, g1, "001"), GaussianRational(1));
  EXPECT_EQ(oracle::trace_of(g0, g1, "000"), GaussianRational(0));
}

TEST(Canonical, ZeroTraceClassGivesZeroOmega) {
  const auto result = timps::canonicalize(timps::upper_shift_spec(5), 5);
  EXPECT_EQ(result.params.omega, ComplexF(0.0, 0.0));
  EXPECT_TRUE(result.params.omega_pow_n.is_zero());
}

TEST(Canonical, DegenerateGammasAllZero) {
  UnitRepSpec spec;
  spec.j = 0;
  spec.k = 1;
  spec.a0 = Matrix<GaussianRational>(2);
  spec.a0(0, 0) = GaussianRational(1);
  const auto result = timps::canonicalize(spec, 4);
  for (const auto& g : result.params.gammas) EXPECT_TRUE(g.is_zero());
  ASSERT_TRUE(result.exact.has_value());
  const TIState s = brute_state(*result.exact, 4);
  ASSERT_EQ(s.coeffs().size(), 1u);
  EXPECT_EQ(s.coefficient(Necklace("0000")), GaussianRational(1));
}

TEST(Canonical, RoundTripExact) {
  std::mt19937 rng(77);
  for (int t = 0; t < 30; ++t) {
    const GaussianRational lambda = (t % 3 == 0) ? GaussianRational(2) : GaussianRational(1);
    const UnitRepSpec spec = random_spec(rng, lambda);
    const std::size_t n = 2 + t % 7;
    const TIState truth = brute_state(spec.rep(), n);
    const auto result = timps::canonicalize(spec, n);
    for (const auto& key : timps::enumerate_necklaces(n)) {
      EXPECT_EQ(timps::canonical_coefficient(result, key), truth.coefficient(key)) << key.bits();
    }
    if (result.exact) EXPECT_EQ(brute_state(*result.exact, n), truth);
    const auto numeric = timps::verify(result.numeric, truth, timps::VerifyOptions{1e-9, true});
    EXPECT_TRUE(numeric.passed) << numeric.max_abs_error;
  }
}

TEST(Canonical, NonRationalOmegaHasNoExactRep) {
  UnitRepSpec spec;
  spec.j = 0;
  spec.k = 1;
  spec.a0 = Matrix<GaussianRational>::identity(2);
  const auto result = timps::canonicalize(spec, 3);
  EXPECT_FALSE(result.exact.has_value());
  EXPECT_EQ(result.params.omega_pow_n, GaussianRational(2));
  EXPECT_NEAR(std::abs(result.params.omega - ComplexF(std::cbrt(2.0), 0.0)), 0.0, 1e-12);
  EXPECT_FALSE(timps::verify(result.numeric, timps::TIState(3), 1e-9).passed);
  EXPECT_EQ(timps::canonical_coefficient(result, Necklace("000")), GaussianRational(2));
}
