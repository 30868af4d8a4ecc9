#include <gtest/gtest.h>

#include <algorithm>

#include "timps/constructions.hpp"
#include "timps/mindim.hpp"

using timps::FeasibilityOptions;
using timps::GaussianRational;
using timps::MultiPoly;
using timps::Necklace;
using timps::TIState;
using timps::Verdict;

namespace {

FeasibilityOptions complete_only(bool gauge_fix = false) {
  FeasibilityOptions o;
  o.unit_ansatz = false;
  o.gauge_fix = gauge_fix;
  return o;
}

}  // namespace

TEST(BuildSystem, ScalarTracesAtNTwo) {
  TIState s(2);
  s.set(Necklace("00"), GaussianRational(5));
  s.set(Necklace("01"), GaussianRational(7));
  s.set(Necklace("11"), GaussianRational(11));
  const auto spec = timps::build_system(s, 1, false);
  const MultiPoly a0 = MultiPoly::variable(2, 0);
  const MultiPoly a1 = MultiPoly::variable(2, 1);
  auto c = [](long v) { return MultiPoly::constant(2, GaussianRational(v)); };
  EXPECT_EQ(spec.var_names, (std::vector<std::string>{"a0_11", "a1_11"}));
  ASSERT_EQ(spec.polys.size(), 3u);
  EXPECT_EQ(spec.polys[0], a0 * a0 - c(5));
  EXPECT_EQ(spec.polys[1], a0 * a1 - c(7));
  EXPECT_EQ(spec.polys[2], a1 * a1 - c(11));
}

TEST(BuildSystem, WStateAtNThree) {
  const auto spec = timps::build_system(timps::w_state(3), 1, false);
  const MultiPoly a0 = MultiPoly::variable(2, 0);
  const MultiPoly a1 = MultiPoly::variable(2, 1);
  const MultiPoly one = MultiPoly::constant(2, GaussianRational(1));
  EXPECT_EQ(spec.polys, (std::vector<MultiPoly>{a0 * a0 * a0, a0 * a0 * a1 - one, a0 * a1 * a1, a1 * a1 * a1}));
}

TEST(BuildSystem, StructureCounts) {
  const auto full = timps::build_system(timps::w_state(2), 2, false);
  EXPECT_EQ(full.polys.size(), 3u);
  EXPECT_EQ(full.var_names.size(), 8u);
  for (const auto& p : full.polys) EXPECT_EQ(p.total_degree(), 2u);
  // Upper-triangular A1 removes the single entry below the diagonal.
  const auto fixed = timps::build_system(timps::w_state(2), 2, true);
  EXPECT_EQ(fixed.var_names.size(), 7u);
  EXPECT_EQ(std::count(fixed.var_names.begin(), fixed.var_names.end(), "a1_21"), 0);

  for (std::size_t n = 2; n <= 7; ++n) {
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto spec = timps::build_system(timps::w_state(n), d, false);
      EXPECT_EQ(spec.polys.size(), timps::polya_count(static_cast<unsigned>(n)));
      EXPECT_EQ(spec.var_names.size(), 2 * d * d);
      for (const auto& p : spec.polys) EXPECT_LE(p.total_degree(), n);
    }
  }
  EXPECT_THROW(timps::build_system(timps::w_state(2), 6, false), std::length_error);
  EXPECT_THROW(timps::build_system(timps::w_state(2), 0, false), std::invalid_argument);
}

TEST(BuildSystem, VanishesAtTheWWitness) {
  for (std::size_t n = 2; n <= 7; ++n) {
    const auto w = timps::build_w(n);
    const auto spec = timps::build_system(timps::scale_state(timps::w_state(n), GaussianRational(static_cast<long>(w.const_value))), w.d, false);
    std::vector<timps::ComplexF> point;
    for (const auto* m : {&w.rep.a0, &w.rep.a1})
      for (const auto& v : m->data()) point.push_back(v);
    for (const auto& p : spec.polys) EXPECT_LE(std::abs(timps::eval_poly(p, point)), 1e-9) << n;
  }
}

TEST(Feasibility, Examples) {
  EXPECT_EQ(timps::feasible_at(timps::w_state(3), 1).verdict, Verdict::Infeasible);
  EXPECT_EQ(timps::feasible_at(timps::w_state(3), 2).verdict, Verdict::Feasible);
  EXPECT_EQ(timps::feasible_at(TIState(3), 1).verdict, Verdict::Feasible);
  EXPECT_EQ(timps::feasible_at(timps::w_state(3), 2, complete_only()).verdict, Verdict::Feasible);
}

TEST(Feasibility, SoundAgainstWConstruction) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const auto r = timps::feasible_at(timps::w_state(n), n / 2 + 1);
    EXPECT_EQ(r.verdict, Verdict::Feasible) << n;
  }
}

TEST(Feasibility, GaugeFixAgrees) {
  std::vector<TIState> cases;
  for (std::size_t n = 2; n <= 4; ++n) cases.push_back(timps::w_state(n));
  TIState ghz(3);
  ghz.set(Necklace("000"), GaussianRational(1));
  ghz.set(Necklace("111"), GaussianRational(1));
  cases.push_back(ghz);
  TIState mixed(3);
  mixed.set(Necklace("011"), GaussianRational(2));
  mixed.set(Necklace("001"), GaussianRational(-1));
  cases.push_back(mixed);
  for (const auto& s : cases) {
    for (std::size_t d = 1; d <= 2; ++d) {
      const auto off = timps::feasible_at(s, d, complete_only(false));
      const auto on = timps::feasible_at(s, d, complete_only(true));
      if (off.verdict == Verdict::BudgetExceeded || on.verdict == Verdict::BudgetExceeded) continue;
      EXPECT_EQ(off.verdict, on.verdict) << "n=" << s.n() << " d=" << d;
      EXPECT_EQ(on.method, "complete-gauge-fixed");
    }
  }
}

TEST(Feasibility, BudgetIsAVerdict) {
  FeasibilityOptions o = complete_only();
  o.budget = 1000;
  const auto r = timps::feasible_at(timps::w_state(4), 3, o);
  EXPECT_EQ(r.verdict, Verdict::BudgetExceeded);
  EXPECT_FALSE(r.basis.has_value());
}

TEST(Feasibility, KeepBasis) {
  FeasibilityOptions o;
  o.keep_basis = true;
  const auto r = timps::feasible_at(timps::w_state(3), 1, o);
  ASSERT_TRUE(r.basis.has_value());
  EXPECT_TRUE(timps::contains_one(*r.basis));
  EXPECT_EQ(r.var_names.size(), 2u);
  EXPECT_EQ(r.method, "complete");
}

TEST(MinDim, Examples) {
  const auto w2 = timps::min_bond_dimension(timps::w_state(2), 3);
  ASSERT_TRUE(w2.resolved.has_value());
  EXPECT_EQ(*w2.resolved, 2u);
  EXPECT_EQ(w2.per_d.size(), 2u);
  EXPECT_EQ(w2.bound_used, 3u);

  const auto w4 = timps::min_bond_dimension(timps::w_state(4), 4);
  ASSERT_TRUE(w4.resolved.has_value());
  EXPECT_EQ(*w4.resolved, 3u);

  const auto zero = timps::min_bond_dimension(TIState(4), 3);
  ASSERT_TRUE(zero.resolved.has_value());
  EXPECT_EQ(*zero.resolved, 1u);
  EXPECT_THROW(timps::min_bond_dimension(TIState(4), 0), std::invalid_argument);
}

TEST(MinDim, UnresolvedBelowBound) {
  const auto r = timps::min_bond_dimension(timps::w_state(3), 1);
  EXPECT_FALSE(r.resolved.has_value());
  ASSERT_EQ(r.per_d.size(), 1u);
  EXPECT_EQ(r.per_d[0].verdict, Verdict::Infeasible);
}

TEST(MinDim, BudgetBeforeFeasibleLeavesUnresolved) {
  FeasibilityOptions o;
  o.budget = 5000;
  const auto r = timps::min_bond_dimension(timps::w_state(4), 3, o);
  ASSERT_EQ(r.per_d.size(), 3u);
  EXPECT_EQ(r.per_d[1].verdict, Verdict::BudgetExceeded);
  EXPECT_EQ(r.per_d[2].verdict, Verdict::Feasible);
  EXPECT_FALSE(r.resolved.has_value());
  ASSERT_TRUE(r.feasible_upper_bound.has_value());
  EXPECT_EQ(*r.feasible_upper_bound, 3u);
}

TEST(MinDim, WIsMonotoneOverComputedRange) {
  std::size_t previous = 0;
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto r = timps::min_bond_dimension(timps::w_state(n), n / 2 + 1);
    ASSERT_TRUE(r.resolved.has_value());
    EXPECT_GE(*r.resolved, previous);
    previous = *r.resolved;
  }
}
