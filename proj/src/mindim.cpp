#include "timps/mindim.hpp"

#include <chrono>
#include <map>

namespace timps {

namespace {

struct PolyMatrix {
  std::size_t dim = 0;
  std::vector<MultiPoly> entries;

  PolyMatrix(std::size_t d, std::size_t arity, MonomialOrder order) : dim(d), entries(d * d, MultiPoly(arity, order)) {}

  MultiPoly& at(std::size_t r, std::size_t c) { return entries[r * dim + c]; }
  const MultiPoly& at(std::size_t r, std::size_t c) const { return entries[r * dim + c]; }

  MultiPoly trace() const {
    MultiPoly t = entries.front();
    for (std::size_t i = 1; i < dim; ++i) t += at(i, i);
    return t;
  }
};

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  const MultiPoly& proto = a.entries.front();
  PolyMatrix c(a.dim, proto.arity(), proto.order());
  for (std::size_t i = 0; i < a.dim; ++i) {
    for (std::size_t k = 0; k < a.dim; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < a.dim; ++j) {
        if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    }
  }
  return c;
}

class SymbolicTraces {
public:
  SymbolicTraces(PolyMatrix a0, PolyMatrix a1) : a0_(std::move(a0)), a1_(std::move(a1)) {}

  const PolyMatrix& a0_power(std::size_t e) {
    auto it = powers_.find(e);
    if (it != powers_.end()) return it->second;
    PolyMatrix value = e == 1 ? a0_ : multiply(a0_power(e - 1), a0_);
    return powers_.emplace(e, std::move(value)).first->second;
  }

  MultiPoly trace(const Necklace& key) {
    const std::vector<std::size_t> gaps = key.gaps();
    if (gaps.empty()) return a0_power(key.length()).trace();
    PolyMatrix product = a1_;
    for (std::size_t m = 0; m < gaps.size(); ++m) {
      if (m > 0) product = multiply(product, a1_);
      if (gaps[m] > 0) product = multiply(product, a0_power(gaps[m]));
    }
    return product.trace();
  }

private:
  PolyMatrix a0_;
  PolyMatrix a1_;
  std::map<std::size_t, PolyMatrix> powers_;
};

std::vector<MultiPoly> trace_equations(const TIState& state, PolyMatrix a0, PolyMatrix a1,
                                       const std::vector<Necklace>& necklaces) {
  const std::size_t arity = a0.entries.front().arity();
  const MonomialOrder order = a0.entries.front().order();
  SymbolicTraces traces(std::move(a0), std::move(a1));
  std::vector<MultiPoly> polys;
  polys.reserve(necklaces.size());
  for (const Necklace& key : necklaces) {
    polys.push_back(traces.trace(key) - MultiPoly::constant(arity, state.coefficient(key), order));
  }
  return polys;
}

void check_arity(std::size_t vars) {
  if (vars > Monomial::kMaxArity) {
    throw std::length_error("system needs " + std::to_string(vars) + " unknowns; at most " +
                            std::to_string(Monomial::kMaxArity) + " are supported");
  }
}

std::string entry_name(char site, std::size_t r, std::size_t c) {
  return std::string("a") + site + "_" + std::to_string(r + 1) + std::to_string(c + 1);
}

struct Attempt {
  Verdict verdict = Verdict::BudgetExceeded;
  std::vector<MultiPoly> basis;
  std::uint64_t ops = 0;
};

Attempt run_groebner(const std::vector<MultiPoly>& polys, const FeasibilityOptions& options) {
  Attempt attempt;
  GroebnerStats stats;
  GroebnerOptions gopts{options.order, options.budget};
  try {
    attempt.basis = buchberger(polys, gopts, &stats);
    attempt.verdict = contains_one(attempt.basis) ? Verdict::Infeasible : Verdict::Feasible;
  } catch (const BudgetExceeded&) {
    attempt.verdict = Verdict::BudgetExceeded;
  }
  attempt.ops = stats.monomial_ops;
  return attempt;
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Infeasible:
      return "infeasible";
    case Verdict::Feasible:
      return "feasible";
    case Verdict::BudgetExceeded:
      return "budget-exceeded";
  }
  return "unknown";
}

SystemSpec build_system(const TIState& state, std::size_t d, bool gauge_fix, MonomialOrder order) {
  if (d < 1) throw std::invalid_argument("bond dimension must be >= 1");
  SystemSpec spec;
  spec.state = state;
  spec.d = d;
  spec.gauge_fix = gauge_fix;

  std::vector<std::pair<char, std::pair<std::size_t, std::size_t>>> slots;
  for (char site : {'0', '1'}) {
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        if (gauge_fix && site == '1' && r > c) continue;
        slots.push_back({site, {r, c}});
        spec.var_names.push_back(entry_name(site, r, c));
      }
    }
  }
  const std::size_t arity = slots.size();
  check_arity(arity);

  PolyMatrix a0(d, arity, order);
  PolyMatrix a1(d, arity, order);
  for (std::size_t v = 0; v < arity; ++v) {
    const auto& [site, rc] = slots[v];
    (site == '0' ? a0 : a1).at(rc.first, rc.second) = MultiPoly::variable(arity, v, order);
  }
  spec.necklaces = enumerate_necklaces(state.n());
  spec.polys = trace_equations(state, std::move(a0), std::move(a1), spec.necklaces);
  return spec;
}

FeasibilityResult feasible_at(const TIState& state, std::size_t d, const FeasibilityOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  FeasibilityResult result;
  result.d = d;
  auto finish = [&](const Attempt& attempt, std::string method, std::size_t polys) {
    result.verdict = attempt.verdict;
    result.method = std::move(method);
    result.num_vars = result.var_names.size();
    result.num_polys = polys;
    result.basis_size = attempt.basis.size();
    result.ops += attempt.ops;
    if (options.keep_basis && attempt.verdict != Verdict::BudgetExceeded) result.basis = attempt.basis;
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
  };

  if (options.unit_ansatz && d >= 2 && d * d <= Monomial::kMaxArity) {
    const std::vector<Necklace> necklaces = enumerate_necklaces(state.n());
    const std::size_t arity = d * d;
    for (char pinned : {'1', '0'}) {
      const char free_site = pinned == '1' ? '0' : '1';
      PolyMatrix unknown(d, arity, options.order);
      PolyMatrix unit(d, arity, options.order);
      std::vector<std::string> names;
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) {
          unknown.at(r, c) = MultiPoly::variable(arity, r * d + c, options.order);
          names.push_back(entry_name(free_site, r, c));
        }
      }
      unit.at(0, d - 1) = MultiPoly::constant(arity, GaussianRational(1), options.order);
      const std::vector<MultiPoly> polys = pinned == '1'
                                               ? trace_equations(state, unknown, unit, necklaces)
                                               : trace_equations(state, unit, unknown, necklaces);
      Attempt attempt = run_groebner(polys, options);
      if (attempt.verdict == Verdict::Feasible) {
        result.var_names = std::move(names);
        return finish(attempt, pinned == '1' ? "unit-ansatz-a1" : "unit-ansatz-a0", polys.size());
      }
      result.ops += attempt.ops;
    }
  }

  const SystemSpec spec = build_system(state, d, options.gauge_fix, options.order);
  result.var_names = spec.var_names;
  Attempt attempt = run_groebner(spec.polys, options);
  return finish(attempt, options.gauge_fix ? "complete-gauge-fixed" : "complete", spec.polys.size());
}

MinDimReport min_bond_dimension(const TIState& state, std::size_t d_max, const FeasibilityOptions& options) {
  if (d_max < 1) throw std::invalid_argument("d_max must be >= 1");
  MinDimReport report;
  report.bound_used = d_max;
  bool all_infeasible = true;
  for (std::size_t d = 1; d <= d_max; ++d) {
    report.per_d.push_back(feasible_at(state, d, options));
    const Verdict v = report.per_d.back().verdict;
    if (v == Verdict::Feasible) {
      report.feasible_upper_bound = d;
      if (all_infeasible) report.resolved = d;
      break;
    }
    if (v == Verdict::BudgetExceeded) all_infeasible = false;
  }
  return report;
}

}  // namespace timps
