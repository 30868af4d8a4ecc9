#pragma once

// Minimal bond dimension search: the trace equations in the unknown matrix
// entries, a Groebner basis, and the Nullstellensatz test at each d.

#include <optional>
#include <string>
#include <vector>

#include "timps/polynomials.hpp"
#include "timps/states.hpp"

namespace timps {

struct SystemSpec {
  TIState state{1};
  std::size_t d = 1;
  bool gauge_fix = false;
  /// a0_{ij} then a1_{ij} (1-based, row-major), minus eliminated a1_{ij}, i > j.
  std::vector<std::string> var_names;
  /// One polynomial per necklace class, in enumeration order.
  std::vector<MultiPoly> polys;
  std::vector<Necklace> necklaces;
};

/// Tr(A_{i_1} ... A_{i_n}) - c_I for every class I, with formal entries.
/// Throws std::length_error when the unknowns exceed the monomial arity cap.
SystemSpec build_system(const TIState& state, std::size_t d, bool gauge_fix,
                        MonomialOrder order = MonomialOrder::GrevLex);

enum class Verdict { Infeasible, Feasible, BudgetExceeded };

std::string to_string(Verdict v);

struct FeasibilityOptions {
  MonomialOrder order = MonomialOrder::GrevLex;
  std::uint64_t budget = WorkBudget::kDefault;
  bool gauge_fix = false;
  /// Before the complete system, look for a witness with one matrix pinned to
  /// E_{1,d}. Only feasible verdicts are taken from this phase.
  bool unit_ansatz = true;
  bool keep_basis = false;
};

struct FeasibilityResult {
  std::size_t d = 0;
  Verdict verdict = Verdict::BudgetExceeded;
  /// "complete", "complete-gauge-fixed", "unit-ansatz-a1" or "unit-ansatz-a0".
  std::string method;
  std::size_t num_vars = 0;
  std::size_t num_polys = 0;
  std::size_t basis_size = 0;
  std::uint64_t ops = 0;
  double seconds = 0.0;
  std::vector<std::string> var_names;
  std::optional<std::vector<MultiPoly>> basis;
};

FeasibilityResult feasible_at(const TIState& state, std::size_t d, const FeasibilityOptions& options = {});

struct MinDimReport {
  std::vector<FeasibilityResult> per_d;
  /// The first feasible d, present only when every smaller d was infeasible.
  std::optional<std::size_t> resolved;
  std::size_t bound_used = 0;
  /// First feasible d even when an earlier verdict was budget-exceeded.
  std::optional<std::size_t> feasible_upper_bound;
};

MinDimReport min_bond_dimension(const TIState& state, std::size_t d_max, const FeasibilityOptions& options = {});

}  // namespace timps
