#include "cli.hpp"

#include <algorithm>
#include <iomanip>
#include <optional>

#include "CLI11.hpp"
#include "timps/io.hpp"

namespace timps::cli {

namespace {

struct Config {
  double tol = 1e-9;
  std::size_t necklace_cap = kDefaultNecklaceCap;
  std::uint64_t budget = WorkBudget::kDefault;
  std::string order = "grevlex";
  bool gauge_fix = false;
  std::uint64_t seed = 1;
};

// Input problems (bad files, mismatched shapes) that map to exit status 2.
class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const Json& j, const std::optional<std::string>& path) {
  if (path && !path->empty()) {
    write_json_file(*path, j);
  } else {
    out << j.dump(2) << '\n';
  }
}

bool weight_one_only(const TIState& s) {
  if (s.is_zero()) return false;
  return std::all_of(s.coeffs().begin(), s.coeffs().end(), [](const auto& kv) { return kv.first.weight() == 1; });
}

int cmd_necklaces(std::ostream& out, std::size_t n, bool list, const Config& cfg) {
  const std::vector<Necklace> all = enumerate_necklaces(n, cfg.necklace_cap);
  const std::uint64_t expected = polya_count(static_cast<unsigned>(n));
  out << all.size() << '\n';
  if (list) {
    for (const Necklace& key : all) out << key.bits() << '\n';
  }
  return all.size() == expected ? 0 : 1;
}

int cmd_gen_w_state(std::ostream& out, std::size_t n, bool normalized, const std::string& scale,
                    const std::optional<std::string>& path) {
  TIState s = w_state(n, normalized);
  if (!scale.empty()) s = scale_state(s, GaussianRational::parse(scale));
  emit(out, state_to_json(s), path);
  return 0;
}

int cmd_w_build(std::ostream& out, std::size_t n, bool normalized, bool exact, const std::optional<std::string>& path,
                const Config& cfg) {
  const WConstruction w = build_w(n);
  VerifyOptions vopts;
  vopts.tol = cfg.tol;
  vopts.necklace_cap = cfg.necklace_cap;
  FloatRep rep = w.rep;
  VerifyReport report;
  if (normalized) {
    rep = normalize_w(w);
    report = verify(rep, n, normalized_w_coefficient, vopts);
  } else {
    const ComplexF c(w.const_value, 0.0);
    report = verify(rep, n, [c](const Necklace& key) { return key.weight() == 1 ? c : ComplexF(0.0, 0.0); }, vopts);
  }

  Json rep_json;
  if (exact && !normalized) {
    auto e = w.exact_rep();
    if (!e) throw UsageError("the trace polynomial is not linear; no exact rep available");
    rep_json = rep_to_json(*e, n);
  } else {
    rep_json = rep_to_json(rep, n);
  }
  if (path && !path->empty()) write_json_file(*path, rep_json);

  out << std::setprecision(17);
  out << "n=" << n << '\n';
  out << "d=" << w.d << '\n';
  out << "x=" << w.x.real();
  if (w.x.imag() != 0.0) out << (w.x.imag() < 0 ? "-" : "+") << std::abs(w.x.imag()) << "i";
  out << '\n';
  out << "trace_poly=" << w.trace_poly.str(std::vector<std::string>{"x"}) << '\n';
  out << "const=" << w.const_value << '\n';
  out << "max_abs_error=" << report.max_abs_error << '\n';
  out << (report.passed ? "verified" : "FAILED") << '\n';
  if (!path || path->empty()) out << rep_json.dump(2) << '\n';
  return report.passed ? 0 : 1;
}

int cmd_verify(std::ostream& out, const std::string& state_path, const std::string& rep_path, bool relative,
               bool random_gauge_on, const Config& cfg) {
  const TIState s = state_from_json(read_json_file(state_path));
  const LoadedRep loaded = rep_from_json(read_json_file(rep_path));
  if (loaded.n != s.n()) {
    throw UsageError("rep is for n=" + std::to_string(loaded.n) + " but the state has n=" + std::to_string(s.n()));
  }
  FloatRep rep = loaded.floating;
  if (random_gauge_on) rep = conjugate_rep(rep, random_gauge(rep.bond_dim(), cfg.seed));
  VerifyOptions vopts;
  vopts.tol = cfg.tol;
  vopts.relative = relative;
  vopts.necklace_cap = cfg.necklace_cap;
  const VerifyReport report = verify(rep, s, vopts);
  out << verify_report_to_json(report).dump(2) << '\n';
  return report.passed ? 0 : 1;
}

int cmd_mindim(std::ostream& out, const std::string& state_path, std::size_t max_d, bool timing, bool dump_basis,
               bool no_ansatz, const Config& cfg) {
  const TIState s = state_from_json(read_json_file(state_path));
  if (max_d == 0) max_d = weight_one_only(s) ? s.n() / 2 + 1 : s.n() + 1;
  FeasibilityOptions opts;
  opts.order = parse_order(cfg.order);
  opts.budget = cfg.budget;
  opts.gauge_fix = cfg.gauge_fix;
  opts.unit_ansatz = !no_ansatz;
  opts.keep_basis = dump_basis;
  const MinDimReport report = min_bond_dimension(s, max_d, opts);
  out << mindim_report_to_json(report, ReportFormat{timing, dump_basis}).dump(2) << '\n';
  return report.resolved ? 0 : 1;
}

UnitRepSpec load_unit_spec(const std::string& rep_path, std::size_t* n) {
  const LoadedRep loaded = rep_from_json(read_json_file(rep_path));
  if (!loaded.exact) throw UsageError("an exact rep is required");
  auto spec = detect_unit_spec(*loaded.exact);
  if (!spec) throw UsageError("A1 is not a scaled matrix unit lambda*E_jk with j != k");
  *n = loaded.n;
  return *spec;
}

int cmd_check_unit(std::ostream& out, const std::string& rep_path, const std::string& state_path) {
  std::size_t n = 0;
  const UnitRepSpec spec = load_unit_spec(rep_path, &n);
  const TIState s = state_from_json(read_json_file(state_path));
  if (n != s.n()) throw UsageError("rep and state disagree on n");
  const UnitRepReport report = check_unit_rep(spec, s);
  out << unit_report_to_json(report).dump(2) << '\n';
  return report.passed ? 0 : 1;
}

int cmd_canonicalize(std::ostream& out, const std::string& rep_path, const std::optional<std::string>& path,
                     const Config& cfg) {
  std::size_t n = 0;
  const UnitRepSpec spec = load_unit_spec(rep_path, &n);
  const CanonicalResult result = canonicalize(spec, n);
  const ExactRep input = spec.rep();
  TraceEvaluator<GaussianRational> eval(input);
  std::size_t mismatches = 0;
  const std::vector<Necklace> all = enumerate_necklaces(n, cfg.necklace_cap);
  for (const Necklace& key : all) {
    if (!(canonical_coefficient(result, key) == eval.coefficient(key))) ++mismatches;
  }
  Json rep_json = result.exact ? rep_to_json(*result.exact, n) : rep_to_json(result.numeric, n);
  Json gammas = Json::array();
  for (const auto& g : result.params.gammas) gammas.push_back(g.str());
  Json summary{{"n", n},
               {"gammas", gammas},
               {"omega_pow_n", result.params.omega_pow_n.str()},
               {"omega", {result.params.omega.real(), result.params.omega.imag()}},
               {"lambda", result.params.lambda.str()},
               {"exact", result.exact.has_value()},
               {"checked_classes", all.size()},
               {"round_trip_mismatches", mismatches},
               {"round_trip", mismatches == 0}};
  if (path && !path->empty()) {
    write_json_file(*path, rep_json);
  } else {
    summary["rep"] = rep_json;
  }
  out << summary.dump(2) << '\n';
  return mismatches == 0 ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Translation-invariant MPS toolkit for qubit states", "timps"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--tol", cfg.tol, "Verification tolerance")->check(CLI::PositiveNumber);
  app.add_option("--necklace-cap", cfg.necklace_cap, "Largest n for necklace enumeration")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "Groebner budget in monomial operations")->check(CLI::PositiveNumber);
  app.add_option("--order", cfg.order, "Monomial order")->check(CLI::IsMember({"grevlex", "lex"}));
  app.add_flag("--gauge-fix", cfg.gauge_fix, "Restrict A1 to upper-triangular form");
  app.add_option("--seed", cfg.seed, "Seed for random gauge matrices");

  std::size_t n = 0;
  std::optional<std::string> out_path;
  bool normalized = false;

  auto* necklaces = app.add_subcommand("necklaces", "Count (and list) binary necklaces of length n");
  bool list = false;
  necklaces->add_option("n", n)->required()->check(CLI::PositiveNumber);
  necklaces->add_flag("--list", list);

  auto* gen = app.add_subcommand("gen-w-state", "Write the W-state as a state file");
  std::string scale;
  gen->add_option("n", n)->required()->check(CLI::PositiveNumber);
  gen->add_flag("--normalized", normalized, "Coefficient 1/sqrt(n); n must be a perfect square");
  gen->add_option("--scale", scale, "Multiply every coefficient by this Q(i) value");
  gen->add_option("--out", out_path);

  auto* wbuild = app.add_subcommand("w-build", "Build and verify the floor(n/2)+1 dimensional W-state rep");
  bool exact = false;
  wbuild->add_option("n", n)->required()->check(CLI::Range(std::size_t{2}, std::size_t{255}));
  wbuild->add_flag("--normalized", normalized);
  wbuild->add_flag("--exact", exact, "Write exact entries when x is rational");
  wbuild->add_option("--out", out_path);

  auto* ver = app.add_subcommand("verify", "Check a rep against a state");
  std::string state_path;
  std::string rep_path;
  bool relative = false;
  bool random_gauge_on = false;
  ver->add_option("state", state_path)->required();
  ver->add_option("rep", rep_path)->required();
  ver->add_flag("--relative", relative);
  ver->add_flag("--random-gauge", random_gauge_on, "Conjugate by a seeded random matrix first");

  auto* mindim = app.add_subcommand("mindim", "Search for the minimal bond dimension");
  std::size_t max_d = 0;
  bool no_timing = false;
  bool dump_basis = false;
  bool no_ansatz = false;
  mindim->add_option("state", state_path)->required();
  mindim->add_option("--max-d", max_d, "Largest d to try (default floor(n/2)+1 for W-like states, else n+1)");
  mindim->add_flag("--no-timing", no_timing, "Omit timings for byte-stable output");
  mindim->add_flag("--dump-basis", dump_basis, "Include the reduced Groebner bases");
  mindim->add_flag("--no-ansatz", no_ansatz, "Skip the pinned-unit witness search");

  auto* canon = app.add_subcommand("canonicalize", "n x n canonical form of a scaled-matrix-unit rep");
  canon->add_option("rep", rep_path)->required();
  canon->add_option("--out", out_path);

  auto* unit = app.add_subcommand("check-unit", "Check the scaled-matrix-unit conditions");
  unit->add_option("rep", rep_path)->required();
  unit->add_option("state", state_path)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*necklaces) return cmd_necklaces(out, n, list, cfg);
    if (*gen) return cmd_gen_w_state(out, n, normalized, scale, out_path);
    if (*wbuild) return cmd_w_build(out, n, normalized, exact, out_path, cfg);
    if (*ver) return cmd_verify(out, state_path, rep_path, relative, random_gauge_on, cfg);
    if (*mindim) return cmd_mindim(out, state_path, max_d, !no_timing, dump_basis, no_ansatz, cfg);
    if (*canon) return cmd_canonicalize(out, rep_path, out_path, cfg);
    if (*unit) return cmd_check_unit(out, rep_path, state_path);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace timps::cli
