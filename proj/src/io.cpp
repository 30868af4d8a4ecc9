#include "timps/io.hpp"

#include <fstream>
#include <set>

namespace timps {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw FormatError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t size_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw FormatError(std::string("field \"") + key + "\" must be a nonnegative integer");
  }
  return v.get<std::size_t>();
}

GaussianRational exact_entry(const Json& v) {
  if (!v.is_string()) throw FormatError("exact entries must be strings such as \"1/2-3*i\"");
  return GaussianRational::parse(v.get<std::string>());
}

ComplexF float_entry(const Json& v) {
  if (v.is_string()) return to_complex(GaussianRational::parse(v.get<std::string>()));
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number()) {
    return {v[0].get<double>(), v[1].get<double>()};
  }
  throw FormatError("floating entries must be [re, im] pairs or exact strings");
}

template <class T, class F>
Matrix<T> matrix_field(const Json& j, const char* key, std::size_t d, F&& entry) {
  const Json& rows = field(j, key);
  if (!rows.is_array() || rows.size() != d) throw FormatError(std::string(key) + " must have d rows");
  std::vector<T> data;
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != d) throw FormatError(std::string(key) + " must have d columns");
    for (const Json& v : row) data.push_back(entry(v));
  }
  return Matrix<T>(d, std::move(data));
}

template <class T, class F>
Json matrix_json(const Matrix<T>& m, F&& entry) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back(entry(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json complex_json(const ComplexF& z) { return Json::array({z.real(), z.imag()}); }

Json equation_json(const UnitEquation& e) {
  return {{"necklace", e.necklace.bits()},
          {"gaps", e.gaps},
          {"lhs", e.lhs.str()},
          {"rhs", e.rhs.str()},
          {"satisfied", e.satisfied}};
}

}  // namespace

TIState state_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  if (n < 1) throw FormatError("n must be >= 1");
  TIState s(n);
  std::set<Necklace> seen;
  const Json& coeffs = field(j, "coeffs");
  if (!coeffs.is_array()) throw FormatError("coeffs must be an array");
  for (const Json& entry : coeffs) {
    const Json& bits = field(entry, "necklace");
    if (!bits.is_string()) throw FormatError("necklace must be a bit string");
    const Necklace key(bits.get<std::string>());
    if (key.length() != n) throw FormatError("necklace " + bits.get<std::string>() + " does not have length n");
    if (!seen.insert(key).second) throw FormatError("class " + key.bits() + " appears more than once");
    const Json& value = field(entry, "value");
    if (!value.is_string()) throw FormatError("state coefficients must be exact strings; floating values are rejected");
    s.set(key, GaussianRational::parse(value.get<std::string>()));
  }
  return s;
}

Json state_to_json(const TIState& s) {
  Json coeffs = Json::array();
  for (const auto& [key, value] : s.coeffs()) coeffs.push_back({{"necklace", key.bits()}, {"value", value.str()}});
  return {{"n", s.n()}, {"coeffs", coeffs}};
}

LoadedRep rep_from_json(const Json& j) {
  LoadedRep out;
  out.n = size_field(j, "n");
  const std::size_t d = size_field(j, "d");
  if (d < 1) throw FormatError("d must be >= 1");
  const Json& scalars = field(j, "scalars");
  if (scalars == "exact") {
    out.exact = ExactRep(matrix_field<GaussianRational>(j, "A0", d, exact_entry),
                         matrix_field<GaussianRational>(j, "A1", d, exact_entry));
    out.floating = to_floating(*out.exact);
  } else if (scalars == "floating") {
    out.floating = FloatRep(matrix_field<ComplexF>(j, "A0", d, float_entry), matrix_field<ComplexF>(j, "A1", d, float_entry));
  } else {
    throw FormatError("scalars must be \"exact\" or \"floating\"");
  }
  return out;
}

Json rep_to_json(const ExactRep& rep, std::size_t n) {
  auto entry = [](const GaussianRational& a) { return a.str(); };
  return {{"n", n},
          {"d", rep.bond_dim()},
          {"scalars", "exact"},
          {"A0", matrix_json(rep.a0, entry)},
          {"A1", matrix_json(rep.a1, entry)}};
}

Json rep_to_json(const FloatRep& rep, std::size_t n) {
  return {{"n", n},
          {"d", rep.bond_dim()},
          {"scalars", "floating"},
          {"A0", matrix_json(rep.a0, complex_json)},
          {"A1", matrix_json(rep.a1, complex_json)}};
}

Json verify_report_to_json(const VerifyReport& r) {
  Json j{{"passed", r.passed},
         {"max_abs_error", r.max_abs_error},
         {"tolerance", r.tolerance},
         {"checked_classes", r.checked_classes}};
  j["worst_necklace"] = r.worst_necklace ? Json(r.worst_necklace->bits()) : Json(nullptr);
  return j;
}

Json unit_report_to_json(const UnitRepReport& r) {
  Json violations = Json::array();
  for (const auto& key : r.condition1_violations) violations.push_back(key.bits());
  Json sparse = Json::array();
  for (const auto& e : r.sparse_equations) sparse.push_back(equation_json(e));
  return {{"passed", r.passed},
          {"condition1", r.condition1},
          {"condition1_violations", violations},
          {"trace_equation", equation_json(r.trace_equation)},
          {"sparse_equations", sparse}};
}

Json mindim_report_to_json(const MinDimReport& r, const ReportFormat& format) {
  Json per_d = Json::array();
  for (const FeasibilityResult& f : r.per_d) {
    Json e{{"d", f.d},
           {"verdict", to_string(f.verdict)},
           {"method", f.method},
           {"num_vars", f.num_vars},
           {"num_polys", f.num_polys},
           {"basis_size", f.basis_size},
           {"monomial_ops", f.ops}};
    if (format.timing) e["seconds"] = f.seconds;
    if (format.basis && f.basis) {
      Json basis = Json::array();
      for (const MultiPoly& p : *f.basis) basis.push_back(p.str(f.var_names));
      e["variables"] = f.var_names;
      e["basis"] = basis;
    }
    per_d.push_back(std::move(e));
  }
  Json j{{"per_d", per_d}, {"bound_used", r.bound_used}};
  j["resolved"] = r.resolved ? Json(*r.resolved) : Json(nullptr);
  j["feasible_upper_bound"] = r.feasible_upper_bound ? Json(*r.feasible_upper_bound) : Json(nullptr);
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace timps
