#pragma once

// JSON files for states, reps and reports.

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"
#include "timps/constructions.hpp"
#include "timps/mindim.hpp"
#include "timps/mps.hpp"

namespace timps {

using Json = nlohmann::json;

class FormatError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// {"n": int, "coeffs": [{"necklace": "0..1", "value": "p/q+r/s*i"}]}.
/// Necklaces are canonicalized; a repeated class or a non-string value is a FormatError.
TIState state_from_json(const Json& j);
Json state_to_json(const TIState& s);

struct LoadedRep {
  std::size_t n = 0;
  /// Present when "scalars" is "exact".
  std::optional<ExactRep> exact;
  FloatRep floating;
};

/// {"n", "d", "scalars": "exact"|"floating", "A0": [[...]], "A1": [[...]]}.
/// Entries are Q(i) strings or [re, im] pairs; pairs are rejected for exact reps.
LoadedRep rep_from_json(const Json& j);
Json rep_to_json(const ExactRep& rep, std::size_t n);
Json rep_to_json(const FloatRep& rep, std::size_t n);

Json verify_report_to_json(const VerifyReport& r);
Json unit_report_to_json(const UnitRepReport& r);

struct ReportFormat {
  bool timing = true;
  bool basis = false;
};

Json mindim_report_to_json(const MinDimReport& r, const ReportFormat& format = {});

Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

}  // namespace timps
