#pragma once

// Configuration files and reports. Every coordinate is an exact string:
// rationals as "n" or "n/d", homogeneous triples as "(x:y:z)" for points
// and "[u:v:w]" for lines. Objects serialize with sorted keys, so equal
// inputs give byte-identical output.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cevian/construction.hpp"
#include "cevian/theorems.hpp"
#include "json.hpp"

namespace cevian {

using Json = nlohmann::json;

inline constexpr const char* kConfigSchema = "cevian-config/1";
inline constexpr const char* kReportSchema = "cevian-report/1";
inline constexpr const char* kFuzzSchema = "cevian-fuzz/1";

struct Perturbation {
  std::string object;
  Rat dx;
  Rat dy;
};

struct ConfigInput {
  enum class Mode { Cartesian, Barycentric };

  std::array<CartesianPoint, 3> triangle;
  Mode mode = Mode::Cartesian;
  /// Two entries for Cartesian input, three for barycentric.
  std::vector<Rat> coords;
  std::optional<Perturbation> perturb;
};

/// Throws GeometryError(ParseError) with the offending field in the message.
ConfigInput parse_config(const Json& j);
ConfigInput load_config(const std::string& path);
Json to_json(const ConfigInput& in);

/// derive() plus the optional perturbation.
CevianConfig build_config(const ConfigInput& in);

/// "(x:y:z)" or "[u:v:w]" back to integers. Throws ParseError.
Vec3 parse_triple(const std::string& text);

Json point_json(const CevianConfig& cfg, const ProjPoint& p);
Json result_json(const CheckResult& r);

/// Full report: config echo, guard flags, every derived object, checks.
Json config_report(const ConfigInput& in, const CevianConfig& cfg, const std::vector<CheckResult>& checks);
Json suite_json(const SuiteReport& report);

/// Two-space indented with a trailing newline.
std::string dump(const Json& j);

}  // namespace cevian
