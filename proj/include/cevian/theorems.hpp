#pragma once

// Registry of theorem checks, the seeded configuration sampler and the
// suite runner.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cevian/construction.hpp"
#include "cevian/random.hpp"

namespace cevian {

enum class CheckStatus { Pass, Fail, Skipped };

std::string_view to_string(CheckStatus s);

struct Witness {
  std::string equality;
  std::map<std::string, std::string> objects;
};

struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  /// Unmet requirement for a skip, error text for a failure.
  std::string reason;
  Witness witness;
};

/// Per-check state handed to verify(): the configuration, a private random
/// stream, and the coordinate bound for sampled points.
class CheckContext {
 public:
  /// Points are drawn with coordinates up to max(bound, 12) so that small
  /// bounds still leave enough distinct points on a line.
  CheckContext(const CevianConfig& cfg, std::uint64_t seed, std::int64_t bound)
      : cfg_(cfg), rng_(seed), bound_(std::max<std::int64_t>(bound, 12)) {}

  const CevianConfig& cfg() const { return cfg_; }
  SplitMix64& rng() { return rng_; }
  std::int64_t bound() const { return bound_; }

  /// Random barycentric point with small integer coordinates.
  ProjPoint random_point();
  /// Ordinary point off the side lines.
  ProjPoint random_generic_point();
  /// Point of the line at infinity off the side directions.
  ProjPoint random_direction();
  /// Line through no vertex.
  ProjLine random_line();
  /// Ordinary R1 off the sides with gamma_P(R1) ordinary and R1 not fixed;
  /// optionally also with a nondegenerate pedal conic.
  ProjPoint random_pedal_point(bool nondegenerate_conic = false);
  /// Non-vertex point of the conic, reached as a second intersection
  /// from a vertex.
  ProjPoint random_point_on(const Conic& c);

 private:
  const CevianConfig& cfg_;
  SplitMix64 rng_;
  std::int64_t bound_;
};

/// Thrown by verify() when an exact equality fails.
struct CheckFailure {
  Witness witness;
};
/// Thrown by verify() when a needed object is unavailable.
struct CheckSkipped {
  std::string reason;
};

struct TheoremCheck {
  std::string id;
  std::string statement;
  std::vector<Requirement> hypotheses;
  std::function<void(CheckContext&)> verify;
};

const std::vector<TheoremCheck>& theorem_registry();

/// Glob patterns separated by commas; empty selects everything.
bool filter_matches(const std::string& filter, const std::string& id);
std::vector<const TheoremCheck*> select_checks(const std::string& filter);

/// Never throws: errors raised inside verify become failures.
CheckResult run_check(const TheoremCheck& check, const CevianConfig& cfg, std::uint64_t seed, std::int64_t bound);

class ConfigSampler {
 public:
  ConfigSampler(std::uint64_t seed, std::int64_t bound = 20);

  /// Drawn once from the seed, never right-angled.
  const TriangleFrame& frame() const { return frame_; }
  std::int64_t bound() const { return bound_; }

  /// Config number `index` of this run satisfying every requirement.
  /// Throws RetryExhausted after 10,000 rejections.
  CevianConfig sample(std::uint64_t index, const std::vector<Requirement>& required);

 private:
  std::uint64_t seed_;
  std::int64_t bound_;
  TriangleFrame frame_;
};

struct ConfigRun {
  std::uint64_t index;
  ProjPoint p;
  std::vector<CheckResult> results;
};

struct CheckTally {
  int pass = 0;
  int fail = 0;
  int skipped = 0;
};

struct SuiteReport {
  std::uint64_t seed;
  std::uint64_t count;
  std::int64_t bound;
  std::string filter;
  std::array<CartesianPoint, 3> triangle;
  std::vector<ConfigRun> configs;
  std::map<std::string, CheckTally> summary;

  int failures() const;
};

/// Requirements every sampled suite configuration meets.
const std::vector<Requirement>& suite_requirements();

/// Throws GeometryError(DegenerateInput) for count 0 or an empty selection,
/// RetryExhausted from the sampler.
SuiteReport run_suite(std::uint64_t seed, std::uint64_t count, const std::string& filter, std::int64_t bound = 20);

}  // namespace cevian
