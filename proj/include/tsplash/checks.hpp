#pragma once

// Named verification checks and the JSON report format used by `verify`.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "tsplash/field.hpp"

namespace tsplash {

struct RunConfig {
  int q = 2;
  std::optional<int> base_prime;
  std::optional<std::vector<Elem>> base_modulus;  // lower coefficients of the monic modulus
  std::optional<CubicPoly> t;
  std::vector<std::string> checks;  // empty means all
  int samples = 20;
  std::uint64_t seed = 1;
  bool timings = false;
};

enum class Status { pass, fail, skipped };
const char* to_string(Status s);

struct CheckReport {
  std::string name;
  std::string paper_anchor;
  Status status = Status::pass;
  std::vector<std::pair<std::string, long long>> counts;
  std::optional<double> elapsed_ms;
  std::optional<nlohmann::ordered_json> certificate;
  std::string message;

  long long count(const std::string& key) const;
};

enum class Cost { cheap, moderate, exhaustive };

struct CheckInfo {
  std::string name;
  std::string anchor;
  Cost cost;
  int max_q;  // larger q is skipped
};

const std::vector<CheckInfo>& check_registry();

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds the field context; throws ConfigError with a diagnostic.
FieldCtx make_context(const RunConfig& cfg);

/// Runs the requested checks in registry order.  Unknown names raise
/// ConfigError listing the valid ones.
std::vector<CheckReport> run_checks(const RunConfig& cfg);

nlohmann::ordered_json report_json(const FieldCtx& ctx, const std::vector<CheckReport>& reports);

/// Re-validates a cover_count certificate against a fresh spread.
bool validate_cover_certificate(const FieldCtx& ctx, const nlohmann::ordered_json& cert);
/// Same for construct_roundtrip: the points form a tangent subplane with the
/// recorded splash that contains the recorded subline.
bool validate_roundtrip_certificate(const FieldCtx& ctx, const nlohmann::ordered_json& cert);

}  // namespace tsplash
