#pragma once

#include <optional>
#include <string>

#include "fincat/enumcat.hpp"
#include "fincat/json.hpp"

namespace fincat::cli {

inline constexpr int kExitClean = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitWitness = 3;
inline constexpr int kExitInconclusive = 4;

enum class Format { json, text };

/// Bad instance names, out-of-range bounds, unreadable or invalid input.
class UsageError : public Error {
public:
  using Error::Error;
};

struct Output {
  int exit_code = kExitClean;
  Json report;
};

struct AuditRequest {
  std::string instance;
  std::optional<std::size_t> bound;
  std::optional<std::size_t> base_size;
  std::size_t threads = 1;
};

struct InstanceLimits {
  std::size_t default_bound;
  std::size_t max_bound;
  std::size_t default_base_size;
  std::size_t max_base_size;
};

/// Throws UsageError for an unknown instance name.
InstanceLimits limits_for(const std::string& instance);

/// Upper estimate of pullback squares an audit would scan.
double estimate_squares(const std::string& instance, std::size_t bound, std::size_t base_size);

/// Exit 0 on a clean report, 3 on a witness. Throws UsageError when the
/// request is out of range.
Output cmd_audit(const AuditRequest& req);

/// target: pos, comma, coeq-divergence, coproduct.
Output cmd_counterexample(const std::string& target, std::size_t base_size);

/// query: pullback, coequalizer, classify, fibers, ran.
Output cmd_check(const Json& input, const std::string& query);

struct NoGoRequest {
  std::size_t base_size = 1;
  std::size_t coslice_bound = 3;
  std::size_t comma_bound = 3;
  std::size_t threads = 1;
};

enum class Conclusion { obstruction_certified_at_bound, inconclusive };

struct NoGoReport {
  RegularityReport coslice_audit;
  RegularityReport comma_audit;
  NoGoRequest bounds;
  std::string engine_version;

  Conclusion conclusion() const noexcept;
  Json to_json() const;
};

NoGoReport run_nogo(const NoGoRequest& req);
/// Exit 0 when the obstruction is certified at the bounds, 4 otherwise.
Output cmd_nogo(const NoGoRequest& req);

/// Flag value if given, else FINCAT_THREADS, else the hardware concurrency. Throws UsageError on a
/// malformed environment value.
std::size_t resolve_threads(std::optional<std::size_t> flag);

std::string render(const Json& report, Format format);

} // namespace fincat::cli
