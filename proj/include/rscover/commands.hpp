#ifndef RSCOVER_COMMANDS_HPP
#define RSCOVER_COMMANDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "rscover/sim.hpp"

namespace rscover {

inline constexpr const char* kVersion = "0.1.0";

/// A command plus its options as raw strings, e.g. {"bound random-hamming",
/// {{"q", "7"}, {"n", "6"}, {"M", "16807"}}}. Setting a key twice keeps the
/// last value.
struct RunConfig {
  std::string command;
  std::vector<std::pair<std::string, std::string>> options;

  void set(const std::string& key, const std::string& value);
  const std::string* find(const std::string& key) const;
};

using Cell = std::variant<std::int64_t, double, std::string>;

struct Report {
  std::string command;
  // Resolved options, defaults included; excludes output-only options
  // (format, out, workers, trial-log) so artifacts do not depend on them.
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  std::optional<std::uint64_t> seed;
  std::vector<TrialRecord> trial_log;
};

/// Names accepted by run(), as "group sub".
const std::vector<std::string>& command_names();

/// Validates and executes. Throws UsageError for unknown commands or
/// options and bad values, DomainError for violated preconditions,
/// RefusedError when a work cap is exceeded.
Report run(const RunConfig& config);

std::string format_real(double v);
std::string render_csv(const Report& report);
/// timestamp is written verbatim into meta.timestamp.
std::string render_json(const Report& report, const std::string& timestamp);
std::string render_trial_log(const Report& report);
std::string utc_timestamp();

}  // namespace rscover

#endif  // RSCOVER_COMMANDS_HPP
