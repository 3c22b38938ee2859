#pragma once

// Task dispatch, scenario files, and report rendering for the command line.

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "naads/checkers.hpp"
#include "naads/family.hpp"
#include "naads/report.hpp"

namespace naads {

inline constexpr std::string_view kScenarioSchema = "naads-scenario/1";
inline constexpr int kReportSchemaVersion = 1;

enum class ParamType { Real, Integer, RealList, Text };

struct ParamSpec {
  std::string name;
  ParamType type;
  /// Empty when the parameter is required.
  std::optional<std::string> fallback;
};

struct TaskSpec {
  std::string name;
  std::vector<ParamSpec> params;
};

/// Every task the dispatcher knows, in a fixed order.
const std::vector<TaskSpec>& task_specs();
/// Throws UsageError for an unknown task.
const TaskSpec& task_spec(std::string_view task);

/// Fills defaults and validates names and values. Throws UsageError for
/// unknown tasks or parameters, missing required ones, and malformed values.
Record resolve_params(std::string_view task, const Record& params);

/// Settings applied on top of defaults (explicit params win).
struct RunOptions {
  std::optional<std::uint64_t> seed;
  bool random_sampling = false;
};

/// Runs a task; parameters are validated before any computation.
PropertyReport run_task(const MapFamily& family, std::string_view task, const Record& params,
                        const RunOptions& opts = {});

/// Family from a corpus name or an inline JSON specification.
MapFamily family_from_json_text(std::string_view json_text);

struct OutputSpec {
  std::string kind;  // report | orbit_csv | return_raster | modulus_curve
  std::string path;
  Record options;    // optional overrides: x, eps, N, windows
};

struct Scenario {
  std::string family_label;
  std::string family_json;  // corpus name as a JSON string, or an inline object
  std::string task;
  Record params;
  std::optional<Verdict> expect;
  std::vector<OutputSpec> outputs;
};

/// Throws UsageError on schema violations.
Scenario parse_scenario(std::string_view json_text);
Scenario load_scenario(const std::filesystem::path& path);

struct ReportHeader {
  std::string family;
  SpaceKind space = SpaceKind::UnitInterval;
  std::string task;
  std::optional<Verdict> expect;
  bool timestamp = true;
};

/// Key: value text with a fixed key order.
std::string render_report(const ReportHeader& header, const PropertyReport& report);

std::string orbit_csv(const MapFamily& family, double x, std::int64_t N);
std::string return_raster_csv(const MapFamily& family, double x, double eps, std::int64_t N);
std::string modulus_curve_csv(const MapFamily& family, double eps, const std::vector<std::int64_t>& windows,
                              std::size_t pair_grid);

/// Exit status for a finished run: 2 when inconclusive; otherwise 0 when the
/// verdict matches `expect` (or is positive without one), else 1.
int exit_status(Verdict v, const std::optional<Verdict>& expect);

inline constexpr int kExitMismatch = 1;
inline constexpr int kExitBudget = 2;
inline constexpr int kExitUsage = 64;

struct ScenarioRunSettings {
  RunOptions run;
  bool timestamp = true;
  /// Base directory for relative output paths (current directory if empty).
  std::filesystem::path out_dir;
};

/// Runs a loaded scenario, writes its outputs, and returns the exit status.
/// Errors propagate as exceptions; see exit_code_for().
int run_scenario(const Scenario& scenario, const ScenarioRunSettings& settings, std::ostream& log);

/// Exit code for an exception escaping a run.
int exit_code_for(const std::exception& e);

}  // namespace naads
