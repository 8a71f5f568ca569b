#pragma once

#include "qgw/braiding.hpp"
#include "qgw/report.hpp"
#include "qgw/rewrite.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace qgw {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct IntRange {
  int lo = 0;
  int hi = 0;
  /// `a` or `a..b`.
  static IntRange parse(const std::string& text);
  std::string to_string() const;
};

struct SuiteConfig {
  /// Preset (`A3`, `D4`) or path of a graph file; empty means A_{n-1}.
  std::string graph;
  IntRange n{3, 3};
  IntRange N{3, 3};
  int search_bound = 2;
  std::vector<Rule> rules{Rule::merge, Rule::commute, Rule::straighten, Rule::serre};
  int rewrite_samples = 200;
  int confluence_samples = 40;
  int word_length = 6;
  /// Degree bound for the polynomial checks; all monomials up to it are used
  /// when poly_samples is 0.
  int poly_degree = 6;
  int poly_samples = 0;
  /// Also run the braid checks on the q = 1 modules.
  bool q_one = true;
  std::filesystem::path cache_dir;
  bool json = false;
  std::uint64_t seed = 1;
  int jobs = 1;
  ModuleLimits limits;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
};

/// Applies `key = value` lines (`#` comments allowed) to `config`. Throws
/// ConfigError on unknown keys or bad values.
void apply_config_text(SuiteConfig& config, const std::string& text);
void apply_config_file(SuiteConfig& config, const std::filesystem::path& path);

/// The graph named by the config for a given n (A_{n-1} by default).
CartanData suite_cartan(const SuiteConfig& config, int n);

/// Convention from <cache>/convention.json if present and readable.
std::optional<GradingConvention> load_convention(const std::filesystem::path& cache_dir);
void store_convention(const std::filesystem::path& cache_dir, const GradingConvention& conv);

/// Runs every check and returns the reports ordered by sort key.
std::vector<VerificationReport> run_suite(const SuiteConfig& config);

/// A report that passes exactly when `inner` failed.
VerificationReport negative_control(VerificationReport inner);

/// One JSON object per report, no trailing newline. Durations are included
/// unless `with_millis` is false.
std::string report_to_json(const VerificationReport& r, std::uint64_t seed, bool with_millis = true);
std::string report_to_text(const VerificationReport& r);

}  // namespace qgw
