#pragma once

#include "fcone/extremality.hpp"
#include "fcone/kappa_knudsen.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace fcone {

/// One line of an expected-verdict table.
struct SuiteRow {
  std::string suite;
  int g = 0;
  int n = 0;
  /// A concrete curve, "type:K", "knudsen" or "all".
  std::string selector;
  /// regular | extremal | not_extremal | index=K | equals:<combination> | implies:<curve>
  std::string verdict;
  std::string anchor;
  /// "default", or "large" for rows that need --allow-large.
  std::string scope = "default";
};

struct SuiteSpec {
  std::string name;
  std::vector<SuiteRow> rows;
  std::size_t max_curves = kMaxCurvesInBudget;
  std::size_t max_rank = kMaxRankInBudget;
};

/// Throws std::runtime_error on malformed files (line number in the message).
SuiteSpec load_suite(const std::filesystem::path& tsv);
/// Suites found in `dir`, sorted by name.
std::vector<std::string> suite_names(const std::filesystem::path& dir);
std::filesystem::path default_suite_dir();

enum class ItemStatus { Pass, Fail, Skipped };

std::string to_string(ItemStatus s);

struct ItemResult {
  int g = 0;
  int n = 0;
  std::string curve;
  std::string expected;
  std::string got;
  std::string witness;
  std::string anchor;
  ItemStatus status = ItemStatus::Skipped;
  double elapsed_ms = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<ItemResult> items;
  /// False when some context was refused by the size budget.
  bool complete = true;
  bool allow_large = false;
  std::string cache_dir;
  double elapsed_ms = 0;

  std::size_t count(ItemStatus s) const;
  bool all_pass() const { return count(ItemStatus::Fail) == 0; }
};

struct RunOptions {
  bool allow_large = false;
  /// 0 = one per logical core.
  unsigned workers = 0;
  std::optional<std::filesystem::path> cache_dir;
};

VerificationReport run_suite(const SuiteSpec& spec, const RunOptions& options);

/// Fixed key order; every timing lives under a key named "elapsed_ms".
std::string report_json(const VerificationReport& r, bool include_timing = true);
std::string report_table(const VerificationReport& r);
/// JSON text with every "elapsed_ms" member removed, for comparisons.
std::string strip_timing(const std::string& json_text);

/// Sum of curve terms such as "1/2 F3[1]({}) + 1/2 F4[1]({})".
struct CurveCombination {
  std::vector<std::pair<Rational, FCurve>> terms;
};

CurveCombination parse_combination(const Context& ctx, std::string_view text);

/// F-nefness and listed contractions of every catalog instance on the space.
struct CatalogCheck {
  std::string name;
  std::string parameters;
  /// Empty when the instance is certified.
  std::string problem;
};

std::vector<CatalogCheck> certify_catalog(const FConeSpace& space);

/// Knudsen type: F5[0,0](I,J) or a type 6 curve with two genus-0 tails.
bool is_knudsen_type(const FCurve& f);

}  // namespace fcone
