#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rainbow {

enum class CampaignName {
  MainTheoremGraphic,
  MainTheoremCographic,
  Theorem22I,
  Theorem22II,
  Theorem22IIIGraphic,
  Theorem22IIICographic,
  LemmaDistances,
  LemmaPaths,
  ThetaOutcomes,
  StratificationIff,
  SumLemma,
  Observations,
  K23Exception,
};

/// Command-line spelling, e.g. "main-theorem-graphic".
auto campaign_cli_name(CampaignName name) -> std::string;
auto parse_campaign(const std::string& text) -> CampaignName;
auto all_campaigns() -> std::vector<CampaignName>;

/**
 * How many coloured instances to take per host or per family size. Auto
 * means everything when the census fits the budget and a seeded sample of
 * the campaign's default size otherwise. All refuses to run past the budget.
 */
struct ColouringMode {
  enum class Kind { Auto, All, Sample };
  Kind kind = Kind::Auto;
  std::size_t sample = 0;

  static auto parse(const std::string& text) -> ColouringMode;
  [[nodiscard]] auto to_string() const -> std::string;
};

struct CampaignSpec {
  CampaignName name = CampaignName::MainTheoremGraphic;
  std::optional<std::size_t> min_n;
  std::optional<std::size_t> max_n;
  ColouringMode colourings;
  std::uint64_t seed = 1;
  /// 0 means one worker per hardware thread.
  std::size_t jobs = 0;
  /// graph6 catalog replacing the bundled one.
  std::optional<std::string> graphs;
  /// Directory holding the bundled catalogs.
  std::string data_dir;
  /// Sampled T or x placements per instance where placements are not enumerated; 0 picks the default.
  std::size_t placements = 0;
};

enum class Outcome { Certificate, Holds, Expected, None, Skipped, Violation, Incomplete };

auto outcome_name(Outcome o) -> std::string;

struct InstanceRow {
  std::string id;
  std::string family;
  std::optional<std::size_t> nu;
  std::size_t epsilon = 0;
  std::size_t rank = 0;
  std::string kind;
  std::string bound;
  Outcome outcome = Outcome::None;
  /// Certificate ids for Certificate rows, a reason otherwise.
  std::string detail;
};

struct CampaignReport {
  CampaignSpec spec;
  std::vector<InstanceRow> rows;
  /// Certificate records, one JSON document per line, in canonical order.
  std::vector<std::string> certificates;
  /// Full instance dumps for violation rows.
  std::vector<std::string> violations;
  /// Census and sampling decisions, and anything else worth a line in the digest.
  std::vector<std::string> notes;
  bool incomplete = false;
  std::vector<std::string> incomplete_reasons;
  double wall_seconds = 0;

  [[nodiscard]] auto counts() const -> std::map<Outcome, std::size_t>;
  [[nodiscard]] auto violation_count() const -> std::size_t;
  /// No violations and nothing incomplete.
  [[nodiscard]] auto ok() const -> bool { return violation_count() == 0 && !incomplete; }
};

auto config_echo(const CampaignSpec& spec) -> std::string;

auto run_campaign(const CampaignSpec& spec) -> CampaignReport;

struct OutputPaths {
  std::filesystem::path certificates;
  std::filesystem::path summary;
  std::filesystem::path digest;
  std::filesystem::path violations;
};

/// Writes <campaign>.certificates.jsonl, .summary.csv, .violations.jsonl and .digest.txt under dir.
auto write_outputs(const CampaignReport& report, const std::filesystem::path& dir) -> OutputPaths;

struct FileVerification {
  std::size_t lines = 0;
  std::size_t verified = 0;
  /// "line N: reason"
  std::vector<std::string> failures;
};

/// Re-verifies every line of a certificate file from its embedded instance.
auto verify_certificate_file(const std::filesystem::path& path) -> FileVerification;

}  // namespace rainbow
