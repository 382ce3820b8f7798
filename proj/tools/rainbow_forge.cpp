// rainbow_forge: run a verification campaign, or re-verify a certificate file.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "rainbow/budget.hpp"
#include "rainbow/campaign.hpp"
#include "rainbow/errors.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kFindings = 1;
constexpr int kUsage = 2;

auto campaign_list() -> std::string {
  std::string s;
  for (auto c : rainbow::all_campaigns()) s += "\n  " + rainbow::campaign_cli_name(c);
  return s;
}

auto run_verify(const std::string& path) -> int {
  const auto v = rainbow::verify_certificate_file(path);
  for (const auto& f : v.failures) std::cerr << path << ": " << f << "\n";
  std::cout << path << ": " << v.verified << " of " << v.lines << " certificates verified\n";
  return v.failures.empty() ? kOk : kFindings;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rainbow circuit verification campaigns"};
  app.footer("Campaigns:" + campaign_list() +
             "\n\nExit status: 0 when nothing was violated and the run was complete, 1 otherwise, 2 on usage errors.");

  std::string campaign;
  std::optional<std::size_t> max_n;
  std::optional<std::size_t> min_n;
  std::string colourings = "auto";
  std::uint64_t seed = 1;
  std::size_t jobs = 0;
  std::string graphs;
  std::string out = "out";
  std::size_t placements = 0;
  std::string verify;

  app.add_option("--campaign", campaign, "Campaign to run");
  app.add_option("--max-n", max_n, "Largest size parameter (n or number of vertices)");
  app.add_option("--min-n", min_n, "Smallest size parameter");
  app.add_option("--colourings", colourings, "all, auto, or sample:K per host or family size")
      ->capture_default_str();
  app.add_option("--seed", seed, "Sampling seed")->capture_default_str();
  app.add_option("--jobs", jobs, "Worker threads, 0 for one per hardware thread")->capture_default_str();
  app.add_option("--graphs", graphs, "graph6 catalog replacing the bundled one")->check(CLI::ExistingFile);
  app.add_option("--out", out, "Output directory")->capture_default_str();
  app.add_option("--placements", placements, "Sampled placements per instance where not enumerated (0 = default)");
  app.add_option("--verify", verify, "Re-verify a certificate file and exit")->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    (void)rainbow::Budget::current();
  } catch (const std::exception& e) {
    std::cerr << "RAINBOW_FORGE_BUDGET: " << e.what() << "\n";
    return kUsage;
  }

  try {
    if (!verify.empty()) return run_verify(verify);

    if (campaign.empty()) {
      std::cerr << "either --campaign or --verify is required\n" << app.help();
      return kUsage;
    }
    rainbow::CampaignSpec spec;
    try {
      spec.name = rainbow::parse_campaign(campaign);
      spec.colourings = rainbow::ColouringMode::parse(colourings);
    } catch (const rainbow::ParseError& e) {
      std::cerr << e.what() << "\n" << app.help();
      return kUsage;
    }
    spec.min_n = min_n;
    spec.max_n = max_n;
    spec.seed = seed;
    spec.jobs = jobs;
    if (!graphs.empty()) spec.graphs = graphs;
    spec.placements = placements;

    const auto report = rainbow::run_campaign(spec);
    const auto paths = rainbow::write_outputs(report, out);

    std::cout << rainbow::config_echo(spec) << "\n";
    std::cout << report.rows.size() << " instances, " << report.certificates.size() << " certificates, "
              << report.violation_count() << " violations";
    if (report.incomplete) std::cout << ", INCOMPLETE";
    std::cout << " (" << report.wall_seconds << " s)\n";
    std::cout << "digest: " << paths.digest.string() << "\n";
    return report.ok() ? kOk : kFindings;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFindings;
  }
}
