#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rainbow/campaign.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/parallel.hpp"
#include "rainbow/serialize.hpp"

using namespace rainbow;

namespace {

auto slurp(const std::filesystem::path& p) -> std::string {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

auto scratch(const std::string& name) -> std::filesystem::path {
  auto dir = std::filesystem::temp_directory_path() / ("rainbow_forge_test_" + name);
  std::filesystem::remove_all(dir);
  return dir;
}

auto k5() -> Graph {
  Graph g(5);
  for (VertexId i = 0; i < 5; ++i)
    for (VertexId j = i + 1; j < 5; ++j) g.add_edge(i, j);
  return g;
}

}  // namespace

TEST_CASE("certificate JSON round trip") {
  const ColoredMatroid cm(cycle_matroid(k5()).matroid, two_uniform_unrank(10, 17));
  const auto cert = find_srcp(cm);
  REQUIRE(cert);
  const auto rec = certificate_record("x", *cert, as_extension(cm), k5());
  const auto line = rec.dump();
  const auto parsed = Json::parse(line);
  CHECK(parsed == rec);
  CHECK(verify_record(parsed).empty());
  const auto back = certificate_from_json(parsed);
  CHECK(back.kind == cert->kind);
  CHECK(back.circuits == cert->circuits);
  const auto ext = extension_from_json(parsed.at("instance"));
  CHECK(ext.matroid.epsilon() == 10);
  CHECK(ext.coloring == cm.coloring);
  CHECK(verify_certificate(back, ext).empty());
}

TEST_CASE("records with a wrong claim fail re-verification") {
  const ColoredMatroid cm(cycle_matroid(k5()).matroid, two_uniform_unrank(10, 3));
  auto rec = certificate_record("x", *find_srcp(cm), as_extension(cm));
  SUBCASE("circuit edited") {
    rec["circuits"][0] = Json::array({0, 1});
    CHECK_FALSE(verify_record(rec).empty());
  }
  SUBCASE("colouring edited") {
    rec["instance"]["colours"][0] = 99;
    CHECK_FALSE(verify_record(rec).empty());
  }
  SUBCASE("missing field") {
    rec.erase("kind");
    CHECK_FALSE(verify_record(rec).empty());
  }
}

TEST_CASE("parallel_map is independent of the worker count") {
  auto square = [](std::size_t i) { return i * i; };
  const auto a = parallel_map<std::size_t>(1000, 1, square);
  const auto b = parallel_map<std::size_t>(1000, 4, square);
  CHECK(a == b);
  CHECK(a[31] == 961);
  CHECK_THROWS_AS(parallel_map<int>(10, 3,
                                    [](std::size_t i) -> int {
                                      if (i >= 4) throw std::runtime_error("task " + std::to_string(i));
                                      return 0;
                                    }),
                  std::runtime_error);
}

TEST_CASE("colouring modes parse") {
  CHECK(ColouringMode::parse("all").kind == ColouringMode::Kind::All);
  CHECK(ColouringMode::parse("auto").kind == ColouringMode::Kind::Auto);
  const auto s = ColouringMode::parse("sample:25");
  CHECK(s.kind == ColouringMode::Kind::Sample);
  CHECK(s.sample == 25);
  CHECK(s.to_string() == "sample:25");
  for (const auto* bad : {"sample:", "sample:0", "sample:-3", "sample:4x", "some"})
    CHECK_THROWS_AS(ColouringMode::parse(bad), ParseError);
  CHECK(parse_campaign("lemma-paths") == CampaignName::LemmaPaths);
  CHECK_THROWS_AS(parse_campaign("lemma-path"), ParseError);
  for (auto c : all_campaigns()) CHECK(parse_campaign(campaign_cli_name(c)) == c);
}

TEST_CASE("empty campaign writes valid empty files with headers") {
  CampaignSpec spec;
  spec.name = CampaignName::MainTheoremGraphic;
  spec.max_n = 3;  // no graph with nu <= 3 has 2 nu edges
  const auto rep = run_campaign(spec);
  CHECK(rep.rows.empty());
  CHECK(rep.ok());
  const auto dir = scratch("empty");
  const auto paths = write_outputs(rep, dir);
  CHECK(slurp(paths.certificates).empty());
  CHECK(slurp(paths.summary) == "id,family,nu,epsilon,r,kind,bound,outcome\n");
  CHECK(slurp(paths.digest).find("status: OK") != std::string::npos);
  CHECK(verify_certificate_file(paths.certificates).lines == 0);
  std::filesystem::remove_all(dir);
}

TEST_CASE("one-host campaign writes one verified line per certificate") {
  CampaignSpec spec;
  spec.name = CampaignName::MainTheoremGraphic;
  spec.max_n = 5;
  spec.colourings = ColouringMode::parse("sample:5");
  spec.jobs = 2;
  const auto rep = run_campaign(spec);
  CHECK(rep.rows.size() == 5);
  CHECK(rep.certificates.size() == 5);
  const auto dir = scratch("one");
  const auto paths = write_outputs(rep, dir);
  const auto v = verify_certificate_file(paths.certificates);
  CHECK(v.lines == 5);
  CHECK(v.verified == 5);
  CHECK(v.failures.empty());
  std::ifstream in(paths.certificates);
  std::string line;
  std::getline(in, line);
  CHECK(Json::parse(line).at("certificate_id") == "main-theorem-graphic-0000000");
  std::filesystem::remove_all(dir);
}

TEST_CASE("all mode refuses a census over budget") {
  CampaignSpec spec;
  spec.name = CampaignName::LemmaDistances;
  spec.max_n = 12;
  spec.colourings = ColouringMode::parse("all");
  const auto rep = run_campaign(spec);
  CHECK(rep.incomplete);
  CHECK_FALSE(rep.ok());
  REQUIRE_FALSE(rep.incomplete_reasons.empty());
  CHECK(rep.incomplete_reasons[0].find("refused to start") != std::string::npos);
}

TEST_CASE("unwritable output directory is reported with its path") {
  CampaignSpec spec;
  spec.max_n = 3;
  const auto rep = run_campaign(spec);
  const auto blocker = scratch("blocker");
  std::ofstream(blocker.string()) << "x";
  try {
    write_outputs(rep, blocker / "sub");
    FAIL("expected an error");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find(blocker.string()) != std::string::npos);
  }
  std::filesystem::remove(blocker);
}
