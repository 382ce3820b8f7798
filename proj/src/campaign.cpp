#include "rainbow/campaign.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "campaign_internal.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/parallel.hpp"

namespace rainbow {

namespace {

const std::vector<std::pair<CampaignName, std::string>>& campaign_names() {
  static const std::vector<std::pair<CampaignName, std::string>> names = {
      {CampaignName::MainTheoremGraphic, "main-theorem-graphic"},
      {CampaignName::MainTheoremCographic, "main-theorem-cographic"},
      {CampaignName::Theorem22I, "theorem-22-i"},
      {CampaignName::Theorem22II, "theorem-22-ii"},
      {CampaignName::Theorem22IIIGraphic, "theorem-22-iii-graphic"},
      {CampaignName::Theorem22IIICographic, "theorem-22-iii-cographic"},
      {CampaignName::LemmaDistances, "lemma-distances"},
      {CampaignName::LemmaPaths, "lemma-paths"},
      {CampaignName::ThetaOutcomes, "theta-outcomes"},
      {CampaignName::StratificationIff, "stratification-iff"},
      {CampaignName::SumLemma, "sum-lemma"},
      {CampaignName::Observations, "observations"},
      {CampaignName::K23Exception, "k23-exception"},
  };
  return names;
}

auto csv_field(const std::string& s) -> std::string {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << text;
  out.close();
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

auto campaign_cli_name(CampaignName name) -> std::string {
  for (const auto& [n, s] : campaign_names())
    if (n == name) return s;
  throw std::logic_error("unnamed campaign");
}

auto parse_campaign(const std::string& text) -> CampaignName {
  for (const auto& [n, s] : campaign_names())
    if (s == text) return n;
  throw ParseError("unknown campaign '" + text + "'");
}

auto all_campaigns() -> std::vector<CampaignName> {
  std::vector<CampaignName> out;
  for (const auto& [n, s] : campaign_names()) out.push_back(n);
  return out;
}

auto ColouringMode::parse(const std::string& text) -> ColouringMode {
  if (text == "auto") return {};
  if (text == "all") return {Kind::All, 0};
  const std::string prefix = "sample:";
  if (text.rfind(prefix, 0) == 0) {
    const auto rest = text.substr(prefix.size());
    std::size_t pos = 0;
    unsigned long long k = 0;
    try {
      k = std::stoull(rest, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos == rest.size() && pos > 0 && k > 0 && rest[0] != '-') return {Kind::Sample, static_cast<std::size_t>(k)};
  }
  throw ParseError("colourings must be all, auto or sample:K with K >= 1, got '" + text + "'");
}

auto ColouringMode::to_string() const -> std::string {
  switch (kind) {
    case Kind::Auto:
      return "auto";
    case Kind::All:
      return "all";
    case Kind::Sample:
      return "sample:" + std::to_string(sample);
  }
  return "?";
}

auto outcome_name(Outcome o) -> std::string {
  switch (o) {
    case Outcome::Certificate:
      return "certificate";
    case Outcome::Holds:
      return "holds";
    case Outcome::Expected:
      return "expected";
    case Outcome::None:
      return "none";
    case Outcome::Skipped:
      return "skipped";
    case Outcome::Violation:
      return "violation";
    case Outcome::Incomplete:
      return "incomplete";
  }
  return "?";
}

auto CampaignReport::counts() const -> std::map<Outcome, std::size_t> {
  std::map<Outcome, std::size_t> out;
  for (const auto& r : rows) ++out[r.outcome];
  return out;
}

auto CampaignReport::violation_count() const -> std::size_t {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.outcome == Outcome::Violation ? 1 : 0;
  return n;
}

auto config_echo(const CampaignSpec& spec) -> std::string {
  std::ostringstream os;
  os << "campaign=" << campaign_cli_name(spec.name);
  os << " min_n=" << (spec.min_n ? std::to_string(*spec.min_n) : "default");
  os << " max_n=" << (spec.max_n ? std::to_string(*spec.max_n) : "default");
  os << " colourings=" << spec.colourings.to_string();
  os << " seed=" << spec.seed;
  os << " placements=" << (spec.placements ? std::to_string(spec.placements) : "default");
  os << " graphs=" << (spec.graphs ? *spec.graphs : "bundled");
  return os.str();
}

auto run_campaign(const CampaignSpec& spec) -> CampaignReport {
  const auto start = std::chrono::steady_clock::now();
  CampaignReport rep;
  rep.spec = spec;
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };

  detail::Plan plan;
  try {
    plan = detail::build_plan(spec);
  } catch (const BudgetExceeded& e) {
    rep.incomplete = true;
    rep.incomplete_reasons.push_back(std::string("refused to start: ") + e.what());
    rep.wall_seconds = elapsed();
    return rep;
  }
  rep.notes = plan.notes;

  auto results = parallel_map<detail::ItemResult>(plan.tasks.size(), spec.jobs, [&](std::size_t i) {
    try {
      return plan.tasks[i]();
    } catch (const BudgetExceeded& e) {
      detail::ItemResult r;
      detail::PendingRow p;
      p.row.id = "task-" + std::to_string(i);
      p.row.outcome = Outcome::Incomplete;
      p.row.detail = e.what();
      r.rows.push_back(std::move(p));
      return r;
    }
  });

  const auto prefix = campaign_cli_name(spec.name);
  std::size_t next_id = 0;
  std::map<std::string, std::size_t> tallies;
  for (auto& res : results) {
    for (const auto& [k, v] : res.tallies) tallies[k] += v;
    for (auto& p : res.rows) {
      std::string ids;
      for (auto& c : p.certificates) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "-%07zu", next_id++);
        const auto id = prefix + buf;
        Json rec;
        rec["certificate_id"] = id;
        for (auto& [k, v] : c.items()) rec[k] = std::move(v);
        rep.certificates.push_back(rec.dump());
        ids += (ids.empty() ? "" : " ") + id;
      }
      if (!ids.empty()) p.row.detail = p.row.detail.empty() ? ids : ids + "; " + p.row.detail;
      if (p.row.outcome == Outcome::Incomplete) {
        rep.incomplete = true;
        rep.incomplete_reasons.push_back(p.row.id + ": " + p.row.detail);
      }
      if (p.dump) {
        Json d;
        d["instance_id"] = p.row.id;
        d["reason"] = p.row.detail;
        for (auto& [k, v] : p.dump->items()) d[k] = std::move(v);
        rep.violations.push_back(d.dump());
      }
      rep.rows.push_back(std::move(p.row));
    }
  }
  for (const auto& [k, v] : tallies) rep.notes.push_back(k + ": " + std::to_string(v));
  rep.wall_seconds = elapsed();
  return rep;
}

auto write_outputs(const CampaignReport& report, const std::filesystem::path& dir) -> OutputPaths {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
  const auto base = campaign_cli_name(report.spec.name);
  OutputPaths paths{dir / (base + ".certificates.jsonl"), dir / (base + ".summary.csv"), dir / (base + ".digest.txt"),
                    dir / (base + ".violations.jsonl")};

  std::string certs;
  for (const auto& line : report.certificates) certs += line + "\n";
  write_file(paths.certificates, certs);

  std::string violations;
  for (const auto& line : report.violations) violations += line + "\n";
  write_file(paths.violations, violations);

  std::string csv = "id,family,nu,epsilon,r,kind,bound,outcome\n";
  for (const auto& r : report.rows) {
    auto outcome = outcome_name(r.outcome);
    if (!r.detail.empty()) outcome += ": " + r.detail;
    csv += csv_field(r.id) + "," + csv_field(r.family) + "," + (r.nu ? std::to_string(*r.nu) : "") + "," +
           std::to_string(r.epsilon) + "," + std::to_string(r.rank) + "," + csv_field(r.kind) + "," +
           csv_field(r.bound) + "," + csv_field(outcome) + "\n";
  }
  write_file(paths.summary, csv);

  std::ostringstream d;
  d << "campaign: " << base << "\n";
  d << "config: " << config_echo(report.spec) << "\n";
  d << "jobs: " << report.spec.jobs << "\n";
  d << "instances: " << report.rows.size() << "\n";
  d << "certificates: " << report.certificates.size() << "\n";
  for (const auto& [o, n] : report.counts()) d << "  " << outcome_name(o) << ": " << n << "\n";
  d << "violations: " << report.violation_count() << "\n";
  d << "status: " << (report.ok() ? "OK" : report.incomplete ? "INCOMPLETE" : "VIOLATIONS") << "\n";
  if (!report.notes.empty()) {
    d << "notes:\n";
    for (const auto& n : report.notes) d << "  " << n << "\n";
  }
  if (report.incomplete) {
    d << "incomplete:\n";
    for (const auto& r : report.incomplete_reasons) d << "  " << r << "\n";
  }
  std::size_t shown = 0;
  for (const auto& r : report.rows) {
    if (r.outcome != Outcome::Violation) continue;
    if (shown == 0) d << "violation rows:\n";
    if (++shown > 25) {
      d << "  ... see " << paths.summary.filename().string() << "\n";
      break;
    }
    d << "  " << r.id << ": " << r.detail << "\n";
  }
  d << "wall time: " << report.wall_seconds << " s\n";
  write_file(paths.digest, d.str());
  return paths;
}

auto verify_certificate_file(const std::filesystem::path& path) -> FileVerification {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  FileVerification out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ++out.lines;
    std::string why;
    try {
      why = verify_record(Json::parse(line));
    } catch (const std::exception& e) {
      why = std::string("unparseable: ") + e.what();
    }
    if (why.empty())
      ++out.verified;
    else
      out.failures.push_back("line " + std::to_string(lineno) + ": " + why);
  }
  return out;
}

}  // namespace rainbow
