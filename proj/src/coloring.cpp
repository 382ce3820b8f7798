#include "rainbow/coloring.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <unordered_set>

#include "rainbow/errors.hpp"

namespace rainbow {

Coloring::Coloring(std::vector<ColourId> colour_of, std::optional<ClassBound> declared)
    : colour_of_(std::move(colour_of)), declared_(declared) {
  if (colour_of_.size() > ElementSet::kCapacity) throw PreconditionError("colouring larger than set capacity");
  ColourId top = 0;
  for (auto c : colour_of_) top = std::max(top, c + 1);
  classes_.assign(top, ElementSet{});
  for (std::size_t e = 0; e < colour_of_.size(); ++e) classes_[colour_of_[e]].insert(static_cast<ElementId>(e));
  for (std::size_t c = 0; c < classes_.size(); ++c)
    if (classes_[c].empty()) throw PreconditionError("colour ids must be dense; colour " + std::to_string(c) + " unused");
  if (declared_) {
    bool ok = declared_->kind == ClassBound::Kind::Bounded ? is_k_bounded(declared_->k) : is_k_uniform(declared_->k);
    if (!ok)
      throw PreconditionError(std::string("colouring is not ") + std::to_string(declared_->k) +
                              (declared_->kind == ClassBound::Kind::Bounded ? "-bounded" : "-uniform"));
  }
}

auto Coloring::is_k_bounded(std::size_t k) const -> bool {
  return std::all_of(classes_.begin(), classes_.end(), [&](const ElementSet& s) { return s.size() <= k; });
}

auto Coloring::is_k_uniform(std::size_t k) const -> bool {
  return std::all_of(classes_.begin(), classes_.end(), [&](const ElementSet& s) { return s.size() == k; });
}

auto Coloring::colours_of(const ElementSet& a) const -> ElementSet {
  ElementSet out;
  a.for_each([&](ElementId e) { out.insert(colour_of_[e]); });
  return out;
}

auto Coloring::canonical() const -> Coloring {
  std::vector<ColourId> relabel(classes_.size(), UINT32_MAX);
  ColourId next = 0;
  std::vector<ColourId> out(colour_of_.size());
  for (std::size_t e = 0; e < colour_of_.size(); ++e) {
    auto& r = relabel[colour_of_[e]];
    if (r == UINT32_MAX) r = next++;
    out[e] = r;
  }
  return Coloring(std::move(out), declared_);
}

auto Coloring::to_text() const -> std::string {
  std::string s = std::to_string(num_colours()) + ";";
  for (std::size_t e = 0; e < colour_of_.size(); ++e) {
    s += (e == 0 ? " " : ",");
    s += std::to_string(e) + ":" + std::to_string(colour_of_[e]);
  }
  return s;
}

auto Coloring::parse(const std::string& text) -> Coloring {
  auto semi = text.find(';');
  if (semi == std::string::npos) throw ParseError("colouring needs 'k; e:c,...'");
  auto number = [](std::string s, const char* what) -> std::size_t {
    s.erase(std::remove_if(s.begin(), s.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
            s.end());
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError(std::string("bad ") + what + " '" + s + "'");
    return static_cast<std::size_t>(std::stoull(s));
  };
  auto k = number(text.substr(0, semi), "colour count");
  std::map<std::size_t, std::size_t> entries;
  std::stringstream ss(text.substr(semi + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (std::all_of(item.begin(), item.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }))
      continue;
    auto colon = item.find(':');
    if (colon == std::string::npos) throw ParseError("bad colouring entry '" + item + "'");
    auto e = number(item.substr(0, colon), "element");
    auto c = number(item.substr(colon + 1), "colour");
    if (c >= k) throw ParseError("colour " + std::to_string(c) + " not below k");
    if (!entries.emplace(e, c).second) throw ParseError("element " + std::to_string(e) + " coloured twice");
  }
  std::vector<ColourId> colour_of(entries.size());
  std::size_t expect = 0;
  for (auto [e, c] : entries) {
    if (e != expect++) throw ParseError("colouring must cover elements 0..n-1");
    colour_of[e] = static_cast<ColourId>(c);
  }
  Coloring out(colour_of);
  if (out.num_colours() != k) throw ParseError("colour count does not match the colours used");
  return out;
}

ColoredMatroid::ColoredMatroid(BinaryMatroid m, Coloring c) : matroid(std::move(m)), coloring(std::move(c)) {
  if (coloring.size() != matroid.epsilon()) throw PreconditionError("colouring does not cover the ground set");
}

auto is_rainbow(const Coloring& c, const ElementSet& a) -> bool { return c.colours_of(a).size() == a.size(); }

auto colour_singular_elements(const ColoredMatroid& cm) -> ElementSet {
  ElementSet out;
  for (const auto& cls : cm.coloring.classes())
    if (cls.size() == 1) out |= cls;
  return out;
}

auto is_circuit_achromatic(const ColoredMatroid& cm, const std::vector<ElementSet>& circuits) -> AchromaticResult {
  for (const auto& c : circuits)
    if (is_rainbow(cm, c)) return {false, c};
  return {true, std::nullopt};
}

auto is_circuit_achromatic(const ColoredMatroid& cm) -> AchromaticResult {
  // A rainbow circuit has at most one element per colour.
  return is_circuit_achromatic(cm, enumerate_circuits(cm.matroid, cm.coloring.num_colours()));
}

// ----------------------------------------------------------- stratification

namespace {

struct StratSearch {
  const ColoredMatroid& cm;
  std::unordered_set<ElementSet, ElementSetHash> dead;
  std::vector<ColourId> order;
  std::vector<std::size_t> ranks;

  auto run(ElementSet used, const ElementSet& prefix, std::size_t rank) -> bool {
    const auto k = cm.coloring.num_colours();
    if (used.size() == k) return true;
    if (dead.count(used)) return false;
    for (std::size_t ci = 0; ci < k; ++ci) {
      auto c = static_cast<ColourId>(ci);
      if (used.contains(c)) continue;
      auto next = prefix | cm.coloring.colour_class(c);
      auto r = rank_of(cm.matroid, next);
      if (r <= rank || closure(cm.matroid, next) != next) continue;
      order.push_back(c);
      ranks.push_back(r);
      auto u2 = used;
      u2.insert(c);
      if (run(u2, next, r)) return true;
      order.pop_back();
      ranks.pop_back();
    }
    dead.insert(used);
    return false;
  }
};

}  // namespace

auto find_stratification(const ColoredMatroid& cm) -> std::optional<Stratification> {
  // Each prefix must raise the rank, so more colours than rank cannot work.
  if (cm.coloring.num_colours() > cm.matroid.rank()) return std::nullopt;
  StratSearch s{cm, {}, {}, {}};
  if (!s.run(ElementSet{}, ElementSet{}, 0)) return std::nullopt;
  return Stratification{s.order, s.ranks};
}

auto check_stratification(const ColoredMatroid& cm, const Stratification& s) -> std::string {
  const auto k = cm.coloring.num_colours();
  if (s.order.size() != k || s.prefix_ranks.size() != k) return "order does not list every colour once";
  ElementSet seen;
  ElementSet prefix;
  std::size_t last = 0;
  for (std::size_t j = 0; j < k; ++j) {
    auto c = s.order[j];
    if (c >= k || seen.contains(c)) return "order repeats or names an unknown colour";
    seen.insert(c);
    prefix |= cm.coloring.colour_class(c);
    if (closure(cm.matroid, prefix) != prefix) return "prefix " + std::to_string(j + 1) + " is not closed";
    auto r = rank_of(cm.matroid, prefix);
    if (r != s.prefix_ranks[j]) return "recorded prefix rank is wrong";
    if (r <= last) return "prefix ranks do not increase strictly";
    last = r;
  }
  if (last != cm.matroid.rank()) return "final prefix rank is not r(M)";
  return {};
}

// ---------------------------------------------------------------- corollaries

auto is_parallel_class(const BinaryMatroid& m, const ElementSet& x) -> bool {
  if (x.empty() || rank_of(m, x) != 1) return false;
  auto loops = closure(m, ElementSet{});
  if (x.intersects(loops)) return false;
  return closure(m, x) - loops == x;
}

auto is_cocircuit(const BinaryMatroid& m, const ElementSet& x) -> bool {
  if (x.empty() || m.rank() == 0) return false;
  auto h = m.ground() - x;
  return rank_of(m, h) + 1 == m.rank() && closure(m, h) == h;
}

auto check_corollaries(const ColoredMatroid& cm) -> CorollaryReport {
  CorollaryReport rep;
  const auto k = cm.coloring.num_colours();
  const auto r = cm.matroid.rank();
  const auto circuits = enumerate_circuits(cm.matroid, k);
  const auto ach = is_circuit_achromatic(cm, circuits);

  if (k != r) {
    rep.parallel_cocircuit_skip_reason = "colour count differs from r(M)";
  } else if (!ach.achromatic) {
    rep.parallel_cocircuit_skip_reason = "colouring has a rainbow circuit";
  } else {
    rep.parallel_cocircuit_applicable = true;
    for (std::size_t c = 0; c < k; ++c) {
      const auto& cls = cm.coloring.colour_class(static_cast<ColourId>(c));
      if (!rep.parallel_class && is_parallel_class(cm.matroid, cls)) rep.parallel_class = static_cast<ColourId>(c);
      if (!rep.cocircuit_class && is_cocircuit(cm.matroid, cls)) rep.cocircuit_class = static_cast<ColourId>(c);
    }
  }

  if (!simplicity_report(cm.matroid).is_simple) {
    rep.rainbow_circuit_skip_reason = "matroid is not simple";
  } else if (k != r) {
    rep.rainbow_circuit_skip_reason = "colour count differs from r(M)";
  } else if (!colour_singular_elements(cm).empty()) {
    rep.rainbow_circuit_skip_reason = "colouring has a colour-singular element";
  } else {
    rep.rainbow_circuit_applicable = true;
    rep.rainbow_circuit = ach.witness;
  }
  return rep;
}

// ---------------------------------------------------------------- restriction

auto restrict_coloring(const Coloring& c, const ElementRemap& remap) -> Coloring {
  if (remap.new_id.size() != c.size()) throw PreconditionError("remap domain does not match the colouring");
  std::vector<ColourId> carried;
  carried.reserve(remap.old_id.size());
  for (auto old : remap.old_id) {
    if (old >= c.size()) throw PreconditionError("remap names an element outside the colouring");
    carried.push_back(c.colour(old));
  }
  std::vector<ColourId> used(carried);
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& col : carried) col = static_cast<ColourId>(std::lower_bound(used.begin(), used.end(), col) - used.begin());
  return Coloring(std::move(carried));
}

auto restrict_coloring(const ColoredMatroid& cm, const MinorResult& minor_result) -> ColoredMatroid {
  if (minor_result.remap.new_id.size() != cm.matroid.epsilon())
    throw PreconditionError("remap does not come from this matroid");
  return ColoredMatroid(minor_result.matroid, restrict_coloring(cm.coloring, minor_result.remap));
}

}  // namespace rainbow
