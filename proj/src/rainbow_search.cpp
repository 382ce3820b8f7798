#include "rainbow/rainbow_search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

const std::vector<std::pair<CertificateKind, const char*>> kKindNames = {
    {CertificateKind::RainbowCircuit, "RAINBOW_CIRCUIT"}, {CertificateKind::ShortRC, "SHORT_RC"},
    {CertificateKind::SRCP, "SRCP"},                      {CertificateKind::SRC4, "SRC4"},
    {CertificateKind::SRThCP, "SRThCP"},                  {CertificateKind::TSRCP, "T_SRCP"},
    {CertificateKind::TSRCT, "T_SRCT"},                   {CertificateKind::NearTSRCP, "NEAR_T_SRCP"},
    {CertificateKind::XSemiSRCP, "X_SEMI_SRCP"},          {CertificateKind::ERainbow, "E_RAINBOW"},
    {CertificateKind::SRainbow, "S_RAINBOW"},
};

auto ll(std::size_t v) -> long long { return static_cast<long long>(v); }

auto is_t_kind(CertificateKind k) -> bool {
  return k == CertificateKind::TSRCP || k == CertificateKind::TSRCT || k == CertificateKind::NearTSRCP;
}

auto expected_count(CertificateKind k) -> std::size_t {
  switch (k) {
    case CertificateKind::SRCP:
    case CertificateKind::TSRCP:
    case CertificateKind::NearTSRCP:
    case CertificateKind::XSemiSRCP:
      return 2;
    case CertificateKind::TSRCT:
      return 3;
    case CertificateKind::SRC4:
    case CertificateKind::SRThCP:
      return 4;
    default:
      return 1;
  }
}

}  // namespace

auto kind_name(CertificateKind k) -> std::string {
  for (auto& [kind, name] : kKindNames)
    if (kind == k) return name;
  throw std::logic_error("unnamed certificate kind");
}

auto parse_kind(const std::string& name) -> CertificateKind {
  for (auto& [kind, n] : kKindNames)
    if (name == n) return kind;
  throw ParseError("unknown certificate kind '" + name + "'");
}

auto kind_limit(CertificateKind kind, std::size_t base_rank, std::size_t extension_rank) -> long long {
  const auto r = ll(base_rank);
  switch (kind) {
    case CertificateKind::RainbowCircuit:
      return -1;
    case CertificateKind::ShortRC:
      return (r + 2) / 2;
    case CertificateKind::SRCP:
    case CertificateKind::TSRCP:
    case CertificateKind::TSRCT:
      return r + 2;
    case CertificateKind::SRC4:
      return 2 * r + 4;
    case CertificateKind::SRThCP:
    case CertificateKind::NearTSRCP:
    case CertificateKind::XSemiSRCP:
      return r + 3;
    case CertificateKind::ERainbow:
      return r;
    case CertificateKind::SRainbow:
      return ll(extension_rank);
  }
  return -1;
}

auto compute_bounds(CertificateKind kind, const std::vector<ElementSet>& cs, std::size_t base_rank,
                    std::size_t extension_rank) -> std::vector<BoundCheck> {
  const auto limit = kind_limit(kind, base_rank, extension_rank);
  std::vector<BoundCheck> out;
  switch (kind) {
    case CertificateKind::RainbowCircuit:
      break;
    case CertificateKind::ShortRC:
      out.push_back({"|C| <= floor((r+2)/2)", ll(cs.at(0).size()), limit});
      break;
    case CertificateKind::ERainbow:
      out.push_back({"|C| <= r", ll(cs.at(0).size()), limit});
      break;
    case CertificateKind::SRainbow:
      out.push_back({"|C| <= r(N)", ll(cs.at(0).size()), limit});
      break;
    case CertificateKind::SRCP:
    case CertificateKind::TSRCP:
      out.push_back({"|C1|+|C2| <= r+2", ll(cs.at(0).size() + cs.at(1).size()), limit});
      break;
    case CertificateKind::NearTSRCP:
    case CertificateKind::XSemiSRCP:
      out.push_back({"|C1|+|C2| <= r+3", ll(cs.at(0).size() + cs.at(1).size()), limit});
      break;
    case CertificateKind::TSRCT:
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j)
          out.push_back({"|C" + std::to_string(i + 1) + "|+|C" + std::to_string(j + 1) + "| <= r+2",
                         ll(cs.at(i).size() + cs.at(j).size()), limit});
      break;
    case CertificateKind::SRC4: {
      std::size_t total = 0;
      for (const auto& c : cs) total += c.size();
      out.push_back({"sum |Ci| <= 2r+4", ll(total), limit});
      break;
    }
    case CertificateKind::SRThCP: {
      auto theta = cs.at(0) | cs.at(1) | cs.at(2);
      out.push_back({"psi = ceil(|C|/2)+|Theta| <= r+3", ll((cs.at(3).size() + 1) / 2 + theta.size()), limit});
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------- Extension

Extension::Extension(BinaryMatroid n, Coloring c, ElementSet t_set)
    : matroid(std::move(n)), coloring(std::move(c)), t(t_set) {
  if (coloring.size() != matroid.epsilon()) throw PreconditionError("extension colouring does not cover E(N)");
  if (!t.subset_of(matroid.ground())) throw PreconditionError("extension set outside E(N)");
  base_rank = rank_of(matroid, matroid.ground() - t);
}

auto as_extension(const ColoredMatroid& cm) -> Extension { return Extension(cm.matroid, cm.coloring, ElementSet{}); }

auto delete_from_extension(const Extension& ext, const ElementSet& del) -> ExtensionMinor {
  if (del.intersects(ext.t)) throw PreconditionError("cannot delete elements of the extension set");
  auto mr = minor(ext.matroid, del, ElementSet{});
  auto c = restrict_coloring(ext.coloring, mr.remap);
  auto t = mr.remap.map(ext.t);
  return {Extension(std::move(mr.matroid), std::move(c), t), std::move(mr.remap)};
}

// ------------------------------------------------------------- verification

auto verify_certificate(const RainbowCertificate& cert, const Extension& ext) -> std::string {
  const auto& n = ext.matroid;
  const auto& cs = cert.circuits;
  const auto kind = cert.kind;
  if (cs.size() != expected_count(kind)) return "wrong number of circuits for " + kind_name(kind);
  for (const auto& c : cs) {
    if (!c.subset_of(n.ground())) return "circuit " + c.to_string() + " leaves the ground set";
    if (!is_circuit(n, c)) return c.to_string() + " is not a circuit";
    if (!is_rainbow(ext.coloring, c - ext.t)) return c.to_string() + " is not rainbow off the extension set";
    if (c.intersects(cert.avoid)) return c.to_string() + " uses an avoided element";
  }
  auto disjoint = [&]() {
    for (std::size_t i = 0; i < cs.size(); ++i)
      for (std::size_t j = i + 1; j < cs.size(); ++j)
        if (cs[i].intersects(cs[j])) return false;
    return true;
  };
  switch (kind) {
    case CertificateKind::RainbowCircuit:
    case CertificateKind::ShortRC:
      if (!ext.t.empty()) return "plain rainbow circuit checked against an extension";
      break;
    case CertificateKind::SRCP:
      if (!ext.t.empty()) return "SRCP checked against an extension";
      if (!disjoint()) return "SRCP circuits intersect";
      break;
    case CertificateKind::SRC4: {
      if (!ext.t.empty()) return "SRC4 checked against an extension";
      ElementSet once;
      ElementSet twice;
      for (const auto& c : cs) {
        if (c.intersects(twice)) return "an element lies in three of the circuits";
        twice |= once & c;
        once = (once | c) - twice;
      }
      break;
    }
    case CertificateKind::SRThCP: {
      if (!ext.t.empty()) return "SRThCP checked against an extension";
      auto theta = cs[0] | cs[1] | cs[2];
      if ((cs[0] ^ cs[1]) != cs[2]) return "theta circuits are not closed under symmetric difference";
      if (circuits_within(n, theta).size() != 3) return "theta subset does not contain exactly three circuits";
      if (!is_rainbow(ext.coloring, theta)) return "theta subset is not rainbow";
      if (theta.intersects(cs[3])) return "circuit meets the theta subset";
      break;
    }
    case CertificateKind::TSRCP:
    case CertificateKind::TSRCT:
    case CertificateKind::NearTSRCP:
      if (!is_circuit(n, ext.t)) return "T is not a circuit of N";
      for (const auto& c : cs)
        if ((c & ext.t).size() != 1) return c.to_string() + " does not meet T exactly once";
      if (!disjoint()) return "circuits intersect";
      break;
    case CertificateKind::XSemiSRCP:
      if (ext.t.size() != 1) return "x-semi pair needs a single extension element";
      if ((cs[0] & cs[1]) != ext.t) return "circuits do not meet exactly in x";
      break;
    case CertificateKind::ERainbow:
      if (ext.t.size() != 1 || !cs[0].intersects(ext.t)) return "circuit misses the extension element";
      break;
    case CertificateKind::SRainbow:
      if ((cs[0] & ext.t).size() != 1) return "circuit does not meet S exactly once";
      break;
  }
  for (const auto& cyc : cert.cycles)
    if (!is_cycle(n, cyc)) return cyc.to_string() + " is not a cycle";
  if (!cert.cycles.empty()) {
    if (cert.cycles.size() != cs.size()) return "cycle and circuit lists differ in length";
    for (std::size_t i = 0; i < cs.size(); ++i)
      if (!cs[i].subset_of(cert.cycles[i])) return "circuit is not a component of its cycle";
  }
  auto expected = compute_bounds(kind, cs, ext.base_rank, n.rank());
  if (expected.size() != cert.bounds.size()) return "recorded bounds do not match the kind";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    const auto& e = expected[i];
    const auto& b = cert.bounds[i];
    if (e.name != b.name || e.lhs != b.lhs || e.rhs != b.rhs) return "recorded bound '" + b.name + "' is wrong";
    if (e.lhs > e.rhs) return "bound '" + e.name + "' fails: " + std::to_string(e.lhs) + " > " + std::to_string(e.rhs);
  }
  return {};
}

void require_verified(const RainbowCertificate& cert, const Extension& ext) {
  auto why = verify_certificate(cert, ext);
  if (!why.empty()) throw std::logic_error(kind_name(cert.kind) + " certificate failed re-verification: " + why);
}

namespace {

auto make_certificate(CertificateKind kind, std::vector<ElementSet> circuits, const Extension& ext,
                      ElementSet avoid = {}) -> RainbowCertificate {
  RainbowCertificate cert;
  cert.kind = kind;
  cert.circuits = std::move(circuits);
  cert.avoid = avoid;
  cert.bounds = compute_bounds(kind, cert.circuits, ext.base_rank, ext.matroid.rank());
  for (const auto& b : cert.bounds)
    cert.transcript.push_back(b.name + ": " + std::to_string(b.lhs) + " <= " + std::to_string(b.rhs));
  require_verified(cert, ext);
  return cert;
}

}  // namespace

// ------------------------------------------------------------------ finders

RainbowIndex::RainbowIndex(const ColoredMatroid& cm) : cm_(&cm) {
  for (auto& c : enumerate_circuits(cm.matroid, cm.coloring.num_colours()))
    if (is_rainbow(cm, c)) rainbow_.push_back(c);
}

auto find_rainbow_circuit(const ColoredMatroid& cm, std::optional<std::size_t> max_size)
    -> std::optional<RainbowCertificate> {
  auto limit = std::min<std::size_t>(max_size.value_or(cm.coloring.num_colours()), cm.coloring.num_colours());
  for (const auto& c : enumerate_circuits(cm.matroid, limit))
    if (is_rainbow(cm, c)) {
      auto cert = make_certificate(CertificateKind::RainbowCircuit, {c}, as_extension(cm));
      if (max_size) cert.transcript.push_back("|C| = " + std::to_string(c.size()) + " <= " + std::to_string(*max_size));
      return cert;
    }
  return std::nullopt;
}

auto find_short_rainbow_circuit(const ColoredMatroid& cm) -> std::optional<RainbowCertificate> {
  auto limit = (cm.matroid.rank() + 2) / 2;
  for (const auto& c : enumerate_circuits(cm.matroid, limit))
    if (is_rainbow(cm, c)) return make_certificate(CertificateKind::ShortRC, {c}, as_extension(cm));
  return std::nullopt;
}

namespace {

/// Disjoint pair with minimum total, ties broken by index order; list sorted by size.
auto best_disjoint_pair(const std::vector<ElementSet>& list, std::size_t limit)
    -> std::optional<std::pair<std::size_t, std::size_t>> {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::size_t best_total = limit + 1;
  for (std::size_t i = 0; i < list.size(); ++i) {
    if (2 * list[i].size() >= best_total + (best ? 0 : 1)) break;
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      auto total = list[i].size() + list[j].size();
      if (total >= best_total) break;
      if (!list[i].intersects(list[j])) {
        best = {i, j};
        best_total = total;
        break;
      }
    }
  }
  return best;
}

}  // namespace

auto find_srcp(const RainbowIndex& idx) -> std::optional<RainbowCertificate> {
  const auto& r = idx.rainbow();
  auto p = best_disjoint_pair(r, idx.rank() + 2);
  if (!p) return std::nullopt;
  return make_certificate(CertificateKind::SRCP, {r[p->first], r[p->second]}, as_extension(idx.cm()));
}

auto find_srcp(const ColoredMatroid& cm) -> std::optional<RainbowCertificate> { return find_srcp(RainbowIndex(cm)); }

auto psi(const ThetaSubset& theta, const ElementSet& c) -> std::size_t {
  return (c.size() + 1) / 2 + theta.elements.size();
}

auto rainbow_thetas(const RainbowIndex& idx) -> std::vector<ThetaSubset> {
  const auto& list = idx.rainbow();
  const auto& m = idx.cm().matroid;
  std::unordered_set<ElementSet, ElementSetHash> rainbow_set(list.begin(), list.end());
  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ThetaSubset> out;
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = i + 1; j < list.size(); ++j) {
      const auto& a = list[i];
      const auto& b = list[j];
      if (!a.intersects(b)) continue;
      auto u = a | b;
      if (seen.count(u) || !is_rainbow(idx.cm(), u)) continue;
      auto d = a ^ b;
      if (!rainbow_set.count(d) || rank_of(m, u) + 2 != u.size()) continue;
      seen.insert(u);
      std::array<ElementSet, 3> cs{a, b, d};
      std::sort(cs.begin(), cs.end(), canonical_less);
      out.push_back({u, cs});
    }
  std::sort(out.begin(), out.end(),
            [](const ThetaSubset& x, const ThetaSubset& y) { return canonical_less(x.elements, y.elements); });
  return out;
}

auto find_src4tuple(const RainbowIndex& idx) -> std::optional<RainbowCertificate> {
  const auto ext = as_extension(idx.cm());
  const auto r = idx.rank();
  const std::size_t limit = 2 * r + 4;
  if (auto p = find_srcp(idx)) {
    const auto& c = p->circuits;
    auto cert = make_certificate(CertificateKind::SRC4, {c[0], c[0], c[1], c[1]}, ext);
    cert.transcript.insert(cert.transcript.begin(), "doubled SRCP");
    return cert;
  }
  const auto& list = idx.rainbow();
  for (const auto& th : rainbow_thetas(idx)) {
    if (2 * th.elements.size() >= limit) break;
    for (const auto& c : list) {
      if (2 * th.elements.size() + c.size() > limit) break;
      if (c.intersects(th.elements)) continue;
      auto cert = make_certificate(CertificateKind::SRC4, {th.circuits[0], th.circuits[1], th.circuits[2], c}, ext);
      cert.transcript.insert(cert.transcript.begin(), "theta subset plus disjoint circuit");
      return cert;
    }
  }
  // General search over 4-multisets of rainbow circuits, sizes ascending.
  const std::size_t n = list.size();
  std::array<std::size_t, 4> pick{};
  std::optional<RainbowCertificate> found;
  auto rec = [&](auto&& self, std::size_t depth, std::size_t start, std::size_t total, const ElementSet& once,
                 const ElementSet& twice) -> bool {
    if (depth == 4) {
      found = make_certificate(CertificateKind::SRC4, {list[pick[0]], list[pick[1]], list[pick[2]], list[pick[3]]}, ext);
      found->transcript.insert(found->transcript.begin(), "general 4-multiset search");
      return true;
    }
    for (std::size_t i = start; i < n; ++i) {
      const auto& c = list[i];
      if (total + (4 - depth) * c.size() > limit) break;
      if (c.intersects(twice)) continue;
      auto t2 = twice | (once & c);
      auto o2 = (once | c) - t2;
      pick[depth] = i;
      if (self(self, depth + 1, i, total + c.size(), o2, t2)) return true;
    }
    return false;
  };
  rec(rec, 0, 0, 0, ElementSet{}, ElementSet{});
  return found;
}

auto find_src4tuple(const ColoredMatroid& cm) -> std::optional<RainbowCertificate> {
  return find_src4tuple(RainbowIndex(cm));
}

// -------------------------------------------------------- theta / circuit pairs

auto ThetaReport::outcome_labels() const -> std::string {
  std::string s;
  auto add = [&](bool b, const char* label) {
    if (!b) return;
    if (!s.empty()) s += ",";
    s += label;
  };
  add(srcp.has_value(), "i");
  add(psi_small.has_value(), "ii");
  add(one_chord.has_value(), "iii.1");
  add(two_chords.has_value(), "iii.2");
  return s.empty() ? "none" : s;
}

namespace {

struct ChordInfo {
  ElementSet chords;
  bool conditions_hold = false;
};

auto chord_info(const BinaryMatroid& m, const ThetaSubset& th) -> ChordInfo {
  ChordInfo info;
  info.chords = closure(m, th.elements) - th.elements;
  if (info.chords.size() > 2) return info;
  bool ok = true;
  info.chords.for_each([&](ElementId e) {
    auto with = th.elements;
    with.insert(e);
    for (const auto& d : circuits_within(m, with))
      if (d.contains(e) && !is_independent(m, th.elements - d)) ok = false;
  });
  info.conditions_hold = ok;
  return info;
}

}  // namespace

auto find_theta_circuit_pair(const RainbowIndex& idx) -> ThetaReport {
  ThetaReport rep;
  const auto ext = as_extension(idx.cm());
  const auto& m = idx.cm().matroid;
  const auto r = idx.rank();
  rep.srcp = find_srcp(idx);
  std::size_t best_psi = r + 4;
  for (const auto& th : rainbow_thetas(idx)) {
    if (th.elements.size() + 1 > r + 3) break;
    std::optional<ChordInfo> info;
    for (const auto& c : idx.rainbow()) {
      if (c.intersects(th.elements)) continue;
      auto p = psi(th, c);
      if (p > r + 3) continue;
      std::vector<ElementSet> cs{th.circuits[0], th.circuits[1], th.circuits[2], c};
      if (p < best_psi) {
        best_psi = p;
        rep.best = make_certificate(CertificateKind::SRThCP, cs, ext);
      }
      if (p <= r + 2 && !rep.psi_small) {
        rep.psi_small = make_certificate(CertificateKind::SRThCP, cs, ext);
        rep.psi_small->transcript.push_back("psi <= r+2: " + std::to_string(p) + " <= " + std::to_string(r + 2));
      }
      if (rep.one_chord && rep.two_chords) continue;
      if (!info) info = chord_info(m, th);
      if (!info->conditions_hold) continue;
      const auto k = (c & info->chords).size();
      const auto span = 2 * th.elements.size() + c.size();
      if (!rep.one_chord && k == 1 && c.size() % 2 == 1 && span <= 2 * r + 5) {
        rep.one_chord = make_certificate(CertificateKind::SRThCP, cs, ext);
        rep.one_chord->transcript.push_back("one chord in C, |C| odd, 2|Theta|+|C| = " + std::to_string(span) +
                                            " <= 2r+5");
      }
      if (!rep.two_chords && k == 2 && c.size() % 2 == 0 && span <= 2 * r + 6) {
        rep.two_chords = make_certificate(CertificateKind::SRThCP, cs, ext);
        rep.two_chords->transcript.push_back("two chords in C, |C| even, 2|Theta|+|C| = " + std::to_string(span) +
                                             " <= 2r+6");
      }
    }
  }
  return rep;
}

auto find_theta_circuit_pair(const ColoredMatroid& cm) -> ThetaReport {
  return find_theta_circuit_pair(RainbowIndex(cm));
}

// ---------------------------------------------------------------- T-collections

auto find_T_collection(const Extension& ext, CertificateKind kind, const TConstraints& constraints,
                       const std::vector<ElementSet>& circuits) -> std::optional<RainbowCertificate> {
  const auto& n = ext.matroid;
  const auto& t = ext.t;
  if (is_t_kind(kind)) {
    if (!is_circuit(n, t)) throw PreconditionError("T is not a circuit of N");
  } else if (kind == CertificateKind::XSemiSRCP || kind == CertificateKind::ERainbow) {
    if (t.size() != 1) throw PreconditionError(kind_name(kind) + " needs a single extension element");
  } else if (kind != CertificateKind::SRainbow) {
    throw PreconditionError(kind_name(kind) + " is not a T-collection kind");
  }
  if (constraints.require_coindependent && !is_coindependent(n, t))
    throw PreconditionError("T is not co-independent in N");

  const auto limit = static_cast<std::size_t>(kind_limit(kind, ext.base_rank, n.rank()));
  std::vector<ElementSet> cand;
  for (const auto& c : circuits) {
    if (c.size() > limit) break;
    if ((c & t).size() != 1 || c.intersects(constraints.avoid)) continue;
    if (!is_rainbow(ext.coloring, c - t)) continue;
    cand.push_back(c);
  }
  auto cert = [&](std::vector<ElementSet> cs) {
    return make_certificate(kind, std::move(cs), ext, constraints.avoid);
  };
  switch (kind) {
    case CertificateKind::ERainbow:
    case CertificateKind::SRainbow:
      if (cand.empty()) return std::nullopt;
      return cert({cand.front()});
    case CertificateKind::TSRCP:
    case CertificateKind::NearTSRCP: {
      auto p = best_disjoint_pair(cand, limit);
      if (!p) return std::nullopt;
      return cert({cand[p->first], cand[p->second]});
    }
    case CertificateKind::XSemiSRCP: {
      std::optional<std::pair<std::size_t, std::size_t>> best;
      std::size_t best_total = limit + 1;
      for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
          auto total = cand[i].size() + cand[j].size();
          if (total >= best_total) break;
          if ((cand[i] & cand[j]) == t) {
            best = {i, j};
            best_total = total;
            break;
          }
        }
      if (!best) return std::nullopt;
      return cert({cand[best->first], cand[best->second]});
    }
    case CertificateKind::TSRCT: {
      std::optional<std::array<std::size_t, 3>> best;
      std::size_t best_total = 3 * limit + 1;
      for (std::size_t i = 0; i < cand.size(); ++i)
        for (std::size_t j = i + 1; j < cand.size(); ++j) {
          if (cand[i].size() + cand[j].size() > limit) break;
          if (cand[i].intersects(cand[j])) continue;
          for (std::size_t k = j + 1; k < cand.size(); ++k) {
            const auto total = cand[i].size() + cand[j].size() + cand[k].size();
            if (total >= best_total || cand[j].size() + cand[k].size() > limit) break;
            if (cand[k].intersects(cand[i]) || cand[k].intersects(cand[j])) continue;
            best = std::array<std::size_t, 3>{i, j, k};
            best_total = total;
            break;
          }
        }
      if (!best) return std::nullopt;
      return cert({cand[(*best)[0]], cand[(*best)[1]], cand[(*best)[2]]});
    }
    default:
      break;
  }
  return std::nullopt;
}

auto find_T_collection(const Extension& ext, CertificateKind kind, const TConstraints& constraints)
    -> std::optional<RainbowCertificate> {
  const auto limit = static_cast<std::size_t>(std::max<long long>(0, kind_limit(kind, ext.base_rank, ext.matroid.rank())));
  return find_T_collection(ext, kind, constraints, enumerate_circuits(ext.matroid, limit));
}

auto upgrade_cycles(const Extension& ext, CertificateKind kind, const std::vector<ElementSet>& cycles)
    -> RainbowCertificate {
  std::vector<ElementSet> circuits;
  for (const auto& cyc : cycles) {
    if (!is_cycle(ext.matroid, cyc)) throw PreconditionError(cyc.to_string() + " is not a cycle");
    auto meet = cyc & ext.t;
    if (meet.empty()) throw PreconditionError(cyc.to_string() + " misses the extension set");
    auto c = circuit_through(ext.matroid, cyc, meet.first());
    circuits.push_back(*c);
  }
  RainbowCertificate cert;
  cert.kind = kind;
  cert.circuits = std::move(circuits);
  cert.cycles = cycles;
  cert.bounds = compute_bounds(kind, cert.circuits, ext.base_rank, ext.matroid.rank());
  cert.transcript.push_back("circuits taken from cycles through the extension set");
  for (const auto& b : cert.bounds)
    cert.transcript.push_back(b.name + ": " + std::to_string(b.lhs) + " <= " + std::to_string(b.rhs));
  require_verified(cert, ext);
  return cert;
}

}  // namespace rainbow
