#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/rainbow_search.hpp"

using namespace rainbow;

namespace {

auto columns_of(const BinaryMatroid& m) -> oracle::Columns {
  oracle::Columns cols;
  cols.rows = m.rank();
  for (ElementId e = 0; e < m.epsilon(); ++e) {
    oracle::Mask v = 0;
    m.column(e).for_each([&](ElementId r) { v |= oracle::Mask{1} << r; });
    cols.col.push_back(v);
  }
  return cols;
}

auto colour_vector(const Coloring& c) -> std::vector<int> { return {c.colours().begin(), c.colours().end()}; }

auto complete_graph(std::size_t n) -> Graph {
  Graph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Collections of circuits of N meeting T once, rainbow off T, pairwise disjoint, pairwise sums <= limit.
auto brute_t_collection(const Extension& ext, std::size_t count, std::size_t limit, oracle::Mask avoid) -> bool {
  const auto circuits = oracle::brute_circuits(columns_of(ext.matroid));
  const auto colour = colour_vector(ext.coloring);
  const oracle::Mask t = ext.t.word(0);
  std::vector<oracle::Mask> ok;
  for (auto c : circuits)
    if (oracle::popcount(c & t) == 1 && !(c & avoid) && oracle::is_rainbow(c & ~t, colour)) ok.push_back(c);
  auto fits = [&](oracle::Mask a, oracle::Mask b) {
    return !(a & b) && oracle::popcount(a) + oracle::popcount(b) <= limit;
  };
  for (std::size_t i = 0; i < ok.size(); ++i)
    for (std::size_t j = i + 1; j < ok.size(); ++j) {
      if (!fits(ok[i], ok[j])) continue;
      if (count == 2) return true;
      for (std::size_t k = j + 1; k < ok.size(); ++k)
        if (fits(ok[i], ok[k]) && fits(ok[j], ok[k])) return true;
    }
  return false;
}

/// Pairs of circuits of N + x meeting exactly in x, rainbow off x, total <= limit.
auto brute_semi(const Extension& ext, std::size_t limit) -> bool {
  const auto circuits = oracle::brute_circuits(columns_of(ext.matroid));
  const auto colour = colour_vector(ext.coloring);
  const oracle::Mask x = ext.t.word(0);
  std::vector<oracle::Mask> ok;
  for (auto c : circuits)
    if ((c & x) && oracle::is_rainbow(c & ~x, colour)) ok.push_back(c);
  for (std::size_t i = 0; i < ok.size(); ++i)
    for (std::size_t j = i + 1; j < ok.size(); ++j)
      if ((ok[i] & ok[j]) == x && oracle::popcount(ok[i]) + oracle::popcount(ok[j]) <= limit) return true;
  return false;
}

}  // namespace

TEST_CASE("SRCP search is exact on K4 and K5 two-uniform colourings") {
  for (std::size_t n : {4, 5}) {
    const auto m = cycle_matroid(complete_graph(n)).matroid;
    const auto circuits = oracle::brute_circuits(columns_of(m));
    const auto total = two_uniform_count(m.epsilon());
    for (std::uint64_t i = 0; i < total; ++i) {
      const ColoredMatroid cm(m, two_uniform_unrank(m.epsilon(), i));
      const auto best = oracle::min_srcp_total(circuits, colour_vector(cm.coloring));
      const bool expect = best && *best <= m.rank() + 2;
      const auto cert = find_srcp(cm);
      CHECK(cert.has_value() == expect);
      if (cert) CHECK(verify_certificate(*cert, as_extension(cm)).empty());
    }
  }
}

TEST_CASE("SRC 4-tuple search is exact on K4 and on K5") {
  for (std::size_t n : {4, 5}) {
    const auto m = cycle_matroid(complete_graph(n)).matroid;
    const auto circuits = oracle::brute_circuits(columns_of(m));
    const auto total = two_uniform_count(m.epsilon());
    for (auto i : sample_indices(total, 120, 3)) {
      const ColoredMatroid cm(m, two_uniform_unrank(m.epsilon(), i));
      const auto best = oracle::min_src4_total(circuits, colour_vector(cm.coloring));
      const bool expect = best && *best <= 2 * m.rank() + 4;
      const auto cert = find_src4tuple(cm);
      CHECK(cert.has_value() == expect);
      if (cert) CHECK(verify_certificate(*cert, as_extension(cm)).empty());
    }
  }
}

TEST_CASE("rainbow circuit search against brute force") {
  std::mt19937_64 rng(1);
  const auto m = gen_named(NamedInstance::R10).cm.matroid;
  const auto circuits = oracle::brute_circuits(columns_of(m));
  for (int trial = 0; trial < 100; ++trial) {
    const auto k = 3 + rng() % 5;
    const ColoredMatroid cm(m, exact_colouring_unrank(10, k, rng() % exact_colouring_count(10, k)));
    const auto colour = colour_vector(cm.coloring);
    std::optional<std::size_t> shortest;
    for (auto c : circuits)
      if (oracle::is_rainbow(c, colour) && (!shortest || oracle::popcount(c) < *shortest)) shortest = oracle::popcount(c);
    const auto any = find_rainbow_circuit(cm);
    CHECK(any.has_value() == shortest.has_value());
    const auto short_one = find_short_rainbow_circuit(cm);
    CHECK(short_one.has_value() == (shortest && *shortest <= (m.rank() + 2) / 2));
  }
}

TEST_CASE("T collections agree with brute force on the stratified family") {
  for (std::size_t n : {4, 5}) {
    for (std::uint64_t idx = 0; idx < graphic_stratified_count(n); ++idx) {
      const auto b = gen_graphic_stratified(n, graphic_stratified_choices(n, idx));
      const auto r = b.cm.matroid.rank();
      for (VertexId x1 = 0; x1 < n; ++x1)
        for (VertexId x2 = x1 + 1; x2 < n; ++x2)
          for (VertexId x3 = x2 + 1; x3 < n; ++x3) {
            const auto eb = extend_with_triangle_or_element(b, TriangleMode{x1, x2, x3});
            CAPTURE(b.id());
            CAPTURE(eb.placement);
            const auto srct = find_T_collection(eb.ext, CertificateKind::TSRCT);
            CHECK(srct.has_value() == brute_t_collection(eb.ext, 3, r + 2, 0));
            const auto near = find_T_collection(eb.ext, CertificateKind::NearTSRCP);
            CHECK(near.has_value() == brute_t_collection(eb.ext, 2, r + 3, 0));
            eb.ext.t.for_each([&](ElementId x) {
              TConstraints c;
              c.avoid = ElementSet{x};
              const auto pair = find_T_collection(eb.ext, CertificateKind::TSRCP, c);
              CHECK(pair.has_value() == brute_t_collection(eb.ext, 2, r + 2, oracle::Mask{1} << x));
              if (pair) CHECK(verify_certificate(*pair, eb.ext).empty());
            });
          }
    }
  }
}

TEST_CASE("x-semi pairs agree with brute force") {
  for (std::uint64_t idx = 0; idx < graphic_stratified_count(5); ++idx) {
    const auto b = gen_graphic_stratified(5, graphic_stratified_choices(5, idx));
    const auto r = b.cm.matroid.rank();
    for (VertexId u = 0; u < 5; ++u)
      for (VertexId v = u + 1; v < 5; ++v) {
        const auto eb = extend_with_triangle_or_element(b, ElementMode{u, v, std::nullopt});
        const auto cert = find_T_collection(eb.ext, CertificateKind::XSemiSRCP);
        CHECK(cert.has_value() == brute_semi(eb.ext, r + 3));
      }
  }
}

TEST_CASE("T kinds refuse a T that is not a circuit") {
  const auto b = gen_graphic_stratified(4, graphic_stratified_choices(4, 0));
  const Extension ext(b.cm.matroid, b.cm.coloring, ElementSet{0, 1});
  CHECK_THROWS_AS(find_T_collection(ext, CertificateKind::TSRCP), PreconditionError);
}

TEST_CASE("verification rejects tampered certificates") {
  const auto m = cycle_matroid(complete_graph(5)).matroid;
  const ColoredMatroid cm(m, two_uniform_unrank(10, 0));
  const auto ext = as_extension(cm);
  auto cert = find_srcp(cm);
  REQUIRE(cert);
  CHECK(verify_certificate(*cert, ext).empty());

  SUBCASE("wrong bound value") {
    cert->bounds[0].rhs += 1;
    CHECK_FALSE(verify_certificate(*cert, ext).empty());
  }
  SUBCASE("not a circuit") {
    cert->circuits[0].flip(cert->circuits[1].first());
    CHECK_FALSE(verify_certificate(*cert, ext).empty());
  }
  SUBCASE("wrong kind") {
    cert->kind = CertificateKind::SRC4;
    CHECK_FALSE(verify_certificate(*cert, ext).empty());
  }
  SUBCASE("avoided element used") {
    cert->avoid = ElementSet{cert->circuits[0].first()};
    CHECK_FALSE(verify_certificate(*cert, ext).empty());
  }
}

TEST_CASE("kind limits") {
  CHECK(kind_limit(CertificateKind::ShortRC, 5, 5) == 3);
  CHECK(kind_limit(CertificateKind::SRCP, 5, 5) == 7);
  CHECK(kind_limit(CertificateKind::SRC4, 4, 4) == 12);
  CHECK(kind_limit(CertificateKind::NearTSRCP, 5, 6) == 8);
  CHECK(kind_limit(CertificateKind::ERainbow, 5, 6) == 5);
  CHECK(kind_limit(CertificateKind::SRainbow, 5, 6) == 6);
  for (auto k : {CertificateKind::SRCP, CertificateKind::TSRCT, CertificateKind::XSemiSRCP})
    CHECK(parse_kind(kind_name(k)) == k);
  CHECK_THROWS_AS(parse_kind("SRCQ"), ParseError);
}

TEST_CASE("theta reports carry verified certificates") {
  const auto m = cycle_matroid(complete_graph(5)).matroid;
  for (auto i : sample_indices(945, 60, 9)) {
    const ColoredMatroid cm(m, two_uniform_unrank(10, i));
    const auto rep = find_theta_circuit_pair(cm);
    CHECK(rep.any_outcome());
    for (const auto* c : {&rep.best, &rep.srcp, &rep.psi_small, &rep.one_chord, &rep.two_chords})
      if (*c) CHECK(verify_certificate(**c, as_extension(cm)).empty());
    CHECK(rep.outcome_labels() != "none");
  }
}

TEST_CASE("deleting from an extension keeps T") {
  const auto b = gen_named(NamedInstance::K23Plus1);
  const auto eb = extend_with_triangle_or_element(b, TriangleMode{2, 3, 4});
  const auto d = delete_from_extension(eb.ext, ElementSet{0});
  CHECK(d.extension.t.size() == 3);
  CHECK(is_circuit(d.extension.matroid, d.extension.t));
  CHECK(d.extension.base_rank == b.cm.matroid.rank());
  CHECK_THROWS_AS(delete_from_extension(eb.ext, eb.ext.t), PreconditionError);
}
