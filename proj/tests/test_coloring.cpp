#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "rainbow/coloring.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/generators.hpp"
#include "rainbow/graph.hpp"

using namespace rainbow;

namespace {

auto complete_graph(std::size_t n) -> Graph {
  Graph g(n);
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

/// Achromatic by brute force: no circuit (from subset enumeration) is rainbow.
auto brute_achromatic(const BinaryMatroid& m, const Coloring& c) -> bool {
  oracle::Columns cols;
  cols.rows = m.rank();
  for (ElementId e = 0; e < m.epsilon(); ++e) {
    oracle::Mask v = 0;
    m.column(e).for_each([&](ElementId r) { v |= oracle::Mask{1} << r; });
    cols.col.push_back(v);
  }
  std::vector<int> colour(c.colours().begin(), c.colours().end());
  for (auto circ : oracle::brute_circuits(cols))
    if (oracle::is_rainbow(circ, colour)) return false;
  return true;
}

}  // namespace

TEST_CASE("colouring classes and bounds") {
  const Coloring c({0, 1, 0, 2, 1, 1});
  CHECK(c.num_colours() == 3);
  CHECK(c.colour_class(1) == ElementSet{1, 4, 5});
  CHECK(c.is_k_bounded(3));
  CHECK_FALSE(c.is_k_bounded(2));
  CHECK_FALSE(c.is_k_uniform(2));
  CHECK(Coloring({1, 1, 0, 0}).is_k_uniform(2));
  CHECK(Coloring({2, 2, 0, 1}).canonical() == Coloring({0, 0, 1, 2}));
  CHECK(Coloring::parse(Coloring({0, 1, 1}).to_text()) == Coloring({0, 1, 1}));
}

TEST_CASE("declared class bounds are enforced") {
  CHECK_THROWS_AS(Coloring({0, 0, 0}, ClassBound{ClassBound::Kind::Bounded, 2}), PreconditionError);
  CHECK_THROWS_AS(Coloring({0, 0, 1}, ClassBound{ClassBound::Kind::Uniform, 2}), PreconditionError);
  CHECK_NOTHROW(Coloring({0, 0, 1, 1}, ClassBound{ClassBound::Kind::Uniform, 2}));
}

TEST_CASE("colouring censuses match closed forms") {
  for (std::size_t m = 1; m <= 7; ++m) CHECK(two_uniform_count(2 * m) == oracle::double_factorial_odd(m));
  CHECK(two_uniform_count(10) == 945);
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= n; ++k) CHECK(exact_colouring_count(n, k) == oracle::stirling2(n, k));
}

TEST_CASE("unranking is a bijection onto valid colourings") {
  std::set<std::vector<ColourId>> seen;
  for (std::uint64_t i = 0; i < two_uniform_count(8); ++i) {
    const auto c = two_uniform_unrank(8, i);
    CHECK(c.is_k_uniform(2));
    CHECK(c.canonical() == c);
    seen.insert(c.colours());
  }
  CHECK(seen.size() == 105);

  seen.clear();
  for (std::uint64_t i = 0; i < exact_colouring_count(7, 3); ++i) {
    const auto c = exact_colouring_unrank(7, 3, i);
    CHECK(c.num_colours() == 3);
    CHECK(c.canonical() == c);
    seen.insert(c.colours());
  }
  CHECK(seen.size() == oracle::stirling2(7, 3));
}

TEST_CASE("seeded samples are distinct, sorted and reproducible") {
  const auto a = sample_indices(1000000, 50, 17);
  const auto b = sample_indices(1000000, 50, 17);
  CHECK(a == b);
  CHECK(a.size() == 50);
  CHECK(std::is_sorted(a.begin(), a.end()));
  CHECK(std::adjacent_find(a.begin(), a.end()) == a.end());
  CHECK(sample_indices(10, 50, 1).size() == 10);
  CHECK(sample_indices(1000000, 50, 18) != a);
}

TEST_CASE("circuit-achromatic agrees with brute force") {
  const auto m = cycle_matroid(complete_graph(4)).matroid;
  for (std::uint64_t i = 0; i < exact_colouring_count(6, 3); ++i) {
    const auto c = exact_colouring_unrank(6, 3, i);
    const ColoredMatroid cm(m, c);
    const auto res = is_circuit_achromatic(cm);
    CHECK(res.achromatic == brute_achromatic(m, c));
    if (!res.achromatic) {
      REQUIRE(res.witness);
      CHECK(is_circuit(m, *res.witness));
      CHECK(is_rainbow(c, *res.witness));
    }
  }
}

TEST_CASE("stratified iff achromatic for r-colourings of small graphic matroids") {
  for (std::size_t n : {3, 4, 5}) {
    const auto g = complete_graph(n);
    const auto m = cycle_matroid(g).matroid;
    const auto r = m.rank();
    const auto total = exact_colouring_count(m.epsilon(), r);
    for (auto i : sample_indices(total, 400, n)) {
      const ColoredMatroid cm(m, exact_colouring_unrank(m.epsilon(), r, i));
      const bool ach = brute_achromatic(m, cm.coloring);
      const auto s = find_stratification(cm);
      CHECK(s.has_value() == ach);
      if (s) {
        CHECK(check_stratification(cm, *s).empty());
        const auto cor = check_corollaries(cm);
        CHECK(cor.parallel_cocircuit_applicable);
        REQUIRE(cor.parallel_class);
        REQUIRE(cor.cocircuit_class);
        CHECK(is_parallel_class(m, cm.coloring.colour_class(*cor.parallel_class)));
        CHECK(is_cocircuit(m, cm.coloring.colour_class(*cor.cocircuit_class)));
      }
    }
  }
}

TEST_CASE("a broken stratification is rejected") {
  const auto m = cycle_matroid(complete_graph(3)).matroid;
  // Colour classes {0,1} and {2}: both orders are checked, only one is a stratification.
  const ColoredMatroid cm(m, Coloring({0, 0, 1}));
  const auto s = find_stratification(cm);
  REQUIRE(s);
  auto bad = *s;
  std::reverse(bad.order.begin(), bad.order.end());
  CHECK_FALSE(check_stratification(cm, bad).empty());
}

TEST_CASE("colour-singular elements") {
  const auto m = cycle_matroid(complete_graph(3)).matroid;
  CHECK(colour_singular_elements(ColoredMatroid(m, Coloring({0, 1, 1}))) == ElementSet{0});
  CHECK(colour_singular_elements(ColoredMatroid(m, Coloring({0, 0, 0}))).empty());
}

TEST_CASE("restriction through a deletion keeps colours and re-densifies ids") {
  const auto m = cycle_matroid(complete_graph(4)).matroid;
  const ColoredMatroid cm(m, Coloring({0, 1, 1, 2, 3, 3}));
  const auto res = minor(m, ElementSet{0}, {});
  const auto r = restrict_coloring(cm, res);
  CHECK(r.coloring.size() == 5);
  CHECK(r.coloring.num_colours() == 3);
  CHECK(r.coloring.colour(0) == r.coloring.colour(1));
}
