#include <doctest.h>

#include <set>
#include <stdexcept>

#include "enumerate.hpp"
#include "isomorphism.hpp"
#include "oracles.hpp"

using namespace tropmod;

TEST_CASE("class counts at small type") {
  CHECK(enumerate_stable_graphs(1, 1).size() == 2);
  CHECK(enumerate_stable_graphs(0, 3).size() == 1);
  CHECK(enumerate_stable_graphs(0, 4).size() == 4);
  CHECK(enumerate_stable_graphs(2, 0).size() == 7);
  CHECK_THROWS_AS(enumerate_stable_graphs(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_stable_graphs(1, 0), std::invalid_argument);
}

TEST_CASE("every class is stable of the right type and within the edge bound") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {0, 4}, {2, 0}, {1, 2}, {0, 5}}) {
    const auto classes = enumerate_stable_graphs(g, n);
    bool bound_attained = false;
    std::set<std::string> canons;
    for (const auto& c : classes) {
      CHECK(c.graph.stable());
      CHECK(c.graph.genus() == g);
      CHECK(c.graph.num_legs() == n);
      CHECK(c.graph.num_edges() <= 3 * g - 3 + n);
      bound_attained = bound_attained || c.graph.num_edges() == 3 * g - 3 + n;
      CHECK(canons.insert(c.canon).second);  // duplicate-free
      CHECK(canonical_form(c.graph) == c.canon);
    }
    if (g >= 2 || n >= 3) CHECK(bound_attained);
  }
}

TEST_CASE("matches the brute-force oracle class-for-class at small type") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {0, 4}, {0, 5}, {2, 0}}) {
    const auto mine = enumerate_stable_graphs(g, n);
    const auto oracle = oracle::enumerate_by_force(g, n);
    REQUIRE(mine.size() == oracle.size());
    for (const auto& og : oracle) {
      int hits = 0;
      for (const auto& c : mine)
        if (oracle::simple_isomorphic(og, c.graph)) ++hits;
      CHECK(hits == 1);
    }
  }
}

TEST_CASE("deterministic order") {
  const auto a = enumerate_stable_graphs(2, 0);
  const auto b = enumerate_stable_graphs(2, 0);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].canon == b[i].canon);
  for (std::size_t i = 1; i < a.size(); ++i)
    CHECK(a[i - 1].graph.num_edges() <= a[i].graph.num_edges());
}
