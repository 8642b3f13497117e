#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "enumerate.hpp"
#include "fixtures.hpp"
#include "graph.hpp"
#include "isomorphism.hpp"
#include "oracles.hpp"

using namespace tropmod;
using namespace tropmod::fixtures;

TEST_CASE("genus") {
  CHECK(one_vertex(2, 0).genus() == 2);
  CHECK(theta().genus() == 2);
  CHECK(four_legged_genus6().genus() == 6);

  WeightedGraph disconnected;
  disconnected.add_vertex(1);
  disconnected.add_vertex(1);
  CHECK_THROWS_AS(disconnected.genus(), std::invalid_argument);
}

TEST_CASE("valence") {
  CHECK(one_vertex(0, 3).valence(0) == 3);
  CHECK(loop_with_leg().valence(0) == 3);
  CHECK(four_legged_genus6().valence(0) == 6);
  CHECK_THROWS_AS(theta().valence(7), std::out_of_range);
}

TEST_CASE("stability") {
  CHECK_FALSE(one_vertex(1, 0).stable());
  CHECK(one_vertex(1, 1).stable());

  WeightedGraph g;  // two weight-0 vertices, one edge, legs split 3+1
  g.add_vertex(0);
  g.add_vertex(0);
  g.add_edge(0, 1);
  g.add_leg(0);
  g.add_leg(0);
  g.add_leg(0);
  g.add_leg(1);
  CHECK_FALSE(g.stable());

  CHECK(theta().stable());
  CHECK(dumbbell().stable());
}

TEST_CASE("contract single edges") {
  WeightedGraph loop;
  loop.add_vertex(0);
  loop.add_edge(0, 0);
  auto c = contract(loop, {0});
  CHECK(c.target.num_vertices() == 1);
  CHECK(c.target.weight(0) == 1);
  CHECK(c.target.num_edges() == 0);

  WeightedGraph pair;
  pair.add_vertex(1);
  pair.add_vertex(2);
  pair.add_edge(0, 1);
  c = contract(pair, {0});
  CHECK(c.target.num_vertices() == 1);
  CHECK(c.target.weight(0) == 3);

  c = contract(theta(), {0, 1, 2});
  CHECK(c.target.num_vertices() == 1);
  CHECK(c.target.weight(0) == theta().genus());

  CHECK_THROWS_AS(contract(theta(), {5}), std::out_of_range);
}

TEST_CASE("contractions preserve genus and stability") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 0}, {0, 5}, {2, 1}}) {
    for (const auto& cls : enumerate_stable_graphs(g, n)) {
      const int ne = cls.graph.num_edges();
      for (std::uint32_t s = 0; s < (1u << ne); ++s) {
        std::vector<int> edges;
        for (int e = 0; e < ne; ++e)
          if ((s >> e) & 1u) edges.push_back(e);
        auto c = contract(cls.graph, edges);
        CHECK(c.target.genus() == g);
        CHECK(c.target.stable());
        CHECK(c.target.num_edges() == ne - static_cast<int>(edges.size()));
      }
    }
  }
}

TEST_CASE("isomorphism lists") {
  auto only_id = isomorphisms(one_vertex(3, 2), one_vertex(3, 2));
  CHECK(only_id.size() == 1);
  CHECK(only_id[0] == GraphIso::identity(one_vertex(3, 2)));

  // Loop with leg: identity and the half-edge swap of the loop.
  auto loop_isos = isomorphisms(loop_with_leg(), loop_with_leg());
  CHECK(loop_isos.size() == 2);

  // Theta: vertex swap times S_3 on the parallel edges.
  auto theta_isos = isomorphisms(theta(), theta());
  CHECK(theta_isos.size() == 12);

  // Non-isomorphic pair.
  CHECK(isomorphisms(theta(), dumbbell()).empty());
}

TEST_CASE("automorphism group axioms and edge action") {
  for (const auto& g : {theta(), dumbbell(), loop_with_leg(), four_legged_genus6()}) {
    const auto aut = automorphism_group(g);
    // identity present
    CHECK(std::count(aut.begin(), aut.end(), GraphIso::identity(g)) == 1);
    // closure and inverses
    for (const auto& a : aut) {
      CHECK(std::count(aut.begin(), aut.end(), a.inverse()) == 1);
      for (const auto& b : aut) CHECK(std::count(aut.begin(), aut.end(), a.compose(b)) == 1);
    }
  }

  CHECK(automorphism_group(loop_with_leg()).size() == 2);
  CHECK(edge_action(automorphism_group(loop_with_leg())) ==
        std::vector<std::vector<int>>{{0}});

  WeightedGraph banana;  // distinct weights force the edge swap only
  banana.add_vertex(1);
  banana.add_vertex(2);
  banana.add_edge(0, 1);
  banana.add_edge(0, 1);
  const auto aut = automorphism_group(banana);
  CHECK(aut.size() == 2);
  CHECK(edge_action(aut) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});

  CHECK(automorphism_group(theta()).size() == 12);
  CHECK(edge_action(automorphism_group(theta())).size() == 6);
}

namespace {

WeightedGraph permuted_copy(const WeightedGraph& g, std::mt19937_64& rng) {
  std::vector<int> vperm(g.num_vertices());
  std::iota(vperm.begin(), vperm.end(), 0);
  std::shuffle(vperm.begin(), vperm.end(), rng);
  std::vector<int> eorder(g.num_edges());
  std::iota(eorder.begin(), eorder.end(), 0);
  std::shuffle(eorder.begin(), eorder.end(), rng);

  std::vector<int> vinv(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) vinv[vperm[v]] = v;
  WeightedGraph out;
  for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.weight(vinv[v]));
  for (int e : eorder) {
    int a = vperm[g.edge(e)[0]], b = vperm[g.edge(e)[1]];
    if (rng() % 2) std::swap(a, b);
    out.add_edge(a, b);
  }
  for (int s = 0; s < g.num_legs(); ++s) out.add_leg(vperm[g.leg_vertex(s)]);
  return out;
}

}  // namespace

TEST_CASE("canonical form on fixed examples") {
  WeightedGraph theta2;  // theta with the vertices written in the other order
  theta2.add_vertex(0);
  theta2.add_vertex(0);
  theta2.add_edge(1, 0);
  theta2.add_edge(0, 1);
  theta2.add_edge(1, 0);
  CHECK(canonical_form(theta()) == canonical_form(theta2));
  CHECK(canonical_form(theta()) != canonical_form(dumbbell()));
}

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(7);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 2}, {0, 5}}) {
    for (const auto& cls : enumerate_stable_graphs(g, n)) {
      for (int t = 0; t < 5; ++t) {
        const auto shuffled = permuted_copy(cls.graph, rng);
        CHECK(canonical_form(shuffled) == cls.canon);
        CHECK_FALSE(isomorphisms(shuffled, cls.graph).empty());
      }
    }
  }
}

TEST_CASE("canonical equality coincides with the isomorphism oracle (g+n <= 4)") {
  for (auto [g, n] : std::vector<std::pair<int, int>>{
           {0, 3}, {0, 4}, {1, 1}, {1, 2}, {1, 3}, {2, 0}, {2, 1}, {2, 2}, {3, 0}, {3, 1}, {4, 0}}) {
    const auto classes = enumerate_stable_graphs(g, n);
    // Bucket by a cheap invariant; cross-bucket pairs differ in both routes.
    std::map<std::string, std::vector<const GraphClass*>> buckets;
    for (const auto& c : classes) {
      std::string key = std::to_string(c.graph.num_vertices()) + ":" +
                        std::to_string(c.graph.num_edges()) + ":";
      std::vector<int> vals;
      for (int v = 0; v < c.graph.num_vertices(); ++v)
        vals.push_back(c.graph.weight(v) * 100 + c.graph.valence(v));
      std::sort(vals.begin(), vals.end());
      for (int x : vals) key += std::to_string(x) + ",";
      buckets[key].push_back(&c);
    }
    for (const auto& [key, bucket] : buckets)
      for (std::size_t i = 0; i < bucket.size(); ++i)
        for (std::size_t j = i; j < bucket.size(); ++j) {
          const bool canon_eq = bucket[i]->canon == bucket[j]->canon;
          const bool iso = !isomorphisms(bucket[i]->graph, bucket[j]->graph).empty();
          CHECK(canon_eq == iso);
          CHECK(canon_eq == (i == j));  // enumeration never emits duplicates
        }
  }
}
