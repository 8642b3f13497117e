#include <doctest.h>

#include <random>
#include <stdexcept>

#include "curve.hpp"
#include "enumerate.hpp"
#include "fixtures.hpp"
#include "isomorphism.hpp"
#include "json_io.hpp"

using namespace tropmod;
using namespace tropmod::fixtures;

TEST_CASE("extended rationals") {
  CHECK(ExtRat::parse("3/4").str() == "3/4");
  CHECK(ExtRat::parse("5").str() == "5/1");
  CHECK(ExtRat::parse("6/4").str() == "3/2");
  CHECK(ExtRat::parse("inf").is_inf());
  CHECK_THROWS_AS(ExtRat::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(ExtRat::parse("x"), std::invalid_argument);

  CHECK((ExtRat(1, 2) + ExtRat(1, 3)) == ExtRat(5, 6));
  CHECK((ExtRat(7) + ExtRat::inf()).is_inf());
  CHECK((ExtRat::inf() + ExtRat::inf()).is_inf());
  CHECK(ExtRat(1, 2) < ExtRat::inf());
  CHECK(ExtRat::inf() == ExtRat::inf());
  CHECK(ExtRat(5).half() == ExtRat(5, 2));
  CHECK(ExtRat::inf().half().is_inf());
}

TEST_CASE("curve construction validates lengths") {
  CHECK_THROWS_AS(TropicalCurve(loop_with_leg(), {ExtRat(0)}), std::invalid_argument);
  CHECK_THROWS_AS(TropicalCurve(loop_with_leg(), {ExtRat(-1)}), std::invalid_argument);
  CHECK_THROWS_AS(TropicalCurve(loop_with_leg(), {}), std::invalid_argument);
  CHECK_NOTHROW(TropicalCurve(loop_with_leg(), {ExtRat::inf()}));
}

TEST_CASE("stabilize") {
  const TropicalCurve stable_loop = loop_curve(ExtRat(2));
  CHECK(stabilize(stable_loop) == stable_loop);

  // Path through a weight-0 2-valent vertex: lengths 3 and 5 merge to 8.
  WeightedGraph path;
  path.add_vertex(1);
  path.add_vertex(0);
  path.add_vertex(1);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  path.add_leg(0);
  const TropicalCurve merged = stabilize(TropicalCurve(path, {ExtRat(3), ExtRat(5)}));
  CHECK(merged.graph().num_vertices() == 2);
  CHECK(merged.graph().num_edges() == 1);
  CHECK(merged.length(0) == ExtRat(8));
  CHECK(merged.graph().stable());

  // Weight-0 1-valent vertex hanging off by an infinite edge gets pruned.
  WeightedGraph hair;
  hair.add_vertex(1);
  hair.add_vertex(0);
  hair.add_edge(0, 1);
  hair.add_leg(0);
  const TropicalCurve pruned = stabilize(TropicalCurve(hair, {ExtRat::inf()}));
  CHECK(pruned.graph().num_vertices() == 1);
  CHECK(pruned.graph().num_edges() == 0);
  CHECK(pruned.graph().weight(0) == 1);

  CHECK_THROWS_AS(stabilize(TropicalCurve(one_vertex(0, 2), {})), std::invalid_argument);
}

namespace {

// Random equivalence moves that stabilize must undo: subdivide an edge, or
// hang a weight-0 leaf off a vertex.
TropicalCurve destabilize(const TropicalCurve& c, std::mt19937_64& rng) {
  const WeightedGraph& g = c.graph();
  WeightedGraph out;
  for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.weight(v));
  std::vector<ExtRat> lengths;
  if (g.num_edges() > 0 && rng() % 2 == 0) {
    const int target = static_cast<int>(rng() % g.num_edges());
    const int mid = out.add_vertex(0);
    for (int e = 0; e < g.num_edges(); ++e) {
      if (e == target) continue;
      out.add_edge(g.edge(e)[0], g.edge(e)[1]);
      lengths.push_back(c.length(e));
    }
    out.add_edge(g.edge(target)[0], mid);
    out.add_edge(mid, g.edge(target)[1]);
    if (c.length(target).is_inf()) {
      lengths.push_back(ExtRat(1));
      lengths.push_back(ExtRat::inf());
    } else {
      const Rational part = c.length(target).value() / 3;
      lengths.push_back(ExtRat(part));
      lengths.push_back(ExtRat(c.length(target).value() - part));
    }
  } else {
    const int leaf = out.add_vertex(0);
    for (int e = 0; e < g.num_edges(); ++e) {
      out.add_edge(g.edge(e)[0], g.edge(e)[1]);
      lengths.push_back(c.length(e));
    }
    out.add_edge(static_cast<int>(rng() % g.num_vertices()), leaf);
    lengths.push_back(ExtRat(1 + static_cast<long long>(rng() % 5)));
  }
  for (int slot = 0; slot < g.num_legs(); ++slot) out.add_leg(g.leg_vertex(slot));
  return TropicalCurve(std::move(out), std::move(lengths));
}

ExtRat total_length(const TropicalCurve& c) {
  ExtRat t(0);
  for (int e = 0; e < c.graph().num_edges(); ++e) t = t + c.length(e);
  return t;
}

}  // namespace

TEST_CASE("stabilize undoes equivalence moves and preserves the metric") {
  std::mt19937_64 rng(21);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 0}, {1, 2}, {0, 4}}) {
    for (const auto& cls : enumerate_stable_graphs(g, n)) {
      std::vector<ExtRat> lengths;
      for (int e = 0; e < cls.graph.num_edges(); ++e)
        lengths.push_back(rng() % 4 ? ExtRat(1 + static_cast<long long>(rng() % 9), 2)
                                    : ExtRat::inf());
      const TropicalCurve c(cls.graph, lengths);
      TropicalCurve messy = c;
      for (int k = 0; k < 3; ++k) messy = destabilize(messy, rng);
      CHECK(messy.graph().genus() == g);
      const TropicalCurve back = stabilize(messy);
      CHECK(back.graph().stable());
      CHECK(back.graph().genus() == g);
      CHECK(back.num_legs() == n);
      CHECK(curve_canonical_form(back) == curve_canonical_form(c));
      CHECK(total_length(back) == total_length(c));
      CHECK(curve_canonical_form(stabilize(back)) == curve_canonical_form(back));
    }
  }
}

TEST_CASE("curve canonical form on theta") {
  const auto t = theta();
  CHECK(curve_canonical_form(TropicalCurve(t, {ExtRat(1), ExtRat(2), ExtRat(3)})) ==
        curve_canonical_form(TropicalCurve(t, {ExtRat(2), ExtRat(1), ExtRat(3)})));
  CHECK(curve_canonical_form(TropicalCurve(t, {ExtRat(1), ExtRat(2), ExtRat(3)})) !=
        curve_canonical_form(TropicalCurve(t, {ExtRat(1), ExtRat(2), ExtRat(4)})));
  CHECK(curve_canonical_form(loop_curve(ExtRat(7, 3))) ==
        curve_canonical_form(loop_curve(ExtRat(7, 3))));
}

TEST_CASE("curve canonical form matches the Aut-orbit oracle") {
  std::mt19937_64 rng(5);
  for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 0}, {1, 2}, {0, 4}, {1, 1}}) {
    for (const auto& cls : enumerate_stable_graphs(g, n)) {
      const int ne = cls.graph.num_edges();
      const auto action = edge_action(automorphism_group(cls.graph));
      for (int t = 0; t < 10; ++t) {
        std::vector<ExtRat> a(ne), b(ne);
        for (int e = 0; e < ne; ++e) a[e] = ExtRat(1 + static_cast<long long>(rng() % 6));
        if (t % 2 == 0) {
          const auto& h = action[rng() % action.size()];
          for (int e = 0; e < ne; ++e) b[h[e]] = a[e];
        } else {
          for (int e = 0; e < ne; ++e) b[e] = ExtRat(1 + static_cast<long long>(rng() % 6));
        }
        bool orbit_eq = false;
        for (const auto& h : action) {
          bool match = true;
          for (int e = 0; e < ne && match; ++e) match = (b[h[e]] == a[e]);
          orbit_eq = orbit_eq || match;
        }
        const bool canon_eq = curve_canonical_form(TropicalCurve(cls.graph, a)) ==
                              curve_canonical_form(TropicalCurve(cls.graph, b));
        CHECK(canon_eq == orbit_eq);
      }
    }
  }
}

TEST_CASE("infinite part") {
  const auto t = theta();
  auto [none, fin] = infinite_part(TropicalCurve(t, {ExtRat(1), ExtRat(2), ExtRat(3)}));
  CHECK(none.empty());
  CHECK(fin);

  auto [loop_inf, loop_fin] = infinite_part(loop_curve(ExtRat::inf()));
  CHECK(loop_inf == std::vector<int>{0});
  CHECK_FALSE(loop_fin);

  const TropicalCurve db(dumbbell(), {ExtRat(1), ExtRat::inf(), ExtRat(2)});
  auto [bridge_inf, bridge_fin] = infinite_part(db);
  CHECK(bridge_inf == std::vector<int>{1});
  CHECK_FALSE(bridge_fin);
}

TEST_CASE("naive tropicalization") {
  const TropicalCurve gamma = naive_trop({loop_with_leg(), {ExtRat(5, 2)}});
  CHECK(gamma.length(0) == ExtRat(5, 2));
  CHECK(curve_canonical_form(gamma) == curve_canonical_form(loop_curve(ExtRat(5, 2))));

  const TropicalCurve generic = naive_trop({loop_with_leg(), {ExtRat::inf()}});
  CHECK_FALSE(infinite_part(generic).second);
  CHECK(infinite_part(generic).first == std::vector<int>{0});

  // Smooth curve data: no edges, the smallest stratum's point.
  const TropicalCurve point = naive_trop({one_vertex(3, 1), {}});
  CHECK(point.graph().num_edges() == 0);
  CHECK(point.graph().weight(0) == 3);

  CHECK_THROWS_AS(naive_trop({loop_with_leg(), {}}), std::invalid_argument);
  CHECK_THROWS_AS(naive_trop({loop_with_leg(), {ExtRat(0)}}), std::invalid_argument);
}

TEST_CASE("curve JSON round trip") {
  std::mt19937_64 rng(11);
  for (const auto& cls : enumerate_stable_graphs(2, 1)) {
    std::vector<ExtRat> lengths;
    for (int e = 0; e < cls.graph.num_edges(); ++e)
      lengths.push_back(rng() % 3 ? ExtRat(1 + static_cast<long long>(rng() % 7),
                                           1 + static_cast<long long>(rng() % 3))
                                  : ExtRat::inf());
    const TropicalCurve c(cls.graph, lengths);
    const TropicalCurve back = curve_from_json(curve_to_json(c));
    CHECK(back == c);
    // Canonical serialization is a fixed point.
    const std::string canon = curve_to_canonical_json(c);
    CHECK(curve_to_canonical_json(curve_from_json(canon)) == canon);
  }
  CHECK_THROWS_AS(curve_from_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(curve_from_json(R"({"vertices":[],"edges":[],"legs":[]})"),
                  std::invalid_argument);
}

TEST_CASE("graph JSON accepts arbitrary unique ids") {
  const auto g = graph_from_json(R"({
    "vertices":[{"id":42,"weight":1},{"id":7,"weight":0}],
    "edges":[{"id":99,"halfedges":[{"v":42},{"v":7}]},
             {"id":-3,"halfedges":[{"v":7},{"v":7}]}],
    "legs":[{"index":1,"v":7}]})");
  CHECK(g.num_vertices() == 2);
  CHECK(g.num_edges() == 2);
  CHECK(g.loops_at(g.leg_vertex(0)) == 1);
  CHECK(g.genus() == 2);  // h1 = 1 plus weights 1 + 0

  CHECK_THROWS_AS(graph_from_json(R"({
    "vertices":[{"id":1,"weight":0},{"id":1,"weight":0}],
    "edges":[],"legs":[]})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({
    "vertices":[{"id":1,"weight":0}],
    "edges":[],"legs":[{"index":2,"v":1}]})"),
                  std::invalid_argument);
}
