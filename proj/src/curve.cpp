#include "curve.hpp"

#include <algorithm>
#include <stdexcept>

#include "isomorphism.hpp"

namespace tropmod {

TropicalCurve::TropicalCurve(WeightedGraph graph, std::vector<ExtRat> lengths)
    : graph_(std::move(graph)), lengths_(std::move(lengths)) {
  if (static_cast<int>(lengths_.size()) != graph_.num_edges())
    throw std::invalid_argument("one length per edge expected");
  for (const auto& l : lengths_)
    if (!l.is_positive())
      throw std::invalid_argument("edge lengths must be positive (or inf)");
}

namespace {

// Rebuilds the curve without vertex `drop_v` and without the edges of
// `drop_e`, optionally appending one replacement edge.
TropicalCurve rebuild_without(const TropicalCurve& c, int drop_v, std::vector<int> drop_e,
                              int new_u, int new_w, const ExtRat* new_len) {
  const auto& g = c.graph();
  WeightedGraph out;
  std::vector<int> vmap(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v)
    if (v != drop_v) vmap[v] = out.add_vertex(g.weight(v));
  std::vector<ExtRat> lengths;
  for (int e = 0; e < g.num_edges(); ++e) {
    if (std::find(drop_e.begin(), drop_e.end(), e) != drop_e.end()) continue;
    out.add_edge(vmap[g.edge(e)[0]], vmap[g.edge(e)[1]]);
    lengths.push_back(c.length(e));
  }
  if (new_len) {
    out.add_edge(vmap[new_u], vmap[new_w]);
    lengths.push_back(*new_len);
  }
  for (int slot = 0; slot < g.num_legs(); ++slot) out.add_leg(vmap[g.leg_vertex(slot)]);
  return TropicalCurve(std::move(out), std::move(lengths));
}

}  // namespace

TropicalCurve stabilize(const TropicalCurve& c) {
  {
    const int g = c.graph().genus();
    if (2 * g - 2 + c.num_legs() <= 0)
      throw std::invalid_argument("no stable representative: 2g-2+n <= 0");
  }
  TropicalCurve cur = c;
  for (;;) {
    const WeightedGraph& g = cur.graph();
    if (g.stable()) return cur;
    int move_v = -1;
    bool prune = false;
    for (int v = 0; v < g.num_vertices() && move_v < 0; ++v) {
      if (g.weight(v) != 0) continue;
      const int val = g.valence(v);
      if (val == 1) {
        move_v = v;
        prune = true;
      } else if (val == 2) {
        bool has_leg = false;
        for (int slot = 0; slot < g.num_legs(); ++slot)
          if (g.leg_vertex(slot) == v) has_leg = true;
        if (!has_leg) move_v = v;
      }
    }
    if (move_v < 0)
      throw std::logic_error("unstable curve admits no equivalence move");

    if (prune) {
      // Delete the 1-valent vertex together with its edge.
      int e1 = -1;
      for (int e = 0; e < g.num_edges(); ++e)
        if (g.edge(e)[0] == move_v || g.edge(e)[1] == move_v) e1 = e;
      if (e1 < 0) throw std::logic_error("1-valent vertex without an edge");
      cur = rebuild_without(cur, move_v, {e1}, -1, -1, nullptr);
    } else {
      // Smooth the 2-valent vertex: merge its two edges, lengths add.
      int e1 = -1, e2 = -1;
      for (int e = 0; e < g.num_edges(); ++e)
        for (int side = 0; side < 2; ++side)
          if (g.edge(e)[side] == move_v) {
            if (e1 < 0)
              e1 = e;
            else
              e2 = e;
          }
      if (e1 < 0 || e2 < 0 || e1 == e2)
        throw std::logic_error("2-valent vertex must meet two distinct edges");
      auto other_end = [&](int e) {
        return g.edge(e)[0] == move_v ? g.edge(e)[1] : g.edge(e)[0];
      };
      ExtRat sum = cur.length(e1) + cur.length(e2);
      cur = rebuild_without(cur, move_v, {e1, e2}, other_end(e1), other_end(e2), &sum);
    }
  }
}

std::string curve_canonical_form(const TropicalCurve& c) {
  std::vector<std::string> ann;
  ann.reserve(c.graph().num_edges());
  for (int e = 0; e < c.graph().num_edges(); ++e) ann.push_back(c.length(e).str());
  return canonical_encoding(c.graph(), &ann);
}

std::pair<std::vector<int>, bool> infinite_part(const TropicalCurve& c) {
  std::vector<int> inf_edges;
  for (int e = 0; e < c.graph().num_edges(); ++e)
    if (c.length(e).is_inf()) inf_edges.push_back(e);
  return {inf_edges, inf_edges.empty()};
}

bool same_moduli_point(const TropicalCurve& a, const TropicalCurve& b) {
  TropicalCurve sa = stabilize(a), sb = stabilize(b);
  if (sa.graph().genus() != sb.graph().genus() || sa.num_legs() != sb.num_legs()) return false;
  return curve_canonical_form(sa) == curve_canonical_form(sb);
}

TropicalCurve naive_trop(const ValuedDualGraph& d) {
  if (!d.graph.stable()) throw std::invalid_argument("valued dual graph must be stable");
  if (static_cast<int>(d.node_valuations.size()) != d.graph.num_edges())
    throw std::invalid_argument("missing valuation for some edge");
  for (const auto& v : d.node_valuations)
    if (!v.is_positive())
      throw std::invalid_argument("node valuations must be positive (or inf)");
  return TropicalCurve(d.graph, d.node_valuations);
}

}  // namespace tropmod
