#include "taut.hpp"

#include <algorithm>
#include <json.hpp>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "isomorphism.hpp"
#include "json_io.hpp"

namespace tropmod {

namespace {

void require_stable(const TropicalCurve& c, const char* who) {
  if (!c.graph().stable())
    throw std::invalid_argument(std::string(who) + " expects a stable curve");
}

void require_positive(const ExtRat& x, const char* who) {
  if (!x.is_positive())
    throw std::invalid_argument(std::string(who) + ": lengths must lie in (0, inf]");
}

}  // namespace

TropicalCurve attach_leg(const TropicalCurve& c, const MarkedPoint& p) {
  const WeightedGraph& g = c.graph();
  WeightedGraph out;
  for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.weight(v));
  std::vector<ExtRat> lengths;

  switch (p.kind) {
    case MarkedPoint::Kind::Vertex: {
      if (p.index < 0 || p.index >= g.num_vertices())
        throw std::out_of_range("attach point at unknown vertex");
      for (int e = 0; e < g.num_edges(); ++e) {
        out.add_edge(g.edge(e)[0], g.edge(e)[1]);
        lengths.push_back(c.length(e));
      }
      for (int slot = 0; slot < g.num_legs(); ++slot) out.add_leg(g.leg_vertex(slot));
      out.add_leg(p.index);
      break;
    }
    case MarkedPoint::Kind::Edge: {
      if (p.index < 0 || p.index >= g.num_edges())
        throw std::out_of_range("attach point on unknown edge");
      if (p.end != 0 && p.end != 1) throw std::invalid_argument("edge end must be 0 or 1");
      const ExtRat len = c.length(p.index);
      if (!p.distance.is_positive())
        throw std::invalid_argument("edge point distance must be positive");
      if (len.is_finite() && p.distance >= len)
        throw std::invalid_argument("edge point distance must be below the edge length");
      const int w = out.add_vertex(0);
      const int va = g.edge(p.index)[p.end];
      const int vb = g.edge(p.index)[1 - p.end];
      for (int e = 0; e < g.num_edges(); ++e) {
        if (e == p.index) continue;
        out.add_edge(g.edge(e)[0], g.edge(e)[1]);
        lengths.push_back(c.length(e));
      }
      out.add_edge(va, w);
      lengths.push_back(p.distance);
      out.add_edge(w, vb);
      // Remainder of a split edge; inf minus anything stays inf.
      lengths.push_back(len.is_finite() ? ExtRat(len.value() - p.distance.value())
                                        : ExtRat::inf());
      for (int slot = 0; slot < g.num_legs(); ++slot) out.add_leg(g.leg_vertex(slot));
      out.add_leg(w);
      break;
    }
    case MarkedPoint::Kind::Leg: {
      if (p.index < 0 || p.index >= g.num_legs())
        throw std::out_of_range("attach point on unknown leg");
      if (!p.distance.is_positive())
        throw std::invalid_argument("leg point distance must be positive");
      const int w = out.add_vertex(0);
      for (int e = 0; e < g.num_edges(); ++e) {
        out.add_edge(g.edge(e)[0], g.edge(e)[1]);
        lengths.push_back(c.length(e));
      }
      out.add_edge(g.leg_vertex(p.index), w);
      lengths.push_back(p.distance);
      for (int slot = 0; slot < g.num_legs(); ++slot)
        out.add_leg(slot == p.index ? w : g.leg_vertex(slot));
      out.add_leg(w);
      break;
    }
  }
  return TropicalCurve(std::move(out), std::move(lengths));
}

std::pair<TropicalCurve, MarkedPoint> forget(const TropicalCurve& c) {
  require_stable(c, "forget");
  const WeightedGraph& g = c.graph();
  if (g.num_legs() < 1) throw std::invalid_argument("forget needs a last leg to drop");
  const int n = g.num_legs() - 1;
  const int genus = g.genus();
  if (2 * genus - 2 + n <= 0)
    throw std::invalid_argument("forget image out of stable range: 2g-2+n <= 0");

  const int v = g.leg_vertex(n);
  WeightedGraph star;  // the curve with the last leg removed
  for (int w = 0; w < g.num_vertices(); ++w) star.add_vertex(g.weight(w));
  for (int e = 0; e < g.num_edges(); ++e) star.add_edge(g.edge(e)[0], g.edge(e)[1]);
  for (int slot = 0; slot < n; ++slot) star.add_leg(g.leg_vertex(slot));

  if (star.stable())
    return {TropicalCurve(std::move(star), c.lengths()), {MarkedPoint::Kind::Vertex, v, 0, {}}};

  if (star.weight(v) != 0 || star.valence(v) != 2)
    throw std::logic_error("forget: freed vertex is not weight 0 and 2-valent");

  int leg_at_v = -1;
  std::vector<std::pair<int, int>> ends;  // (edge, side) at v
  for (int slot = 0; slot < star.num_legs(); ++slot)
    if (star.leg_vertex(slot) == v) leg_at_v = slot;
  for (int e = 0; e < star.num_edges(); ++e)
    for (int side = 0; side < 2; ++side)
      if (star.edge(e)[side] == v) ends.push_back({e, side});

  auto rebuild = [&](const std::vector<int>& drop_edges, int new_u, int new_w,
                     const ExtRat* new_len, int move_leg,
                     int* new_edge_id) -> TropicalCurve {
    WeightedGraph out;
    std::vector<int> vmap(star.num_vertices(), -1);
    for (int w = 0; w < star.num_vertices(); ++w)
      if (w != v) vmap[w] = out.add_vertex(star.weight(w));
    std::vector<ExtRat> lengths;
    for (int e = 0; e < star.num_edges(); ++e) {
      if (std::find(drop_edges.begin(), drop_edges.end(), e) != drop_edges.end()) continue;
      out.add_edge(vmap[star.edge(e)[0]], vmap[star.edge(e)[1]]);
      lengths.push_back(c.length(e));
    }
    if (new_len) {
      if (new_edge_id) *new_edge_id = out.num_edges();
      out.add_edge(vmap[new_u], vmap[new_w]);
      lengths.push_back(*new_len);
    }
    for (int slot = 0; slot < star.num_legs(); ++slot) {
      int lv = slot == move_leg ? new_u : star.leg_vertex(slot);
      out.add_leg(vmap[lv]);
    }
    return TropicalCurve(std::move(out), std::move(lengths));
  };

  if (leg_at_v >= 0) {
    // Case (1): v carries a leg l and one edge e1; delete them and reattach
    // the leg at the far endpoint. p_v sits on that leg at distance l(e1).
    if (ends.size() != 1) throw std::logic_error("forget case (1): expected a single edge");
    const int e1 = ends[0].first;
    const int v1 = star.edge(e1)[1 - ends[0].second];
    TropicalCurve image = rebuild({e1}, v1, -1, nullptr, leg_at_v, nullptr);
    return {std::move(image), {MarkedPoint::Kind::Leg, leg_at_v, 0, c.length(e1)}};
  }

  // Case (2): v meets two edges e1, e2; merge them into one edge of summed
  // length. p_v is at distance l(e1) from the far end of e1, measured on the
  // finite side when only one side is finite; the infinity point when both
  // are infinite.
  if (ends.size() != 2 || ends[0].first == ends[1].first)
    throw std::logic_error("forget case (2): expected two distinct edges");
  int e1 = ends[0].first, s1 = ends[0].second;
  int e2 = ends[1].first, s2 = ends[1].second;
  if (c.length(e1).is_inf() && c.length(e2).is_finite()) {
    std::swap(e1, e2);
    std::swap(s1, s2);
  }
  const int v1 = star.edge(e1)[1 - s1];
  const int v2 = star.edge(e2)[1 - s2];
  const ExtRat sum = c.length(e1) + c.length(e2);
  int new_edge = -1;
  TropicalCurve image = rebuild({e1, e2}, v1, v2, &sum, -1, &new_edge);
  const ExtRat dist = c.length(e1).is_finite() ? c.length(e1) : ExtRat::inf();
  return {std::move(image), {MarkedPoint::Kind::Edge, new_edge, 0, dist}};
}

TropicalCurve section(const TropicalCurve& c, int leg_slot) {
  require_stable(c, "section");
  if (leg_slot < 0 || leg_slot >= c.num_legs())
    throw std::out_of_range("section index out of range");
  const WeightedGraph& g = c.graph();
  WeightedGraph out;
  for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.weight(v));
  const int v0 = out.add_vertex(0);
  std::vector<ExtRat> lengths;
  for (int e = 0; e < g.num_edges(); ++e) {
    out.add_edge(g.edge(e)[0], g.edge(e)[1]);
    lengths.push_back(c.length(e));
  }
  out.add_edge(g.leg_vertex(leg_slot), v0);
  lengths.push_back(ExtRat::inf());
  for (int slot = 0; slot < g.num_legs(); ++slot)
    out.add_leg(slot == leg_slot ? v0 : g.leg_vertex(slot));
  out.add_leg(v0);
  return TropicalCurve(std::move(out), std::move(lengths));
}

TropicalCurve clutch_xy(const TropicalCurve& c1, const TropicalCurve& c2, const ExtRat& x,
                        const ExtRat& y) {
  require_stable(c1, "clutch");
  require_stable(c2, "clutch");
  require_positive(x, "clutch");
  require_positive(y, "clutch");
  if (c1.num_legs() < 1 || c2.num_legs() < 1)
    throw std::invalid_argument("clutch factors need a last leg to merge");
  const WeightedGraph& g1 = c1.graph();
  const WeightedGraph& g2 = c2.graph();
  WeightedGraph out;
  for (int v = 0; v < g1.num_vertices(); ++v) out.add_vertex(g1.weight(v));
  const int off = g1.num_vertices();
  for (int v = 0; v < g2.num_vertices(); ++v) out.add_vertex(g2.weight(v));
  std::vector<ExtRat> lengths;
  for (int e = 0; e < g1.num_edges(); ++e) {
    out.add_edge(g1.edge(e)[0], g1.edge(e)[1]);
    lengths.push_back(c1.length(e));
  }
  for (int e = 0; e < g2.num_edges(); ++e) {
    out.add_edge(off + g2.edge(e)[0], off + g2.edge(e)[1]);
    lengths.push_back(c2.length(e));
  }
  out.add_edge(g1.leg_vertex(g1.num_legs() - 1), off + g2.leg_vertex(g2.num_legs() - 1));
  lengths.push_back(x + y);
  for (int slot = 0; slot + 1 < g1.num_legs(); ++slot) out.add_leg(g1.leg_vertex(slot));
  for (int slot = 0; slot + 1 < g2.num_legs(); ++slot) out.add_leg(off + g2.leg_vertex(slot));
  return TropicalCurve(std::move(out), std::move(lengths));
}

TropicalCurve glue_xy(const TropicalCurve& c, const ExtRat& x, const ExtRat& y) {
  require_stable(c, "glue");
  require_positive(x, "glue");
  require_positive(y, "glue");
  if (c.num_legs() < 2) throw std::invalid_argument("glue needs two last legs to merge");
  const WeightedGraph& g = c.graph();
  WeightedGraph out;
  for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.weight(v));
  std::vector<ExtRat> lengths;
  for (int e = 0; e < g.num_edges(); ++e) {
    out.add_edge(g.edge(e)[0], g.edge(e)[1]);
    lengths.push_back(c.length(e));
  }
  out.add_edge(g.leg_vertex(g.num_legs() - 2), g.leg_vertex(g.num_legs() - 1));
  lengths.push_back(x + y);
  for (int slot = 0; slot + 2 < g.num_legs(); ++slot) out.add_leg(g.leg_vertex(slot));
  return TropicalCurve(std::move(out), std::move(lengths));
}

TropicalCurve clutch(const TropicalCurve& c1, const TropicalCurve& c2) {
  return clutch_xy(c1, c2, ExtRat::inf(), ExtRat::inf());
}

TropicalCurve glue(const TropicalCurve& c) {
  return glue_xy(c, ExtRat::inf(), ExtRat::inf());
}

ExtRat QuotientGraph::total_length() const {
  ExtRat total(0);
  for (const auto& e : edges) total = total + e.length;
  return total;
}

std::string QuotientGraph::to_json() const {
  nlohmann::json j;
  j["vertices"] = nlohmann::json::array();
  for (std::size_t v = 0; v < vertices.size(); ++v)
    j["vertices"].push_back(
        {{"id", v}, {"weight", vertices[v].weight}, {"fold", vertices[v].fold}});
  j["edges"] = nlohmann::json::array();
  for (std::size_t e = 0; e < edges.size(); ++e)
    j["edges"].push_back({{"id", e},
                          {"endpoints", {edges[e].a, edges[e].b}},
                          {"len", edges[e].length.str()},
                          {"folded", edges[e].folded}});
  j["legs"] = nlohmann::json::array();
  for (std::size_t l = 0; l < legs.size(); ++l)
    j["legs"].push_back({{"index", l + 1}, {"v", legs[l].v}});
  return j.dump();
}

QuotientGraph quotient_by_automorphisms(const TropicalCurve& c) {
  require_stable(c, "quotient");
  const WeightedGraph& g = c.graph();

  std::vector<GraphIso> auts;
  for (const auto& a : automorphism_group(g)) {
    bool metric = true;
    for (int e = 0; e < g.num_edges() && metric; ++e) metric = (c.length(a.emap[e]) == c.length(e));
    if (metric) auts.push_back(a);
  }

  // Orbits of vertices, edges and half-edges under Aut(Gamma).
  std::vector<int> vparent(g.num_vertices()), eparent(g.num_edges()),
      hparent(2 * g.num_edges());
  std::iota(vparent.begin(), vparent.end(), 0);
  std::iota(eparent.begin(), eparent.end(), 0);
  std::iota(hparent.begin(), hparent.end(), 0);
  auto find = [](std::vector<int>& p, int x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  };
  auto unite = [&](std::vector<int>& p, int a, int b) {
    a = find(p, a);
    b = find(p, b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  };
  for (const auto& a : auts) {
    for (int v = 0; v < g.num_vertices(); ++v) unite(vparent, v, a.vmap[v]);
    for (int e = 0; e < g.num_edges(); ++e) {
      unite(eparent, e, a.emap[e]);
      for (int side = 0; side < 2; ++side)
        unite(hparent, 2 * e + side, 2 * a.emap[e] + (side ^ a.eflip[e]));
    }
  }

  QuotientGraph q;
  std::vector<int> qv(g.num_vertices(), -1);
  for (int v = 0; v < g.num_vertices(); ++v) {
    const int r = find(vparent, v);
    if (qv[r] < 0) {
      qv[r] = static_cast<int>(q.vertices.size());
      q.vertices.push_back({g.weight(r), false, r});
    }
    qv[v] = qv[r];
  }
  for (int e = 0; e < g.num_edges(); ++e) {
    if (find(eparent, e) != e) continue;  // one quotient edge per orbit
    const bool folded = find(hparent, 2 * e) == find(hparent, 2 * e + 1);
    if (folded) {
      const int fold_v = static_cast<int>(q.vertices.size());
      q.vertices.push_back({0, true, -1});
      q.edges.push_back({qv[g.edge(e)[0]], fold_v, c.length(e).half(), true, e, 0});
    } else {
      q.edges.push_back({qv[g.edge(e)[0]], qv[g.edge(e)[1]], c.length(e), false, e, 0});
    }
  }
  for (int slot = 0; slot < g.num_legs(); ++slot) q.legs.push_back({qv[g.leg_vertex(slot)]});
  return q;
}

MarkedPoint lift_position(const TropicalCurve& c, const QuotientGraph& q,
                          const QuotientPosition& p) {
  switch (p.kind) {
    case QuotientPosition::Kind::Vertex: {
      if (p.index < 0 || p.index >= static_cast<int>(q.vertices.size()))
        throw std::invalid_argument("position off the quotient graph: unknown vertex");
      const auto& v = q.vertices[p.index];
      if (!v.fold) return {MarkedPoint::Kind::Vertex, v.src_vertex, 0, {}};
      for (const auto& e : q.edges)
        if (e.folded && e.b == p.index)
          return {MarkedPoint::Kind::Edge, e.src_edge, e.src_end_a, e.length};
      throw std::logic_error("fold vertex without a folded edge");
    }
    case QuotientPosition::Kind::Edge: {
      if (p.index < 0 || p.index >= static_cast<int>(q.edges.size()))
        throw std::invalid_argument("position off the quotient graph: unknown edge");
      const auto& e = q.edges[p.index];
      bool out_of_range = !p.distance.is_positive();
      if (e.folded)
        out_of_range = out_of_range || p.distance > e.length;  // fold point allowed
      else if (e.length.is_finite())
        out_of_range = out_of_range || p.distance >= e.length;
      // On an unfolded infinite edge every distance in (0, inf] is interior.
      if (out_of_range)
        throw std::invalid_argument("position off the quotient graph: distance out of range");
      return {MarkedPoint::Kind::Edge, e.src_edge, e.src_end_a, p.distance};
    }
    case QuotientPosition::Kind::Leg: {
      if (p.index < 0 || p.index >= static_cast<int>(q.legs.size()))
        throw std::invalid_argument("position off the quotient graph: unknown leg");
      if (!p.distance.is_positive())
        throw std::invalid_argument("position off the quotient graph: distance out of range");
      return {MarkedPoint::Kind::Leg, p.index, 0, p.distance};
    }
  }
  throw std::logic_error("unreachable");
}

bool fiber_check(const ModuliSpace& space_up, const ModuliSpace& space_base,
                 const TropicalCurve& c, const std::vector<QuotientPosition>& samples) {
  require_stable(c, "fiber_check");
  const QuotientGraph q = quotient_by_automorphisms(c);
  const ModuliPoint base_point = space_base.locate(c);

  std::vector<ModuliPoint> points;
  for (const auto& pos : samples) {
    const MarkedPoint lifted = lift_position(c, q, pos);
    const TropicalCurve gamma_p = attach_leg(c, lifted);
    if (!gamma_p.graph().stable()) return false;
    points.push_back(space_up.locate(gamma_p));

    auto [image, pv] = forget(gamma_p);
    if (!(space_base.locate(image) == base_point)) return false;
    // Reattaching at the reported point must restore the fiber point.
    if (!(space_up.locate(attach_leg(image, pv)) == points.back())) return false;
  }
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if ((samples[i] == samples[j]) != (points[i] == points[j])) return false;
  return true;
}

BoundaryWitness cover_boundary(const TropicalCurve& c) {
  require_stable(c, "cover_boundary");
  const auto [inf_edges, finite] = infinite_part(c);
  if (finite) throw std::invalid_argument("cover_boundary needs an infinite edge");
  const int e = inf_edges.front();
  const WeightedGraph& g = c.graph();
  const int v1 = g.edge(e)[0], v2 = g.edge(e)[1];

  // Connectivity with e removed decides bridge vs not.
  std::vector<char> seen(g.num_vertices(), 0);
  std::vector<int> stack = {v1};
  seen[v1] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int f = 0; f < g.num_edges(); ++f) {
      if (f == e) continue;
      for (int side = 0; side < 2; ++side)
        if (g.edge(f)[side] == v && !seen[g.edge(f)[1 - side]]) {
          seen[g.edge(f)[1 - side]] = 1;
          stack.push_back(g.edge(f)[1 - side]);
        }
    }
  }

  BoundaryWitness w;
  w.cut_edge = e;
  if (seen[v2]) {
    // Not a bridge: cutting gives one stable curve of genus g-1 with the two
    // branches as last legs.
    w.kind = BoundaryWitness::Kind::Glue;
    WeightedGraph out;
    for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.weight(v));
    std::vector<ExtRat> lengths;
    for (int f = 0; f < g.num_edges(); ++f) {
      if (f == e) continue;
      out.add_edge(g.edge(f)[0], g.edge(f)[1]);
      lengths.push_back(c.length(f));
    }
    for (int slot = 0; slot < g.num_legs(); ++slot) out.add_leg(g.leg_vertex(slot));
    out.add_leg(v1);
    out.add_leg(v2);
    w.first = TropicalCurve(std::move(out), std::move(lengths));
    return w;
  }

  // Bridge: the cut falls apart into the two clutch factors; remember the
  // original markings so the round trip restores them.
  w.kind = BoundaryWitness::Kind::Clutch;
  auto component = [&](bool in_first, int attach, std::vector<int>& legs_out) {
    WeightedGraph out;
    std::vector<int> vmap(g.num_vertices(), -1);
    for (int v = 0; v < g.num_vertices(); ++v)
      if ((seen[v] != 0) == in_first) vmap[v] = out.add_vertex(g.weight(v));
    std::vector<ExtRat> lengths;
    for (int f = 0; f < g.num_edges(); ++f) {
      if (f == e) continue;
      if (vmap[g.edge(f)[0]] < 0) continue;
      out.add_edge(vmap[g.edge(f)[0]], vmap[g.edge(f)[1]]);
      lengths.push_back(c.length(f));
    }
    for (int slot = 0; slot < g.num_legs(); ++slot)
      if (vmap[g.leg_vertex(slot)] >= 0) {
        out.add_leg(vmap[g.leg_vertex(slot)]);
        legs_out.push_back(slot);
      }
    out.add_leg(vmap[attach]);
    return TropicalCurve(std::move(out), std::move(lengths));
  };
  w.first = component(true, v1, w.legs_first);
  w.second = component(false, v2, w.legs_second);
  return w;
}

TropicalCurve apply_witness(const BoundaryWitness& w) {
  return apply_witness_xy(w, ExtRat::inf(), ExtRat::inf());
}

TropicalCurve apply_witness_xy(const BoundaryWitness& w, const ExtRat& x, const ExtRat& y) {
  if (w.kind == BoundaryWitness::Kind::Glue) return glue_xy(w.first, x, y);
  if (!w.second) throw std::invalid_argument("clutch witness needs two curves");
  TropicalCurve merged = clutch_xy(w.first, *w.second, x, y);
  // Restore the original markings.
  std::vector<int> order(w.legs_first);
  order.insert(order.end(), w.legs_second.begin(), w.legs_second.end());
  if (static_cast<int>(order.size()) != merged.num_legs())
    throw std::invalid_argument("witness leg bookkeeping does not match");
  const WeightedGraph& g = merged.graph();
  WeightedGraph out;
  for (int v = 0; v < g.num_vertices(); ++v) out.add_vertex(g.weight(v));
  for (int e = 0; e < g.num_edges(); ++e) out.add_edge(g.edge(e)[0], g.edge(e)[1]);
  std::vector<int> slot_of(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) slot_of[order[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < order.size(); ++k) out.add_leg(g.leg_vertex(slot_of[k]));
  return TropicalCurve(std::move(out), merged.lengths());
}

std::string witness_to_json(const BoundaryWitness& w) {
  nlohmann::json j;
  if (w.kind == BoundaryWitness::Kind::Glue) {
    j["kind"] = "glue";
    j["curve"] = nlohmann::json::parse(curve_to_json(w.first));
  } else {
    j["kind"] = "clutch";
    j["first"] = nlohmann::json::parse(curve_to_json(w.first));
    j["second"] = nlohmann::json::parse(curve_to_json(*w.second));
    j["legs_first"] = nlohmann::json::array();
    for (int s : w.legs_first) j["legs_first"].push_back(s + 1);
    j["legs_second"] = nlohmann::json::array();
    for (int s : w.legs_second) j["legs_second"].push_back(s + 1);
  }
  return j.dump();
}

std::string marked_point_to_json(const MarkedPoint& p) {
  nlohmann::json j;
  switch (p.kind) {
    case MarkedPoint::Kind::Vertex:
      j = {{"kind", "vertex"}, {"v", p.index}};
      break;
    case MarkedPoint::Kind::Edge:
      j = {{"kind", "edge"}, {"edge", p.index}, {"end", p.end}, {"dist", p.distance.str()}};
      break;
    case MarkedPoint::Kind::Leg:
      j = {{"kind", "leg"}, {"leg", p.index + 1}, {"dist", p.distance.str()}};
      break;
  }
  return j.dump();
}

MarkedPoint marked_point_from_json(const std::string& text) {
  try {
    auto j = nlohmann::json::parse(text);
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "vertex") return {MarkedPoint::Kind::Vertex, j.at("v").get<int>(), 0, {}};
    if (kind == "edge")
      return {MarkedPoint::Kind::Edge, j.at("edge").get<int>(), j.at("end").get<int>(),
              ExtRat::parse(j.at("dist").get<std::string>())};
    if (kind == "leg")
      return {MarkedPoint::Kind::Leg, j.at("leg").get<int>() - 1, 0,
              ExtRat::parse(j.at("dist").get<std::string>())};
    throw std::invalid_argument("unknown point kind: " + kind);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("bad point JSON: ") + e.what());
  }
}

}  // namespace tropmod
