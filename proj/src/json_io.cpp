#include "json_io.hpp"

#include <algorithm>
#include <json.hpp>
#include <map>
#include <stdexcept>
#include <tuple>

#include "isomorphism.hpp"

namespace tropmod {

using nlohmann::json;

namespace {

// Every schema violation, including malformed JSON, surfaces as
// std::invalid_argument; callers map that to the usage/schema exit code.
json parse_or_throw(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad JSON: ") + e.what());
  }
}


json graph_to_json_obj(const WeightedGraph& g) {
  json j;
  j["vertices"] = json::array();
  for (int v = 0; v < g.num_vertices(); ++v)
    j["vertices"].push_back({{"id", v}, {"weight", g.weight(v)}});
  j["edges"] = json::array();
  for (int e = 0; e < g.num_edges(); ++e)
    j["edges"].push_back({{"id", e},
                          {"halfedges", json::array({{{"v", g.edge(e)[0]}}, {{"v", g.edge(e)[1]}}})}});
  j["legs"] = json::array();
  for (int slot = 0; slot < g.num_legs(); ++slot)
    j["legs"].push_back({{"index", slot + 1}, {"v", g.leg_vertex(slot)}});
  return j;
}

WeightedGraph graph_from_json_obj(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") || !j.contains("legs"))
    throw std::invalid_argument("graph JSON needs vertices, edges and legs");
  WeightedGraph g;
  std::map<long long, int> vid;
  for (const auto& v : j.at("vertices")) {
    long long id = v.at("id").get<long long>();
    if (vid.count(id)) throw std::invalid_argument("duplicate vertex id");
    vid[id] = g.add_vertex(v.at("weight").get<int>());
  }
  std::map<long long, int> eid;
  for (const auto& e : j.at("edges")) {
    long long id = e.at("id").get<long long>();
    if (eid.count(id)) throw std::invalid_argument("duplicate edge id");
    const auto& h = e.at("halfedges");
    if (!h.is_array() || h.size() != 2)
      throw std::invalid_argument("edge needs exactly two halfedges");
    auto vertex_of = [&](const json& he) {
      auto it = vid.find(he.at("v").get<long long>());
      if (it == vid.end()) throw std::invalid_argument("halfedge at unknown vertex");
      return it->second;
    };
    eid[id] = g.add_edge(vertex_of(h[0]), vertex_of(h[1]));
  }
  std::map<int, int> legs;  // 1-based index -> vertex
  for (const auto& l : j.at("legs")) {
    int idx = l.at("index").get<int>();
    auto it = vid.find(l.at("v").get<long long>());
    if (it == vid.end()) throw std::invalid_argument("leg at unknown vertex");
    if (legs.count(idx)) throw std::invalid_argument("duplicate leg index");
    legs[idx] = it->second;
  }
  int expect = 1;
  for (const auto& [idx, v] : legs) {
    if (idx != expect++)
      throw std::invalid_argument("leg indices must be exactly 1..n");
    g.add_leg(v);
  }
  return g;
}

std::vector<ExtRat> lengths_from_json_obj(const json& j, const char* key, int num_edges,
                                          const std::map<long long, int>* edge_map) {
  std::vector<ExtRat> lengths(num_edges);
  std::vector<char> seen(num_edges, 0);
  if (!j.contains(key)) throw std::invalid_argument(std::string("missing ") + key);
  for (const auto& l : j.at(key)) {
    long long raw = l.at("edge").get<long long>();
    int e;
    if (edge_map) {
      auto it = edge_map->find(raw);
      if (it == edge_map->end()) throw std::invalid_argument("length for unknown edge");
      e = it->second;
    } else {
      e = static_cast<int>(raw);
      if (e < 0 || e >= num_edges) throw std::invalid_argument("length for unknown edge");
    }
    if (seen[e]) throw std::invalid_argument("duplicate length entry");
    seen[e] = 1;
    lengths[e] = ExtRat::parse(l.at("len").get<std::string>());
  }
  for (int e = 0; e < num_edges; ++e)
    if (!seen[e]) throw std::invalid_argument("missing length for some edge");
  return lengths;
}

// Shared by curve_from_json and valued_graph_from_json: parse the graph and
// remember the wire edge ids.
std::pair<WeightedGraph, std::map<long long, int>> graph_with_edge_map(const json& j) {
  WeightedGraph g = graph_from_json_obj(j);
  std::map<long long, int> eid;
  int k = 0;
  for (const auto& e : j.at("edges")) eid[e.at("id").get<long long>()] = k++;
  return {std::move(g), std::move(eid)};
}

}  // namespace

std::string graph_to_json(const WeightedGraph& g) { return graph_to_json_obj(g).dump(); }

WeightedGraph graph_from_json(const std::string& text) {
  try {
    return graph_from_json_obj(parse_or_throw(text));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad graph JSON: ") + e.what());
  }
}

std::string curve_to_json(const TropicalCurve& c) {
  json j = graph_to_json_obj(c.graph());
  j["lengths"] = json::array();
  for (int e = 0; e < c.graph().num_edges(); ++e)
    j["lengths"].push_back({{"edge", e}, {"len", c.length(e).str()}});
  return j.dump();
}

TropicalCurve curve_from_json(const std::string& text) {
  try {
    json j = parse_or_throw(text);
    auto [g, eid] = graph_with_edge_map(j);
    auto lengths = lengths_from_json_obj(j, "lengths", g.num_edges(), &eid);
    return TropicalCurve(std::move(g), std::move(lengths));
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad curve JSON: ") + e.what());
  }
}

TropicalCurve canonicalize_curve(const TropicalCurve& c, std::vector<int>* vmap_out,
                                 std::vector<int>* emap_out,
                                 std::vector<unsigned char>* eflip_out) {
  std::vector<std::string> ann;
  for (int e = 0; e < c.graph().num_edges(); ++e) ann.push_back(c.length(e).str());
  std::vector<int> order;
  canonical_encoding(c.graph(), &ann, &order);

  const WeightedGraph& g = c.graph();
  std::vector<int> newid(g.num_vertices());
  for (std::size_t pos = 0; pos < order.size(); ++pos) newid[order[pos]] = static_cast<int>(pos);

  WeightedGraph out;
  for (std::size_t pos = 0; pos < order.size(); ++pos) out.add_vertex(g.weight(order[pos]));
  // Edges sorted by (endpoints, length) under the canonical vertex order.
  struct Rec {
    int a, b;
    std::string len;
    int src;
    bool flipped;
  };
  std::vector<Rec> recs;
  for (int e = 0; e < g.num_edges(); ++e) {
    int a = newid[g.edge(e)[0]], b = newid[g.edge(e)[1]];
    bool flipped = a > b;
    if (flipped) std::swap(a, b);
    recs.push_back({a, b, c.length(e).str(), e, flipped});
  }
  std::sort(recs.begin(), recs.end(), [](const Rec& x, const Rec& y) {
    return std::tie(x.a, x.b, x.len, x.src) < std::tie(y.a, y.b, y.len, y.src);
  });
  std::vector<ExtRat> lengths;
  if (emap_out) emap_out->assign(g.num_edges(), -1);
  if (eflip_out) eflip_out->assign(g.num_edges(), 0);
  for (std::size_t k = 0; k < recs.size(); ++k) {
    out.add_edge(recs[k].a, recs[k].b);
    lengths.push_back(c.length(recs[k].src));
    if (emap_out) (*emap_out)[recs[k].src] = static_cast<int>(k);
    if (eflip_out) (*eflip_out)[recs[k].src] = recs[k].flipped ? 1 : 0;
  }
  for (int slot = 0; slot < g.num_legs(); ++slot) out.add_leg(newid[g.leg_vertex(slot)]);
  if (vmap_out) *vmap_out = newid;
  return TropicalCurve(std::move(out), std::move(lengths));
}

std::string curve_to_canonical_json(const TropicalCurve& c) {
  return curve_to_json(canonicalize_curve(c));
}

ValuedDualGraph valued_graph_from_json(const std::string& text) {
  try {
    json j = parse_or_throw(text);
    auto [g, eid] = graph_with_edge_map(j);
    ValuedDualGraph d;
    d.node_valuations = lengths_from_json_obj(j, "valuations", g.num_edges(), &eid);
    d.graph = std::move(g);
    return d;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("bad valued graph JSON: ") + e.what());
  }
}

}  // namespace tropmod
