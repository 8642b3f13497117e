#include "graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace tropmod {

int WeightedGraph::add_vertex(int weight) {
  if (weight < 0) throw std::invalid_argument("vertex weight must be >= 0");
  weights_.push_back(weight);
  return num_vertices() - 1;
}

int WeightedGraph::add_edge(int u, int v) {
  if (u < 0 || u >= num_vertices() || v < 0 || v >= num_vertices())
    throw std::out_of_range("edge endpoint out of range");
  edges_.push_back({u, v});
  return num_edges() - 1;
}

int WeightedGraph::add_leg(int v) {
  if (v < 0 || v >= num_vertices()) throw std::out_of_range("leg vertex out of range");
  legs_.push_back(v);
  return num_legs() - 1;
}

void WeightedGraph::set_weight(int v, int w) {
  if (w < 0) throw std::invalid_argument("vertex weight must be >= 0");
  weights_.at(v) = w;
}

int WeightedGraph::valence(int v) const {
  if (v < 0 || v >= num_vertices()) throw std::out_of_range("unknown vertex id");
  int n = 0;
  for (const auto& e : edges_) n += (e[0] == v) + (e[1] == v);
  for (int w : legs_) n += (w == v);
  return n;
}

int WeightedGraph::loops_at(int v) const {
  int n = 0;
  for (const auto& e : edges_) n += (e[0] == v && e[1] == v);
  return n;
}

bool WeightedGraph::connected() const {
  const int nv = num_vertices();
  if (nv == 0) return false;
  std::vector<char> seen(nv, 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& e : edges_) {
      if (e[0] == v && !seen[e[1]]) { seen[e[1]] = 1; stack.push_back(e[1]); }
      if (e[1] == v && !seen[e[0]]) { seen[e[0]] = 1; stack.push_back(e[0]); }
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

int WeightedGraph::genus() const {
  if (!connected())
    throw std::invalid_argument(
        "genus is defined for connected graphs only (h^1 + sum of weights "
        "assumes connectivity)");
  int total = std::accumulate(weights_.begin(), weights_.end(), 0);
  return num_edges() - num_vertices() + 1 + total;
}

bool WeightedGraph::stable() const {
  if (!connected()) return false;
  for (int v = 0; v < num_vertices(); ++v) {
    const int w = weights_[v];
    const int nv = valence(v);
    if (w == 0 && nv < 3) return false;
    if (w == 1 && nv < 1) return false;
  }
  return true;
}

Contraction contract(const WeightedGraph& g, const std::vector<int>& S) {
  for (int e : S)
    if (e < 0 || e >= g.num_edges()) throw std::out_of_range("unknown edge id in contraction set");
  std::vector<char> in_s(g.num_edges(), 0);
  for (int e : S) in_s[e] = 1;

  // Union endpoints of contracted edges.
  std::vector<int> parent(g.num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (int e = 0; e < g.num_edges(); ++e)
    if (in_s[e]) {
      int a = find(g.edge(e)[0]), b = find(g.edge(e)[1]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }

  Contraction c;
  c.source = g;
  c.contracted.assign(S.begin(), S.end());
  std::sort(c.contracted.begin(), c.contracted.end());
  c.contracted.erase(std::unique(c.contracted.begin(), c.contracted.end()), c.contracted.end());

  // New vertex per component, in order of first appearance.
  c.vertex_map.assign(g.num_vertices(), -1);
  std::vector<int> comp_sizes, comp_weight, comp_edges;
  for (int v = 0; v < g.num_vertices(); ++v) {
    int r = find(v);
    if (c.vertex_map[r] < 0) {
      c.vertex_map[r] = c.target.add_vertex(0);
      comp_sizes.push_back(0);
      comp_weight.push_back(0);
      comp_edges.push_back(0);
    }
    c.vertex_map[v] = c.vertex_map[r];
    comp_sizes[c.vertex_map[v]] += 1;
    comp_weight[c.vertex_map[v]] += g.weight(v);
  }
  for (int e : c.contracted) comp_edges[c.vertex_map[g.edge(e)[0]]] += 1;

  // h'(v') = g(preimage) = (#contracted edges) - (#vertices) + 1 + sum h.
  for (int v = 0; v < c.target.num_vertices(); ++v)
    c.target.set_weight(v, comp_edges[v] - comp_sizes[v] + 1 + comp_weight[v]);

  for (int e = 0; e < g.num_edges(); ++e) {
    if (in_s[e]) continue;
    c.target.add_edge(c.vertex_map[g.edge(e)[0]], c.vertex_map[g.edge(e)[1]]);
    c.edge_source.push_back(e);
  }
  for (int slot = 0; slot < g.num_legs(); ++slot)
    c.target.add_leg(c.vertex_map[g.leg_vertex(slot)]);
  return c;
}

}  // namespace tropmod
