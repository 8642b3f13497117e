#include "enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

#include "isomorphism.hpp"

namespace tropmod {

namespace {

// Incidence item at a vertex: a leg slot or one side of an edge.
struct Item {
  bool is_leg;
  int index;  // leg slot or edge id
  int side;   // for edges
};

std::vector<Item> items_at(const WeightedGraph& g, int v) {
  std::vector<Item> items;
  for (int slot = 0; slot < g.num_legs(); ++slot)
    if (g.leg_vertex(slot) == v) items.push_back({true, slot, 0});
  for (int e = 0; e < g.num_edges(); ++e)
    for (int side = 0; side < 2; ++side)
      if (g.edge(e)[side] == v) items.push_back({false, e, side});
  return items;
}

}  // namespace

std::vector<GraphClass> enumerate_stable_graphs(int g, int n) {
  if (2 * g - 2 + n <= 0)
    throw std::invalid_argument("no stable graphs: 2g-2+n <= 0");
  const int max_edges = 3 * g - 3 + n;

  WeightedGraph seed;
  seed.add_vertex(g);
  for (int i = 0; i < n; ++i) seed.add_leg(0);

  std::vector<std::vector<GraphClass>> levels(max_edges + 1);
  std::unordered_set<std::string> seen;
  auto admit = [&](WeightedGraph&& cand, int level) {
    if (!cand.stable()) return;
    std::string canon = canonical_form(cand);
    if (seen.insert(canon).second)
      levels[level].push_back({std::move(cand), std::move(canon)});
  };

  admit(std::move(seed), 0);

  for (int k = 0; k < max_edges; ++k) {
    // Iterate by index: levels[k] may reallocate only from pushes to k+1.
    for (std::size_t ci = 0; ci < levels[k].size(); ++ci) {
      const WeightedGraph base = levels[k][ci].graph;
      for (int v = 0; v < base.num_vertices(); ++v) {
        // Move (a): trade one unit of weight for a loop.
        if (base.weight(v) >= 1) {
          WeightedGraph cand = base;
          cand.set_weight(v, base.weight(v) - 1);
          cand.add_edge(v, v);
          admit(std::move(cand), k + 1);
        }
        // Move (b): split v into two vertices joined by a new edge,
        // distributing weight and incident items.
        const auto items = items_at(base, v);
        const int h = base.weight(v);
        const std::uint32_t full = (1u << items.size()) - 1u;
        for (int h1 = 0; h1 <= h; ++h1) {
          const int h2 = h - h1;
          for (std::uint32_t mask = 0; mask <= full; ++mask) {
            if (h1 == h2 && (mask & 1u))
              continue;  // unordered split; fix item 0 on side one
            const int c1 = static_cast<int>(items.size()) - __builtin_popcount(mask);
            const int c2 = __builtin_popcount(mask);
            if (h1 == 0 && c1 + 1 < 3) continue;
            if (h2 == 0 && c2 + 1 < 3) continue;
            WeightedGraph cand = base;
            cand.set_weight(v, h1);
            const int v2 = cand.add_vertex(h2);
            for (std::size_t i = 0; i < items.size(); ++i) {
              if (!((mask >> i) & 1u)) continue;
              if (items[i].is_leg)
                cand.reassign_leg(items[i].index, v2);
              else
                cand.reassign_edge_end(items[i].index, items[i].side, v2);
            }
            cand.add_edge(v, v2);
            admit(std::move(cand), k + 1);
          }
        }
      }
    }
  }

  std::vector<GraphClass> out;
  for (auto& level : levels) {
    std::sort(level.begin(), level.end(),
              [](const GraphClass& a, const GraphClass& b) { return a.canon < b.canon; });
    for (auto& c : level) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace tropmod
