#include "isomorphism.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace tropmod {

GraphIso GraphIso::identity(const WeightedGraph& g) {
  GraphIso id;
  id.vmap.resize(g.num_vertices());
  std::iota(id.vmap.begin(), id.vmap.end(), 0);
  id.emap.resize(g.num_edges());
  std::iota(id.emap.begin(), id.emap.end(), 0);
  id.eflip.assign(g.num_edges(), 0);
  return id;
}

GraphIso GraphIso::compose(const GraphIso& then) const {
  GraphIso r;
  r.vmap.resize(vmap.size());
  for (std::size_t v = 0; v < vmap.size(); ++v) r.vmap[v] = then.vmap[vmap[v]];
  r.emap.resize(emap.size());
  r.eflip.resize(emap.size());
  for (std::size_t e = 0; e < emap.size(); ++e) {
    r.emap[e] = then.emap[emap[e]];
    r.eflip[e] = eflip[e] ^ then.eflip[emap[e]];
  }
  return r;
}

GraphIso GraphIso::inverse() const {
  GraphIso r;
  r.vmap.resize(vmap.size());
  for (std::size_t v = 0; v < vmap.size(); ++v) r.vmap[vmap[v]] = static_cast<int>(v);
  r.emap.resize(emap.size());
  r.eflip.resize(emap.size());
  for (std::size_t e = 0; e < emap.size(); ++e) {
    r.emap[emap[e]] = static_cast<int>(e);
    r.eflip[emap[e]] = eflip[e];
  }
  return r;
}

namespace {

// Edge ids bundled by unordered endpoint pair.
using BundleMap = std::map<std::pair<int, int>, std::vector<int>>;

BundleMap bundles_of(const WeightedGraph& g) {
  BundleMap b;
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [u, v] = g.edge(e);
    b[{std::min(u, v), std::max(u, v)}].push_back(e);
  }
  return b;
}

struct IsoSearch {
  const WeightedGraph& g1;
  const WeightedGraph& g2;
  BundleMap b1, b2;
  std::vector<int> vmap, used;  // used: target vertex taken
  std::vector<GraphIso>* out;

  bool vertex_compatible(int v, int w) const {
    if (g1.weight(v) != g2.weight(w)) return false;
    if (g1.valence(v) != g2.valence(w)) return false;
    if (g1.loops_at(v) != g2.loops_at(w)) return false;
    // Incremental multiplicity check against already-assigned vertices.
    for (int u = 0; u < g1.num_vertices(); ++u) {
      if (vmap[u] < 0 || u == v) continue;
      auto it1 = b1.find({std::min(u, v), std::max(u, v)});
      auto it2 = b2.find({std::min(vmap[u], w), std::max(vmap[u], w)});
      std::size_t m1 = it1 == b1.end() ? 0 : it1->second.size();
      std::size_t m2 = it2 == b2.end() ? 0 : it2->second.size();
      if (m1 != m2) return false;
    }
    return true;
  }

  void emit_edge_maps(const std::vector<std::pair<const std::vector<int>*, const std::vector<int>*>>& pairs,
                      std::size_t idx, GraphIso& iso) {
    if (idx == pairs.size()) {
      out->push_back(iso);
      return;
    }
    const auto& src = *pairs[idx].first;
    std::vector<int> tgt = *pairs[idx].second;
    std::sort(tgt.begin(), tgt.end());
    const bool loop_bundle = g1.is_loop(src[0]);
    do {
      // Flip bits: forced for non-loops, free for loops.
      std::vector<int> flip_free;
      bool ok = true;
      for (std::size_t k = 0; k < src.size() && ok; ++k) {
        int e = src[k], f = tgt[k];
        iso.emap[e] = f;
        if (loop_bundle) {
          flip_free.push_back(e);
        } else {
          auto [u0, u1] = g1.edge(e);
          auto [t0, t1] = g2.edge(f);
          if (vmap[u0] == t0 && vmap[u1] == t1)
            iso.eflip[e] = 0;
          else if (vmap[u0] == t1 && vmap[u1] == t0)
            iso.eflip[e] = 1;
          else
            ok = false;
        }
      }
      if (ok) {
        for (std::uint32_t bits = 0; bits < (1u << flip_free.size()); ++bits) {
          for (std::size_t k = 0; k < flip_free.size(); ++k)
            iso.eflip[flip_free[k]] = (bits >> k) & 1u;
          emit_edge_maps(pairs, idx + 1, iso);
        }
      }
    } while (std::next_permutation(tgt.begin(), tgt.end()));
  }

  void finish_vertex_map() {
    // Pair up bundles; sizes were enforced incrementally but loops at
    // unassigned-neighbor time were not, so re-verify.
    std::vector<std::pair<const std::vector<int>*, const std::vector<int>*>> pairs;
    for (const auto& [key, src] : b1) {
      auto [a, b] = key;
      std::pair<int, int> tkey{std::min(vmap[a], vmap[b]), std::max(vmap[a], vmap[b])};
      auto it = b2.find(tkey);
      if (it == b2.end() || it->second.size() != src.size()) return;
      pairs.push_back({&src, &it->second});
    }
    GraphIso iso;
    iso.vmap = vmap;
    iso.emap.assign(g1.num_edges(), -1);
    iso.eflip.assign(g1.num_edges(), 0);
    emit_edge_maps(pairs, 0, iso);
  }

  void extend(int v) {
    while (v < g1.num_vertices() && vmap[v] >= 0) ++v;
    if (v == g1.num_vertices()) {
      finish_vertex_map();
      return;
    }
    for (int w = 0; w < g2.num_vertices(); ++w) {
      if (used[w] || !vertex_compatible(v, w)) continue;
      vmap[v] = w;
      used[w] = 1;
      extend(v + 1);
      vmap[v] = -1;
      used[w] = 0;
    }
  }
};

}  // namespace

std::vector<GraphIso> isomorphisms(const WeightedGraph& g1, const WeightedGraph& g2) {
  std::vector<GraphIso> out;
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges() ||
      g1.num_legs() != g2.num_legs())
    return out;

  IsoSearch s{g1, g2, bundles_of(g1), bundles_of(g2), {}, {}, &out};
  s.vmap.assign(g1.num_vertices(), -1);
  s.used.assign(g2.num_vertices(), 0);
  // Legs force their vertices.
  for (int slot = 0; slot < g1.num_legs(); ++slot) {
    int v = g1.leg_vertex(slot), w = g2.leg_vertex(slot);
    if (s.vmap[v] >= 0) {
      if (s.vmap[v] != w) return out;
      continue;
    }
    if (s.used[w]) return out;
    if (!s.vertex_compatible(v, w)) return out;
    s.vmap[v] = w;
    s.used[w] = 1;
  }
  s.extend(0);
  return out;
}

std::vector<GraphIso> automorphism_group(const WeightedGraph& g) {
  return isomorphisms(g, g);
}

std::vector<std::vector<int>> edge_action(const std::vector<GraphIso>& aut) {
  std::vector<std::vector<int>> perms;
  for (const auto& a : aut) perms.push_back(a.emap);
  std::sort(perms.begin(), perms.end());
  perms.erase(std::unique(perms.begin(), perms.end()), perms.end());
  return perms;
}

namespace {

struct VertexKey {
  int weight, valence, loops;
  std::vector<int> legs;
  std::vector<int> ann;  // sorted annotation ids of incident edges (loops twice)
  auto operator<=>(const VertexKey&) const = default;
};

}  // namespace

std::string canonical_encoding(const WeightedGraph& g,
                               const std::vector<std::string>* edge_ann,
                               std::vector<int>* vertex_order_out) {
  const int nv = g.num_vertices();
  const int ne = g.num_edges();
  if (edge_ann && static_cast<int>(edge_ann->size()) != ne)
    throw std::invalid_argument("one annotation per edge expected");

  // Annotation dictionary: sorted unique strings -> dense ids.
  std::vector<std::string> dict;
  std::vector<int> ann_id(ne, 0);
  if (edge_ann) {
    dict = *edge_ann;
    std::sort(dict.begin(), dict.end());
    dict.erase(std::unique(dict.begin(), dict.end()), dict.end());
    for (int e = 0; e < ne; ++e)
      ann_id[e] = static_cast<int>(
          std::lower_bound(dict.begin(), dict.end(), (*edge_ann)[e]) - dict.begin());
  }

  std::vector<VertexKey> key(nv);
  for (int v = 0; v < nv; ++v) {
    key[v].weight = g.weight(v);
    key[v].valence = g.valence(v);
    key[v].loops = g.loops_at(v);
  }
  for (int slot = 0; slot < g.num_legs(); ++slot) key[g.leg_vertex(slot)].legs.push_back(slot);
  if (edge_ann) {
    for (int e = 0; e < ne; ++e) {
      key[g.edge(e)[0]].ann.push_back(ann_id[e]);
      key[g.edge(e)[1]].ann.push_back(ann_id[e]);
    }
    for (auto& k : key) std::sort(k.ann.begin(), k.ann.end());
  }

  // Blocks of vertices with equal (isomorphism-invariant) key, ordered by key.
  std::vector<int> order(nv);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::vector<int>> blocks;
  for (int i = 0; i < nv; ++i) {
    if (i == 0 || key[order[i]] != key[order[i - 1]]) blocks.emplace_back();
    blocks.back().push_back(order[i]);
  }

  std::vector<int> newid(nv), best_order;
  std::vector<long long> best, enc;
  std::vector<std::array<long long, 3>> triples(ne);

  auto evaluate = [&]() {
    int pos = 0;
    for (const auto& blk : blocks)
      for (int v : blk) newid[v] = pos++;
    enc.clear();
    enc.push_back(nv);
    enc.push_back(ne);
    enc.push_back(g.num_legs());
    for (const auto& blk : blocks)
      for (int v : blk) enc.push_back(g.weight(v));
    for (int slot = 0; slot < g.num_legs(); ++slot) enc.push_back(newid[g.leg_vertex(slot)]);
    for (int e = 0; e < ne; ++e) {
      long long a = newid[g.edge(e)[0]], b = newid[g.edge(e)[1]];
      if (a > b) std::swap(a, b);
      triples[e] = {a, b, ann_id[e]};
    }
    std::sort(triples.begin(), triples.end());
    for (const auto& t : triples) {
      enc.push_back(t[0]);
      enc.push_back(t[1]);
      enc.push_back(t[2]);
    }
    if (best.empty() || enc < best) {
      best = enc;
      if (vertex_order_out) {
        best_order.clear();
        for (const auto& blk : blocks) best_order.insert(best_order.end(), blk.begin(), blk.end());
      }
    }
  };

  // All orderings compatible with the block structure; the minimum encoding
  // over them is isomorphism-invariant.
  auto sweep = [&](auto&& self, std::size_t i) -> void {
    if (i == blocks.size()) {
      evaluate();
      return;
    }
    auto& blk = blocks[i];
    do {
      self(self, i + 1);
    } while (std::next_permutation(blk.begin(), blk.end()));
  };
  sweep(sweep, 0);

  if (vertex_order_out) *vertex_order_out = best_order;

  std::string s;
  s.reserve(best.size() * 3 + 16);
  for (long long x : best) {
    s += std::to_string(x);
    s += ',';
  }
  s += '|';
  for (const auto& d : dict) {
    s += d;
    s += ';';
  }
  return s;
}

}  // namespace tropmod
