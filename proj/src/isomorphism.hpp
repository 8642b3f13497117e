#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace tropmod {

/// Leg- and weight-preserving isomorphism at half-edge level. Each source
/// edge maps to a target edge; `eflip[e] == 1` means the two half-edges swap
/// sides (the only freedom beyond the vertex map, and the reason a loop has
/// a nontrivial self-map).
struct GraphIso {
  std::vector<int> vmap;         // source vertex -> target vertex
  std::vector<int> emap;         // source edge -> target edge
  std::vector<std::uint8_t> eflip;

  static GraphIso identity(const WeightedGraph& g);
  GraphIso compose(const GraphIso& then) const;  // then(*this(x))
  GraphIso inverse() const;
  bool operator==(const GraphIso& o) const = default;
};

/// All leg-preserving, weight-preserving isomorphisms g1 -> g2 at half-edge
/// level. Empty iff the graphs are not isomorphic.
std::vector<GraphIso> isomorphisms(const WeightedGraph& g1, const WeightedGraph& g2);

/// Aut(g) = isomorphisms(g, g).
std::vector<GraphIso> automorphism_group(const WeightedGraph& g);

/// Image of Aut(g) in the permutations of the edge set (the monodromy group
/// acting on the stratum cone). Deduplicated, identity first.
std::vector<std::vector<int>> edge_action(const std::vector<GraphIso>& aut);

/// Canonical byte-comparable encoding: equal iff the graphs are isomorphic
/// (legs and weights preserved). `edge_ann`, when given, must have one entry
/// per edge; encodings then agree iff an isomorphism matching annotations
/// exists. `vertex_order_out`, when non-null, receives a canonical vertex
/// ordering realizing the encoding (old vertex id per new position).
std::string canonical_encoding(const WeightedGraph& g,
                               const std::vector<std::string>* edge_ann = nullptr,
                               std::vector<int>* vertex_order_out = nullptr);

inline std::string canonical_form(const WeightedGraph& g) { return canonical_encoding(g); }

}  // namespace tropmod
