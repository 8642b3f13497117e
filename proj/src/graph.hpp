#pragma once

#include <array>
#include <vector>

namespace tropmod {

/// Weighted multigraph with ordered legs.
///
/// Vertices are dense indices 0..num_vertices()-1, each carrying a
/// nonnegative weight. An edge is an ordered pair of endpoints; the two
/// entries of the pair are the edge's two half-edges (a loop has both at the
/// same vertex, still as two distinguishable halves). Legs are ordered slots
/// 0..num_legs()-1, each attached to a vertex; slot i models marked point
/// i+1.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  int add_vertex(int weight);
  /// Appends an edge u--v (u == v for a loop) and returns its id.
  int add_edge(int u, int v);
  /// Appends a leg at v in the next slot and returns the slot.
  int add_leg(int v);

  int num_vertices() const { return static_cast<int>(weights_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_legs() const { return static_cast<int>(legs_.size()); }

  int weight(int v) const { return weights_.at(v); }
  void set_weight(int v, int w);
  const std::array<int, 2>& edge(int e) const { return edges_.at(e); }
  bool is_loop(int e) const {
    return edges_.at(e)[0] == edges_.at(e)[1];
  }
  int leg_vertex(int slot) const { return legs_.at(slot); }

  /// Number of half-edge and leg incidences at v; each loop counts twice.
  int valence(int v) const;
  int loops_at(int v) const;

  bool connected() const;

  /// First Betti number plus total weight. Throws std::invalid_argument on a
  /// disconnected graph, where the formula |E| - |V| + 1 + sum(h) is wrong.
  int genus() const;

  /// Connected, and every weight-0 vertex has valence >= 3, every weight-1
  /// vertex valence >= 1.
  bool stable() const;

  bool operator==(const WeightedGraph& o) const = default;

  // Mutators used by graph surgery (stabilize, tautological maps). They keep
  // indices dense: the last element is moved into the removed slot.
  void reassign_edge_end(int e, int side, int v) { edges_.at(e)[side] = v; }
  void reassign_leg(int slot, int v) { legs_.at(slot) = v; }

 private:
  std::vector<int> weights_;
  std::vector<std::array<int, 2>> edges_;
  std::vector<int> legs_;
};

/// Weighted contraction of the edge set `contracted`; merged vertices take
/// the genus of the collapsed preimage subgraph as their weight.
struct Contraction {
  WeightedGraph source;
  WeightedGraph target;
  std::vector<int> contracted;    // sorted edge ids of the source
  std::vector<int> vertex_map;    // source vertex -> target vertex
  std::vector<int> edge_source;   // target edge -> source edge id
};

/// Collapses exactly the edges in S. Throws on unknown edge ids.
Contraction contract(const WeightedGraph& g, const std::vector<int>& S);

}  // namespace tropmod
