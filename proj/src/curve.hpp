#pragma once

#include <string>
#include <vector>

#include "graph.hpp"
#include "rational.hpp"

namespace tropmod {

/// Metric weighted graph: edges carry lengths in (0, inf]. The underlying
/// graph need not be stable (stabilize takes care of that); operations that
/// treat the curve as a moduli point require stability.
class TropicalCurve {
 public:
  TropicalCurve() = default;
  TropicalCurve(WeightedGraph graph, std::vector<ExtRat> lengths);

  const WeightedGraph& graph() const { return graph_; }
  const ExtRat& length(int e) const { return lengths_.at(e); }
  const std::vector<ExtRat>& lengths() const { return lengths_; }

  int num_legs() const { return graph_.num_legs(); }
  int genus() const { return graph_.genus(); }

  bool operator==(const TropicalCurve& o) const = default;

 private:
  WeightedGraph graph_;
  std::vector<ExtRat> lengths_;
};

/// The unique equivalent curve with stable underlying graph: weight-0
/// 1-valent vertices are deleted with their edge, leg-free weight-0 2-valent
/// vertices are smoothed by merging their incident edges into one of summed
/// length. Idempotent. Throws when 2g - 2 + n <= 0.
TropicalCurve stabilize(const TropicalCurve& c);

/// Canonical encoding: equal iff a length-, weight- and leg-preserving
/// isomorphism exists, i.e. iff the length vectors lie in one Aut-orbit.
std::string curve_canonical_form(const TropicalCurve& c);

/// Edges of infinite length, and whether the curve lies in the finite part
/// of moduli (no infinite edge).
std::pair<std::vector<int>, bool> infinite_part(const TropicalCurve& c);

/// Two curves define the same point of moduli: same genus and leg count and
/// equal canonical forms after stabilization.
bool same_moduli_point(const TropicalCurve& a, const TropicalCurve& b);

/// Dual graph with per-node valuations; the abstract input of the naive
/// tropicalization map (the valuation val(f_i) of the local equation at each
/// node, inf for nodes of the generic fiber).
struct ValuedDualGraph {
  WeightedGraph graph;
  std::vector<ExtRat> node_valuations;  // per edge id
};

/// Tropical curve with the same graph and lengths given by the valuations.
/// Throws on a missing/nonpositive valuation or an unstable graph.
TropicalCurve naive_trop(const ValuedDualGraph& d);

}  // namespace tropmod
