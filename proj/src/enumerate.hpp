#pragma once

#include <string>
#include <vector>

#include "graph.hpp"

namespace tropmod {

struct GraphClass {
  WeightedGraph graph;
  std::string canon;
};

/// One representative per isomorphism class of stable weighted graphs of
/// genus g with n legs, ordered by (edge count, canonical form). Throws when
/// 2g - 2 + n <= 0.
///
/// Works outward from the one-vertex weight-g graph by the two inverse
/// contraction moves (weight drop + loop, vertex split), deduplicating by
/// canonical form at each edge count up to 3g - 3 + n; every stable graph
/// contracts edge-by-edge down to the one-vertex graph, so this reaches all
/// classes.
std::vector<GraphClass> enumerate_stable_graphs(int g, int n);

}  // namespace tropmod
