#pragma once

#include "curve.hpp"
#include "graph.hpp"
#include "rational.hpp"

namespace tropmod::fixtures {

inline WeightedGraph one_vertex(int weight, int legs) {
  WeightedGraph g;
  g.add_vertex(weight);
  for (int i = 0; i < legs; ++i) g.add_leg(0);
  return g;
}

/// Two weight-0 vertices joined by three parallel edges; genus 2.
inline WeightedGraph theta() {
  WeightedGraph g;
  g.add_vertex(0);
  g.add_vertex(0);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  return g;
}

/// Two loops joined by a bridge; genus 2. Edge 1 is the bridge.
inline WeightedGraph dumbbell() {
  WeightedGraph g;
  g.add_vertex(0);
  g.add_vertex(0);
  g.add_edge(0, 0);
  g.add_edge(0, 1);
  g.add_edge(1, 1);
  return g;
}

/// Weight-0 vertex with a loop and one leg; the 1-dimensional stratum of
/// (1,1).
inline WeightedGraph loop_with_leg() {
  WeightedGraph g;
  g.add_vertex(0);
  g.add_edge(0, 0);
  g.add_leg(0);
  return g;
}

inline TropicalCurve loop_curve(const ExtRat& d) {
  return TropicalCurve(loop_with_leg(), {d});
}

/// Weights 1 and 2, two parallel edges, one loop at each vertex, legs
/// 1,2 on the left and 3,4 on the right; genus 6.
inline WeightedGraph four_legged_genus6() {
  WeightedGraph g;
  g.add_vertex(1);
  g.add_vertex(2);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.add_edge(0, 0);
  g.add_edge(1, 1);
  g.add_leg(0);
  g.add_leg(0);
  g.add_leg(1);
  g.add_leg(1);
  return g;
}

}  // namespace tropmod::fixtures
