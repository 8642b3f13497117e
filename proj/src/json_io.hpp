#pragma once

#include <string>

#include "curve.hpp"
#include "graph.hpp"

namespace tropmod {

/// Graph schema:
///   {"vertices":[{"id":int,"weight":int}],
///    "edges":[{"id":int,"halfedges":[{"v":int},{"v":int}]}],
///    "legs":[{"index":int,"v":int}]}
/// Input ids are arbitrary but unique; output uses dense ids. Leg indices
/// are 1-based on the wire.
std::string graph_to_json(const WeightedGraph& g);
WeightedGraph graph_from_json(const std::string& text);

/// Curve schema: graph schema plus "lengths":[{"edge":int,"len":"p/q"|"inf"}].
std::string curve_to_json(const TropicalCurve& c);
TropicalCurve curve_from_json(const std::string& text);

/// Curve serialized under its canonical vertex/edge ordering; byte-equal for
/// isomorphic curves.
std::string curve_to_canonical_json(const TropicalCurve& c);

/// The same relabeled curve as a value, with the maps old vertex -> new
/// vertex and old edge -> new edge (new edge endpoints are sorted, so a
/// half-edge side may flip; eflip records that).
TropicalCurve canonicalize_curve(const TropicalCurve& c, std::vector<int>* vmap_out = nullptr,
                                 std::vector<int>* emap_out = nullptr,
                                 std::vector<unsigned char>* eflip_out = nullptr);

/// Valued dual graph: graph schema plus "valuations":[{"edge":int,"len":...}].
ValuedDualGraph valued_graph_from_json(const std::string& text);

}  // namespace tropmod
