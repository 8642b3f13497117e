#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curve.hpp"
#include "moduli.hpp"
#include "rational.hpp"

namespace tropmod {

/// A point of a tropical curve: a vertex, an interior point of an edge at a
/// given distance from one of its endpoints, or a point on a leg (distance
/// from the leg's vertex, inf being the leg's point at infinity).
struct MarkedPoint {
  enum class Kind { Vertex, Edge, Leg };
  Kind kind = Kind::Vertex;
  int index = 0;  // vertex id / edge id / leg slot
  int end = 0;    // for Edge: distance measured from edge(index)[end]
  ExtRat distance;

  bool operator==(const MarkedPoint&) const = default;
};

/// Attaches a new last leg at the point p (subdividing an edge or leg with a
/// new weight-0 vertex when p is not a vertex). The result of a stable input
/// is stable.
TropicalCurve attach_leg(const TropicalCurve& c, const MarkedPoint& p);

/// Forgetful map: drop the last leg and stabilize, following the two
/// one-step cases (move the freed leg / merge the two freed edges with
/// summed length). Returns the image curve together with the canonical point
/// p_v recording where the forgotten leg sat.
std::pair<TropicalCurve, MarkedPoint> forget(const TropicalCurve& c);

/// Section sigma_i (slot 0-based): replace leg i by an infinite edge to a
/// new weight-0 vertex carrying legs i and n+1. forget(section(c, i)) == c.
TropicalCurve section(const TropicalCurve& c, int leg_slot);

/// Clutching and gluing, classical (new edge of length inf) and generalized
/// (length x + y, x and y in (0, inf]).
TropicalCurve clutch_xy(const TropicalCurve& c1, const TropicalCurve& c2, const ExtRat& x,
                        const ExtRat& y);
TropicalCurve glue_xy(const TropicalCurve& c, const ExtRat& x, const ExtRat& y);
TropicalCurve clutch(const TropicalCurve& c1, const TropicalCurve& c2);
TropicalCurve glue(const TropicalCurve& c);

/// Metric quotient Gamma/Aut(Gamma). Not a tropical curve: an edge whose two
/// half-edges form one orbit folds to a segment of half its length ending in
/// a valence-1 fold vertex.
struct QuotientGraph {
  struct Vertex {
    int weight;
    bool fold;       // fold endpoint (midpoint of a folded edge)
    int src_vertex;  // representative source vertex, -1 for fold points
  };
  struct Edge {
    int a, b;        // quotient endpoints; b is the fold vertex when folded
    ExtRat length;   // halved for folded edges
    bool folded;
    int src_edge;    // representative source edge
    int src_end_a;   // side of src_edge lying over endpoint a
  };
  struct Leg {
    int v;
  };
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Leg> legs;

  ExtRat total_length() const;
  std::string to_json() const;
};

QuotientGraph quotient_by_automorphisms(const TropicalCurve& c);

/// Position on a quotient graph. Edge positions measure from endpoint `a`
/// (range (0, length), or (0, length] for folded edges where length is the
/// fold point); leg positions range over (0, inf].
struct QuotientPosition {
  enum class Kind { Vertex, Edge, Leg };
  Kind kind = Kind::Vertex;
  int index = 0;
  ExtRat distance;

  bool operator==(const QuotientPosition&) const = default;
};

/// Lifts a quotient position to a point of the curve.
MarkedPoint lift_position(const TropicalCurve& c, const QuotientGraph& q,
                          const QuotientPosition& p);

/// Verifies that the fiber of the forgetful map over [c] looks like
/// Gamma/Aut(Gamma) at the sampled positions: attaching a leg at each
/// position yields a stable curve that forgets back to (c, position), and
/// sampled positions are equal in the quotient iff the resulting moduli
/// points agree.
bool fiber_check(const ModuliSpace& space_up, const ModuliSpace& space_base,
                 const TropicalCurve& c, const std::vector<QuotientPosition>& samples);

/// Witness that a boundary point is covered by gluing or clutching: the cut
/// of one designated infinite edge. For the clutch case the original leg
/// markings of each side are recorded so the round trip is exact.
struct BoundaryWitness {
  enum class Kind { Glue, Clutch };
  Kind kind = Kind::Glue;
  int cut_edge = 0;
  TropicalCurve first;                   // glue preimage, or first clutch factor
  std::optional<TropicalCurve> second;   // second clutch factor
  std::vector<int> legs_first, legs_second;  // original slots of the kept legs
};

BoundaryWitness cover_boundary(const TropicalCurve& c);

/// Applies the witnessed map (glue, or clutch followed by restoring the
/// recorded leg markings); returns a curve equal to the witnessed input as a
/// moduli point.
TropicalCurve apply_witness(const BoundaryWitness& w);

/// Same with the generalized maps: the restored edge gets length x + y
/// instead of inf. With finite x, y this reaches the interior strata, which
/// is how the generalized images cover everything but the point stratum.
TropicalCurve apply_witness_xy(const BoundaryWitness& w, const ExtRat& x, const ExtRat& y);

std::string witness_to_json(const BoundaryWitness& w);
std::string marked_point_to_json(const MarkedPoint& p);
MarkedPoint marked_point_from_json(const std::string& text);

}  // namespace tropmod
