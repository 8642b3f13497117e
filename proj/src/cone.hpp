#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rational.hpp"

namespace tropmod {

/// Orthant R_{>=0}^labels with lattice Z^labels; every cone in this artifact
/// is an orthant, so a cone is just its (sorted, distinct) coordinate label
/// set and a face is a label subset.
struct OrthantCone {
  std::vector<int> labels;

  explicit OrthantCone(std::vector<int> l = {});
  int dim() const { return static_cast<int>(labels.size()); }
  int label_pos(int label) const;  // throws on unknown label
};

/// Point of the extended orthant [0, inf]^labels; coords aligned with the
/// cone's labels. `cone` indexes into a complex (or names a standalone cone).
struct ExtendedPoint {
  int cone = 0;
  std::vector<ExtRat> coords;
};

/// Locally closed face F(tau, tau'): points infinite exactly on tau', zero
/// exactly off tau.
struct FaceAtInfinity {
  std::vector<int> tau;
  std::vector<int> tau_prime;
  bool operator==(const FaceAtInfinity&) const = default;
};

/// The unique (tau, tau') with p in F(tau, tau')^o.
FaceAtInfinity classify_point(const OrthantCone& cone, const std::vector<ExtRat>& coords);

/// Isomorphism of the source orthant onto the face of the target where the
/// omitted coordinates vanish; determined by an injective label map.
struct FaceMorphism {
  int src = 0;
  int dst = 0;
  std::vector<std::pair<int, int>> label_map;  // src label -> dst label
};

struct RawDiagram {
  std::vector<OrthantCone> cones;
  std::vector<FaceMorphism> arrows;
};

using Mask = std::uint32_t;

/// Colimit of a reduced diagram of orthants: one representative cone per
/// isomorphism class of faces, self-identifications collected into the
/// groups H_i, face closure materialized. Point equality in the colimit is
/// decidable: drop zero coordinates to the minimal face and compare H-orbits
/// (the decomposition |Sigma| = union of sigma_i°/H_i).
class GeneralizedComplex {
 public:
  struct ConeClass {
    OrthantCone cone;
    // H_i as permutations of label positions: perm[k] = image position.
    std::vector<std::vector<int>> group;
  };

  int num_cones() const { return static_cast<int>(classes_.size()); }
  const ConeClass& cone_class(int i) const { return classes_.at(i); }

  /// Face of class i selected by `mask` (bit k = k-th label): the class it
  /// is identified with, plus one bijection (mask slot -> label position of
  /// the face class). All other identifications differ by the face class's
  /// group.
  struct FaceRef {
    int cls;
    std::vector<int> map;
  };
  const FaceRef& face(int i, Mask mask) const;

  /// Face-closure arrows (one per class/submask pair, the canonical
  /// identification); isomorphism arrows are exactly the groups.
  const std::vector<FaceMorphism>& arrows() const { return arrows_; }

  /// Classes that are not proper faces of any other class.
  std::vector<int> top_classes() const;

  bool point_equal(const ExtendedPoint& p, const ExtendedPoint& q) const;

  /// Cells of the stratification of the extended complex into images of
  /// F(tau, tau')° (per cone class, tau = all labels, tau' ranging over
  /// H-orbit representatives of label subsets).
  std::vector<std::vector<FaceAtInfinity>> extended_closure_cells() const;

  std::string to_json() const;
  std::string face_poset_dot() const;

  friend GeneralizedComplex reduce_diagram(const RawDiagram& raw);

 private:
  std::vector<ConeClass> classes_;
  std::vector<std::vector<FaceRef>> faces_;  // per class, indexed by mask
  std::vector<FaceMorphism> arrows_;
};

/// Reduces an arbitrary diagram of orthants and face/isomorphism arrows to a
/// reduced diagram with the same colimit. Throws when an arrow is not a face
/// morphism (non-injective or out-of-range label map).
GeneralizedComplex reduce_diagram(const RawDiagram& raw);

/// Barycentric subdivision: a genuine simplicial cone complex on the same
/// point set. Cells are chains of face classes; the maximal cells of B(Sigma)
/// are the full flags of the top classes.
class BarycentricComplex {
 public:
  struct Cell {
    int cls;                  // cone class the chain lives in
    std::vector<Mask> chain;  // strictly increasing, ends at the full mask
    bool maximal;
    int dim() const { return static_cast<int>(chain.size()); }
    bool operator==(const Cell&) const = default;
  };

  const std::vector<Cell>& cells() const { return cells_; }
  std::vector<const Cell*> maximal_cells() const;

  /// The unique cell whose open cone contains the point (finite coords).
  const Cell& locate(const GeneralizedComplex& cx, const ExtendedPoint& p) const;

  friend BarycentricComplex barycentric_subdivision(const GeneralizedComplex& cx);

 private:
  std::vector<Cell> cells_;
};

BarycentricComplex barycentric_subdivision(const GeneralizedComplex& cx);

}  // namespace tropmod
