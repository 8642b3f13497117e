#pragma once

#include <string>
#include <vector>

#include "cone.hpp"
#include "curve.hpp"
#include "enumerate.hpp"

namespace tropmod {

/// Point of a moduli space: isomorphism class of an extended tropical curve,
/// pinned down by its stratum and the canonical form of a stabilized
/// representative.
struct ModuliPoint {
  int stratum = -1;
  std::string canon;
  // The same point as coordinates on the stratum's cone, for the
  // colimit-side equality route.
  ExtendedPoint cone_point;

  bool operator==(const ModuliPoint& o) const {
    return stratum == o.stratum && canon == o.canon;
  }
};

/// M-bar_{g,n}^trop as a generalized extended cone complex: one stratum per
/// stable graph class, cones labeled by representative edge ids, face arrows
/// from contractions, monodromy groups acting on the cones.
class ModuliSpace {
 public:
  struct Stratum {
    WeightedGraph graph;
    std::string canon;
    std::vector<std::vector<int>> monodromy;  // edge permutations H_G
    int dim() const { return graph.num_edges(); }
  };

  int genus() const { return g_; }
  int legs() const { return n_; }
  int num_strata() const { return static_cast<int>(strata_.size()); }
  const Stratum& stratum(int i) const { return strata_.at(i); }
  const GeneralizedComplex& complex() const { return complex_; }

  int max_dim() const;
  /// Counts of strata per cone dimension.
  std::vector<int> f_vector() const;

  /// Stratum index of a stable curve's graph class; -1 when the class does
  /// not belong to this space.
  int stratum_of(const WeightedGraph& g) const;

  /// Canonical moduli point of a stable curve with matching (g, n). Throws
  /// on a type mismatch or an unstable curve.
  ModuliPoint locate(const TropicalCurve& c) const;

  /// Tropical closure order: i <= j iff some contraction from stratum j's
  /// graph onto stratum i's graph exists.
  bool poset_leq(int i, int j) const;
  std::vector<std::pair<int, int>> poset_covers() const;

  std::string manifest_json() const;
  std::string poset_dot() const;

  friend ModuliSpace build_moduli(int g, int n);

 private:
  int g_ = 0, n_ = 0;
  std::vector<Stratum> strata_;
  GeneralizedComplex complex_;
  std::vector<std::vector<char>> leq_;  // leq_[i][j]: contraction j -> i exists
};

/// Builds M-bar_{g,n}^trop. Throws when 2g - 2 + n <= 0.
ModuliSpace build_moduli(int g, int n);

/// Strata poset DOT straight from the graph classes, without building the
/// cone complex; same node labels and covering arrows as
/// ModuliSpace::poset_dot.
std::string strata_poset_dot(int g, int n);

/// H_G for a stratum: the image of Aut(G) in Sym(E(G)).
const std::vector<std::vector<int>>& monodromy(const ModuliSpace& m, int stratum);

}  // namespace tropmod
