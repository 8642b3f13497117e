#include "moduli.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "isomorphism.hpp"
#include "json_io.hpp"

namespace tropmod {

int ModuliSpace::max_dim() const {
  int d = 0;
  for (const auto& s : strata_) d = std::max(d, s.dim());
  return d;
}

std::vector<int> ModuliSpace::f_vector() const {
  std::vector<int> f(max_dim() + 1, 0);
  for (const auto& s : strata_) f[s.dim()] += 1;
  return f;
}

int ModuliSpace::stratum_of(const WeightedGraph& g) const {
  const std::string canon = canonical_form(g);
  for (int i = 0; i < num_strata(); ++i)
    if (strata_[i].canon == canon) return i;
  return -1;
}

ModuliPoint ModuliSpace::locate(const TropicalCurve& c) const {
  if (!c.graph().stable()) throw std::invalid_argument("locate expects a stable curve");
  if (c.graph().genus() != g_ || c.num_legs() != n_)
    throw std::invalid_argument("curve type mismatch: expected genus " + std::to_string(g_) +
                                " with " + std::to_string(n_) + " legs");
  const int s = stratum_of(c.graph());
  if (s < 0) throw std::logic_error("stable graph class missing from its moduli space");

  ModuliPoint p;
  p.stratum = s;
  p.canon = curve_canonical_form(c);
  // Coordinates on the stratum cone via any isomorphism; the H_G-orbit is
  // what the complex identifies, so the choice does not matter.
  const auto isos = isomorphisms(strata_[s].graph, c.graph());
  if (isos.empty()) throw std::logic_error("representative not isomorphic to curve graph");
  p.cone_point.cone = s;
  p.cone_point.coords.resize(c.graph().num_edges());
  for (int e = 0; e < c.graph().num_edges(); ++e)
    p.cone_point.coords[e] = c.length(isos.front().emap[e]);
  return p;
}

bool ModuliSpace::poset_leq(int i, int j) const {
  return leq_.at(i).at(j) != 0;
}

std::vector<std::pair<int, int>> ModuliSpace::poset_covers() const {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < num_strata(); ++i)
    for (int j = 0; j < num_strata(); ++j) {
      if (i == j || !poset_leq(i, j)) continue;
      if (strata_[j].dim() != strata_[i].dim() + 1) continue;
      covers.push_back({i, j});
    }
  return covers;
}

std::string ModuliSpace::manifest_json() const {
  std::ostringstream os;
  os << "{\"g\":" << g_ << ",\"n\":" << n_ << ",\"strata\":[";
  for (int i = 0; i < num_strata(); ++i) {
    if (i) os << ",";
    os << "{\"id\":" << i << ",\"graph\":" << graph_to_json(strata_[i].graph)
       << ",\"dim\":" << strata_[i].dim()
       << ",\"monodromy_order\":" << strata_[i].monodromy.size() << "}";
  }
  os << "],\"arrows\":[";
  const auto covers = poset_covers();
  for (std::size_t k = 0; k < covers.size(); ++k) {
    if (k) os << ",";
    os << "{\"src\":" << covers[k].first << ",\"dst\":" << covers[k].second << "}";
  }
  os << "]}";
  return os.str();
}

std::string ModuliSpace::poset_dot() const {
  std::ostringstream os;
  os << "digraph strata {\n";
  for (int i = 0; i < num_strata(); ++i)
    os << "  s" << i << " [label=\"dim:" << strata_[i].dim()
       << " order:" << strata_[i].monodromy.size() << "\"];\n";
  for (const auto& [a, b] : poset_covers()) os << "  s" << a << " -> s" << b << ";\n";
  os << "}\n";
  return os.str();
}

ModuliSpace build_moduli(int g, int n) {
  ModuliSpace m;
  m.g_ = g;
  m.n_ = n;
  auto classes = enumerate_stable_graphs(g, n);

  for (auto& cls : classes) {
    ModuliSpace::Stratum s;
    s.monodromy = edge_action(automorphism_group(cls.graph));
    s.graph = std::move(cls.graph);
    s.canon = std::move(cls.canon);
    m.strata_.push_back(std::move(s));
  }

  // One cone per stratum, labels = representative edge ids. Arrows: every
  // weighted contraction (including automorphisms, as contractions of the
  // empty set) induces the face inclusion identifying the contracted cone
  // with the face where the contracted edges have length zero.
  RawDiagram raw;
  for (const auto& s : m.strata_) {
    std::vector<int> labels(s.graph.num_edges());
    for (int e = 0; e < s.graph.num_edges(); ++e) labels[e] = e;
    raw.cones.push_back(OrthantCone(labels));
  }

  const int ns = m.num_strata();
  m.leq_.assign(ns, std::vector<char>(ns, 0));
  for (int a = 0; a < ns; ++a) {
    const WeightedGraph& ga = m.strata_[a].graph;
    const int ne = ga.num_edges();
    for (Mask s = 0; s < (1u << ne); ++s) {
      std::vector<int> contracted;
      for (int e = 0; e < ne; ++e)
        if ((s >> e) & 1u) contracted.push_back(e);
      Contraction ctr = contract(ga, contracted);
      const int b = m.stratum_of(ctr.target);
      if (b < 0) throw std::logic_error("contraction left the enumerated classes");
      m.leq_[b][a] = 1;
      for (const auto& iso : isomorphisms(m.strata_[b].graph, ctr.target)) {
        FaceMorphism fm;
        fm.src = b;
        fm.dst = a;
        for (int e = 0; e < m.strata_[b].graph.num_edges(); ++e)
          fm.label_map.push_back({e, ctr.edge_source[iso.emap[e]]});
        raw.arrows.push_back(std::move(fm));
      }
    }
  }

  m.complex_ = reduce_diagram(raw);
  if (m.complex_.num_cones() != ns)
    throw std::logic_error("complex classes do not match strata");
  for (int i = 0; i < ns; ++i)
    if (m.complex_.cone_class(i).cone.dim() != m.strata_[i].dim())
      throw std::logic_error("cone dimension does not match stratum edge count");
  return m;
}

const std::vector<std::vector<int>>& monodromy(const ModuliSpace& m, int stratum) {
  return m.stratum(stratum).monodromy;
}

std::string strata_poset_dot(int g, int n) {
  const auto classes = enumerate_stable_graphs(g, n);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index[classes[i].canon] = static_cast<int>(i);
  std::ostringstream os;
  os << "digraph strata {\n";
  for (std::size_t i = 0; i < classes.size(); ++i)
    os << "  s" << i << " [label=\"dim:" << classes[i].graph.num_edges() << " order:"
       << edge_action(automorphism_group(classes[i].graph)).size() << "\"];\n";
  std::set<std::pair<int, int>> covers;
  for (std::size_t j = 0; j < classes.size(); ++j)
    for (int e = 0; e < classes[j].graph.num_edges(); ++e) {
      const auto ctr = contract(classes[j].graph, {e});
      covers.insert({index.at(canonical_form(ctr.target)), static_cast<int>(j)});
    }
  for (const auto& [a, b] : covers) os << "  s" << a << " -> s" << b << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace tropmod
