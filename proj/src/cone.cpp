#include "cone.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace tropmod {

OrthantCone::OrthantCone(std::vector<int> l) : labels(std::move(l)) {
  std::sort(labels.begin(), labels.end());
  if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
    throw std::invalid_argument("cone labels must be distinct");
  if (labels.size() > 20) throw std::invalid_argument("cone dimension too large");
}

int OrthantCone::label_pos(int label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) throw std::out_of_range("unknown cone label");
  return static_cast<int>(it - labels.begin());
}

FaceAtInfinity classify_point(const OrthantCone& cone, const std::vector<ExtRat>& coords) {
  if (coords.size() != cone.labels.size())
    throw std::invalid_argument("one coordinate per label expected");
  FaceAtInfinity f;
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (coords[k].is_negative()) throw std::invalid_argument("coordinates must be >= 0");
    if (!coords[k].is_zero()) f.tau.push_back(cone.labels[k]);
    if (coords[k].is_inf()) f.tau_prime.push_back(cone.labels[k]);
  }
  return f;
}

namespace {

// Positions of the set bits of a mask, ascending.
std::vector<int> mask_slots(Mask m) {
  std::vector<int> s;
  for (int k = 0; m >> k; ++k)
    if ((m >> k) & 1u) s.push_back(k);
  return s;
}

int rank_in_mask(Mask m, int pos) {
  return __builtin_popcount(m & ((1u << pos) - 1u));
}

Mask apply_perm_to_mask(const std::vector<int>& perm, Mask m) {
  Mask out = 0;
  for (int k = 0; m >> k; ++k)
    if ((m >> k) & 1u) out |= 1u << perm[k];
  return out;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

const GeneralizedComplex::FaceRef& GeneralizedComplex::face(int i, Mask mask) const {
  const auto& per_class = faces_.at(i);
  if (mask >= per_class.size()) throw std::out_of_range("face mask out of range");
  return per_class[mask];
}

std::vector<int> GeneralizedComplex::top_classes() const {
  std::vector<char> proper_face(num_cones(), 0);
  for (int i = 0; i < num_cones(); ++i) {
    const Mask full = (1u << classes_[i].cone.dim()) - 1u;
    for (Mask m = 0; m < full; ++m) proper_face[faces_[i][m].cls] = 1;
  }
  std::vector<int> tops;
  for (int i = 0; i < num_cones(); ++i)
    if (!proper_face[i]) tops.push_back(i);
  return tops;
}

bool GeneralizedComplex::point_equal(const ExtendedPoint& p, const ExtendedPoint& q) const {
  auto descend = [&](const ExtendedPoint& pt) -> std::pair<int, std::vector<ExtRat>> {
    if (pt.cone < 0 || pt.cone >= num_cones())
      throw std::out_of_range("point references a cone not in the complex");
    const auto& cls = classes_[pt.cone];
    if (static_cast<int>(pt.coords.size()) != cls.cone.dim())
      throw std::invalid_argument("one coordinate per label expected");
    Mask support = 0;
    for (std::size_t k = 0; k < pt.coords.size(); ++k) {
      if (pt.coords[k].is_negative()) throw std::invalid_argument("coordinates must be >= 0");
      if (!pt.coords[k].is_zero()) support |= 1u << k;
    }
    const FaceRef& fr = faces_[pt.cone][support];
    std::vector<ExtRat> out(classes_[fr.cls].cone.dim());
    const auto slots = mask_slots(support);
    for (std::size_t t = 0; t < slots.size(); ++t) out[fr.map[t]] = pt.coords[slots[t]];
    return {fr.cls, std::move(out)};
  };

  auto [cp, vp] = descend(p);
  auto [cq, vq] = descend(q);
  if (cp != cq) return false;
  for (const auto& h : classes_[cp].group) {
    bool match = true;
    for (std::size_t k = 0; k < vp.size() && match; ++k) match = (vq[h[k]] == vp[k]);
    if (match) return true;
  }
  return false;
}

std::vector<std::vector<FaceAtInfinity>> GeneralizedComplex::extended_closure_cells() const {
  std::vector<std::vector<FaceAtInfinity>> out(num_cones());
  for (int i = 0; i < num_cones(); ++i) {
    const auto& cls = classes_[i];
    const Mask full = (1u << cls.cone.dim()) - 1u;
    std::set<Mask> reps;
    for (Mask m = 0; m <= full; ++m) {
      Mask least = m;
      for (const auto& h : cls.group) least = std::min(least, apply_perm_to_mask(h, m));
      reps.insert(least);
    }
    for (Mask m : reps) {
      FaceAtInfinity cell;
      cell.tau = cls.cone.labels;
      for (int k : mask_slots(m)) cell.tau_prime.push_back(cls.cone.labels[k]);
      out[i].push_back(std::move(cell));
    }
  }
  return out;
}

GeneralizedComplex reduce_diagram(const RawDiagram& raw) {
  const int nc = static_cast<int>(raw.cones.size());

  // Validate arrows as face morphisms: injective label maps between cones.
  struct PosArrow {
    int src, dst;
    std::vector<int> inj;  // src position -> dst position
  };
  std::vector<PosArrow> arrows;
  for (const auto& a : raw.arrows) {
    if (a.src < 0 || a.src >= nc || a.dst < 0 || a.dst >= nc)
      throw std::out_of_range("arrow endpoint out of range");
    const auto& sc = raw.cones[a.src];
    const auto& dc = raw.cones[a.dst];
    if (a.label_map.size() != sc.labels.size())
      throw std::invalid_argument("face morphism must map every source label");
    std::vector<int> inj(sc.labels.size(), -1);
    std::vector<char> hit(dc.labels.size(), 0);
    for (const auto& [sl, dl] : a.label_map) {
      int sp = sc.label_pos(sl), dp = dc.label_pos(dl);
      if (inj[sp] >= 0 || hit[dp])
        throw std::invalid_argument("face morphism label map must be injective");
      inj[sp] = dp;
      hit[dp] = 1;
    }
    arrows.push_back({a.src, a.dst, std::move(inj)});
  }

  // Face objects: (cone, mask). Object ids lexicographic in (cone, mask).
  std::vector<int> offset(nc + 1, 0);
  for (int c = 0; c < nc; ++c) offset[c + 1] = offset[c] + (1 << raw.cones[c].dim());
  const int nobj = offset[nc];
  auto obj_id = [&](int c, Mask m) { return offset[c] + static_cast<int>(m); };

  // Generators: each arrow restricted to each face, both directions.
  // incidence[o] holds (o2, slotmap o2 -> o).
  std::vector<std::vector<std::pair<int, std::vector<int>>>> incidence(nobj);
  UnionFind uf(nobj);
  for (const auto& a : arrows) {
    const int sd = raw.cones[a.src].dim();
    for (Mask m = 0; m < (1u << sd); ++m) {
      Mask im = 0;
      for (int k : mask_slots(m)) im |= 1u << a.inj[k];
      const int o1 = obj_id(a.src, m), o2 = obj_id(a.dst, im);
      const auto slots = mask_slots(m);
      std::vector<int> fwd(slots.size()), bwd(slots.size());
      for (std::size_t t = 0; t < slots.size(); ++t) fwd[t] = rank_in_mask(im, a.inj[slots[t]]);
      for (std::size_t t = 0; t < slots.size(); ++t) bwd[fwd[t]] = static_cast<int>(t);
      incidence[o2].push_back({o1, fwd});
      incidence[o1].push_back({o2, bwd});
      uf.unite(o1, o2);
    }
  }

  // Representative per class: least object id, i.e. least (cone, mask).
  std::vector<int> rep_of(nobj);
  for (int o = 0; o < nobj; ++o) rep_of[o] = uf.find(o);

  // Closure: all groupoid morphisms object -> representative, as slot maps.
  std::vector<std::set<std::vector<int>>> morph(nobj);
  std::deque<std::pair<int, std::vector<int>>> work;
  for (int o = 0; o < nobj; ++o)
    if (rep_of[o] == o) {
      int c = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), o) -
                               offset.begin()) - 1;
      Mask m = static_cast<Mask>(o - offset[c]);
      std::vector<int> id(__builtin_popcount(m));
      std::iota(id.begin(), id.end(), 0);
      morph[o].insert(id);
      work.push_back({o, id});
    }
  while (!work.empty()) {
    auto [o, phi] = work.front();
    work.pop_front();
    for (const auto& [o2, psi] : incidence[o]) {
      std::vector<int> comp(psi.size());
      for (std::size_t t = 0; t < psi.size(); ++t) comp[t] = phi[psi[t]];
      if (morph[o2].insert(comp).second) work.push_back({o2, comp});
    }
  }

  // Assemble classes in representative order.
  GeneralizedComplex cx;
  std::vector<int> cls_index(nobj, -1);
  for (int o = 0; o < nobj; ++o) {
    if (rep_of[o] != o) continue;
    int c = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), o) -
                             offset.begin()) - 1;
    Mask m = static_cast<Mask>(o - offset[c]);
    cls_index[o] = cx.num_cones();
    GeneralizedComplex::ConeClass cc;
    std::vector<int> labels;
    for (int k : mask_slots(m)) labels.push_back(raw.cones[c].labels[k]);
    cc.cone = OrthantCone(std::move(labels));
    cc.group.assign(morph[o].begin(), morph[o].end());
    cx.classes_.push_back(std::move(cc));
  }

  // Face table per output class: the rep object's submasks, pushed through
  // the canonical (least) morphism of the corresponding face object.
  cx.faces_.resize(cx.num_cones());
  for (int o = 0; o < nobj; ++o) {
    if (rep_of[o] != o) continue;
    const int i = cls_index[o];
    int c = static_cast<int>(std::upper_bound(offset.begin(), offset.end(), o) -
                             offset.begin()) - 1;
    Mask m = static_cast<Mask>(o - offset[c]);
    const auto slots = mask_slots(m);
    const int d = static_cast<int>(slots.size());
    cx.faces_[i].resize(1u << d);
    for (Mask sel = 0; sel < (1u << d); ++sel) {
      Mask rawm = 0;
      for (int k : mask_slots(sel)) rawm |= 1u << slots[k];
      const int fo = obj_id(c, rawm);
      if (morph[fo].empty()) throw std::logic_error("face object missing from closure");
      cx.faces_[i][sel] = {cls_index[rep_of[fo]], *morph[fo].begin()};
    }
  }

  // Materialized face-closure arrows (proper faces only).
  for (int i = 0; i < cx.num_cones(); ++i) {
    const auto& li = cx.classes_[i].cone.labels;
    const Mask full = (1u << li.size()) - 1u;
    for (Mask sel = 0; sel < full; ++sel) {
      const auto& fr = cx.faces_[i][sel];
      const auto& lj = cx.classes_[fr.cls].cone.labels;
      FaceMorphism fm;
      fm.src = fr.cls;
      fm.dst = i;
      const auto sel_slots = mask_slots(sel);
      for (std::size_t t = 0; t < sel_slots.size(); ++t)
        fm.label_map.push_back({lj[fr.map[t]], li[sel_slots[t]]});
      std::sort(fm.label_map.begin(), fm.label_map.end());
      cx.arrows_.push_back(std::move(fm));
    }
  }
  return cx;
}

std::string GeneralizedComplex::to_json() const {
  std::ostringstream os;
  os << "{\"cones\":[";
  for (int i = 0; i < num_cones(); ++i) {
    if (i) os << ",";
    os << "{\"id\":" << i << ",\"labels\":[";
    for (std::size_t k = 0; k < classes_[i].cone.labels.size(); ++k)
      os << (k ? "," : "") << classes_[i].cone.labels[k];
    os << "]}";
  }
  os << "],\"arrows\":[";
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    if (a) os << ",";
    os << "{\"src\":" << arrows_[a].src << ",\"dst\":" << arrows_[a].dst << ",\"map\":[";
    for (std::size_t t = 0; t < arrows_[a].label_map.size(); ++t) {
      if (t) os << ",";
      os << "[" << arrows_[a].label_map[t].first << "," << arrows_[a].label_map[t].second << "]";
    }
    os << "]}";
  }
  os << "],\"groups\":[";
  for (int i = 0; i < num_cones(); ++i) {
    if (i) os << ",";
    os << "{\"cone\":" << i << ",\"perms\":[";
    const auto& labels = classes_[i].cone.labels;
    for (std::size_t p = 0; p < classes_[i].group.size(); ++p) {
      if (p) os << ",";
      os << "[";
      for (std::size_t k = 0; k < labels.size(); ++k)
        os << (k ? "," : "") << labels[classes_[i].group[p][k]];
      os << "]";
    }
    os << "]}";
  }
  os << "]}";
  return os.str();
}

std::string GeneralizedComplex::face_poset_dot() const {
  std::ostringstream os;
  os << "digraph faces {\n";
  for (int i = 0; i < num_cones(); ++i)
    os << "  c" << i << " [label=\"dim:" << classes_[i].cone.dim()
       << " order:" << classes_[i].group.size() << "\"];\n";
  std::set<std::pair<int, int>> covers;
  for (int i = 0; i < num_cones(); ++i) {
    const int d = classes_[i].cone.dim();
    const Mask full = (1u << d) - 1u;
    for (Mask m = 0; m < full; ++m)
      if (__builtin_popcount(m) == d - 1) covers.insert({faces_[i][m].cls, i});
  }
  for (const auto& [a, b] : covers) os << "  c" << a << " -> c" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<const BarycentricComplex::Cell*> BarycentricComplex::maximal_cells() const {
  std::vector<const Cell*> out;
  for (const auto& c : cells_)
    if (c.maximal) out.push_back(&c);
  return out;
}

BarycentricComplex barycentric_subdivision(const GeneralizedComplex& cx) {
  BarycentricComplex bc;
  const auto tops = cx.top_classes();
  std::vector<char> is_top(cx.num_cones(), 0);
  for (int t : tops) is_top[t] = 1;

  for (int j = 0; j < cx.num_cones(); ++j) {
    const auto& cls = cx.cone_class(j);
    const int d = cls.cone.dim();
    if (d == 0) {
      bc.cells_.push_back({j, {}, is_top[j] != 0});
      continue;
    }
    const Mask full = (1u << d) - 1u;
    std::set<std::vector<Mask>> canon_chains;
    // All strictly increasing chains of nonempty masks ending at the full
    // mask, canonicalized by the group action.
    std::vector<Mask> chain = {full};
    auto extend = [&](auto&& self, Mask bottom) -> void {
      std::vector<Mask> rev(chain.rbegin(), chain.rend());
      std::vector<Mask> least = rev;
      for (const auto& h : cls.group) {
        std::vector<Mask> mapped;
        mapped.reserve(rev.size());
        for (Mask m : rev) mapped.push_back(apply_perm_to_mask(h, m));
        least = std::min(least, mapped);
      }
      canon_chains.insert(least);
      for (Mask m = 1; m < bottom; ++m) {
        if ((m & bottom) != m || m == bottom) continue;
        chain.push_back(m);
        self(self, m);
        chain.pop_back();
      }
    };
    extend(extend, full);
    for (const auto& ch : canon_chains) {
      const bool maximal = is_top[j] && static_cast<int>(ch.size()) == d;
      bc.cells_.push_back({j, ch, maximal});
    }
  }
  return bc;
}

const BarycentricComplex::Cell& BarycentricComplex::locate(const GeneralizedComplex& cx,
                                                           const ExtendedPoint& p) const {
  const auto& cls = cx.cone_class(p.cone);
  if (static_cast<int>(p.coords.size()) != cls.cone.dim())
    throw std::invalid_argument("one coordinate per label expected");
  Mask support = 0;
  for (std::size_t k = 0; k < p.coords.size(); ++k) {
    if (p.coords[k].is_inf())
      throw std::invalid_argument("barycentric location expects finite coordinates");
    if (p.coords[k].is_negative()) throw std::invalid_argument("coordinates must be >= 0");
    if (!p.coords[k].is_zero()) support |= 1u << k;
  }
  // Descend into the face class carrying the support.
  const auto& fr = cx.face(p.cone, support);
  const int j = fr.cls;
  const auto& jcls = cx.cone_class(j);
  std::vector<ExtRat> coords(jcls.cone.dim());
  {
    int t = 0;
    for (int k = 0; support >> k; ++k)
      if ((support >> k) & 1u) coords[fr.map[t++]] = p.coords[k];
  }
  // Chain of cumulative level sets, largest coordinate first.
  std::vector<Mask> chain;
  {
    std::vector<std::pair<ExtRat, int>> vals;
    for (std::size_t k = 0; k < coords.size(); ++k) vals.push_back({coords[k], static_cast<int>(k)});
    std::sort(vals.begin(), vals.end(),
              [](const auto& a, const auto& b) { return b.first < a.first; });
    Mask acc = 0;
    for (std::size_t k = 0; k < vals.size(); ++k) {
      acc |= 1u << vals[k].second;
      if (k + 1 == vals.size() || vals[k + 1].first != vals[k].first) chain.push_back(acc);
    }
  }
  std::vector<Mask> least = chain;
  for (const auto& h : jcls.group) {
    std::vector<Mask> mapped;
    mapped.reserve(chain.size());
    for (Mask m : chain) mapped.push_back(apply_perm_to_mask(h, m));
    least = std::min(least, mapped);
  }
  for (const auto& cell : cells_)
    if (cell.cls == j && cell.chain == least) return cell;
  throw std::logic_error("point not covered by the barycentric subdivision");
}

}  // namespace tropmod
