#include "verify.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "isomorphism.hpp"
#include "json_io.hpp"
#include "moduli.hpp"
#include "taut.hpp"

namespace tropmod {

std::string VerifyReport::text() const {
  std::ostringstream os;
  for (const auto& l : lines) os << l << "\n";
  return os.str();
}

namespace {

using Rng = std::mt19937_64;

ExtRat random_length(Rng& rng, bool allow_inf = true) {
  if (allow_inf && rng() % 5 == 0) return ExtRat::inf();
  const long long num = 1 + static_cast<long long>(rng() % 12);
  const long long den = 1 + static_cast<long long>(rng() % 4);
  return ExtRat(num, den);
}

TropicalCurve random_curve(const ModuliSpace& m, Rng& rng) {
  const auto& s = m.stratum(static_cast<int>(rng() % m.num_strata()));
  std::vector<ExtRat> lengths;
  for (int e = 0; e < s.graph.num_edges(); ++e) lengths.push_back(random_length(rng));
  return TropicalCurve(s.graph, std::move(lengths));
}

struct Checker {
  VerifyReport& report;
  void check(bool ok, const std::string& what, const std::string& counterexample = "") {
    std::string line = std::string(ok ? "[PASS] " : "[FAIL] ") + what;
    if (!ok && !counterexample.empty()) line += "  counterexample: " + counterexample;
    report.lines.push_back(std::move(line));
    report.passed = report.passed && ok;
  }
};

void suite_poset(const ModuliSpace& m, Checker& ck) {
  const int g = m.genus(), n = m.legs();
  const int expected = 3 * g - 3 + n;
  ck.check(m.max_dim() == expected, "max stratum dimension equals 3g-3+n");
  int zero_dim = 0;
  for (int i = 0; i < m.num_strata(); ++i) zero_dim += (m.stratum(i).dim() == 0);
  ck.check(zero_dim == 1, "unique 0-dimensional stratum");
  bool rank_ok = true;
  for (int i = 0; i < m.num_strata(); ++i)
    rank_ok = rank_ok && m.complex().cone_class(i).cone.dim() == m.stratum(i).dim();
  ck.check(rank_ok, "rank of every stratum equals its edge count");
  bool min_ok = true;
  int bottom = -1;
  for (int i = 0; i < m.num_strata(); ++i)
    if (m.stratum(i).dim() == 0) bottom = i;
  for (int j = 0; j < m.num_strata(); ++j) min_ok = min_ok && m.poset_leq(bottom, j);
  ck.check(min_ok, "the point stratum is the unique minimum");
  if (g >= 2 || n >= 3) {
    bool maximal_ok = true;
    for (int i = 0; i < m.num_strata(); ++i) {
      if (m.stratum(i).dim() != expected) continue;
      const auto& gr = m.stratum(i).graph;
      for (int v = 0; v < gr.num_vertices(); ++v)
        maximal_ok = maximal_ok && gr.weight(v) == 0 && gr.valence(v) == 3;
    }
    ck.check(maximal_ok, "maximal strata are trivalent with all weights 0");
  }
  bool order_ok = true;
  for (const auto& [a, b] : m.poset_covers())
    order_ok = order_ok && m.stratum(b).dim() == m.stratum(a).dim() + 1;
  ck.check(order_ok, "covering relations raise dimension by one");
}

void suite_monodromy(const ModuliSpace& m, Checker& ck, Rng& rng) {
  bool groups_ok = true;
  for (int i = 0; i < m.num_strata(); ++i) {
    auto from_complex = m.complex().cone_class(i).group;
    auto from_aut = m.stratum(i).monodromy;
    std::sort(from_complex.begin(), from_complex.end());
    std::sort(from_aut.begin(), from_aut.end());
    groups_ok = groups_ok && from_complex == from_aut;
  }
  ck.check(groups_ok, "colimit self-identifications equal the image of Aut(G) in Sym(E)");

  bool points_ok = true;
  std::string bad;
  for (int i = 0; i < m.num_strata() && points_ok; ++i) {
    const auto& s = m.stratum(i);
    const int ne = s.graph.num_edges();
    if (ne == 0) continue;
    for (int t = 0; t < 40 && points_ok; ++t) {
      std::vector<ExtRat> a(ne), b(ne);
      for (int e = 0; e < ne; ++e) a[e] = random_length(rng);
      if (t % 2 == 0) {
        const auto& h = s.monodromy[rng() % s.monodromy.size()];
        for (int e = 0; e < ne; ++e) b[h[e]] = a[e];
      } else {
        for (int e = 0; e < ne; ++e) b[e] = random_length(rng);
      }
      bool oracle = false;
      for (const auto& h : s.monodromy) {
        bool match = true;
        for (int e = 0; e < ne && match; ++e) match = (b[h[e]] == a[e]);
        oracle = oracle || match;
      }
      const bool got = m.complex().point_equal({i, a}, {i, b});
      if (got != oracle) {
        points_ok = false;
        bad = "stratum " + std::to_string(i);
      }
    }
  }
  ck.check(points_ok, "point_equal matches the Aut-orbit oracle on random length vectors", bad);
}

void suite_sections(const ModuliSpace& m, Checker& ck, Rng& rng) {
  if (m.legs() == 0) {
    ck.check(true, "no legs, no sections to test");
    return;
  }
  bool ok = true;
  std::string bad;
  for (int t = 0; t < 50 && ok; ++t) {
    const TropicalCurve c = random_curve(m, rng);
    const ModuliPoint before = m.locate(c);
    for (int i = 0; i < m.legs() && ok; ++i) {
      auto [image, pv] = forget(section(c, i));
      if (!(m.locate(image) == before)) {
        ok = false;
        bad = curve_to_canonical_json(c);
      }
    }
  }
  ck.check(ok, "forget(section_i(c)) returns c as a moduli point", bad);
}

void suite_boundary(const ModuliSpace& m, Checker& ck, Rng& rng) {
  int types = 0;
  bool ok = true;
  std::string bad;
  for (int i = 0; i < m.num_strata() && ok; ++i) {
    const auto& s = m.stratum(i);
    if (s.graph.num_edges() == 0) continue;
    ++types;
    std::vector<ExtRat> lengths(s.graph.num_edges());
    lengths[0] = ExtRat::inf();  // designated infinite edge
    for (int e = 1; e < s.graph.num_edges(); ++e) lengths[e] = random_length(rng, false);
    const TropicalCurve c(s.graph, std::move(lengths));
    const BoundaryWitness w = cover_boundary(c);
    if (!same_moduli_point(apply_witness(w), c)) {
      ok = false;
      bad = curve_to_canonical_json(c);
    }
  }
  ck.check(ok, "cover_boundary round trip on " + std::to_string(types) + " boundary types", bad);

  bool locus_ok = true;
  for (int t = 0; t < 20 && locus_ok; ++t) {
    const TropicalCurve c = random_curve(m, rng);
    if (m.legs() >= 2) locus_ok = locus_ok && !infinite_part(glue(c)).second;
    if (m.legs() >= 1) locus_ok = locus_ok && !infinite_part(clutch(c, c)).second;
  }
  ck.check(locus_ok, "glue/clutch images lie in the infinite-edge locus");
}

void suite_fibers(const ModuliSpace& m, Checker& ck, Rng& rng) {
  const ModuliSpace up = build_moduli(m.genus(), m.legs() + 1);
  bool ok = true;
  std::string bad;
  for (int i = 0; i < m.num_strata() && ok; ++i) {
    const auto& s = m.stratum(i);
    std::vector<ExtRat> lengths;
    for (int e = 0; e < s.graph.num_edges(); ++e) lengths.push_back(random_length(rng, false));
    const TropicalCurve c(s.graph, std::move(lengths));
    const QuotientGraph q = quotient_by_automorphisms(c);
    std::vector<QuotientPosition> samples;
    for (std::size_t v = 0; v < q.vertices.size(); ++v)
      samples.push_back({QuotientPosition::Kind::Vertex, static_cast<int>(v), {}});
    for (std::size_t e = 0; e < q.edges.size(); ++e)
      samples.push_back({QuotientPosition::Kind::Edge, static_cast<int>(e),
                         q.edges[e].length.is_finite() ? q.edges[e].length.half() : ExtRat(1)});
    for (std::size_t l = 0; l < q.legs.size(); ++l) {
      samples.push_back({QuotientPosition::Kind::Leg, static_cast<int>(l), ExtRat(2)});
      samples.push_back({QuotientPosition::Kind::Leg, static_cast<int>(l), ExtRat::inf()});
    }
    if (!fiber_check(up, m, c, samples)) {
      ok = false;
      bad = curve_to_canonical_json(c);
    }
  }
  ck.check(ok, "fiber of the forgetful map realizes Gamma/Aut(Gamma) at sampled points", bad);
}

}  // namespace

VerifyReport run_verify(int g, int n, const std::string& suite, int bound) {
  if (2 * g - 2 + n <= 0) throw std::invalid_argument("2g-2+n <= 0");
  if (3 * g - 3 + n > bound)
    throw std::invalid_argument("3g-3+n exceeds the verification bound " + std::to_string(bound) +
                                "; raise --bound or TROPMOD_BOUND if you mean it");
  const std::set<std::string> known = {"all", "poset", "monodromy", "sections", "boundary",
                                       "fibers"};
  if (!known.count(suite)) throw std::invalid_argument("unknown suite: " + suite);

  VerifyReport report;
  Checker ck{report};
  Rng rng(0x5eed0000ull + 1000ull * g + n);
  const ModuliSpace m = build_moduli(g, n);
  if (suite == "all" || suite == "poset") suite_poset(m, ck);
  if (suite == "all" || suite == "monodromy") suite_monodromy(m, ck, rng);
  if (suite == "all" || suite == "sections") suite_sections(m, ck, rng);
  if (suite == "all" || suite == "boundary") suite_boundary(m, ck, rng);
  if (suite == "all" || suite == "fibers") suite_fibers(m, ck, rng);
  return report;
}

}  // namespace tropmod
