#include "tropmod/tropmod.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <json.hpp>
#include <sstream>
#include <string>

#include "curve.hpp"
#include "enumerate.hpp"
#include "isomorphism.hpp"
#include "json_io.hpp"
#include "moduli.hpp"
#include "taut.hpp"
#include "verify.hpp"

using nlohmann::json;

namespace {

thread_local std::string g_last_error;

char* alloc_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

tm_status classify(const std::exception& e) {
  g_last_error = e.what();
  const std::string& m = g_last_error;
  if (m.find("2g-2+n") != std::string::npos || m.find("verification bound") != std::string::npos ||
      m.find("no stable graphs") != std::string::npos)
    return TM_ERR_RANGE;
  return TM_ERR_USAGE;
}

template <typename Fn>
tm_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const std::invalid_argument& e) {
    return classify(e);
  } catch (const std::out_of_range& e) {
    return classify(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return TM_ERR_INTERNAL;
  }
}

tropmod::ExtRat param_rat(const json& params, const char* key) {
  if (!params.contains(key))
    throw std::invalid_argument(std::string("missing parameter: ") + key);
  const auto& v = params.at(key);
  if (v.is_number_integer()) return tropmod::ExtRat(v.get<long long>());
  if (v.is_string()) return tropmod::ExtRat::parse(v.get<std::string>());
  throw std::invalid_argument(std::string("parameter must be \"p/q\" or \"inf\": ") + key);
}

// Marked point relabeled into the canonical presentation of its curve.
tropmod::MarkedPoint remap_point(const tropmod::MarkedPoint& p, const std::vector<int>& vmap,
                                 const std::vector<int>& emap,
                                 const std::vector<unsigned char>& eflip) {
  tropmod::MarkedPoint out = p;
  switch (p.kind) {
    case tropmod::MarkedPoint::Kind::Vertex:
      out.index = vmap[p.index];
      break;
    case tropmod::MarkedPoint::Kind::Edge:
      out.index = emap[p.index];
      out.end = p.end ^ (eflip[p.index] ? 1 : 0);
      break;
    case tropmod::MarkedPoint::Kind::Leg:
      break;  // leg slots are stable under relabeling
  }
  return out;
}

std::string enumerate_csv(int g, int n) {
  const auto classes = tropmod::enumerate_stable_graphs(g, n);
  std::ostringstream os;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& gr = classes[i].graph;
    const auto aut = tropmod::automorphism_group(gr);
    os << i << "," << gr.num_edges() << "," << gr.num_vertices() << "," << gr.num_legs() << ","
       << gr.genus() << "," << aut.size() << "," << tropmod::edge_action(aut).size() << "\n";
  }
  return os.str();
}

std::string enumerate_json(int g, int n) {
  const auto classes = tropmod::enumerate_stable_graphs(g, n);
  json j;
  j["g"] = g;
  j["n"] = n;
  j["strata"] = json::array();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& gr = classes[i].graph;
    j["strata"].push_back({{"id", i},
                           {"graph", json::parse(tropmod::graph_to_json(gr))},
                           {"dim", gr.num_edges()},
                           {"monodromy_order",
                            tropmod::edge_action(tropmod::automorphism_group(gr)).size()}});
  }
  j["arrows"] = json::array();
  for (std::size_t a = 0; a < classes.size(); ++a)
    for (int e = 0; e < classes[a].graph.num_edges(); ++e) {
      const auto ctr = tropmod::contract(classes[a].graph, {e});
      const std::string canon = tropmod::canonical_form(ctr.target);
      for (std::size_t b = 0; b < classes.size(); ++b)
        if (classes[b].canon == canon) {
          json arrow = {{"src", b}, {"dst", a}};
          if (std::find(j["arrows"].begin(), j["arrows"].end(), arrow) == j["arrows"].end())
            j["arrows"].push_back(arrow);
          break;
        }
    }
  return j.dump();
}

}  // namespace

struct tm_space {
  tropmod::ModuliSpace impl;
};

extern "C" {

const char* tm_last_error(void) { return g_last_error.c_str(); }

void tm_string_free(char* s) { std::free(s); }

tm_status tm_enumerate(int g, int n, const char* format, char** out) {
  return guarded([&]() -> tm_status {
    if (!format || !out) throw std::invalid_argument("format and out are required");
    const std::string f = format;
    if (f == "csv")
      *out = alloc_string(enumerate_csv(g, n));
    else if (f == "json")
      *out = alloc_string(enumerate_json(g, n));
    else if (f == "dot")
      *out = alloc_string(tropmod::strata_poset_dot(g, n));
    else
      throw std::invalid_argument("unknown format: " + f + " (expected json, dot or csv)");
    return TM_OK;
  });
}

tm_status tm_space_build(int g, int n, tm_space** out) {
  return guarded([&]() -> tm_status {
    if (!out) throw std::invalid_argument("out is required");
    auto* s = new tm_space{tropmod::build_moduli(g, n)};
    *out = s;
    return TM_OK;
  });
}

void tm_space_free(tm_space* s) { delete s; }

int tm_space_genus(const tm_space* s) { return s ? s->impl.genus() : -1; }
int tm_space_legs(const tm_space* s) { return s ? s->impl.legs() : -1; }
int tm_space_num_strata(const tm_space* s) { return s ? s->impl.num_strata() : -1; }

tm_status tm_space_manifest(const tm_space* s, char** json_out) {
  return guarded([&]() -> tm_status {
    if (!s || !json_out) throw std::invalid_argument("space and out are required");
    *json_out = alloc_string(s->impl.manifest_json());
    return TM_OK;
  });
}

tm_status tm_space_poset_dot(const tm_space* s, char** dot_out) {
  return guarded([&]() -> tm_status {
    if (!s || !dot_out) throw std::invalid_argument("space and out are required");
    *dot_out = alloc_string(s->impl.poset_dot());
    return TM_OK;
  });
}

tm_status tm_space_locate(const tm_space* s, const char* curve_json, char** point_out) {
  return guarded([&]() -> tm_status {
    if (!s || !curve_json || !point_out) throw std::invalid_argument("space, curve and out required");
    const auto c = tropmod::curve_from_json(curve_json);
    const auto p = s->impl.locate(c);
    json j = {{"stratum", p.stratum},
              {"curve", json::parse(tropmod::curve_to_canonical_json(c))}};
    *point_out = alloc_string(j.dump());
    return TM_OK;
  });
}

tm_status tm_map_apply(const char* verb, const char* input_json, const char* params_json,
                       char** out_json) {
  return guarded([&]() -> tm_status {
    if (!verb || !input_json || !out_json)
      throw std::invalid_argument("verb, input and out are required");
    const std::string v = verb;
    json params = json::object();
    if (params_json && *params_json) {
      try {
        params = json::parse(params_json);
      } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad params JSON: ") + e.what());
      }
    }

    std::string result;
    if (v == "forget") {
      const auto c = tropmod::curve_from_json(input_json);
      auto [image, pv] = tropmod::forget(c);
      std::vector<int> vmap, emap;
      std::vector<unsigned char> eflip;
      const auto canon = tropmod::canonicalize_curve(image, &vmap, &emap, &eflip);
      json j = {{"curve", json::parse(tropmod::curve_to_json(canon))},
                {"point", json::parse(tropmod::marked_point_to_json(
                              remap_point(pv, vmap, emap, eflip)))}};
      result = j.dump();
    } else if (v == "section") {
      const auto c = tropmod::curve_from_json(input_json);
      if (!params.contains("i")) throw std::invalid_argument("section needs parameter i");
      const int i = params.at("i").get<int>();
      if (i < 1 || i > c.num_legs())
        throw std::invalid_argument("section index out of range (1.." +
                                    std::to_string(c.num_legs()) + ")");
      result = tropmod::curve_to_canonical_json(tropmod::section(c, i - 1));
    } else if (v == "clutch" || v == "clutch-xy") {
      json j;
      try {
        j = json::parse(input_json);
      } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("bad input JSON: ") + e.what());
      }
      if (!j.contains("first") || !j.contains("second"))
        throw std::invalid_argument("clutch input needs {\"first\":...,\"second\":...}");
      const auto c1 = tropmod::curve_from_json(j.at("first").dump());
      const auto c2 = tropmod::curve_from_json(j.at("second").dump());
      const auto x = v == "clutch" ? tropmod::ExtRat::inf() : param_rat(params, "x");
      const auto y = v == "clutch" ? tropmod::ExtRat::inf() : param_rat(params, "y");
      result = tropmod::curve_to_canonical_json(tropmod::clutch_xy(c1, c2, x, y));
    } else if (v == "glue" || v == "glue-xy") {
      const auto c = tropmod::curve_from_json(input_json);
      const auto x = v == "glue" ? tropmod::ExtRat::inf() : param_rat(params, "x");
      const auto y = v == "glue" ? tropmod::ExtRat::inf() : param_rat(params, "y");
      result = tropmod::curve_to_canonical_json(tropmod::glue_xy(c, x, y));
    } else if (v == "cover-boundary") {
      const auto c = tropmod::curve_from_json(input_json);
      const auto w = tropmod::cover_boundary(c);
      json j = json::parse(tropmod::witness_to_json(w));
      j["roundtrip_equal"] = tropmod::same_moduli_point(tropmod::apply_witness(w), c);
      result = j.dump();
    } else if (v == "quotient") {
      const auto c = tropmod::curve_from_json(input_json);
      result = tropmod::quotient_by_automorphisms(c).to_json();
    } else if (v == "stabilize") {
      result = tropmod::curve_to_canonical_json(
          tropmod::stabilize(tropmod::curve_from_json(input_json)));
    } else if (v == "naive-trop") {
      result = tropmod::curve_to_canonical_json(
          tropmod::naive_trop(tropmod::valued_graph_from_json(input_json)));
    } else {
      throw std::invalid_argument("unknown map verb: " + v);
    }
    *out_json = alloc_string(result);
    return TM_OK;
  });
}

tm_status tm_curve_canonical(const char* curve_json, char** out_json) {
  return guarded([&]() -> tm_status {
    if (!curve_json || !out_json) throw std::invalid_argument("curve and out are required");
    *out_json =
        alloc_string(tropmod::curve_to_canonical_json(tropmod::curve_from_json(curve_json)));
    return TM_OK;
  });
}

tm_status tm_verify(int g, int n, const char* suite, int bound, char** report_out) {
  return guarded([&]() -> tm_status {
    if (!suite || !report_out) throw std::invalid_argument("suite and out are required");
    int b = bound;
    if (b <= 0) {
      b = 4;
      if (const char* env = std::getenv("TROPMOD_BOUND")) b = std::atoi(env);
      if (b <= 0) b = 4;
    }
    const auto report = tropmod::run_verify(g, n, suite, b);
    *report_out = alloc_string(report.text());
    if (!report.passed) {
      g_last_error = "verification failed";
      return TM_ERR_VERIFY;
    }
    return TM_OK;
  });
}

}  // extern "C"
