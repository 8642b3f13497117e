// Exercises the shared library strictly through the C header.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "tropmod/tropmod.h"

namespace {

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out = s;
  tm_string_free(s);
  return out;
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += (c == '\n');
  return n;
}

const char* kLoopCurve = R"({
  "vertices":[{"id":0,"weight":0}],
  "edges":[{"id":0,"halfedges":[{"v":0},{"v":0}]}],
  "legs":[{"index":1,"v":0}],
  "lengths":[{"edge":0,"len":"inf"}]
})";

const char* kPointCurve = R"({
  "vertices":[{"id":7,"weight":1}],
  "edges":[],
  "legs":[{"index":1,"v":7}],
  "lengths":[]
})";

const char* kTripod = R"({
  "vertices":[{"id":0,"weight":0}],
  "edges":[],
  "legs":[{"index":1,"v":0},{"index":2,"v":0},{"index":3,"v":0}],
  "lengths":[]
})";

}  // namespace

TEST_CASE("enumerate formats and errors") {
  char* out = nullptr;
  REQUIRE(tm_enumerate(1, 1, "csv", &out) == TM_OK);
  CHECK(count_lines(take(out)) == 2);

  REQUIRE(tm_enumerate(0, 3, "csv", &out) == TM_OK);
  CHECK(count_lines(take(out)) == 1);

  REQUIRE(tm_enumerate(2, 0, "csv", &out) == TM_OK);
  CHECK(count_lines(take(out)) == 7);

  REQUIRE(tm_enumerate(0, 4, "json", &out) == TM_OK);
  const std::string js = take(out);
  CHECK(js.find("\"strata\"") != std::string::npos);

  CHECK(tm_enumerate(0, 2, "csv", &out) == TM_ERR_RANGE);
  CHECK(std::string(tm_last_error()).find("2g-2+n") != std::string::npos);
  CHECK(tm_enumerate(1, 1, "yaml", &out) == TM_ERR_USAGE);
}

TEST_CASE("space handles") {
  tm_space* s = nullptr;
  REQUIRE(tm_space_build(1, 1, &s) == TM_OK);
  CHECK(tm_space_genus(s) == 1);
  CHECK(tm_space_legs(s) == 1);
  CHECK(tm_space_num_strata(s) == 2);

  char* out = nullptr;
  REQUIRE(tm_space_manifest(s, &out) == TM_OK);
  CHECK(take(out).find("\"monodromy_order\":1") != std::string::npos);
  REQUIRE(tm_space_poset_dot(s, &out) == TM_OK);
  const std::string dot = take(out);
  CHECK(dot.find("dim:1 order:1") != std::string::npos);

  REQUIRE(tm_space_locate(s, kPointCurve, &out) == TM_OK);
  CHECK(take(out).find("\"stratum\":0") != std::string::npos);
  tm_space_free(s);

  CHECK(tm_space_build(0, 1, &s) == TM_ERR_RANGE);
}

TEST_CASE("map verbs") {
  char* out = nullptr;
  // section then forget is the identity, byte for byte on canonical output.
  char* canon = nullptr;
  REQUIRE(tm_curve_canonical(kPointCurve, &canon) == TM_OK);
  const std::string before = take(canon);
  REQUIRE(tm_map_apply("section", kPointCurve, "{\"i\":1}", &out) == TM_OK);
  const std::string sec = take(out);
  CHECK(sec.find("\"len\":\"inf\"") != std::string::npos);
  REQUIRE(tm_map_apply("forget", sec.c_str(), nullptr, &out) == TM_OK);
  const std::string round = take(out);
  const std::string curve_part = round.substr(round.find("\"curve\":") + 8);
  CHECK(curve_part.substr(0, before.size()) == before);

  // glue-xy writes the exact rational sum.
  REQUIRE(tm_map_apply("glue-xy", kTripod, "{\"x\":\"2\",\"y\":\"3\"}", &out) == TM_OK);
  CHECK(take(out).find("\"len\":\"5/1\"") != std::string::npos);

  REQUIRE(tm_map_apply("cover-boundary", kLoopCurve, nullptr, &out) == TM_OK);
  const std::string witness = take(out);
  CHECK(witness.find("\"kind\":\"glue\"") != std::string::npos);
  CHECK(witness.find("\"roundtrip_equal\":true") != std::string::npos);

  REQUIRE(tm_map_apply("quotient", kLoopCurve, nullptr, &out) == TM_OK);
  CHECK(take(out).find("\"folded\":true") != std::string::npos);

  CHECK(tm_map_apply("warp", kLoopCurve, nullptr, &out) == TM_ERR_USAGE);
  CHECK(tm_map_apply("glue-xy", kTripod, "{\"x\":\"0\",\"y\":\"3\"}", &out) == TM_ERR_USAGE);
  CHECK(tm_map_apply("forget", "{broken", nullptr, &out) == TM_ERR_USAGE);
}

TEST_CASE("clutch via the wrapped input document") {
  const std::string pair =
      std::string("{\"first\":") + kPointCurve + ",\"second\":" + kPointCurve + "}";
  char* out = nullptr;
  REQUIRE(tm_map_apply("clutch", pair.c_str(), nullptr, &out) == TM_OK);
  const std::string joined = take(out);
  CHECK(joined.find("\"len\":\"inf\"") != std::string::npos);
  CHECK(joined.find("\"legs\":[]") != std::string::npos);
}

TEST_CASE("verify") {
  char* report = nullptr;
  REQUIRE(tm_verify(1, 1, "all", 0, &report) == TM_OK);
  const std::string text = take(report);
  CHECK(text.find("[PASS]") != std::string::npos);
  CHECK(text.find("[FAIL]") == std::string::npos);

  CHECK(tm_verify(0, 2, "all", 0, &report) == TM_ERR_RANGE);
  CHECK(tm_verify(3, 3, "all", 0, &report) == TM_ERR_RANGE);  // beyond default bound
  CHECK(tm_verify(1, 1, "nope", 0, &report) == TM_ERR_USAGE);
}
