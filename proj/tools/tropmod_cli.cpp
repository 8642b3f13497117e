// tropmod CLI: enumeration, tautological maps, verification and exports over
// the tropmod C API.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/schema error.

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "tropmod/tropmod.h"

namespace {

int status_to_exit(tm_status st) {
  switch (st) {
    case TM_OK:
      return 0;
    case TM_ERR_VERIFY:
      return 1;
    default:
      return 2;
  }
}

int emit(tm_status st, char* payload, const std::string& out_path) {
  if (payload) {
    if (out_path.empty()) {
      std::cout << payload;
      if (*payload && payload[std::string(payload).size() - 1] != '\n') std::cout << "\n";
    } else {
      std::ofstream f(out_path);
      f << payload;
    }
    tm_string_free(payload);
  }
  if (st != TM_OK) std::cerr << "error: " << tm_last_error() << "\n";
  return status_to_exit(st);
}

std::string read_stdin() {
  std::ostringstream os;
  os << std::cin.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"moduli of extended tropical curves: strata, cone complexes, tautological maps"};
  app.require_subcommand(1);

  int g = 0, n = 0, leg = 0, bound = 0;
  std::string format = "json", suite = "all", out_path, x_str = "inf", y_str = "inf", verb;

  auto* enumerate = app.add_subcommand("enumerate", "list stable graph classes of type (g, n)");
  enumerate->add_option("--g", g, "genus")->required();
  enumerate->add_option("--n", n, "number of legs")->required();
  enumerate->add_option("--format", format, "json | dot | csv");
  enumerate->add_option("--out", out_path, "write to file instead of stdout");

  auto* map = app.add_subcommand("map", "apply a tautological map to curve JSON on stdin");
  map->add_option("verb", verb,
                  "forget | section | clutch | glue | clutch-xy | glue-xy | "
                  "cover-boundary | quotient | stabilize | naive-trop")
      ->required();
  map->add_option("--i", leg, "leg index for section (1-based)");
  map->add_option("--x", x_str, "first generalized length, \"p/q\" or \"inf\"");
  map->add_option("--y", y_str, "second generalized length, \"p/q\" or \"inf\"");
  map->add_option("--out", out_path, "write to file instead of stdout");

  auto* verify = app.add_subcommand("verify", "run invariant suites over a moduli space");
  verify->add_option("--g", g, "genus")->required();
  verify->add_option("--n", n, "number of legs")->required();
  verify->add_option("--suite", suite, "all | poset | monodromy | sections | boundary | fibers");
  verify->add_option("--bound", bound, "3g-3+n bound (default 4; TROPMOD_BOUND overrides)");
  verify->add_option("--out", out_path, "write report to file instead of stdout");

  auto* poset = app.add_subcommand("export-poset", "DOT of the strata poset of (g, n)");
  poset->add_option("--g", g, "genus")->required();
  poset->add_option("--n", n, "number of legs")->required();
  poset->add_option("--out", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp")
      return app.exit(e);
    app.exit(e);
    return 2;
  }

  char* payload = nullptr;
  if (enumerate->parsed()) {
    const tm_status st = tm_enumerate(g, n, format.c_str(), &payload);
    return emit(st, payload, out_path);
  }
  if (map->parsed()) {
    const std::string input = read_stdin();
    std::string params = "{}";
    if (verb == "section") params = "{\"i\":" + std::to_string(leg) + "}";
    if (verb == "clutch-xy" || verb == "glue-xy")
      params = "{\"x\":\"" + x_str + "\",\"y\":\"" + y_str + "\"}";
    const tm_status st = tm_map_apply(verb.c_str(), input.c_str(), params.c_str(), &payload);
    return emit(st, payload, out_path);
  }
  if (verify->parsed()) {
    const tm_status st = tm_verify(g, n, suite.c_str(), bound, &payload);
    return emit(st, payload, out_path);
  }
  if (poset->parsed()) {
    const tm_status st = tm_enumerate(g, n, "dot", &payload);
    return emit(st, payload, out_path);
  }
  return 2;
}
