// arithlat <noun> [flags]
//
// Exit status: 0 success, 1 failed check or refused construction,
// 2 invalid input.

#include <arithlat/arithlat.h>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>

namespace {

struct Flag {
  const char* name;
  const char* help;
};

const Flag kFlags[] = {
    {"a", "first algebra parameter (p/q)"},
    {"b", "second algebra parameter (p/q)"},
    {"n", "lattice dimension"},
    {"height", "unit coefficient bound H"},
    {"max-iter", "saturation round limit"},
    {"spec", "block spec d:m,d:m"},
    {"suite", "verify suite: odd, even, multiplicity, godement, cg"},
    {"seed", "seed for randomized choices"},
    {"kind", "variant selector for rep, descend and build"},
    {"r", "left degree for rep --kind cg"},
    {"s", "right degree for rep --kind cg"},
    {"m", "symmetric power degree"},
    {"l", "odd pair index (dimension 2l)"},
    {"unit", "quaternion x0,x1,x2,x3"},
    {"word-length", "close units under products of this many factors"},
    {"max-degree", "largest degree in the cg suite"},
};

int exit_code(al_status st) {
  switch (st) {
    case AL_OK: return 0;
    case AL_INVALID_INPUT: return 2;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattices in R^n x| SL_2(R) from rational quaternion algebras"};
  app.require_subcommand(1, 1);

  std::map<std::string, std::optional<std::string>> values;
  std::optional<std::string> out_path;
  std::optional<std::string> config_path;

  const char* nouns[][2] = {
      {"algebra", "ramification of (a,b)/Q"},
      {"units", "norm-one units of the standard order"},
      {"rep", "representation matrices and Clebsch-Gordan reports"},
      {"descend", "rational structures and the non-rationality certificate"},
      {"build", "lattice construction"},
      {"verify", "verification suites"},
  };
  for (const auto& noun : nouns) {
    CLI::App* sub = app.add_subcommand(noun[0], noun[1]);
    for (const auto& f : kFlags) sub->add_option(std::string("--") + f.name, values[f.name], f.help);
    sub->add_option("--out", out_path, "write the JSON document here instead of stdout");
    sub->add_option("--config", config_path, "key = value file; flags override it");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  const std::string noun = app.get_subcommands().front()->get_name();

  al_config* cfg = al_config_new();
  if (!cfg) return 1;
  al_status st = AL_OK;
  if (config_path) st = al_config_load_file(cfg, config_path->c_str());
  for (const auto& [key, value] : values)
    if (st == AL_OK && value) st = al_config_set(cfg, key.c_str(), value->c_str());
  if (st != AL_OK) {
    std::cerr << "error: " << al_last_error_message() << "\n";
    al_config_free(cfg);
    return exit_code(st);
  }

  char* json = nullptr;
  st = al_run(cfg, noun.c_str(), &json);
  al_config_free(cfg);
  if (st != AL_OK && st != AL_CHECK_FAILED) std::cerr << "error: " << al_last_error_message() << "\n";

  if (json) {
    if (out_path) {
      std::ofstream out(*out_path, std::ios::binary);
      out << json;
      if (!out) {
        std::cerr << "error: cannot write " << *out_path << "\n";
        al_string_free(json);
        return 2;
      }
    } else {
      std::fputs(json, stdout);
    }
    al_string_free(json);
  }
  return exit_code(st);
}
