// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// cgx: command-line front end over the C interface.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "cgx/cgx.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct Failure {
  int exit_code;
};

struct GeometryDeleter {
  void operator()(cgx_geometry* g) const { cgx_geometry_free(g); }
};
using Geometry = std::unique_ptr<cgx_geometry, GeometryDeleter>;

void check(cgx_status status) {
  if (status == CGX_OK) return;
  std::cerr << "error: " << cgx_status_name(status) << ": " << cgx_last_error()
            << "\n";
  if (cgx_status_is_guard(status)) {
    std::cerr << "hint: rerun with --force or CGX_GUARD_OVERRIDE=1\n";
    throw Failure{kExitGuard};
  }
  throw Failure{kExitUsage};
}

std::string take(char* s) {
  std::string out(s);
  cgx_string_free(s);
  return out;
}

Geometry load(const std::string& path) {
  cgx_geometry* g = nullptr;
  check(cgx_geometry_read_file(path.c_str(), &g));
  return Geometry(g);
}

template <class F>
Json call_json(F&& f) {
  char* out = nullptr;
  check(f(&out));
  return Json::parse(take(out));
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void print_table(const Json& obj, const std::string& key_title,
                 const std::string& value_title) {
  std::size_t width = key_title.size();
  for (const auto& [k, v] : obj.items()) width = std::max(width, k.size());
  std::cout << std::left << std::setw(static_cast<int>(width) + 2) << key_title
            << value_title << "\n";
  for (const auto& [k, v] : obj.items()) {
    std::cout << std::left << std::setw(static_cast<int>(width) + 2) << k
              << v.get<std::string>() << "\n";
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{kExitUsage};
  }
  out << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Closure operators, convex geometries and their invariants."};
  app.require_subcommand(1);
  bool force = false;
  bool json = false;
  app.add_flag("--force", force, "Override size guards");
  app.add_flag("--json", json, "Machine-readable output");

  std::string file;
  std::string character_name;
  const auto add_file = [&](CLI::App* sub) {
    sub->add_option("FILE", file, "GeometryFile JSON")->required()->check(CLI::ExistingFile);
  };
  const auto add_character = [&](CLI::App* sub) {
    sub->add_option("--character,-c", character_name, "eta, zeta, phi or phi-prime")
        ->required()
        ->check(CLI::IsMember({"eta", "zeta", "phi", "phi-prime"}));
  };

  auto* check_cmd = app.add_subcommand("check", "Validate and classify a geometry");
  add_file(check_cmd);

  int n_max = 5;
  auto* invariant_cmd =
      app.add_subcommand("invariant", "Polynomial invariant and value table");
  add_character(invariant_cmd);
  invariant_cmd->add_option("--n-max", n_max, "Largest n in the table")
      ->check(CLI::NonNegativeNumber);
  add_file(invariant_cmd);

  auto* flag_cmd = app.add_subcommand("flag", "Flag f- and h-vectors");
  add_character(flag_cmd);
  add_file(flag_cmd);

  auto* ab_cmd = app.add_subcommand("abindex", "ab-index");
  add_character(ab_cmd);
  add_file(ab_cmd);

  auto* cd_cmd = app.add_subcommand("cdindex", "cd-index");
  add_character(cd_cmd);
  add_file(cd_cmd);

  auto* ss_cmd = app.add_subcommand("supersolvable", "Supersolvability report");
  add_file(ss_cmd);

  auto* chief_cmd = app.add_subcommand("chief", "Chief chains and the geometric condition");
  add_file(chief_cmd);

  int corpus_n = -1;
  std::string verify_file;
  auto* verify_cmd = app.add_subcommand("verify", "Run the invariant and property suite");
  auto* corpus_opt = verify_cmd->add_option(
      "--corpus", corpus_n, "Every convex geometry on at most N elements");
  verify_cmd->add_option("FILE", verify_file, "GeometryFile JSON")
      ->check(CLI::ExistingFile)
      ->excludes(corpus_opt);

  std::string kind;
  std::string edges;
  std::string points;
  std::vector<std::string> gen_labels;
  int gen_n = -1;
  std::string output;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a GeometryFile");
  gen_cmd->add_option("KIND", kind,
                      "from_poset, points2d, chain, antichain, colinear3, g1, "
                      "g2, chief, counterexample")
      ->required();
  gen_cmd->add_option("--edges", edges, "Cover relations, e.g. \"x<y,x<z\"");
  gen_cmd->add_option("--points", points, "Points, e.g. \"0/1,0/1;1/1,0/1\"");
  gen_cmd->add_option("--labels", gen_labels, "Element labels")->delimiter(',');
  gen_cmd->add_option("--n", gen_n, "Number of elements")->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--output,-o", output, "Output path (default stdout)");

  int enum_n = 0;
  std::string out_dir;
  auto* corpus_cmd =
      app.add_subcommand("corpus", "Enumerate labeled convex geometries");
  corpus_cmd->add_option("N", enum_n, "Ground set size")
      ->required()
      ->check(CLI::NonNegativeNumber);
  corpus_cmd->add_option("--out", out_dir, "Write one GeometryFile per geometry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (const char* env = std::getenv("CGX_GUARD_OVERRIDE"); env && std::string(env) == "1") {
    force = true;
  }
  if (force) std::cerr << "warning: size guards disabled\n";
  const int f = force ? 1 : 0;

  try {
    if (*check_cmd) {
      const Geometry g = load(file);
      const Json doc = call_json([&](char** o) { return cgx_check(g.get(), o); });
      if (json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        for (const auto& w : doc["warnings"]) std::cerr << "warning: " << w.get<std::string>() << "\n";
        std::string ground;
        for (const auto& l : doc["ground"]) ground += (ground.empty() ? "" : " ") + l.get<std::string>();
        std::cout << "ground: " << ground << "\n"
                  << "closed sets: " << doc["closed_sets"].get<int>() << "\n"
                  << "classification: " << doc["classification"].get<std::string>() << "\n"
                  << "anti-exchange: " << yes_no(doc["anti_exchange"]) << "\n"
                  << "one-point extensions: " << yes_no(doc["one_point_extensions"]) << "\n";
      }
    } else if (*invariant_cmd) {
      const Geometry g = load(file);
      const Json doc = call_json([&](char** o) {
        return cgx_invariant(g.get(), character_name.c_str(), n_max, o);
      });
      if (json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "chi^" << character_name << "(n) = "
                  << doc["polynomial"].get<std::string>() << "\n";
        Json table = Json::object();
        for (const auto& row : doc["values"]) {
          table[std::to_string(row["n"].get<int>())] = row["value"];
        }
        print_table(table, "n", "value");
      }
    } else if (*flag_cmd) {
      const Geometry g = load(file);
      const Json doc = call_json([&](char** o) {
        return cgx_flag(g.get(), character_name.c_str(), o);
      });
      if (json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "composition  f  h\n";
        for (const auto& [alpha, v] : doc["f"].items()) {
          std::cout << alpha << "  " << v.get<std::string>() << "  "
                    << doc["h"][alpha].get<std::string>() << "\n";
        }
      }
    } else if (*ab_cmd || *cd_cmd) {
      const Geometry g = load(file);
      const Json doc = call_json([&](char** o) {
        return *ab_cmd ? cgx_abindex(g.get(), character_name.c_str(), o)
                       : cgx_cdindex(g.get(), character_name.c_str(), o);
      });
      if (json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << doc["polynomial"].get<std::string>() << "\n";
      }
    } else if (*ss_cmd) {
      const Geometry g = load(file);
      const Json doc =
          call_json([&](char** o) { return cgx_supersolvable(g.get(), f, o); });
      if (json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "supersolvable: " << (doc["supersolvable"].get<bool>() ? "true" : "false")
                  << "\n"
                  << "method agreement: " << yes_no(doc["method_agreement"]) << "\n"
                  << "maximal convex subposets:\n";
        for (const auto& p : doc["maximal_convex_subposets"]) {
          std::cout << "  " << p.get<std::string>() << "\n";
        }
        std::cout << "p0: "
                  << (doc["p0"].is_null() ? std::string("none") : doc["p0"].get<std::string>())
                  << "\nchief chains:\n";
        for (const auto& c : doc["chief_chains"]) std::cout << "  " << c.get<std::string>() << "\n";
      }
    } else if (*chief_cmd) {
      const Geometry g = load(file);
      const Json doc = call_json([&](char** o) { return cgx_chief(g.get(), f, o); });
      if (json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "chain  chief  geometric condition\n";
        for (const auto& c : doc["maximal_chains"]) {
          std::cout << c["chain"].get<std::string>() << "  " << yes_no(c["chief"])
                    << "  " << yes_no(c["geometric_condition"]) << "\n";
        }
      }
    } else if (*verify_cmd) {
      char* out = nullptr;
      int passed = 0;
      if (!verify_file.empty()) {
        const Geometry g = load(verify_file);
        check(cgx_verify_geometry(g.get(), f, json ? 0 : 1, &out, &passed));
      } else {
        check(cgx_verify_corpus(corpus_n < 0 ? 4 : corpus_n, f, json ? 0 : 1, &out,
                                &passed));
      }
      std::cout << take(out);
      return passed ? kExitOk : kExitVerifyFailed;
    } else if (*gen_cmd) {
      Json params = Json::object();
      if (!edges.empty()) params["edges"] = edges;
      if (!points.empty()) params["points"] = points;
      if (!gen_labels.empty()) params["labels"] = gen_labels;
      if (gen_n >= 0) params["n"] = gen_n;
      cgx_geometry* raw = nullptr;
      check(cgx_geometry_generate(kind.c_str(), params.dump().c_str(), &raw));
      const Geometry g(raw);
      char* text = nullptr;
      check(cgx_geometry_serialize(g.get(), &text));
      write_output(output, take(text));
    } else if (*corpus_cmd) {
      const Json doc = call_json([&](char** o) { return cgx_corpus(enum_n, f, o); });
      if (!out_dir.empty()) {
        std::filesystem::create_directories(out_dir);
        const auto& list = doc["geometries"];
        const std::size_t digits = std::to_string(list.size()).size();
        for (std::size_t i = 0; i < list.size(); ++i) {
          std::string idx = std::to_string(i + 1);
          idx.insert(0, digits - idx.size(), '0');
          cgx_geometry* raw = nullptr;
          const std::string text = list[i].dump();
          check(cgx_geometry_parse(text.data(), text.size(), &raw));
          const Geometry g(raw);
          char* serialized = nullptr;
          check(cgx_geometry_serialize(g.get(), &serialized));
          write_output(out_dir + "/cg" + std::to_string(enum_n) + "_" + idx + ".json",
                       take(serialized));
        }
      }
      if (json) {
        std::cout << doc.dump(2) << "\n";
      } else {
        std::cout << "n=" << enum_n << ": " << doc["count"].get<std::size_t>()
                  << " convex geometries\n";
      }
    }
  } catch (const Failure& failure) {
    return failure.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
