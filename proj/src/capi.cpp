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

#include "cgx/cgx.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "cgx/characters.hpp"
#include "cgx/error.hpp"
#include "cgx/invariants.hpp"
#include "cgx/io.hpp"
#include "cgx/supersolvable.hpp"
#include "cgx/verify.hpp"

struct cgx_geometry {
  cgx::ClosureOperator op;
  std::string meta_json;
  std::vector<std::string> warnings;
};

namespace {

using cgx::ErrorCode;
using Json = nlohmann::ordered_json;

thread_local std::string last_error;

cgx_status to_status(ErrorCode code) {
  return static_cast<cgx_status>(static_cast<int>(code) + 1);
}

template <class F>
cgx_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return CGX_OK;
  } catch (const cgx::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return CGX_E_OUT_OF_MEMORY;
  } catch (const std::exception& e) {
    last_error = e.what();
    return CGX_E_UNKNOWN;
  }
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void require(const void* p, const char* what) {
  if (!p) cgx::fail(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

cgx::Character character(const char* name) {
  require(name, "character");
  auto psi = cgx::Character::parse(name);
  if (!psi) {
    cgx::fail(ErrorCode::kInvalidArgument,
              std::string("unknown character \"") + name +
                  "\"; expected eta, zeta, phi or phi-prime");
  }
  return *psi;
}

Json labels(const cgx::GroundSet& ground, cgx::Subset s) {
  Json out = Json::array();
  for (const auto& l : ground.labels_of(s)) out.push_back(l);
  return out;
}

std::string chain_text(const cgx::GroundSet& ground, const cgx::Chain& c) {
  std::string out;
  for (cgx::Subset s : c) {
    if (!out.empty()) out += "-";
    out += ground.format(s);
  }
  return out;
}

std::string finish(const Json& doc) { return doc.dump(2) + "\n"; }

cgx_geometry* adopt(cgx::ClosureOperator op) {
  return new cgx_geometry{std::move(op), "", {}};
}

}  // namespace

extern "C" {

const char* cgx_status_name(cgx_status status) {
  switch (status) {
    case CGX_OK: return "ok";
    case CGX_E_OUT_OF_MEMORY: return "OutOfMemory";
    case CGX_E_UNKNOWN: return "Unknown";
    default: break;
  }
  const int i = static_cast<int>(status) - 1;
  if (i < 0 || i > static_cast<int>(ErrorCode::kDuplicatePoints)) return "Unknown";
  static thread_local std::string name;
  name = cgx::error_code_name(static_cast<ErrorCode>(i));
  return name.c_str();
}

int cgx_status_is_guard(cgx_status status) {
  const int i = static_cast<int>(status) - 1;
  if (i < 0 || i > static_cast<int>(ErrorCode::kDuplicatePoints)) return 0;
  return cgx::is_guard_error(static_cast<ErrorCode>(i)) ? 1 : 0;
}

const char* cgx_last_error(void) { return last_error.c_str(); }

void cgx_string_free(char* s) { std::free(s); }

cgx_status cgx_geometry_parse(const char* text, size_t length,
                              cgx_geometry** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    auto file = cgx::parse_geometry(std::string_view(text, length));
    *out = new cgx_geometry{std::move(file.op), std::move(file.meta_json),
                            std::move(file.warnings)};
  });
}

cgx_status cgx_geometry_read_file(const char* path, cgx_geometry** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    auto file = cgx::read_geometry_file(path);
    *out = new cgx_geometry{std::move(file.op), std::move(file.meta_json),
                            std::move(file.warnings)};
  });
}

cgx_status cgx_geometry_generate(const char* kind, const char* params_json,
                                 cgx_geometry** out) {
  return guarded([&] {
    require(kind, "kind");
    require(out, "out");
    Json params = Json::object();
    if (params_json && *params_json) {
      try {
        params = Json::parse(params_json);
      } catch (const Json::parse_error& e) {
        cgx::fail(ErrorCode::kParseError, e.what());
      }
    }
    std::vector<std::string> names;
    if (params.contains("labels")) {
      names = params["labels"].get<std::vector<std::string>>();
    }
    const auto count = [&] {
      if (!params.contains("n")) {
        if (!names.empty()) return static_cast<int>(names.size());
        cgx::fail(ErrorCode::kInvalidArgument, "\"n\" is required");
      }
      return params["n"].get<int>();
    };
    const std::string k = kind;
    if (k == "from_poset") {
      const std::string edges =
          params.contains("edges") ? params["edges"].get<std::string>() : "";
      *out = adopt(cgx::from_poset(cgx::parse_poset_edges(edges, names)));
    } else if (k == "points2d") {
      if (!params.contains("points")) {
        cgx::fail(ErrorCode::kInvalidArgument, "\"points\" is required");
      }
      *out = adopt(cgx::points2d_geometry(
          cgx::parse_points(params["points"].get<std::string>()), names));
    } else if (k == "chain") {
      *out = adopt(cgx::chain_geometry(count(), names));
    } else if (k == "antichain") {
      *out = adopt(cgx::antichain_geometry(count(), names));
    } else if (k == "colinear3") {
      *out = adopt(cgx::colinear3());
    } else if (k == "g1") {
      *out = adopt(cgx::example_g1());
    } else if (k == "g2") {
      *out = adopt(cgx::example_g2());
    } else if (k == "chief") {
      *out = adopt(cgx::example_chief_closure());
    } else if (k == "counterexample") {
      *out = adopt(cgx::example_geometric_counterexample());
    } else {
      cgx::fail(ErrorCode::kInvalidArgument, "unknown kind \"" + k + "\"");
    }
  });
}

void cgx_geometry_free(cgx_geometry* g) { delete g; }

int cgx_geometry_ground_size(const cgx_geometry* g) {
  return g ? g->op.ground_size() : -1;
}

cgx_status cgx_geometry_serialize(const cgx_geometry* g, char** out) {
  return guarded([&] {
    require(g, "geometry");
    require(out, "out");
    *out = copy_out(cgx::serialize_geometry(g->op, g->meta_json));
  });
}

cgx_status cgx_check(const cgx_geometry* g, char** out_json) {
  return guarded([&] {
    require(g, "geometry");
    require(out_json, "out");
    const auto& cl = g->op;
    const bool convex = cgx::is_convex_geometry(cl);
    const bool discrete = cgx::is_discrete(cl);
    Json doc;
    doc["ground"] = labels(cl.ground(), cl.full());
    doc["closed_sets"] = cl.closed_sets().size();
    doc["classification"] = discrete ? "discrete"
                            : convex ? "convex geometry"
                                     : "closure operator";
    doc["closure_operator"] = true;
    doc["convex_geometry"] = convex;
    doc["discrete"] = discrete;
    doc["anti_exchange"] = cgx::satisfies_anti_exchange(cl);
    doc["one_point_extensions"] = cgx::has_one_point_extensions(cl);
    doc["extreme_points"] = labels(cl.ground(), cgx::extreme_points(cl, cl.full()));
    doc["warnings"] = g->warnings;
    *out_json = copy_out(finish(doc));
  });
}

cgx_status cgx_invariant(const cgx_geometry* g, const char* name, int n_max,
                         char** out_json) {
  return guarded([&] {
    require(g, "geometry");
    require(out_json, "out");
    if (n_max < 0) cgx::fail(ErrorCode::kInvalidArgument, "negative n_max");
    const cgx::Character psi = character(name);
    const auto chi = cgx::poly_invariant(psi, g->op);
    Json doc;
    doc["character"] = psi.name();
    doc["polynomial"] = chi.to_string();
    doc["degree"] = chi.degree();
    Json coefficients = Json::array();
    for (const auto& c : chi.coefficients()) coefficients.push_back(cgx::to_string(c));
    doc["coefficients"] = coefficients;
    Json values = Json::array();
    for (int n = 0; n <= n_max; ++n) {
      values.push_back({{"n", n}, {"value", cgx::to_string(chi(n))}});
    }
    doc["values"] = values;
    *out_json = copy_out(finish(doc));
  });
}

cgx_status cgx_flag(const cgx_geometry* g, const char* name, char** out_json) {
  return guarded([&] {
    require(g, "geometry");
    require(out_json, "out");
    const cgx::Character psi = character(name);
    const auto f = cgx::flag_f(psi, g->op);
    const auto h = cgx::flag_h(f);
    Json doc;
    doc["character"] = psi.name();
    doc["n"] = f.n;
    Json fj = Json::object(), hj = Json::object(), sj = Json::object();
    for (const auto& [alpha, v] : f.by_type) fj[alpha.to_string()] = cgx::to_string(v);
    for (const auto& [alpha, v] : h.by_type) hj[alpha.to_string()] = cgx::to_string(v);
    for (const auto& [comp, v] : f.by_set_composition) {
      sj[g->op.ground().format(comp)] = cgx::to_string(v);
    }
    doc["f"] = fj;
    doc["h"] = hj;
    doc["f_by_set_composition"] = sj;
    *out_json = copy_out(finish(doc));
  });
}

cgx_status cgx_abindex(const cgx_geometry* g, const char* name,
                       char** out_json) {
  return guarded([&] {
    require(g, "geometry");
    require(out_json, "out");
    const cgx::Character psi = character(name);
    const auto ab = cgx::ab_index(cgx::flag_h(cgx::flag_f(psi, g->op)));
    Json doc;
    doc["character"] = psi.name();
    doc["polynomial"] = ab.to_string();
    Json coefficients = Json::object();
    for (const auto& [w, v] : ab.coefficients) coefficients[w] = cgx::to_string(v);
    doc["coefficients"] = coefficients;
    *out_json = copy_out(finish(doc));
  });
}

cgx_status cgx_cdindex(const cgx_geometry* g, const char* name,
                       char** out_json) {
  return guarded([&] {
    require(g, "geometry");
    require(out_json, "out");
    const cgx::Character psi = character(name);
    const auto ab = cgx::ab_index(cgx::flag_h(cgx::flag_f(psi, g->op)));
    const auto cd = cgx::cd_index(ab);
    Json doc;
    doc["character"] = psi.name();
    doc["polynomial"] = cd.to_string();
    Json coefficients = Json::object();
    for (const auto& [w, v] : cd.coefficients) coefficients[w] = cgx::to_string(v);
    doc["coefficients"] = coefficients;
    *out_json = copy_out(finish(doc));
  });
}

cgx_status cgx_supersolvable(const cgx_geometry* g, int force,
                             char** out_json) {
  return guarded([&] {
    require(g, "geometry");
    require(out_json, "out");
    const auto cg = cgx::ConvexGeometry::try_from(g->op);
    if (!cg) cgx::fail(ErrorCode::kInvalidArgument, "not a convex geometry");
    const auto r = cgx::supersolvability(*cg, force != 0);
    const auto& ground = g->op.ground();
    Json doc;
    doc["supersolvable"] = r.supersolvable;
    doc["method_agreement"] = r.method_agreement;
    Json posets = Json::array();
    for (const auto& p : r.maximal_posets) posets.push_back(p.to_string());
    doc["maximal_convex_subposets"] = posets;
    doc["p0"] = r.p0 ? Json(r.p0->to_string()) : Json(nullptr);
    Json chains = Json::array();
    for (const auto& c : r.chief_chains) chains.push_back(chain_text(ground, c));
    doc["chief_chains"] = chains;
    *out_json = copy_out(finish(doc));
  });
}

cgx_status cgx_chief(const cgx_geometry* g, int force, char** out_json) {
  return guarded([&] {
    require(g, "geometry");
    require(out_json, "out");
    const cgx::ClosedSetLattice l(g->op);
    const auto chief = cgx::chief_chains(l, force != 0);
    const auto& ground = g->op.ground();
    Json doc;
    Json chains = Json::array();
    for (const auto& c : chief) chains.push_back(chain_text(ground, c));
    doc["chief_chains"] = chains;
    Json verdicts = Json::array();
    for (const auto& c : l.maximal_chains()) {
      const bool is_chief =
          std::find(chief.begin(), chief.end(), c) != chief.end();
      verdicts.push_back({{"chain", chain_text(ground, c)},
                          {"chief", is_chief},
                          {"geometric_condition",
                           cgx::geometric_chief_condition(g->op, c)}});
    }
    doc["maximal_chains"] = verdicts;
    *out_json = copy_out(finish(doc));
  });
}

cgx_status cgx_verify_geometry(const cgx_geometry* g, int force, int text,
                               char** out, int* passed) {
  return guarded([&] {
    require(g, "geometry");
    require(out, "out");
    cgx::VerifyOptions options;
    options.force = force != 0;
    const std::vector<cgx::ClosureOperator> input{g->op};
    const auto report = cgx::verify_geometries(input, g->op.to_string(), options);
    *out = copy_out(text ? report.to_text() : report.to_json());
    if (passed) *passed = report.passed() ? 1 : 0;
  });
}

cgx_status cgx_verify_corpus(int max_n, int force, int text, char** out,
                             int* passed) {
  return guarded([&] {
    require(out, "out");
    cgx::VerifyOptions options;
    options.force = force != 0;
    const auto report = cgx::verify_corpus(max_n, options);
    *out = copy_out(text ? report.to_text() : report.to_json());
    if (passed) *passed = report.passed() ? 1 : 0;
  });
}

cgx_status cgx_corpus(int n, int force, char** out_json) {
  return guarded([&] {
    require(out_json, "out");
    const auto corpus = cgx::enumerate_convex_geometries(n, force != 0);
    Json doc;
    doc["n"] = n;
    doc["count"] = corpus.size();
    Json list = Json::array();
    for (const auto& g : corpus) {
      Json closed = Json::array();
      for (cgx::Subset s : g.op().closed_sets()) {
        closed.push_back(labels(g.op().ground(), s));
      }
      list.push_back({{"ground", labels(g.op().ground(), g.op().full())},
                      {"closed", closed}});
    }
    doc["geometries"] = list;
    *out_json = copy_out(finish(doc));
  });
}

}  // extern "C"
