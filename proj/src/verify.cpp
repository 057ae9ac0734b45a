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

#include "cgx/verify.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>
#include <type_traits>

#include <json.hpp>

#include "cgx/characters.hpp"
#include "cgx/error.hpp"
#include "cgx/invariants.hpp"
#include "cgx/io.hpp"
#include "cgx/supersolvable.hpp"

namespace cgx {

std::string_view check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
  }
  return "?";
}

bool VerificationReport::passed() const {
  for (const auto& c : checks) {
    if (c.status == CheckStatus::kFail) return false;
  }
  return true;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json doc;
  doc["subject"] = subject;
  doc["geometries"] = geometries;
  doc["passed"] = passed();
  doc["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    doc["checks"].push_back({{"name", c.name},
                             {"status", check_status_name(c.status)},
                             {"lhs", c.lhs},
                             {"rhs", c.rhs},
                             {"detail", c.detail},
                             {"passed", c.passed},
                             {"failed", c.failed},
                             {"skipped", c.skipped},
                             {"elapsed_ms", c.elapsed_ms}});
  }
  return doc.dump(2) + "\n";
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "verify " << subject << " (" << geometries << " geometries)\n";
  std::size_t fails = 0;
  for (const auto& c : checks) {
    std::string status(check_status_name(c.status));
    for (auto& ch : status) ch = static_cast<char>(std::toupper(ch));
    out << status << std::string(8 - status.size(), ' ') << c.name << "  ["
        << c.passed << " pass, " << c.failed << " fail, " << c.skipped
        << " skipped, " << static_cast<long long>(c.elapsed_ms) << " ms]";
    if (c.status == CheckStatus::kFail) {
      ++fails;
      out << "\n        lhs = " << c.lhs << "\n        rhs = " << c.rhs;
    }
    if (!c.detail.empty()) out << "\n        " << c.detail;
    out << "\n";
  }
  out << (fails ? "FAILED: " + std::to_string(fails) + " checks" : "all checks passed")
      << "\n";
  return out.str();
}

namespace {

struct Outcome {
  CheckStatus status = CheckStatus::kPass;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

Outcome skip(std::string why) {
  return {CheckStatus::kSkipped, "", "", std::move(why)};
}

std::string text(const std::string& s) { return s; }
std::string text(bool b) { return b ? "true" : "false"; }
std::string text(const Integer& z) { return to_string(z); }
template <class T>
  requires std::is_integral_v<T>
std::string text(T v) {
  return std::to_string(v);
}

template <class L, class R>
Outcome compare(const L& lhs, const R& rhs, std::string detail = {}) {
  Outcome o;
  o.lhs = text(lhs);
  o.rhs = text(rhs);
  o.status = lhs == rhs ? CheckStatus::kPass : CheckStatus::kFail;
  if (o.status == CheckStatus::kFail) o.detail = std::move(detail);
  return o;
}

class Collector {
 public:
  void run(const std::string& name, const std::string& where,
           const std::function<Outcome()>& check) {
    CheckResult& r = results_[name];
    r.name = name;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const Error& e) {
      o = is_guard_error(e.code())
              ? skip(e.what())
              : Outcome{CheckStatus::kFail, "", "", e.what()};
    }
    r.elapsed_ms += std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    switch (o.status) {
      case CheckStatus::kPass:
        ++r.passed;
        if (r.failed == 0) {
          r.lhs = o.lhs;
          r.rhs = o.rhs;
        }
        break;
      case CheckStatus::kFail:
        if (r.failed++ == 0) {
          r.lhs = o.lhs;
          r.rhs = o.rhs;
          r.detail = where + (o.detail.empty() ? "" : ": " + o.detail);
        }
        break;
      case CheckStatus::kSkipped:
        if (r.skipped++ == 0 && r.failed == 0) r.detail = o.detail;
        break;
    }
  }

  std::vector<CheckResult> finish() {
    std::vector<CheckResult> out;
    for (auto& [name, r] : results_) {
      if (r.failed > 0) {
        r.status = CheckStatus::kFail;
      } else if (r.passed > 0) {
        r.status = CheckStatus::kPass;
        if (r.skipped == 0) r.detail.clear();
      } else {
        r.status = CheckStatus::kSkipped;
      }
      out.push_back(std::move(r));
    }
    return out;
  }

 private:
  std::map<std::string, CheckResult> results_;
};

std::string join_values(const std::vector<Integer>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + "]";
}

std::string join_values(const std::vector<Rational>& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + "]";
}

Integer sign(int n) { return n % 2 ? Integer(-1) : Integer(1); }

struct Characters {
  Character psi;
  std::string key;
};

const std::vector<Characters>& all_characters() {
  static const std::vector<Characters> list = {
      {Character::eta(), "eta"},
      {Character::zeta(), "zeta"},
      {Character::phi(), "phi"},
      {Character::phi_prime(), "phi-prime"}};
  return list;
}

// A partner geometry on fresh labels for the direct-sum check.
std::optional<ClosureOperator> direct_sum_partner(const ClosureOperator& cl) {
  if (cl.ground_size() + 2 > kMaxGround) return std::nullopt;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const std::string a = "#" + std::to_string(2 * attempt);
    const std::string b = "#" + std::to_string(2 * attempt + 1);
    if (cl.ground().index_of(a) || cl.ground().index_of(b)) continue;
    return chain_geometry(2, {a, b});
  }
  return std::nullopt;
}

void verify_one(Collector& c, const ClosureOperator& cl,
                const VerifyOptions& opt) {
  const std::string where = cl.to_string();
  const int n = cl.ground_size();
  const bool cg = is_convex_geometry(cl);
  const auto not_cg = [] { return skip("not a convex geometry"); };

  c.run("closure.axioms", where, [&] {
    if (n > 12 && !opt.force) {
      fail(ErrorCode::kGroundTooLarge, "axiom sweep above 12 elements");
    }
    for (Subset::Bits b = 0; b < (Subset::Bits{1} << n); ++b) {
      const Subset s(b);
      const Subset k = cl.close(s);
      if (!s.subset_of(k) || cl.close(k) != k) {
        return compare(cl.ground().format(k), cl.ground().format(s),
                       "closure of " + cl.ground().format(s));
      }
      for (int x = 0; x < n; ++x) {
        if (!k.subset_of(cl.close(s.with(x)))) {
          return compare(std::string("monotone"), std::string("violated"));
        }
      }
    }
    return compare(std::string("extensive, monotone, idempotent"),
                   std::string("extensive, monotone, idempotent"));
  });

  c.run("closure.convex_geometry", where, [&] {
    return compare(satisfies_anti_exchange(cl), has_one_point_extensions(cl),
                   "anti-exchange vs one-point extensions");
  });

  // Polynomial invariants and transfer-matrix samples.
  std::map<std::string, RationalPolynomial> chi;
  for (const auto& [psi, key] : all_characters()) {
    c.run("polynomial.interpolation." + key, where, [&, &psi = psi, &key = key] {
      chi[key] = poly_invariant(psi, cl);
      const auto direct = transfer_matrix_values(psi, cl, n + 3);
      std::vector<Rational> from_poly;
      for (int m = 0; m < n + 3; ++m) from_poly.push_back(chi[key](m));
      std::vector<Rational> exact(direct.begin(), direct.end());
      return compare(join_values(from_poly), join_values(exact));
    });
  }
  const auto have = [&](std::initializer_list<const char*> keys) {
    for (const char* k : keys) {
      if (!chi.count(k)) return false;
    }
    return true;
  };

  c.run("reciprocity.eta_zeta", where, [&] {
    if (!cg) return not_cg();
    if (!have({"eta", "zeta"})) return skip("polynomial unavailable");
    std::vector<Rational> l, r;
    for (int m = 1; m <= opt.reciprocity_max_m; ++m) {
      l.push_back(Rational(sign(n)) * chi["eta"](-m));
      r.push_back(chi["zeta"](m));
    }
    return compare(join_values(l), join_values(r));
  });
  for (const char* key : {"phi", "phi-prime"}) {
    const std::string name =
        std::string("reciprocity.") + (key == std::string("phi") ? "phi" : "phi_prime");
    c.run(name, where, [&] {
      if (!cg) return not_cg();
      if (!have({key})) return skip("polynomial unavailable");
      std::vector<Rational> l, r;
      for (int m = 1; m <= opt.reciprocity_max_m; ++m) {
        l.push_back(chi[key](-m));
        r.push_back(Rational(sign(n)) * chi[key](m));
      }
      return compare(join_values(l), join_values(r));
    });
  }

  // Brute-force function counts against the transfer matrix.
  const std::pair<FunctionClass, const char*> oracle[] = {
      {FunctionClass::kExtremal, "eta"},
      {FunctionClass::kStrictlyExtremal, "zeta"},
      {FunctionClass::kEnrichedConvex, "phi"},
      {FunctionClass::kEnrichedExtremal, "phi-prime"}};
  for (const auto& [which, key] : oracle) {
    c.run("oracle." + std::string(function_class_name(which)), where, [&] {
      if (!cg) return not_cg();
      const Character psi = *Character::parse(key);
      const auto direct = transfer_matrix_values(psi, cl, opt.oracle_max_m + 1);
      std::vector<Integer> counted, expected;
      for (int m = 1; m <= opt.oracle_max_m; ++m) {
        counted.push_back(Integer(count_functions(cl, m, which, opt.force)));
        expected.push_back(direct[m]);
      }
      return compare(join_values(counted), join_values(expected));
    });
  }
  const std::pair<FunctionClass, FunctionClass> same[] = {
      {FunctionClass::kConvex, FunctionClass::kExtremal},
      {FunctionClass::kStrictlyConvex, FunctionClass::kStrictlyExtremal}};
  for (const auto& [a, b] : same) {
    c.run("oracle." + std::string(function_class_name(a)) + "_is_" +
              std::string(function_class_name(b)),
          where, [&] {
            if (!cg) return not_cg();
            for (int m = 1; m <= opt.oracle_max_m; ++m) {
              const auto fa = list_functions(cl, m, a, opt.force);
              const auto fb = list_functions(cl, m, b, opt.force);
              if (fa != fb) {
                return compare(fa.size(), fb.size(),
                               "function sets differ at m=" + std::to_string(m));
              }
            }
            return compare(std::string("equal"), std::string("equal"));
          });
  }

  for (const auto& [psi, key] : all_characters()) {
    c.run("antipode." + key, where, [&, &psi = psi, &key = key] {
      if (!chi.count(key)) return skip("polynomial unavailable");
      return compare(to_string(chi[key](-1)),
                     std::to_string(antipode_eval(psi, cl, opt.force)));
    });
  }

  c.run("characters.eta_zeta_bar_is_unit", where, [&] {
    return compare(
        convolve(Character::eta(), Character::zeta().bar(), cl),
        std::int64_t{n == 0 ? 1 : 0});
  });
  c.run("characters.phi_is_zeta_eta", where, [&] {
    return compare(Character::phi()(cl),
                   convolve(Character::zeta(), Character::eta(), cl));
  });
  c.run("characters.phi_prime_is_eta_zeta", where, [&] {
    return compare(Character::phi_prime()(cl),
                   convolve(Character::eta(), Character::zeta(), cl));
  });

  // Structural properties.
  c.run("structure.minor_composition", where, [&] {
    const auto& closed = cl.closed_sets();
    std::size_t checked = 0;
    for (Subset a : closed) {
      for (Subset d : closed) {
        if (!a.subset_of(d)) continue;
        const ClosureOperator outer = minor(cl, a, d);
        for (Subset b : closed) {
          if (!a.subset_of(b) || !b.subset_of(d)) continue;
          for (Subset cc : closed) {
            if (!b.subset_of(cc) || !cc.subset_of(d)) continue;
            const Subset support = d - a;
            const ClosureOperator nested =
                minor(outer, compress(b - a, support), compress(cc - a, support));
            const ClosureOperator direct = minor(cl, b, cc);
            ++checked;
            if (!(nested == direct)) {
              return compare(nested.to_string(), direct.to_string(),
                             "A=" + cl.ground().format(a) +
                                 " B=" + cl.ground().format(b) +
                                 " C=" + cl.ground().format(cc) +
                                 " D=" + cl.ground().format(d));
            }
          }
        }
      }
    }
    return compare(checked, checked);
  });

  c.run("structure.direct_sum", where, [&] {
    const auto partner = direct_sum_partner(cl);
    if (!partner) return skip("no room for a direct-sum partner");
    const ClosureOperator sum = direct_sum(cl, *partner);
    std::vector<std::string> l, r;
    for (const auto& [psi, key] : all_characters()) {
      l.push_back(std::to_string(psi(sum)));
      r.push_back(std::to_string(psi(cl) * psi(*partner)));
      const auto a = transfer_matrix_values(psi, sum, 4);
      const auto b = transfer_matrix_values(psi, cl, 4);
      const auto p = transfer_matrix_values(psi, *partner, 4);
      for (int m = 0; m < 4; ++m) {
        l.push_back(to_string(a[m]));
        r.push_back(to_string(Integer(b[m] * p[m])));
      }
    }
    std::string ls, rs;
    for (std::size_t i = 0; i < l.size(); ++i) {
      ls += (i ? "," : "") + l[i];
      rs += (i ? "," : "") + r[i];
    }
    return compare(ls, rs);
  });

  c.run("structure.extreme_points", where, [&] {
    for (Subset k : cl.closed_sets()) {
      Subset expected;
      k.for_each_element([&](int a) {
        if (cl.is_closed(k.without(a))) expected = expected.with(a);
      });
      const Subset ex = extreme_points(cl, k);
      if (ex != expected) {
        return compare(cl.ground().format(ex), cl.ground().format(expected),
                       "Ex of " + cl.ground().format(k));
      }
      if (cg && cl.close(ex) != k) {
        return compare(cl.ground().format(cl.close(ex)), cl.ground().format(k),
                       "closure of Ex");
      }
    }
    return compare(true, true);
  });

  std::map<std::string, FlagVector> flags;
  for (const auto& [psi, key] : all_characters()) {
    c.run("flag.f_h_round_trip." + key, where, [&, &psi = psi, &key = key] {
      flags[key] = flag_f(psi, cl);
      const FlagVector back = flag_f_from_h(flag_h(flags[key]));
      return compare(back.by_type == flags[key].by_type,
                     true);
    });
  }
  for (const char* key : {"phi", "phi-prime"}) {
    c.run(std::string("cd.round_trip.") + key, where, [&] {
      if (!cg) return not_cg();
      if (n == 0) return skip("empty ground");
      if (!flags.count(key)) return skip("flag vector unavailable");
      const AbPolynomial ab = ab_index(flag_h(flags[key]));
      const CdPolynomial cd = cd_index(ab);
      return compare(expand_cd(cd).to_string(), ab.to_string());
    });
  }

  // Supersolvability and the descent/peak theorems.
  std::optional<SupersolvabilityReport> ss;
  c.run("supersolvable.method_agreement", where, [&] {
    if (!cg) return not_cg();
    ss = supersolvability(ConvexGeometry(cl), opt.force);
    return compare(ss->method_agreement, true,
                   std::string("geometric route says ") +
                       (ss->p0 ? "supersolvable" : "not supersolvable"));
  });
  const std::pair<CanonicalCharacter, const char*> theorems[] = {
      {CanonicalCharacter::kEta, "theorem.descent.eta"},
      {CanonicalCharacter::kZeta, "theorem.descent.zeta"},
      {CanonicalCharacter::kPhi, "theorem.peak.phi"},
      {CanonicalCharacter::kPhiPrime, "theorem.peak.phi_prime"}};
  for (const auto& [psi, name] : theorems) {
    c.run(name, where, [&] {
      if (!ss) return skip("supersolvability unknown");
      if (!ss->p0) return skip("not supersolvable");
      if (n == 0) return skip("empty ground");
      for (const auto& r :
           verify_theorem_all_bases(ConvexGeometry(cl), *ss->p0, psi)) {
        if (!r.holds) {
          for (const auto& [key, cls] : r.classes) {
            if (cls.coefficient != cls.expected) {
              return compare(cls.coefficient, cls.expected,
                             "base " + cl.ground().format(r.base) + ", class " + key);
            }
          }
        }
      }
      return compare(true, true);
    });
  }
}

}  // namespace

VerificationReport verify_geometries(std::span<const ClosureOperator> input,
                                     std::string subject,
                                     const VerifyOptions& options) {
  Collector c;
  for (const auto& cl : input) verify_one(c, cl, options);

  // Parity checks need the whole input at once.
  for (const char* key : {"phi", "phi-prime"}) {
    c.run(std::string("characters.odd.") + key, subject, [&] {
      return compare(is_odd_on(*Character::parse(key), input), true);
    });
  }
  c.run("characters.eta_not_odd", subject, [&] {
    if (is_odd_on(Character::eta(), input)) {
      return skip("eta is odd on every input geometry");
    }
    return compare(false, false);
  });

  VerificationReport report;
  report.subject = std::move(subject);
  report.geometries = input.size();
  report.checks = c.finish();
  return report;
}

VerificationReport verify_corpus(int max_n, const VerifyOptions& options) {
  const auto corpus = enumerate_corpus(max_n, options.force);
  std::vector<ClosureOperator> ops;
  ops.reserve(corpus.size());
  for (const auto& g : corpus) ops.push_back(g.op());
  return verify_geometries(ops, "corpus n<=" + std::to_string(max_n), options);
}

}  // namespace cgx
