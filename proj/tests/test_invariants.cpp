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

#include <doctest.h>

#include "cgx/error.hpp"
#include "cgx/invariants.hpp"
#include "cgx/io.hpp"
#include "oracle.hpp"

using namespace cgx;

namespace {

const std::pair<Character, oracle::Psi> kPairs[] = {
    {Character::eta(), oracle::Psi::kEta},
    {Character::zeta(), oracle::Psi::kZeta},
    {Character::phi(), oracle::Psi::kPhi},
    {Character::phi_prime(), oracle::Psi::kPhiPrime}};

// f_alpha by direct summation over set compositions of type alpha.
Integer flag_oracle(oracle::Psi which, const oracle::Family& f,
                    const IntegerComposition& alpha) {
  Integer total = 0;
  std::function<void(oracle::Mask, std::size_t, long long)> go =
      [&](oracle::Mask from, std::size_t part, long long weight) {
        if (part == alpha.parts().size()) {
          if (from == f.full()) total += weight;
          return;
        }
        for (oracle::Mask k : f.closed) {
          if ((from & ~k) != 0 || oracle::popcount(k & ~from) != alpha.parts()[part]) {
            continue;
          }
          const long long w = oracle::psi(which, oracle::minor(f, from, k));
          if (w != 0) go(k, part + 1, weight * w);
        }
      };
  go(0, 0, 1);
  return total;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternalInconsistency;
}

}  // namespace

TEST_CASE("interpolation") {
  const auto p = RationalPolynomial::interpolate({0, 1, 4, 9});
  CHECK(p.to_string() == "n^2");
  CHECK(p(Integer(-3)) == Rational(9));
  const auto q = RationalPolynomial::interpolate({0, 1, 3, 6});
  CHECK(q.to_string() == "1/2*n^2 + 1/2*n");
  CHECK(RationalPolynomial::interpolate({0, 0}).to_string() == "0");
  CHECK(RationalPolynomial::interpolate({5}).degree() == 0);
}

TEST_CASE("transfer matrix values equal the multichain oracle") {
  for (const auto& g : enumerate_corpus(4)) {
    const auto f = oracle::of(g.op());
    for (const auto& [psi, which] : kPairs) {
      const auto values = transfer_matrix_values(psi, g.op(), 4);
      for (int m = 0; m < 4; ++m) {
        CHECK(values[m] == Integer(oracle::chi(which, f, m)));
      }
    }
  }
}

TEST_CASE("colinear polynomial invariants") {
  const auto cl = colinear3();
  const auto chi = poly_invariant(Character::phi_prime(), cl);
  CHECK(chi(Integer(1)) == 4);
  CHECK(chi(Integer(2)) == 40);
  CHECK(chi.degree() == 3);
  // A discrete geometry counts all functions: chi^zeta(n) = n^|I|.
  const auto d = antichain_geometry(3);
  CHECK(poly_invariant(Character::zeta(), d).to_string() == "n^3");
  CHECK(poly_invariant(Character::eta(), d).to_string() == "n^3");
}

TEST_CASE("function classes") {
  const auto cl = colinear3();
  CHECK(count_functions(cl, 1, FunctionClass::kEnrichedExtremal) == 4);
  CHECK(count_functions(cl, 2, FunctionClass::kEnrichedExtremal) == 40);
  const auto listed = list_functions(cl, 1, FunctionClass::kEnrichedExtremal);
  const std::vector<FunctionValues> expected = {
      {-1, 1, -1}, {-1, 1, 1}, {1, 1, -1}, {1, 1, 1}};
  CHECK(listed == expected);
  for (const auto& f : listed) {
    CHECK(satisfies(cl, 1, FunctionClass::kEnrichedExtremal, f));
  }
  // A middle point may not carry the strict maximum of a convex set.
  CHECK_FALSE(satisfies(cl, 2, FunctionClass::kExtremal, {1, 2, 1}));
  CHECK(satisfies(cl, 2, FunctionClass::kExtremal, {2, 1, 1}));
  CHECK(is_enriched(FunctionClass::kEnrichedConvex));
  CHECK_FALSE(is_enriched(FunctionClass::kStrictlyConvex));
  CHECK(code_of([&] {
          count_functions(antichain_geometry(12), 9, FunctionClass::kExtremal);
        }) == ErrorCode::kCodomainTooLarge);
}

TEST_CASE("flag vectors equal the summation oracle") {
  for (const auto& g : enumerate_corpus(4)) {
    const auto f = oracle::of(g.op());
    const int n = g.op().ground_size();
    for (const auto& [psi, which] : kPairs) {
      const FlagVector fv = flag_f(psi, g.op());
      for (const auto& alpha : IntegerComposition::all(n)) {
        CHECK(fv.at(alpha) == flag_oracle(which, f, alpha));
      }
      const FlagVector back = flag_f_from_h(flag_h(fv));
      CHECK(back.by_type == fv.by_type);
    }
  }
  const FlagVector c3 = flag_f(Character::phi_prime(), colinear3());
  CHECK(c3.at(IntegerComposition({3})) == 4);
  CHECK(c3.at(IntegerComposition({1, 2})) == 16);
  CHECK(c3.at(IntegerComposition({2, 1})) == 16);
  CHECK(c3.at(IntegerComposition({1, 1, 1})) == 32);
}

TEST_CASE("ab and cd polynomials") {
  const auto ab = parse_ab_polynomial("baa + 3aba + 2*b*b*a + b^3", 4);
  CHECK(ab.at("baa") == 1);
  CHECK(ab.at("aba") == 3);
  CHECK(ab.at("bba") == 2);
  CHECK(ab.at("bbb") == 1);
  CHECK(ab.at("aaa") == 0);
  CHECK(ab.coefficients.size() == 8);
  CHECK_THROWS(parse_ab_polynomial("ab", 4));
  CHECK(parse_ab_polynomial("0", 4) == parse_ab_polynomial("0*ab", 4));
  const auto cd = parse_cd_polynomial("8c^3 + 8cd + 24dc", 4);
  CHECK(cd.to_string() == "8*c^3 + 8*c*d + 24*d*c");
  const auto expanded = expand_cd(parse_cd_polynomial("d", 3));
  CHECK(expanded.at("ab") == 1);
  CHECK(expanded.at("ba") == 1);
  CHECK(expanded.at("aa") == 0);
  CHECK(cd_index(expanded) == parse_cd_polynomial("d", 3));
  CHECK(code_of([] { cd_index(parse_ab_polynomial("ab", 3)); }) ==
        ErrorCode::kNotInCdSpan);
  // Round trip over every cd-monomial up to degree 6.
  for (int n = 1; n <= 7; ++n) {
    for (const auto& m : cd_monomials(n - 1)) {
      CdPolynomial p = parse_cd_polynomial("0", n);
      p.coefficients[m] = 3;
      CHECK(cd_index(expand_cd(p)) == p);
    }
  }
}

TEST_CASE("indices of the odd characters lie in the cd span") {
  for (const auto& g : enumerate_corpus(4)) {
    if (g.op().ground_size() == 0) continue;
    for (const auto& psi : {Character::phi(), Character::phi_prime()}) {
      const auto ab = ab_index(flag_h(flag_f(psi, g.op())));
      CHECK(expand_cd(cd_index(ab)) == ab);
    }
  }
}

TEST_CASE("flags, interior and extreme vectors") {
  const auto cl = colinear3();
  const GroundSet& g = cl.ground();
  const SetComposition xyz({Subset(0b001), Subset(0b010), Subset(0b100)}, 3);
  const SetComposition xz_y({Subset(0b101), Subset(0b010)}, 3);
  const SetComposition y_xz({Subset(0b010), Subset(0b101)}, 3);
  CHECK(interior_membership(cl, xyz));
  CHECK(interior_membership(cl, y_xz));
  const SetComposition x_yz({Subset(0b001), Subset(0b110)}, 3);
  CHECK_FALSE(interior_membership(cl, x_yz));
  CHECK(code_of([&] { ex_vector(cl, xz_y); }) == ErrorCode::kNotAFlag);
  const ExVector ev = ex_vector(cl, y_xz);
  CHECK(ev.total == 3);
  CHECK(g.format(ev.entries[0]) == "y");
  CHECK(g.format(ev.entries[1]) == "xz");
  // 2^{ex} summed over flags of a type reproduces f^{phi'}.
  const FlagVector fv = flag_f(Character::phi_prime(), cl);
  for (const auto& [comp, value] : fv.by_set_composition) {
    CHECK(value == Integer(1) << ex_vector(cl, comp).total);
  }
}
