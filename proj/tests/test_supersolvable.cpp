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

#include <algorithm>

#include "cgx/error.hpp"
#include "cgx/io.hpp"
#include "cgx/supersolvable.hpp"

using namespace cgx;

namespace {

std::vector<std::string> chain_texts(const GroundSet& g, const std::vector<Chain>& chains) {
  std::vector<std::string> out;
  for (const auto& c : chains) {
    std::string s;
    for (Subset k : c) s += (s.empty() ? "" : "-") + g.format(k);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Definition check: some maximal chain c such that for every maximal chain m
// the lattice generated by c and m is distributive, tested by brute force
// over all triples of the generated set.
bool chief_oracle(const ClosedSetLattice& l, const Chain& c) {
  for (const Chain& m : l.maximal_chains()) {
    std::vector<Subset> gen(c.begin(), c.end());
    gen.insert(gen.end(), m.begin(), m.end());
    bool grew = true;
    while (grew) {
      grew = false;
      const std::vector<Subset> now = gen;
      for (Subset a : now) {
        for (Subset b : now) {
          for (Subset x : {l.meet(a, b), l.join(a, b)}) {
            if (std::find(gen.begin(), gen.end(), x) == gen.end()) {
              gen.push_back(x);
              grew = true;
            }
          }
        }
      }
    }
    for (Subset a : gen) {
      for (Subset b : gen) {
        for (Subset d : gen) {
          if (l.meet(a, l.join(b, d)) != l.join(l.meet(a, b), l.meet(a, d))) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace

TEST_CASE("lattice basics") {
  const ClosedSetLattice l(example_g1());
  CHECK(l.size() == 12);
  CHECK(l.graded());
  CHECK(l.height(l.op().full()) == 4);
  const GroundSet& g = l.op().ground();
  CHECK(g.format(l.join(Subset(0b0001), Subset(0b1000))) == "wxz");
  CHECK(is_distributive(l, {Subset(), l.op().full()}));
  CHECK_THROWS_AS(is_distributive(l, {Subset(0b0001), Subset(0b1000)}), Error);
}

TEST_CASE("chief chains of the worked example") {
  const ClosedSetLattice l(example_chief_closure());
  const GroundSet& g = l.op().ground();
  CHECK(l.maximal_chains().size() == 7);
  const auto chief = chief_chains(l);
  CHECK(chain_texts(g, chief) ==
        std::vector<std::string>{"{}-w-wx-wxyz", "{}-x-wx-wxyz", "{}-x-xy-wxyz",
                                 "{}-y-xy-wxyz"});
  for (const auto& c : l.maximal_chains()) {
    const bool is_chief = std::find(chief.begin(), chief.end(), c) != chief.end();
    CHECK(chief_oracle(l, c) == is_chief);
    CHECK(geometric_chief_condition(l.op(), c) == is_chief);
  }
  CHECK_THROWS_AS(geometric_chief_condition(l.op(), {Subset(), l.op().full()}), Error);
}

TEST_CASE("the geometric condition does not imply chief") {
  const ClosedSetLattice l(example_geometric_counterexample());
  const GroundSet& g = l.op().ground();
  bool found = false;
  for (const auto& c : l.maximal_chains()) {
    if (!is_chief_chain(l, c) && geometric_chief_condition(l.op(), c)) {
      found = true;
      if (chain_texts(g, {c}).front() == "{}-a-ab-abcd") CHECK(!chief_oracle(l, c));
    }
  }
  CHECK(found);
}

TEST_CASE("chief chains agree with the distributivity oracle on the corpus") {
  for (const auto& cg : enumerate_corpus(4)) {
    const ClosedSetLattice l(cg.op());
    const auto chief = chief_chains(l);
    for (const auto& c : l.maximal_chains()) {
      const bool is_chief = std::find(chief.begin(), chief.end(), c) != chief.end();
      CHECK(chief_oracle(l, c) == is_chief);
    }
  }
}

TEST_CASE("supersolvability of the examples") {
  const auto r1 = supersolvability(ConvexGeometry(example_g1()));
  CHECK(r1.supersolvable);
  CHECK(r1.method_agreement);
  REQUIRE(r1.p0.has_value());
  const auto r2 = supersolvability(ConvexGeometry(example_g2()));
  CHECK_FALSE(r2.supersolvable);
  CHECK(r2.method_agreement);
  CHECK(r2.chief_chains.empty());
  // Poset geometries are supersolvable with p0 the poset itself.
  const Poset p = parse_poset_edges("x<y,x<z");
  const auto rp = supersolvability(to_convex_geometry(p));
  CHECK(rp.supersolvable);
  CHECK(*rp.p0 == p);
  try {
    verify_descent_theorem(ConvexGeometry(example_g2()), CanonicalCharacter::kEta);
    FAIL("expected NotSupersolvable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotSupersolvable);
  }
}

TEST_CASE("maximal convex subposets have closed ideals and are relation-minimal") {
  for (const auto& cg : enumerate_convex_geometries(3)) {
    const auto posets = maximal_convex_subposets(cg);
    CHECK_FALSE(posets.empty());
    for (const Poset& p : posets) {
      for (Subset s : ideals(p)) CHECK(cg.op().is_closed(s));
      for (const auto& [a, b] : p.relations()) {
        // Dropping a cover relation leaves some non-closed ideal.
        std::vector<std::pair<int, int>> fewer;
        for (const auto& r : p.relations()) {
          if (r != std::make_pair(a, b)) fewer.push_back(r);
        }
        const Poset q = Poset::from_relations(p.ground(), fewer);
        if (q == p) continue;
        bool all_closed = true;
        for (Subset s : ideals(q)) all_closed = all_closed && cg.op().is_closed(s);
        CHECK_FALSE(all_closed);
      }
    }
  }
}

TEST_CASE("rank modularity") {
  const ClosedSetLattice l(antichain_geometry(3));
  for (Subset s : l.elements()) CHECK(is_rank_modular(l, s));
  const ClosedSetLattice g1(example_g1());
  const auto r = supersolvability(ConvexGeometry(example_g1()));
  for (const auto& c : r.chief_chains) CHECK(is_rank_modular_chain(g1, c));
}
