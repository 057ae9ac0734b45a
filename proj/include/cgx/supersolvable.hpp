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

// Supersolvability of closed-set lattices. Two independent routes: the
// geometric one for convex geometries (maximal convex subposets and their
// acyclic join) and the lattice one (chief chains, checked from the
// definition). Also the descent and peak readings of the ab- and cd-indices
// for supersolvable convex geometries.

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cgx/characters.hpp"
#include "cgx/closure.hpp"
#include "cgx/invariants.hpp"
#include "cgx/posets.hpp"

namespace cgx {

inline constexpr std::size_t kLatticeGuard = 256;

// A maximal chain of closed sets, bottom-up from {} to I.
using Chain = std::vector<Subset>;

// The closed sets of an operator ordered by inclusion; meet is intersection
// and join is the closure of the union.
class ClosedSetLattice {
 public:
  explicit ClosedSetLattice(ClosureOperator cl);

  const ClosureOperator& op() const { return cl_; }
  const std::vector<Subset>& elements() const { return cl_.closed_sets(); }
  std::size_t size() const { return elements().size(); }
  Subset meet(Subset a, Subset b) const { return a & b; }
  Subset join(Subset a, Subset b) const { return cl_.close(a | b); }
  bool contains(Subset s) const { return cl_.is_closed(s); }

  // All maximal chains have the same length.
  bool graded() const { return graded_; }
  // Length of the longest chain from {} to s; the rank function when graded.
  int height(Subset s) const { return height_.at(s); }
  const std::vector<Chain>& maximal_chains() const { return chains_; }

 private:
  ClosureOperator cl_;
  std::map<Subset, int> height_;
  std::vector<Chain> chains_;
  bool graded_ = true;
};

// rho(m ^ x) + rho(m v x) = rho(m) + rho(x) for every m in the chain and x in
// L. Throws NotGraded.
bool is_rank_modular_chain(const ClosedSetLattice& l, const Chain& chain);
bool is_rank_modular(const ClosedSetLattice& l, Subset m);

// Smallest meet- and join-closed subset containing `seed`.
std::vector<Subset> generated_sublattice(const ClosedSetLattice& l,
                                         const std::vector<Subset>& seed);

// a ^ (b v c) = (a ^ b) v (a ^ c) on all triples. Throws NotASublattice if
// `subset` is not closed under meet and join.
bool is_distributive(const ClosedSetLattice& l,
                     const std::vector<Subset>& subset);

// Chief test for one maximal chain against every maximal chain.
bool is_chief_chain(const ClosedSetLattice& l, const Chain& c);

// Throws LatticeTooLarge above kLatticeGuard elements unless `force`.
std::vector<Chain> chief_chains(const ClosedSetLattice& l, bool force = false);

// For every maximal chain m: permutations of the blocks of c whose prefix
// unions all lie in the union/intersection closure of c and m must have all
// prefix unions closed. Throws NotMaximalChain.
bool geometric_chief_condition(const ClosureOperator& cl, const Chain& c);

// Chamber word of a chain that adds one element per step.
LinearOrder chain_to_order(const Chain& chain);

// Posets whose ideals are all closed, minimal in relations. Throws
// GroundTooLarge above kPosetEnumerationGuard unless `force`.
std::vector<Poset> maximal_convex_subposets(const ConvexGeometry& g,
                                            bool force = false);

// The acyclic join of the maximal convex subposets, when it exists.
std::optional<Poset> supersolvable_geometric(const ConvexGeometry& g,
                                             bool force = false);

struct SupersolvabilityReport {
  std::vector<Poset> maximal_posets;
  std::optional<Poset> p0;
  std::vector<Chain> chief_chains;
  bool supersolvable = false;
  // Geometric route and lattice route agree.
  bool method_agreement = false;
};

SupersolvabilityReport supersolvability(const ConvexGeometry& g,
                                        bool force = false);

struct DescentClass {
  Integer coefficient;              // index coefficient (ab or cd)
  std::vector<LinearOrder> chambers;  // chambers in the class
  Integer expected;                 // count, or 2^{|S|+1} count for peaks
};

struct TheoremReport {
  LinearOrder base;
  // Keyed by ab-word (descents) or cd-monomial (peaks).
  std::map<std::string, DescentClass> classes;
  bool holds = false;
};

// The base order prescribed for psi: a linear extension of p0 for eta and
// phi, its reverse for zeta and phi'. Lexicographically least extension.
LinearOrder default_base_order(const Poset& p0, CanonicalCharacter psi);
// All base orders the theorem allows for psi.
std::vector<LinearOrder> valid_base_orders(const Poset& p0,
                                           CanonicalCharacter psi);

// [m(a,b)_S] Psi^psi = #{chambers l : Des(base, l) = S}, psi in {eta, zeta}.
// Throws NotSupersolvable or InvalidArgument for other characters.
TheoremReport verify_descent_theorem(const ConvexGeometry& g,
                                     CanonicalCharacter psi,
                                     std::optional<LinearOrder> base = {});

// [m(c,d)_S] Phi^psi = 2^{|S|+1} #{chambers l : Peak(base, l) = S},
// psi in {phi, phi'}.
TheoremReport verify_peak_theorem(const ConvexGeometry& g,
                                  CanonicalCharacter psi,
                                  std::optional<LinearOrder> base = {});

// One report per valid base order of the descent (eta, zeta) or peak (phi,
// phi') theorem, sharing the index and chamber computations.
std::vector<TheoremReport> verify_theorem_all_bases(const ConvexGeometry& g,
                                                    const Poset& p0,
                                                    CanonicalCharacter psi);

}  // namespace cgx
