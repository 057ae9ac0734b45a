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

// Closure operators stored extensionally as their intersection-closed family
// of closed sets, together with the Hopf-monoid operations on them (direct
// sum, restriction, contraction, minors) and the convex-geometry notions
// built on top (anti-exchange, extreme points, totally convex sets).

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cgx/ground.hpp"

namespace cgx {

// A loopless closure operator. Invariants: the empty set and the full ground
// set are closed, and the closed family is intersection-closed.
class ClosureOperator {
 public:
  // The operator on the empty ground set; its only closed set is {}.
  ClosureOperator();

  // Throws MissingTop, NotLoopless or NotIntersectionClosed. Duplicates in
  // `family` are ignored.
  static ClosureOperator validate(GroundSet ground, std::vector<Subset> family);
  static ClosureOperator discrete(GroundSet ground);

  const GroundSet& ground() const { return ground_; }
  int ground_size() const { return ground_.size(); }
  Subset full() const { return ground_.full(); }
  // In canonical order (size, then lexicographic).
  const std::vector<Subset>& closed_sets() const { return closed_; }

  bool is_closed(Subset s) const { return closure_[s.bits()] == s; }
  // Smallest closed superset.
  Subset close(Subset s) const { return closure_[s.bits()]; }

  std::string to_string() const;  // "{{},x,y,xy}"

  bool operator==(const ClosureOperator& o) const {
    return ground_ == o.ground_ && closed_ == o.closed_;
  }

 private:
  ClosureOperator(GroundSet ground, std::vector<Subset> closed,
                  std::vector<Subset> closure);

  friend ClosureOperator minor(const ClosureOperator&, Subset, Subset);

  GroundSet ground_;
  std::vector<Subset> closed_;
  std::vector<Subset> closure_;  // indexed by subset bits
};

// Anti-exchange: a in cl(A+b), a != b, a, b not in cl(A) implies b not in
// cl(A+a).
bool satisfies_anti_exchange(const ClosureOperator& cl);
// Every closed K != I has an x outside K with K + x closed.
bool has_one_point_extensions(const ClosureOperator& cl);
// Computes both criteria above; throws InternalInconsistency if they differ.
bool is_convex_geometry(const ClosureOperator& cl);

class ConvexGeometry {
 public:
  // Throws InvalidArgument if `cl` is not a convex geometry.
  explicit ConvexGeometry(ClosureOperator cl);
  static std::optional<ConvexGeometry> try_from(ClosureOperator cl);

  const ClosureOperator& op() const { return op_; }
  operator const ClosureOperator&() const { return op_; }

 private:
  struct Checked {};
  ConvexGeometry(ClosureOperator cl, Checked) : op_(std::move(cl)) {}
  ClosureOperator op_;
};

// The minor g_{A:B} on B - A: closed sets {K - A : K closed, A <= K <= B}.
// Throws NotClosed or NotNested.
ClosureOperator minor(const ClosureOperator& cl, Subset lower, Subset upper);
ClosureOperator restriction(const ClosureOperator& cl, Subset s);
ClosureOperator contraction(const ClosureOperator& cl, Subset s);

// Throws OverlappingGrounds if the label sets intersect.
ClosureOperator direct_sum(const ClosureOperator& a, const ClosureOperator& b);

// {a in A : a not in cl(A - a)}; defined for arbitrary A.
Subset extreme_points(const ClosureOperator& cl, Subset a);

bool is_discrete(const ClosureOperator& cl);

// Sets all of whose subsets are closed, in canonical order.
std::vector<Subset> totally_convex_sets(const ClosureOperator& cl);

// Closed sets covering the closed set k, in canonical order.
std::vector<Subset> upper_covers(const ClosureOperator& cl, Subset k);

// Maximal chains of closed sets from {} to I, each listed bottom-up. For a
// convex geometry these are exactly the chambers, one element added per step.
std::vector<std::vector<Subset>> maximal_chains(const ClosureOperator& cl);

}  // namespace cgx
