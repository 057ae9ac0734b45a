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

// Finite partial orders, their order ideals and linear extensions, the
// embedding p -> g_p into convex geometries, and exhaustive labeled poset
// enumeration.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cgx/closure.hpp"
#include "cgx/ground.hpp"

namespace cgx {

inline constexpr int kPosetEnumerationGuard = 6;

class Poset {
 public:
  Poset() = default;
  // An antichain on `ground`.
  explicit Poset(GroundSet ground);
  // Transitive closure of the strict relations (a, b) meaning a < b. Throws
  // CyclicRelations if the closure is not antisymmetric.
  static Poset from_relations(GroundSet ground,
                              const std::vector<std::pair<int, int>>& less);
  // Builds from down-sets: down[i] = {j : j <= i}. Throws InvalidArgument
  // unless reflexive, transitive and antisymmetric.
  static Poset from_down_sets(GroundSet ground, std::vector<Subset> down);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  bool leq(int a, int b) const { return down_[b].contains(a); }
  bool less(int a, int b) const { return a != b && leq(a, b); }
  // {j : j <= i}
  Subset down_set(int i) const { return down_[i]; }
  Subset up_set(int i) const;
  // Strict relations (a, b), a < b, lexicographic.
  std::vector<std::pair<int, int>> relations() const;
  int relation_count() const;

  Subset minimal_elements() const;
  Subset maximal_elements() const;
  bool is_ideal(Subset s) const;
  bool is_filter(Subset s) const;

  // "x<y, x<z" on strict relations; "antichain" when there are none.
  std::string to_string() const;

  bool operator==(const Poset&) const = default;
  auto operator<=>(const Poset& o) const { return down_ <=> o.down_; }

 private:
  Poset(GroundSet ground, std::vector<Subset> down)
      : ground_(std::move(ground)), down_(std::move(down)) {}

  GroundSet ground_;
  std::vector<Subset> down_;
};

// All down-closed subsets, in canonical order.
std::vector<Subset> ideals(const Poset& p);

// g_p: the closed sets are the ideals of p.
ConvexGeometry to_convex_geometry(const Poset& p);

// All linear extensions, lexicographic in their words.
std::vector<LinearOrder> linear_extensions(const Poset& p);

// True iff every a < b in p has a before b in l.
bool is_linear_extension(const Poset& p, const LinearOrder& l);

Poset reverse(const Poset& p);

struct Cyclic {
  // a < b and b < a both forced.
  int a = 0;
  int b = 0;
};

// Transitive closure of the union of relations.
std::variant<Poset, Cyclic> acyclic_join(const std::vector<Poset>& ps);

// Visits every labeled poset on `ground` exactly once. Throws GroundTooLarge
// above kPosetEnumerationGuard unless `force` is set.
void for_each_poset(const GroundSet& ground,
                    const std::function<void(const Poset&)>& visit,
                    bool force = false);
std::vector<Poset> enumerate_posets(const GroundSet& ground,
                                    bool force = false);

}  // namespace cgx
