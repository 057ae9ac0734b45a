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

#include "cgx/posets.hpp"

#include <algorithm>

#include "cgx/error.hpp"

namespace cgx {

namespace {

// Warshall on down-set rows: down[i] absorbs down[j] for every j in down[i].
void transitive_close(std::vector<Subset>& down) {
  const int n = static_cast<int>(down.size());
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if (down[i].contains(k)) down[i] |= down[k];
    }
  }
}

std::optional<Cyclic> find_cycle(const std::vector<Subset>& down) {
  const int n = static_cast<int>(down.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (down[b].contains(a) && down[a].contains(b)) return Cyclic{a, b};
    }
  }
  return std::nullopt;
}

}  // namespace

Poset::Poset(GroundSet ground) : ground_(std::move(ground)) {
  for (int i = 0; i < ground_.size(); ++i) down_.push_back(Subset::singleton(i));
}

Poset Poset::from_relations(GroundSet ground,
                            const std::vector<std::pair<int, int>>& less) {
  Poset p(std::move(ground));
  for (auto [a, b] : less) {
    if (a < 0 || b < 0 || a >= p.size() || b >= p.size()) {
      fail(ErrorCode::kInvalidArgument, "relation outside the ground set");
    }
    p.down_[b] = p.down_[b].with(a);
  }
  transitive_close(p.down_);
  if (auto c = find_cycle(p.down_)) {
    fail(ErrorCode::kCyclicRelations,
         "relations force " + p.ground_.label(c->a) + " = " +
             p.ground_.label(c->b));
  }
  return p;
}

Poset Poset::from_down_sets(GroundSet ground, std::vector<Subset> down) {
  const int n = ground.size();
  if (static_cast<int>(down.size()) != n) {
    fail(ErrorCode::kInvalidArgument, "down-set table has the wrong size");
  }
  for (int i = 0; i < n; ++i) {
    if (!down[i].contains(i)) fail(ErrorCode::kInvalidArgument, "not reflexive");
    down[i].for_each_element([&](int j) {
      if (!down[j].subset_of(down[i])) {
        fail(ErrorCode::kInvalidArgument, "not transitive");
      }
    });
  }
  if (find_cycle(down)) fail(ErrorCode::kInvalidArgument, "not antisymmetric");
  return Poset(std::move(ground), std::move(down));
}

Subset Poset::up_set(int i) const {
  Subset up;
  for (int j = 0; j < size(); ++j) {
    if (leq(i, j)) up = up.with(j);
  }
  return up;
}

std::vector<std::pair<int, int>> Poset::relations() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < size(); ++a) {
    for (int b = 0; b < size(); ++b) {
      if (less(a, b)) out.emplace_back(a, b);
    }
  }
  return out;
}

int Poset::relation_count() const {
  int count = 0;
  for (Subset d : down_) count += d.size() - 1;
  return count;
}

Subset Poset::minimal_elements() const {
  Subset out;
  for (int i = 0; i < size(); ++i) {
    if (down_[i].size() == 1) out = out.with(i);
  }
  return out;
}

Subset Poset::maximal_elements() const {
  Subset out;
  for (int i = 0; i < size(); ++i) {
    if (up_set(i).size() == 1) out = out.with(i);
  }
  return out;
}

bool Poset::is_ideal(Subset s) const {
  bool ok = true;
  s.for_each_element([&](int i) { ok = ok && down_[i].subset_of(s); });
  return ok;
}

bool Poset::is_filter(Subset s) const {
  bool ok = true;
  s.for_each_element([&](int i) { ok = ok && up_set(i).subset_of(s); });
  return ok;
}

std::string Poset::to_string() const {
  std::string out;
  for (auto [a, b] : relations()) {
    if (!out.empty()) out += ", ";
    out += ground_.label(a) + "<" + ground_.label(b);
  }
  return out.empty() ? "antichain" : out;
}

std::vector<Subset> ideals(const Poset& p) {
  std::vector<Subset> out;
  for (Subset::Bits m = 0; m < (Subset::Bits{1} << p.size()); ++m) {
    if (p.is_ideal(Subset(m))) out.emplace_back(m);
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

ConvexGeometry to_convex_geometry(const Poset& p) {
  return ConvexGeometry(ClosureOperator::validate(p.ground(), ideals(p)));
}

std::vector<LinearOrder> linear_extensions(const Poset& p) {
  const int n = p.size();
  std::vector<LinearOrder> out;
  std::vector<int> word;
  auto extend = [&](auto& self, Subset placed) -> void {
    if (static_cast<int>(word.size()) == n) {
      out.emplace_back(word);
      return;
    }
    for (int e = 0; e < n; ++e) {
      if (placed.contains(e) || !p.down_set(e).without(e).subset_of(placed)) {
        continue;
      }
      word.push_back(e);
      self(self, placed.with(e));
      word.pop_back();
    }
  };
  extend(extend, Subset());
  return out;
}

bool is_linear_extension(const Poset& p, const LinearOrder& l) {
  if (l.size() != p.size()) return false;
  for (auto [a, b] : p.relations()) {
    if (l.rank_of(a) > l.rank_of(b)) return false;
  }
  return true;
}

Poset reverse(const Poset& p) {
  std::vector<Subset> down;
  for (int i = 0; i < p.size(); ++i) down.push_back(p.up_set(i));
  return Poset::from_down_sets(p.ground(), std::move(down));
}

std::variant<Poset, Cyclic> acyclic_join(const std::vector<Poset>& ps) {
  if (ps.empty()) fail(ErrorCode::kInvalidArgument, "join of no posets");
  std::vector<Subset> down(ps.front().size());
  for (const Poset& p : ps) {
    if (!(p.ground() == ps.front().ground())) {
      fail(ErrorCode::kInvalidArgument, "join of posets on different grounds");
    }
    for (int i = 0; i < p.size(); ++i) down[i] |= p.down_set(i);
  }
  transitive_close(down);
  if (auto c = find_cycle(down)) return *c;
  return Poset::from_down_sets(ps.front().ground(), std::move(down));
}

void for_each_poset(const GroundSet& ground,
                    const std::function<void(const Poset&)>& visit,
                    bool force) {
  const int n = ground.size();
  if (n > kPosetEnumerationGuard && !force) {
    fail(ErrorCode::kGroundTooLarge,
         "poset enumeration on " + std::to_string(n) +
             " elements exceeds the guard of " +
             std::to_string(kPosetEnumerationGuard));
  }
  // Element k is inserted into a poset on {0..k-1} with a down-set D (an
  // ideal) and an up-set U (a filter) such that every d in D lies below
  // every u in U. Each labeled poset arises from exactly one such choice.
  std::vector<Subset> down;
  auto grow = [&](auto& self, int k) -> void {
    if (k == n) {
      visit(Poset::from_down_sets(ground, down));
      return;
    }
    const Subset::Bits count = Subset::Bits{1} << k;
    auto is_ideal = [&](Subset s) {
      bool ok = true;
      s.for_each_element([&](int i) { ok = ok && down[i].subset_of(s); });
      return ok;
    };
    auto is_filter = [&](Subset s) {
      for (int i = 0; i < k; ++i) {
        if (s.contains(i)) continue;
        if (!(down[i] & s).empty()) return false;
      }
      return true;
    };
    for (Subset::Bits dm = 0; dm < count; ++dm) {
      const Subset d(dm);
      if (!is_ideal(d)) continue;
      for (Subset::Bits um = 0; um < count; ++um) {
        const Subset u(um);
        if (!(u & d).empty() || !is_filter(u)) continue;
        bool compatible = true;
        u.for_each_element(
            [&](int x) { compatible = compatible && d.subset_of(down[x]); });
        if (!compatible) continue;
        const auto saved = down;
        down.push_back(d.with(k));
        u.for_each_element([&](int x) { down[x] = down[x].with(k); });
        self(self, k + 1);
        down = saved;
      }
    }
  };
  grow(grow, 0);
}

std::vector<Poset> enumerate_posets(const GroundSet& ground, bool force) {
  std::vector<Poset> out;
  for_each_poset(ground, [&](const Poset& p) { out.push_back(p); }, force);
  return out;
}

}  // namespace cgx
