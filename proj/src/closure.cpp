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

#include "cgx/closure.hpp"

#include <algorithm>

#include "cgx/error.hpp"

namespace cgx {

namespace {

// closure[A] = intersection of all closed supersets of A, via an AND-valued
// superset transform over the subset lattice.
std::vector<Subset> closure_table(int n, const std::vector<Subset>& closed) {
  const std::size_t size = std::size_t{1} << n;
  const Subset full = Subset::full(n);
  std::vector<Subset> table(size, full);
  for (Subset k : closed) table[k.bits()] = k;
  for (int i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < size; ++a) {
      if (!((a >> i) & 1U)) table[a] = table[a] & table[a | (std::size_t{1} << i)];
    }
  }
  return table;
}

std::vector<Subset> canonicalize(std::vector<Subset> family) {
  std::sort(family.begin(), family.end(), canonical_less);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  return family;
}

}  // namespace

ClosureOperator::ClosureOperator()
    : closed_{Subset()}, closure_{Subset()} {}

ClosureOperator::ClosureOperator(GroundSet ground, std::vector<Subset> closed,
                                 std::vector<Subset> closure)
    : ground_(std::move(ground)),
      closed_(std::move(closed)),
      closure_(std::move(closure)) {}

ClosureOperator ClosureOperator::validate(GroundSet ground,
                                          std::vector<Subset> family) {
  const int n = ground.size();
  const Subset full = ground.full();
  for (Subset k : family) {
    if (!k.subset_of(full)) {
      fail(ErrorCode::kInvalidArgument, "closed set outside the ground set");
    }
  }
  family = canonicalize(std::move(family));
  if (!std::binary_search(family.begin(), family.end(), full, canonical_less)) {
    fail(ErrorCode::kMissingTop, "the full ground set is not closed");
  }
  if (!std::binary_search(family.begin(), family.end(), Subset(),
                          canonical_less)) {
    fail(ErrorCode::kNotLoopless, "the empty set is not closed");
  }
  std::vector<bool> member(std::size_t{1} << n, false);
  for (Subset k : family) member[k.bits()] = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      if (!member[(family[i] & family[j]).bits()]) {
        fail(ErrorCode::kNotIntersectionClosed,
             "intersection of " + ground.format(family[i]) + " and " +
                 ground.format(family[j]) + " is not closed");
      }
    }
  }
  auto table = closure_table(n, family);
  return ClosureOperator(std::move(ground), std::move(family), std::move(table));
}

ClosureOperator ClosureOperator::discrete(GroundSet ground) {
  const int n = ground.size();
  std::vector<Subset> all;
  for (Subset::Bits m = 0; m < (Subset::Bits{1} << n); ++m) all.emplace_back(m);
  all = canonicalize(std::move(all));
  auto table = closure_table(n, all);
  return ClosureOperator(std::move(ground), std::move(all), std::move(table));
}

std::string ClosureOperator::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < closed_.size(); ++i) {
    if (i) out += ',';
    out += ground_.format(closed_[i]);
  }
  return out + "}";
}

bool satisfies_anti_exchange(const ClosureOperator& cl) {
  const int n = cl.ground_size();
  for (Subset::Bits m = 0; m < (Subset::Bits{1} << n); ++m) {
    const Subset c = cl.close(Subset(m));
    for (int a = 0; a < n; ++a) {
      if (c.contains(a)) continue;
      const Subset with_a = cl.close(c.with(a));
      for (int b = 0; b < n; ++b) {
        if (b == a || c.contains(b)) continue;
        if (cl.close(c.with(b)).contains(a) && with_a.contains(b)) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_one_point_extensions(const ClosureOperator& cl) {
  const Subset full = cl.full();
  for (Subset k : cl.closed_sets()) {
    if (k == full) continue;
    bool extends = false;
    (full - k).for_each_element([&](int x) {
      if (cl.is_closed(k.with(x))) extends = true;
    });
    if (!extends) return false;
  }
  return true;
}

bool is_convex_geometry(const ClosureOperator& cl) {
  const bool anti_exchange = satisfies_anti_exchange(cl);
  const bool extensions = has_one_point_extensions(cl);
  if (anti_exchange != extensions) {
    fail(ErrorCode::kInternalInconsistency,
         "anti-exchange and one-point-extension tests disagree on " +
             cl.to_string());
  }
  return anti_exchange;
}

ConvexGeometry::ConvexGeometry(ClosureOperator cl) : op_(std::move(cl)) {
  if (!is_convex_geometry(op_)) {
    fail(ErrorCode::kInvalidArgument,
         op_.to_string() + " is not a convex geometry");
  }
}

std::optional<ConvexGeometry> ConvexGeometry::try_from(ClosureOperator cl) {
  if (!is_convex_geometry(cl)) return std::nullopt;
  return ConvexGeometry(std::move(cl), Checked{});
}

ClosureOperator minor(const ClosureOperator& cl, Subset lower, Subset upper) {
  if (!cl.is_closed(lower)) {
    fail(ErrorCode::kNotClosed, cl.ground().format(lower) + " is not closed");
  }
  if (!cl.is_closed(upper)) {
    fail(ErrorCode::kNotClosed, cl.ground().format(upper) + " is not closed");
  }
  if (!lower.subset_of(upper)) {
    fail(ErrorCode::kNotNested, "minor bounds are not nested");
  }
  const Subset support = upper - lower;
  const int m = support.size();
  std::vector<Subset> closed;
  std::vector<Subset> table(std::size_t{1} << m);
  for (Subset::Bits b = 0; b < (Subset::Bits{1} << m); ++b) {
    const Subset local(b);
    const Subset lifted = cl.close(expand(local, support) | lower);
    // lifted <= upper because upper is closed.
    table[b] = compress(lifted, support);
    if (table[b] == local) closed.push_back(local);
  }
  std::sort(closed.begin(), closed.end(), canonical_less);
  return ClosureOperator(cl.ground().restrict(support), std::move(closed),
                         std::move(table));
}

ClosureOperator restriction(const ClosureOperator& cl, Subset s) {
  return minor(cl, Subset(), s);
}

ClosureOperator contraction(const ClosureOperator& cl, Subset s) {
  return minor(cl, s, cl.full());
}

ClosureOperator direct_sum(const ClosureOperator& a, const ClosureOperator& b) {
  std::vector<std::string> labels = a.ground().labels();
  for (const auto& l : b.ground().labels()) {
    if (a.ground().index_of(l)) {
      fail(ErrorCode::kOverlappingGrounds, "label '" + l + "' in both grounds");
    }
    labels.push_back(l);
  }
  GroundSet ground(std::move(labels));
  const Subset a_support = ground.subset_of_labels(a.ground().labels());
  const Subset b_support = ground.subset_of_labels(b.ground().labels());
  std::vector<Subset> closed;
  closed.reserve(a.closed_sets().size() * b.closed_sets().size());
  for (Subset ka : a.closed_sets()) {
    for (Subset kb : b.closed_sets()) {
      closed.push_back(expand(ka, a_support) | expand(kb, b_support));
    }
  }
  return ClosureOperator::validate(std::move(ground), std::move(closed));
}

Subset extreme_points(const ClosureOperator& cl, Subset a) {
  Subset ex;
  a.for_each_element([&](int x) {
    if (!cl.close(a.without(x)).contains(x)) ex = ex.with(x);
  });
  return ex;
}

bool is_discrete(const ClosureOperator& cl) {
  return cl.closed_sets().size() ==
         (std::size_t{1} << cl.ground_size());
}

std::vector<Subset> totally_convex_sets(const ClosureOperator& cl) {
  // S is totally convex iff S is closed and every S - x is totally convex.
  std::vector<Subset> out;
  std::vector<bool> total(std::size_t{1} << cl.ground_size(), false);
  for (Subset s : cl.closed_sets()) {  // canonical order visits subsets first
    bool ok = true;
    s.for_each_element([&](int x) {
      if (!total[s.without(x).bits()]) ok = false;
    });
    if (ok) {
      total[s.bits()] = true;
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Subset> upper_covers(const ClosureOperator& cl, Subset k) {
  // Every cover of K is cl(K + x) for some x; the covers are the minimal ones.
  std::vector<Subset> candidates;
  (cl.full() - k).for_each_element(
      [&](int x) { candidates.push_back(cl.close(k.with(x))); });
  std::sort(candidates.begin(), candidates.end(), canonical_less);
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  std::vector<Subset> out;
  for (Subset c : candidates) {
    const bool minimal = std::none_of(out.begin(), out.end(), [&](Subset o) {
      return o.subset_of(c);
    });
    if (minimal) out.push_back(c);
  }
  return out;
}

std::vector<std::vector<Subset>> maximal_chains(const ClosureOperator& cl) {
  std::vector<std::vector<Subset>> chains;
  std::vector<Subset> current{Subset()};
  auto dfs = [&](auto& self, Subset at) -> void {
    if (at == cl.full()) {
      chains.push_back(current);
      return;
    }
    for (Subset next : upper_covers(cl, at)) {
      current.push_back(next);
      self(self, next);
      current.pop_back();
    }
  };
  dfs(dfs, Subset());
  return chains;
}

}  // namespace cgx
