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

#include "cgx/supersolvable.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>

#include "cgx/error.hpp"

namespace cgx {

ClosedSetLattice::ClosedSetLattice(ClosureOperator cl) : cl_(std::move(cl)) {
  std::map<Subset, int> shortest;
  for (Subset s : elements()) {  // canonical order: sizes increase
    if (s.empty()) {
      height_[s] = 0;
      shortest[s] = 0;
    }
    for (Subset up : upper_covers(cl_, s)) {
      auto [hi, new_hi] = height_.try_emplace(up, height_[s] + 1);
      if (!new_hi) hi->second = std::max(hi->second, height_[s] + 1);
      auto [lo, new_lo] = shortest.try_emplace(up, shortest[s] + 1);
      if (!new_lo) lo->second = std::min(lo->second, shortest[s] + 1);
    }
  }
  for (const auto& [s, h] : height_) {
    if (shortest[s] != h) graded_ = false;
  }
  chains_ = cgx::maximal_chains(cl_);
}

bool is_rank_modular(const ClosedSetLattice& l, Subset m) {
  if (!l.graded()) {
    fail(ErrorCode::kNotGraded, "rank-modularity needs a graded lattice");
  }
  const int rm = l.height(m);
  for (Subset x : l.elements()) {
    if (l.height(l.meet(m, x)) + l.height(l.join(m, x)) != rm + l.height(x)) {
      return false;
    }
  }
  return true;
}

bool is_rank_modular_chain(const ClosedSetLattice& l, const Chain& chain) {
  if (!l.graded()) {
    fail(ErrorCode::kNotGraded, "rank-modularity needs a graded lattice");
  }
  return std::all_of(chain.begin(), chain.end(),
                     [&](Subset m) { return is_rank_modular(l, m); });
}

std::vector<Subset> generated_sublattice(const ClosedSetLattice& l,
                                         const std::vector<Subset>& seed) {
  std::vector<bool> member(std::size_t{1} << l.op().ground_size(), false);
  std::vector<Subset> out;
  auto add = [&](Subset s) {
    if (member[s.bits()]) return false;
    member[s.bits()] = true;
    out.push_back(s);
    return true;
  };
  for (Subset s : seed) {
    if (!l.contains(s)) {
      fail(ErrorCode::kInvalidArgument,
           l.op().ground().format(s) + " is not in the lattice");
    }
    add(s);
  }
  // Pairs (i, j) with j < done have been combined already.
  std::size_t done = 0;
  while (done < out.size()) {
    const std::size_t end = out.size();
    for (std::size_t i = done; i < end; ++i) {
      for (std::size_t j = 0; j < end; ++j) {
        add(l.meet(out[i], out[j]));
        add(l.join(out[i], out[j]));
      }
    }
    done = end;
  }
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool is_distributive(const ClosedSetLattice& l,
                     const std::vector<Subset>& subset) {
  std::vector<bool> member(std::size_t{1} << l.op().ground_size(), false);
  for (Subset s : subset) member[s.bits()] = true;
  for (Subset a : subset) {
    for (Subset b : subset) {
      if (!member[l.meet(a, b).bits()] || !member[l.join(a, b).bits()]) {
        fail(ErrorCode::kNotASublattice,
             "not closed under meet and join at " + l.op().ground().format(a) +
                 ", " + l.op().ground().format(b));
      }
    }
  }
  for (Subset a : subset) {
    for (Subset b : subset) {
      for (Subset c : subset) {
        if (l.meet(a, l.join(b, c)) != l.join(l.meet(a, b), l.meet(a, c))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_chief_chain(const ClosedSetLattice& l, const Chain& c) {
  for (const Chain& m : l.maximal_chains()) {
    std::vector<Subset> seed = c;
    seed.insert(seed.end(), m.begin(), m.end());
    if (!is_distributive(l, generated_sublattice(l, seed))) return false;
  }
  return true;
}

std::vector<Chain> chief_chains(const ClosedSetLattice& l, bool force) {
  if (l.size() > kLatticeGuard && !force) {
    fail(ErrorCode::kLatticeTooLarge,
         "lattice with " + std::to_string(l.size()) + " elements exceeds " +
             std::to_string(kLatticeGuard));
  }
  // The pair test is symmetric in the two chains.
  const auto& chains = l.maximal_chains();
  const std::size_t k = chains.size();
  std::vector<signed char> memo(k * k, -1);
  auto pair_ok = [&](std::size_t i, std::size_t j) {
    signed char& r = memo[std::min(i, j) * k + std::max(i, j)];
    if (r < 0) {
      std::vector<Subset> seed = chains[i];
      seed.insert(seed.end(), chains[j].begin(), chains[j].end());
      r = is_distributive(l, generated_sublattice(l, seed)) ? 1 : 0;
    }
    return r == 1;
  };
  std::vector<Chain> out;
  for (std::size_t i = 0; i < k; ++i) {
    bool chief = true;
    for (std::size_t j = 0; j < k && chief; ++j) chief = pair_ok(i, j);
    if (chief) out.push_back(chains[i]);
  }
  return out;
}

namespace {

void require_maximal_chain(const ClosureOperator& cl, const Chain& c) {
  bool ok = !c.empty() && c.front().empty() && c.back() == cl.full();
  for (std::size_t i = 0; ok && i + 1 < c.size(); ++i) {
    const auto covers = upper_covers(cl, c[i]);
    ok = cl.is_closed(c[i]) &&
         std::find(covers.begin(), covers.end(), c[i + 1]) != covers.end();
  }
  if (!ok) fail(ErrorCode::kNotMaximalChain, "not a maximal chain of closed sets");
}

// Closure of a family of sets under union and intersection.
std::vector<bool> union_intersection_closure(int n,
                                             const std::vector<Subset>& seed) {
  std::vector<bool> member(std::size_t{1} << n, false);
  std::vector<Subset> items;
  for (Subset s : seed) {
    if (!member[s.bits()]) {
      member[s.bits()] = true;
      items.push_back(s);
    }
  }
  for (std::size_t i = 0; i < items.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      for (Subset s : {items[i] | items[j], items[i] & items[j]}) {
        if (!member[s.bits()]) {
          member[s.bits()] = true;
          items.push_back(s);
        }
      }
    }
  }
  return member;
}

}  // namespace

bool geometric_chief_condition(const ClosureOperator& cl, const Chain& c) {
  require_maximal_chain(cl, c);
  std::vector<Subset> blocks;
  for (std::size_t i = 1; i < c.size(); ++i) blocks.push_back(c[i] - c[i - 1]);
  const int k = static_cast<int>(blocks.size());
  for (const Chain& m : maximal_chains(cl)) {
    std::vector<Subset> seed = c;
    seed.insert(seed.end(), m.begin(), m.end());
    const auto in_pr = union_intersection_closure(cl.ground_size(), seed);
    // Walk block permutations whose prefix unions stay in L_pr; a complete
    // walk must only have visited closed sets.
    bool violated = false;
    auto walk = [&](auto& self, std::uint32_t used, Subset acc,
                    bool all_closed) -> void {
      if (violated) return;
      if (std::popcount(used) == k) {
        if (!all_closed) violated = true;
        return;
      }
      for (int j = 0; j < k; ++j) {
        if ((used >> j) & 1U) continue;
        const Subset next = acc | blocks[j];
        if (!in_pr[next.bits()]) continue;
        self(self, used | (1U << j), next, all_closed && cl.is_closed(next));
      }
    };
    walk(walk, 0, Subset(), true);
    if (violated) return false;
  }
  return true;
}

LinearOrder chain_to_order(const Chain& chain) {
  std::vector<int> word;
  for (std::size_t i = 1; i < chain.size(); ++i) {
    const Subset step = chain[i] - chain[i - 1];
    if (step.size() != 1) {
      fail(ErrorCode::kInvalidArgument, "chain step adds more than one element");
    }
    word.push_back(step.elements().front());
  }
  return LinearOrder(std::move(word));
}

namespace {

// Every labeled poset on [0, n) as down-set rows, its ideals as a bitmap over
// the 2^n subsets, and its relations as a bitmap over the n x n grid.
struct PosetTable {
  std::vector<std::vector<Subset>> down;
  std::vector<std::uint64_t> ideals;
  std::vector<std::uint64_t> relations;
};

constexpr int kTableMax = 6;

const PosetTable& poset_table(int n) {
  static std::mutex mutex;
  static std::map<int, PosetTable> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto [it, inserted] = tables.try_emplace(n);
  if (!inserted) return it->second;
  PosetTable& t = it->second;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, static_cast<char>('a' + i)));
  const GroundSet ground(std::move(labels));
  for_each_poset(ground, [&](const Poset& p) {
    std::vector<Subset> rows;
    std::uint64_t rel = 0;
    for (int i = 0; i < n; ++i) {
      rows.push_back(p.down_set(i));
      rel |= std::uint64_t{p.down_set(i).bits()} << (i * n);
    }
    std::uint64_t ids = 0;
    for (Subset s : ideals(p)) ids |= std::uint64_t{1} << s.bits();
    t.down.push_back(std::move(rows));
    t.ideals.push_back(ids);
    t.relations.push_back(rel);
  });
  return t;
}

std::vector<Poset> minimal_posets(std::vector<Poset> candidates) {
  auto weaker = [](const Poset& q, const Poset& p) {
    if (q == p) return false;
    for (int i = 0; i < p.size(); ++i) {
      if (!q.down_set(i).subset_of(p.down_set(i))) return false;
    }
    return true;
  };
  std::vector<Poset> out;
  for (const Poset& p : candidates) {
    const bool minimal = std::none_of(
        candidates.begin(), candidates.end(),
        [&](const Poset& q) { return weaker(q, p); });
    if (minimal) out.push_back(p);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Poset> maximal_convex_subposets(const ConvexGeometry& g,
                                            bool force) {
  const ClosureOperator& cl = g.op();
  const int n = cl.ground_size();
  if (n <= kTableMax) {
    const PosetTable& t = poset_table(n);
    std::uint64_t closed = 0;
    for (Subset s : cl.closed_sets()) closed |= std::uint64_t{1} << s.bits();
    std::vector<std::size_t> hits;
    for (std::size_t i = 0; i < t.ideals.size(); ++i) {
      if ((t.ideals[i] & ~closed) == 0) hits.push_back(i);
    }
    std::vector<Poset> out;
    for (std::size_t i : hits) {
      const bool minimal = std::none_of(hits.begin(), hits.end(), [&](std::size_t j) {
        return j != i && (t.relations[j] & ~t.relations[i]) == 0;
      });
      if (minimal) out.push_back(Poset::from_down_sets(cl.ground(), t.down[i]));
    }
    std::sort(out.begin(), out.end());
    return out;
  }
  const Subset::Bits count = Subset::Bits{1} << n;
  std::vector<Poset> candidates;
  for_each_poset(
      cl.ground(),
      [&](const Poset& p) {
        for (Subset::Bits m = 0; m < count; ++m) {
          if (p.is_ideal(Subset(m)) && !cl.is_closed(Subset(m))) return;
        }
        candidates.push_back(p);
      },
      force);
  return minimal_posets(std::move(candidates));
}

std::optional<Poset> supersolvable_geometric(const ConvexGeometry& g,
                                             bool force) {
  auto joined = acyclic_join(maximal_convex_subposets(g, force));
  if (auto* p = std::get_if<Poset>(&joined)) return *p;
  return std::nullopt;
}

SupersolvabilityReport supersolvability(const ConvexGeometry& g, bool force) {
  SupersolvabilityReport report;
  report.maximal_posets = maximal_convex_subposets(g, force);
  auto joined = acyclic_join(report.maximal_posets);
  if (auto* p = std::get_if<Poset>(&joined)) report.p0 = *p;
  const ClosedSetLattice lattice(g.op());
  report.chief_chains = chief_chains(lattice, force);
  report.supersolvable = report.p0.has_value();
  report.method_agreement =
      report.p0.has_value() == !report.chief_chains.empty();
  return report;
}

namespace {

bool reversed_base(CanonicalCharacter psi) {
  return psi == CanonicalCharacter::kZeta ||
         psi == CanonicalCharacter::kPhiPrime;
}

Poset require_p0(const ConvexGeometry& g) {
  auto p0 = supersolvable_geometric(g);
  if (!p0) {
    fail(ErrorCode::kNotSupersolvable,
         g.op().to_string() + " is not supersolvable");
  }
  return *p0;
}

std::vector<LinearOrder> chambers(const ConvexGeometry& g) {
  std::vector<LinearOrder> out;
  for (const Chain& c : maximal_chains(g.op())) out.push_back(chain_to_order(c));
  return out;
}

}  // namespace

LinearOrder default_base_order(const Poset& p0, CanonicalCharacter psi) {
  const LinearOrder first = linear_extensions(p0).front();
  return reversed_base(psi) ? first.reversed() : first;
}

std::vector<LinearOrder> valid_base_orders(const Poset& p0,
                                           CanonicalCharacter psi) {
  auto out = linear_extensions(p0);
  if (reversed_base(psi)) {
    for (auto& l : out) l = l.reversed();
  }
  return out;
}

namespace {

bool is_peak_character(CanonicalCharacter psi) {
  return psi == CanonicalCharacter::kPhi || psi == CanonicalCharacter::kPhiPrime;
}

// Index coefficients keyed by ab-word (descents) or cd-monomial (peaks).
std::map<std::string, Integer> theorem_coefficients(const ConvexGeometry& g,
                                                    CanonicalCharacter psi) {
  const AbPolynomial ab =
      ab_index(flag_h(flag_f(Character::canonical(psi), g.op())));
  if (!is_peak_character(psi)) return ab.coefficients;
  return cd_index(ab).coefficients;
}

TheoremReport theorem_report(const std::map<std::string, Integer>& coefficients,
                             const std::vector<LinearOrder>& chambers,
                             const LinearOrder& base, CanonicalCharacter psi) {
  const int n = base.size();
  const bool peak = is_peak_character(psi);
  TheoremReport report;
  report.base = base;
  for (const auto& [key, c] : coefficients) report.classes[key].coefficient = c;
  for (const LinearOrder& l : chambers) {
    const std::string key = peak ? peakset_cd_monomial(peak_set(base, l), n)
                                 : ab_word(descent_set(base, l), n);
    report.classes[key].chambers.push_back(l);
  }
  report.holds = true;
  for (auto& [key, cls] : report.classes) {
    cls.expected = static_cast<long long>(cls.chambers.size());
    if (peak) cls.expected <<= cd_monomial_peakset(key, n).size() + 1;
    if (cls.expected != cls.coefficient) report.holds = false;
  }
  return report;
}

void check_theorem_input(const ConvexGeometry& g, CanonicalCharacter psi,
                         bool peak) {
  if (peak != is_peak_character(psi)) {
    fail(ErrorCode::kInvalidArgument,
         peak ? "peak theorem covers phi and phi-prime"
              : "descent theorem covers eta and zeta");
  }
  if (g.op().ground_size() < 1) {
    fail(ErrorCode::kInvalidArgument, "theorem needs a nonempty ground set");
  }
}

}  // namespace

TheoremReport verify_descent_theorem(const ConvexGeometry& g,
                                     CanonicalCharacter psi,
                                     std::optional<LinearOrder> base) {
  check_theorem_input(g, psi, false);
  const LinearOrder b = base ? *base : default_base_order(require_p0(g), psi);
  return theorem_report(theorem_coefficients(g, psi), chambers(g), b, psi);
}

TheoremReport verify_peak_theorem(const ConvexGeometry& g,
                                  CanonicalCharacter psi,
                                  std::optional<LinearOrder> base) {
  check_theorem_input(g, psi, true);
  const LinearOrder b = base ? *base : default_base_order(require_p0(g), psi);
  return theorem_report(theorem_coefficients(g, psi), chambers(g), b, psi);
}

std::vector<TheoremReport> verify_theorem_all_bases(const ConvexGeometry& g,
                                                    const Poset& p0,
                                                    CanonicalCharacter psi) {
  check_theorem_input(g, psi, is_peak_character(psi));
  const auto coefficients = theorem_coefficients(g, psi);
  const auto all = chambers(g);
  std::vector<TheoremReport> out;
  for (const auto& base : valid_base_orders(p0, psi)) {
    out.push_back(theorem_report(coefficients, all, base, psi));
  }
  return out;
}

}  // namespace cgx
