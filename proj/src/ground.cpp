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

#include "cgx/ground.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "cgx/error.hpp"

namespace cgx {

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(size());
  for_each_element([&](int i) { out.push_back(i); });
  return out;
}

bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  // Equal sizes: the first differing element decides, smaller index first.
  const Subset::Bits diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return a.contains(std::countr_zero(diff));
}

Subset compress(Subset s, Subset support) {
  Subset::Bits out = 0;
  int k = 0;
  support.for_each_element([&](int i) {
    if (s.contains(i)) out |= Subset::Bits{1} << k;
    ++k;
  });
  return Subset(out);
}

Subset expand(Subset s, Subset support) {
  Subset::Bits out = 0;
  int k = 0;
  support.for_each_element([&](int i) {
    if (s.contains(k)) out |= Subset::Bits{1} << i;
    ++k;
  });
  return Subset(out);
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  std::sort(labels_.begin(), labels_.end());
  if (std::adjacent_find(labels_.begin(), labels_.end()) != labels_.end()) {
    fail(ErrorCode::kInvalidArgument, "duplicate ground label");
  }
  if (size() > kMaxGround) {
    fail(ErrorCode::kGroundTooLarge,
         "ground set larger than " + std::to_string(kMaxGround));
  }
}

std::optional<int> GroundSet::index_of(std::string_view label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<int>(it - labels_.begin());
}

Subset GroundSet::subset_of_labels(std::span<const std::string> labels) const {
  Subset s;
  for (const auto& l : labels) {
    auto i = index_of(l);
    if (!i) fail(ErrorCode::kInvalidArgument, "unknown label '" + l + "'");
    s = s.with(*i);
  }
  return s;
}

std::vector<std::string> GroundSet::labels_of(Subset s) const {
  std::vector<std::string> out;
  s.for_each_element([&](int i) { out.push_back(labels_[i]); });
  return out;
}

GroundSet GroundSet::restrict(Subset s) const { return GroundSet(labels_of(s)); }

std::string GroundSet::format(Subset s) const {
  if (s.empty()) return "{}";
  const bool short_labels = std::all_of(
      labels_.begin(), labels_.end(),
      [](const std::string& l) { return l.size() == 1; });
  std::string out;
  if (!short_labels) out += '{';
  bool first = true;
  s.for_each_element([&](int i) {
    if (!short_labels && !first) out += ',';
    out += labels_[i];
    first = false;
  });
  if (!short_labels) out += '}';
  return out;
}

std::string GroundSet::format(const SetComposition& f) const {
  std::string out;
  for (Subset b : f.blocks()) {
    if (!out.empty()) out += '|';
    out += format(b);
  }
  return out;
}

std::string GroundSet::format(const LinearOrder& l) const {
  return format(l.as_composition());
}

PositionSet PositionSet::of(std::initializer_list<int> positions) {
  PositionSet s;
  for (int p : positions) s = s.with(p);
  return s;
}

std::vector<int> PositionSet::positions() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b));
  }
  return out;
}

std::string PositionSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int p : positions()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

IntegerComposition::IntegerComposition(std::vector<int> parts)
    : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) fail(ErrorCode::kInvalidArgument, "composition part < 1");
  }
}

IntegerComposition IntegerComposition::from_positions(PositionSet s, int n) {
  std::vector<int> parts;
  int prev = 0;
  for (int p : s.positions()) {
    if (p <= prev || p >= n) {
      fail(ErrorCode::kInvalidArgument, "position outside [1, n-1]");
    }
    parts.push_back(p - prev);
    prev = p;
  }
  if (n > 0) parts.push_back(n - prev);
  return IntegerComposition(std::move(parts));
}

std::vector<IntegerComposition> IntegerComposition::all(int n) {
  if (n == 0) return {IntegerComposition()};
  std::vector<IntegerComposition> out;
  const std::uint32_t count = std::uint32_t{1} << (n - 1);
  out.reserve(count);
  for (std::uint32_t m = 0; m < count; ++m) {
    out.push_back(from_positions(PositionSet(m << 1), n));
  }
  return out;
}

int IntegerComposition::total() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

PositionSet IntegerComposition::positions() const {
  PositionSet s;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i) {
    sum += parts_[i];
    s = s.with(sum);
  }
  return s;
}

std::string IntegerComposition::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

bool coarsens(const IntegerComposition& coarse,
              const IntegerComposition& fine) {
  if (coarse.total() != fine.total()) return false;
  return coarse.positions().subset_of(fine.positions());
}

SetComposition::SetComposition(std::vector<Subset> blocks, int n)
    : blocks_(std::move(blocks)), n_(n) {
  Subset seen;
  for (Subset b : blocks_) {
    if (b.empty()) fail(ErrorCode::kInvalidArgument, "empty block");
    if (!(b & seen).empty()) {
      fail(ErrorCode::kInvalidArgument, "blocks overlap");
    }
    seen |= b;
  }
  if (seen != Subset::full(n)) {
    fail(ErrorCode::kInvalidArgument, "blocks do not cover the ground set");
  }
}

std::vector<Subset> SetComposition::prefix_unions() const {
  std::vector<Subset> out;
  Subset acc;
  for (Subset b : blocks_) {
    acc |= b;
    out.push_back(acc);
  }
  return out;
}

IntegerComposition composition_type(const SetComposition& f) {
  std::vector<int> parts;
  for (Subset b : f.blocks()) parts.push_back(b.size());
  return IntegerComposition(std::move(parts));
}

SetComposition tits_product(const SetComposition& f, const SetComposition& g) {
  if (f.ground_size() != g.ground_size()) {
    fail(ErrorCode::kInvalidArgument, "Tits product on different grounds");
  }
  std::vector<Subset> blocks;
  for (Subset fi : f.blocks()) {
    for (Subset gj : g.blocks()) {
      if (Subset b = fi & gj; !b.empty()) blocks.push_back(b);
    }
  }
  return SetComposition(std::move(blocks), f.ground_size());
}

LinearOrder::LinearOrder(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  rank_.assign(n, 0);
  for (int k = 0; k < n; ++k) {
    const int e = word_[k];
    if (e < 0 || e >= n || rank_[e] != 0) {
      fail(ErrorCode::kInvalidArgument, "word is not a permutation");
    }
    rank_[e] = k + 1;
  }
}

LinearOrder LinearOrder::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  return LinearOrder(std::move(w));
}

LinearOrder LinearOrder::reversed() const {
  return LinearOrder(std::vector<int>(word_.rbegin(), word_.rend()));
}

SetComposition LinearOrder::as_composition() const {
  std::vector<Subset> blocks;
  for (int e : word_) blocks.push_back(Subset::singleton(e));
  return SetComposition(std::move(blocks), size());
}

std::vector<Subset> LinearOrder::as_chain() const {
  std::vector<Subset> chain{Subset()};
  for (int e : word_) chain.push_back(chain.back().with(e));
  return chain;
}

namespace {

void require_same_size(const LinearOrder& a, const LinearOrder& b) {
  if (a.size() != b.size()) {
    fail(ErrorCode::kInvalidArgument, "linear orders on different grounds");
  }
}

}  // namespace

PositionSet descent_set(const LinearOrder& base, const LinearOrder& l) {
  require_same_size(base, l);
  PositionSet s;
  const auto& w = l.word();
  for (int i = 1; i < l.size(); ++i) {
    if (base.rank_of(w[i - 1]) > base.rank_of(w[i])) s = s.with(i);
  }
  return s;
}

PositionSet peak_set(const LinearOrder& base, const LinearOrder& l) {
  require_same_size(base, l);
  PositionSet s;
  const auto& w = l.word();
  for (int i = 2; i < l.size(); ++i) {
    const int prev = base.rank_of(w[i - 2]);
    const int here = base.rank_of(w[i - 1]);
    const int next = base.rank_of(w[i]);
    if (prev < here && here > next) s = s.with(i);
  }
  return s;
}

PositionSet lambda_map(PositionSet j) {
  PositionSet out;
  for (int i : j.positions()) {
    if (i >= 2 && !j.contains(i - 1)) out = out.with(i);
  }
  return out;
}

bool is_peak_set(PositionSet s, int n) {
  for (int i : s.positions()) {
    if (i < 2 || i > n - 1 || s.contains(i - 1)) return false;
  }
  return true;
}

std::vector<PositionSet> peak_sets(int n) {
  std::vector<PositionSet> out;
  if (n <= 0) return {PositionSet()};
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << (n - 1)); ++m) {
    PositionSet s(m << 1);
    if (is_peak_set(s, n)) out.push_back(s);
  }
  return out;
}

std::string ab_word(PositionSet s, int n) {
  std::string w(n > 0 ? n - 1 : 0, 'a');
  for (int p : s.positions()) {
    if (p < 1 || p > n - 1) {
      fail(ErrorCode::kInvalidArgument, "b-position outside [1, n-1]");
    }
    w[p - 1] = 'b';
  }
  return w;
}

PositionSet ab_word_positions(std::string_view word) {
  PositionSet s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] == 'b') {
      s = s.with(static_cast<int>(i) + 1);
    } else if (word[i] != 'a') {
      fail(ErrorCode::kInvalidArgument, "ab-word with letter other than a/b");
    }
  }
  return s;
}

std::vector<std::string> cd_monomials(int degree) {
  std::vector<std::string> out;
  if (degree < 0) return out;
  if (degree == 0) return {""};
  for (auto& rest : cd_monomials(degree - 1)) out.push_back("c" + rest);
  for (auto& rest : cd_monomials(degree - 2)) out.push_back("d" + rest);
  return out;
}

int cd_degree(std::string_view monomial) {
  int deg = 0;
  for (char ch : monomial) {
    if (ch == 'c') {
      deg += 1;
    } else if (ch == 'd') {
      deg += 2;
    } else {
      fail(ErrorCode::kInvalidArgument, "cd-monomial with letter other than c/d");
    }
  }
  return deg;
}

PositionSet cd_monomial_peakset(std::string_view monomial, int n) {
  if (cd_degree(monomial) != n - 1) {
    fail(ErrorCode::kDegreeMismatch,
         "cd-monomial '" + std::string(monomial) + "' does not have degree " +
             std::to_string(n - 1));
  }
  PositionSet s;
  int deg = 0;
  for (char ch : monomial) {
    deg += ch == 'c' ? 1 : 2;
    if (ch == 'd') s = s.with(deg);
  }
  return s;
}

std::string peakset_cd_monomial(PositionSet s, int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "peak sets need n >= 1");
  if (!is_peak_set(s, n)) {
    fail(ErrorCode::kInvalidArgument, s.to_string() + " is not a peak set");
  }
  std::string m;
  int deg = 0;
  for (int p : s.positions()) {
    m.append(p - 2 - deg, 'c');
    m += 'd';
    deg = p;
  }
  m.append(n - 1 - deg, 'c');
  return m;
}

}  // namespace cgx
