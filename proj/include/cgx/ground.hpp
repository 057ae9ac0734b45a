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

// Combinatorial substrate: ground sets, subset bitmasks, set and integer
// compositions, linear orders with their two-line descents and peaks, and the
// Tits product on set compositions.
//
// Positions (descents, peaks, b-positions of ab-words) are 1-based.

#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cgx {

inline constexpr int kMaxGround = 16;

// A subset of a ground set, bit i <-> the i-th label in canonical order.
class Subset {
 public:
  using Bits = std::uint32_t;

  constexpr Subset() = default;
  constexpr explicit Subset(Bits bits) : bits_(bits) {}

  static constexpr Subset singleton(int i) { return Subset(Bits{1} << i); }
  static constexpr Subset full(int n) {
    return Subset(n >= 32 ? ~Bits{0} : (Bits{1} << n) - 1);
  }

  constexpr Bits bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> i) & 1U; }
  constexpr bool subset_of(Subset other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr Subset with(int i) const { return Subset(bits_ | (Bits{1} << i)); }
  constexpr Subset without(int i) const {
    return Subset(bits_ & ~(Bits{1} << i));
  }

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  // Set difference.
  constexpr Subset operator-(Subset o) const {
    return Subset(bits_ & ~o.bits_);
  }
  constexpr Subset& operator|=(Subset o) {
    bits_ |= o.bits_;
    return *this;
  }

  constexpr bool operator==(const Subset&) const = default;
  constexpr auto operator<=>(const Subset&) const = default;

  std::vector<int> elements() const;

  template <typename Fn>
  void for_each_element(Fn&& fn) const {
    for (Bits b = bits_; b != 0; b &= b - 1) fn(std::countr_zero(b));
  }

 private:
  Bits bits_ = 0;
};

// Order by size, then lexicographically by the sorted element sequence. This is
// the order used for every serialized list of subsets.
bool canonical_less(Subset a, Subset b);

// Packs the bits of `s` lying in `support` into consecutive low bits.
Subset compress(Subset s, Subset support);
// Inverse of compress: spreads the low bits of `s` onto `support`.
Subset expand(Subset s, Subset support);

class SetComposition;
class LinearOrder;

class GroundSet {
 public:
  GroundSet() = default;
  // Labels are sorted; duplicates are rejected.
  explicit GroundSet(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_[i]; }
  std::optional<int> index_of(std::string_view label) const;
  Subset full() const { return Subset::full(size()); }

  Subset subset_of_labels(std::span<const std::string> labels) const;
  std::vector<std::string> labels_of(Subset s) const;
  // Sub-ground spanned by `s`, in canonical order.
  GroundSet restrict(Subset s) const;

  // "xy" for single-character labels, "{ab,cd}" otherwise, "{}" for empty.
  std::string format(Subset s) const;
  // Blocks joined by '|', e.g. "x|yz|w".
  std::string format(const SetComposition& f) const;
  std::string format(const LinearOrder& l) const;

  bool operator==(const GroundSet&) const = default;

 private:
  std::vector<std::string> labels_;
};

// 1-based positions in [1, 31].
class PositionSet {
 public:
  constexpr PositionSet() = default;
  constexpr explicit PositionSet(std::uint32_t bits) : bits_(bits) {}
  static PositionSet of(std::initializer_list<int> positions);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool contains(int pos) const { return (bits_ >> pos) & 1U; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr PositionSet with(int pos) const {
    return PositionSet(bits_ | (std::uint32_t{1} << pos));
  }
  constexpr bool subset_of(PositionSet o) const {
    return (bits_ & ~o.bits_) == 0;
  }
  std::vector<int> positions() const;
  std::string to_string() const;  // "{1,3}"

  constexpr bool operator==(const PositionSet&) const = default;
  constexpr auto operator<=>(const PositionSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

class IntegerComposition {
 public:
  IntegerComposition() = default;
  // Throws if any part is < 1.
  explicit IntegerComposition(std::vector<int> parts);
  // The composition of n whose partial sums are the positions of `s`.
  static IntegerComposition from_positions(PositionSet s, int n);
  // All 2^(n-1) compositions of n (the single empty composition for n = 0),
  // ordered by their position sets.
  static std::vector<IntegerComposition> all(int n);

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int total() const;
  // Partial sums alpha_1, alpha_1 + alpha_2, ..., excluding the total.
  PositionSet positions() const;
  std::string to_string() const;  // "(1,2)"

  bool operator==(const IntegerComposition&) const = default;
  auto operator<=>(const IntegerComposition&) const = default;

 private:
  std::vector<int> parts_;
};

// True iff `coarse` is obtained from `fine` by summing consecutive runs.
bool coarsens(const IntegerComposition& coarse,
              const IntegerComposition& fine);

class SetComposition {
 public:
  SetComposition() = default;
  // Throws unless the blocks are nonempty, disjoint and cover [0, n).
  SetComposition(std::vector<Subset> blocks, int n);

  const std::vector<Subset>& blocks() const { return blocks_; }
  int length() const { return static_cast<int>(blocks_.size()); }
  int ground_size() const { return n_; }
  // A_1, ..., A_k with A_i = F_1 u ... u F_i.
  std::vector<Subset> prefix_unions() const;
  bool is_chamber() const { return length() == n_; }

  bool operator==(const SetComposition&) const = default;
  auto operator<=>(const SetComposition&) const = default;

 private:
  std::vector<Subset> blocks_;
  int n_ = 0;
};

IntegerComposition composition_type(const SetComposition& f);

// Blocks F_i n G_j in lexicographic (i, j) order with empty ones dropped.
SetComposition tits_product(const SetComposition& f, const SetComposition& g);

// A permutation of the ground indices; word()[k] is the element at position
// k + 1.
class LinearOrder {
 public:
  LinearOrder() = default;
  explicit LinearOrder(std::vector<int> word);
  static LinearOrder identity(int n);

  const std::vector<int>& word() const { return word_; }
  int size() const { return static_cast<int>(word_.size()); }
  // 1-based position of element e.
  int rank_of(int e) const { return rank_[e]; }
  LinearOrder reversed() const;
  SetComposition as_composition() const;
  // Prefix sets {w_1}, {w_1,w_2}, ..., including the empty and full sets.
  std::vector<Subset> as_chain() const;

  bool operator==(const LinearOrder& o) const { return word_ == o.word_; }
  auto operator<=>(const LinearOrder& o) const { return word_ <=> o.word_; }

 private:
  std::vector<int> word_;
  std::vector<int> rank_;
};

// Two-line descents: i with rank_{base}(l_i) > rank_{base}(l_{i+1}).
PositionSet descent_set(const LinearOrder& base, const LinearOrder& l);
// Two-line peaks: i with rank(l_{i-1}) < rank(l_i) > rank(l_{i+1}).
PositionSet peak_set(const LinearOrder& base, const LinearOrder& l);

// {i in J : i >= 2, i - 1 not in J}.
PositionSet lambda_map(PositionSet j);

bool is_peak_set(PositionSet s, int n);
std::vector<PositionSet> peak_sets(int n);

// ab-word of length n - 1 with b exactly at the positions of `s`.
std::string ab_word(PositionSet s, int n);
PositionSet ab_word_positions(std::string_view word);

// All cd-monomials of degree `degree` (deg c = 1, deg d = 2), as strings over
// {c, d}, in lexicographic order.
std::vector<std::string> cd_monomials(int degree);
int cd_degree(std::string_view monomial);

// Degrees of the initial segments of m ending in d. Throws DegreeMismatch
// unless deg(m) = n - 1.
PositionSet cd_monomial_peakset(std::string_view monomial, int n);
// Inverse of cd_monomial_peakset; `s` must be a peak set of [n].
std::string peakset_cd_monomial(PositionSet s, int n);

}  // namespace cgx
