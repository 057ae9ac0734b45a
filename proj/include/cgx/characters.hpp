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

// The canonical characters eta, zeta, phi, phi' on closure operators, their
// convolution products and sign twists, and antipode evaluation through the
// alternating sum over closed flags.

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "cgx/closure.hpp"

namespace cgx {

inline constexpr int kAntipodeGuard = 8;

enum class CanonicalCharacter { kEta, kZeta, kPhi, kPhiPrime };

// A character as a closed evaluation rule: one of the canonical characters,
// the sign twist of a character, or a convolution of two characters.
class Character {
 public:
  static Character canonical(CanonicalCharacter which);
  static Character eta() { return canonical(CanonicalCharacter::kEta); }
  static Character zeta() { return canonical(CanonicalCharacter::kZeta); }
  static Character phi() { return canonical(CanonicalCharacter::kPhi); }
  static Character phi_prime() {
    return canonical(CanonicalCharacter::kPhiPrime);
  }
  // Accepts "eta", "zeta", "phi", "phi-prime".
  static std::optional<Character> parse(std::string_view name);
  static Character convolution(Character left, Character right);

  // psi-bar: (-1)^|I| psi.
  Character bar() const;

  std::optional<CanonicalCharacter> as_canonical() const;
  std::string name() const;

  std::int64_t operator()(const ClosureOperator& cl) const;

 private:
  struct Node;
  explicit Character(std::shared_ptr<const Node> node)
      : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::string_view canonical_name(CanonicalCharacter which);

inline std::int64_t eval(const Character& psi, const ClosureOperator& cl) {
  return psi(cl);
}

// Sum over closed S of psi1(cl|_S) * psi2(cl/_S).
std::int64_t convolve(const Character& left, const Character& right,
                      const ClosureOperator& cl);

// Sum over strict compositions F with every prefix union closed of
// (-1)^k prod_i psi(minor over F_i). Throws GroundTooLarge above
// kAntipodeGuard unless `force`.
std::int64_t antipode_eval(const Character& psi, const ClosureOperator& cl,
                           bool force = false);

// True iff psi * bar(psi) is the unit character on every member of `corpus`.
bool is_odd_on(const Character& psi, std::span<const ClosureOperator> corpus);

}  // namespace cgx
