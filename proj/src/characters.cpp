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

#include "cgx/characters.hpp"

#include <map>
#include <variant>

#include "cgx/error.hpp"

namespace cgx {

struct Character::Node {
  struct Bar {
    std::shared_ptr<const Node> inner;
  };
  struct Convolution {
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };
  std::variant<CanonicalCharacter, Bar, Convolution> rule;
};

namespace {

std::int64_t eval_canonical(CanonicalCharacter which,
                            const ClosureOperator& cl) {
  switch (which) {
    case CanonicalCharacter::kEta:
      return 1;
    case CanonicalCharacter::kZeta:
      return is_discrete(cl) ? 1 : 0;
    case CanonicalCharacter::kPhi:
      return static_cast<std::int64_t>(totally_convex_sets(cl).size());
    case CanonicalCharacter::kPhiPrime:
      return std::int64_t{1} << extreme_points(cl, cl.full()).size();
  }
  return 0;
}

}  // namespace

Character Character::canonical(CanonicalCharacter which) {
  return Character(std::make_shared<const Node>(Node{which}));
}

std::optional<Character> Character::parse(std::string_view name) {
  for (auto which : {CanonicalCharacter::kEta, CanonicalCharacter::kZeta,
                     CanonicalCharacter::kPhi, CanonicalCharacter::kPhiPrime}) {
    if (canonical_name(which) == name) return canonical(which);
  }
  return std::nullopt;
}

Character Character::convolution(Character left, Character right) {
  return Character(std::make_shared<const Node>(
      Node{Node::Convolution{std::move(left.node_), std::move(right.node_)}}));
}

Character Character::bar() const {
  return Character(std::make_shared<const Node>(Node{Node::Bar{node_}}));
}

std::optional<CanonicalCharacter> Character::as_canonical() const {
  if (auto* c = std::get_if<CanonicalCharacter>(&node_->rule)) return *c;
  return std::nullopt;
}

std::string Character::name() const {
  return std::visit(
      [](const auto& rule) -> std::string {
        using T = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<T, CanonicalCharacter>) {
          return std::string(canonical_name(rule));
        } else if constexpr (std::is_same_v<T, Node::Bar>) {
          return "bar(" + Character(rule.inner).name() + ")";
        } else {
          return "(" + Character(rule.left).name() + "*" +
                 Character(rule.right).name() + ")";
        }
      },
      node_->rule);
}

std::int64_t Character::operator()(const ClosureOperator& cl) const {
  return std::visit(
      [&](const auto& rule) -> std::int64_t {
        using T = std::decay_t<decltype(rule)>;
        if constexpr (std::is_same_v<T, CanonicalCharacter>) {
          return eval_canonical(rule, cl);
        } else if constexpr (std::is_same_v<T, Node::Bar>) {
          const std::int64_t v = Character(rule.inner)(cl);
          return cl.ground_size() % 2 == 0 ? v : -v;
        } else {
          return convolve(Character(rule.left), Character(rule.right), cl);
        }
      },
      node_->rule);
}

std::string_view canonical_name(CanonicalCharacter which) {
  switch (which) {
    case CanonicalCharacter::kEta: return "eta";
    case CanonicalCharacter::kZeta: return "zeta";
    case CanonicalCharacter::kPhi: return "phi";
    case CanonicalCharacter::kPhiPrime: return "phi-prime";
  }
  return "?";
}

std::int64_t convolve(const Character& left, const Character& right,
                      const ClosureOperator& cl) {
  std::int64_t total = 0;
  for (Subset s : cl.closed_sets()) {
    total += left(restriction(cl, s)) * right(contraction(cl, s));
  }
  return total;
}

std::int64_t antipode_eval(const Character& psi, const ClosureOperator& cl,
                           bool force) {
  if (cl.ground_size() > kAntipodeGuard && !force) {
    fail(ErrorCode::kGroundTooLarge,
         "antipode evaluation above " + std::to_string(kAntipodeGuard) +
             " elements");
  }
  // tail[A] = sum over strict closed flags A = B_0 < B_1 < ... < B_j = I of
  // (-1)^j prod psi(minor(B_{i-1}, B_i)). Visiting closed sets from the top
  // down makes every tail[B] with B > A available.
  const auto& closed = cl.closed_sets();
  std::map<Subset, std::int64_t> tail;
  for (auto it = closed.rbegin(); it != closed.rend(); ++it) {
    const Subset a = *it;
    if (a == cl.full()) {
      tail[a] = 1;
      continue;
    }
    std::int64_t sum = 0;
    for (const auto& [b, t] : tail) {
      if (a.subset_of(b) && a != b) sum -= psi(minor(cl, a, b)) * t;
    }
    tail[a] = sum;
  }
  return tail.at(Subset());
}

bool is_odd_on(const Character& psi, std::span<const ClosureOperator> corpus) {
  const Character twisted = psi.bar();
  for (const auto& cl : corpus) {
    const std::int64_t unit = cl.ground_size() == 0 ? 1 : 0;
    if (convolve(psi, twisted, cl) != unit) return false;
  }
  return true;
}

}  // namespace cgx
