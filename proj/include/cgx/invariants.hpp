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

// Invariants attached to a character and a closure operator: the polynomial
// invariant (transfer-matrix powers plus exact Newton interpolation), the
// brute-force function-class counts it enumerates, flag f- and h-vectors, and
// the ab- and cd-indices.

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cgx/characters.hpp"
#include "cgx/closure.hpp"
#include "cgx/ground.hpp"
#include "cgx/numeric.hpp"

namespace cgx {

// Exact one-variable polynomial, coefficients in ascending degree with no
// trailing zeros.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);

  // The interpolant through (0, v_0), (1, v_1), ... built from forward
  // differences: p(x) = sum_k (Delta^k v)(0) * binom(x, k).
  static RationalPolynomial interpolate(const std::vector<Integer>& values);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  Rational operator()(const Integer& x) const;
  // "1/6*n^3 + 1/2*n^2 + 1/3*n", "0" for the zero polynomial.
  std::string to_string(std::string_view var = "n") const;

  bool operator==(const RationalPolynomial&) const = default;

 private:
  std::vector<Rational> coefficients_;
};

// chi^psi(n) = (M^n)[{}][I] for the transfer matrix M[A][B] = psi(g_{A:B})
// over closed A <= B, interpolated from n = 0..|I| and checked at |I| + 1.
// Throws InterpolationMismatch if the extra sample disagrees.
RationalPolynomial poly_invariant(const Character& psi,
                                  const ClosureOperator& cl);

// The values chi^psi(0), ..., chi^psi(count - 1) straight from the transfer
// matrix.
std::vector<Integer> transfer_matrix_values(const Character& psi,
                                            const ClosureOperator& cl,
                                            int count);

inline Rational eval_poly(const RationalPolynomial& chi, const Integer& n) {
  return chi(n);
}

enum class FunctionClass {
  kExtremal,
  kStrictlyExtremal,
  kConvex,
  kStrictlyConvex,
  kEnrichedConvex,
  kEnrichedExtremal,
};

std::string_view function_class_name(FunctionClass c);
bool is_enriched(FunctionClass c);

inline constexpr std::uint64_t kFunctionCountGuard = 100'000'000;

// A function I -> codomain as its value list in ground order. Plain classes
// use 1..n; enriched classes use -n..-1, 1..n where -i is the barred i and the
// order is 1bar < 1 < 2bar < 2 < ...
using FunctionValues = std::vector<int>;

// Exhaustive count over all functions. Throws CodomainTooLarge when
// |codomain|^|I| exceeds kFunctionCountGuard unless `force`.
std::uint64_t count_functions(const ClosureOperator& cl, int n,
                              FunctionClass which, bool force = false);
// The functions themselves, in lexicographic order of value lists.
std::vector<FunctionValues> list_functions(const ClosureOperator& cl, int n,
                                           FunctionClass which,
                                           bool force = false);
bool satisfies(const ClosureOperator& cl, int n, FunctionClass which,
               const FunctionValues& f);

// Coefficient table of the quasisymmetric invariant. by_set_composition only
// stores compositions whose prefix unions are all closed (the others vanish);
// by_type covers every composition of n, zeros included.
struct FlagVector {
  int n = 0;
  std::map<SetComposition, Integer> by_set_composition;
  std::map<IntegerComposition, Integer> by_type;

  Integer at(const IntegerComposition& alpha) const;
};

FlagVector flag_f(const Character& psi, const ClosureOperator& cl);
// h_alpha = sum over beta coarsening alpha of (-1)^(l(alpha) - l(beta)) f_beta.
FlagVector flag_h(const FlagVector& f);
// f_alpha = sum over beta coarsening alpha of h_beta.
FlagVector flag_f_from_h(const FlagVector& h);

// Homogeneous noncommutative polynomial of degree n - 1 in a, b. Every word
// is present, zero coefficients included.
struct AbPolynomial {
  int n = 0;
  std::map<std::string, Integer> coefficients;

  Integer at(const std::string& word) const;
  // "a^3 + 3*b*a*a + ...", ordered by word.
  std::string to_string() const;
  bool operator==(const AbPolynomial&) const = default;
};

// Homogeneous polynomial in c (degree 1) and d (degree 2) of degree n - 1.
struct CdPolynomial {
  int n = 0;
  std::map<std::string, Integer> coefficients;

  Integer at(const std::string& monomial) const;
  std::string to_string() const;
  bool operator==(const CdPolynomial&) const = default;
};

// Word for alpha has b exactly at the partial sums of alpha.
AbPolynomial ab_index(const FlagVector& h);
// Accepts sums such as "baa + 3aba + 2*b*b*a + b^3"; words must have length
// n - 1. Missing words get coefficient 0.
AbPolynomial parse_ab_polynomial(std::string_view text, int n);
CdPolynomial parse_cd_polynomial(std::string_view text, int n);

// Expansion under c = a + b, d = ab + ba.
AbPolynomial expand_cd(const CdPolynomial& phi);

// Exact linear solve over the full cd-monomial basis. Throws NotInCdSpan with
// the residual when the ab-polynomial is outside the span.
CdPolynomial cd_index(const AbPolynomial& psi);

// Every prefix union closed and every consecutive minor discrete.
bool interior_membership(const ClosureOperator& cl, const SetComposition& f);

struct ExVector {
  std::vector<Subset> entries;  // extreme points of each minor, in I
  int total = 0;
};

// Throws NotAFlag unless every prefix union of f is closed.
ExVector ex_vector(const ClosureOperator& cl, const SetComposition& f);

}  // namespace cgx
