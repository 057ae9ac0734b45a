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

#include "cgx/invariants.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "cgx/error.hpp"

namespace cgx {

// ---------------------------------------------------------------------------
// RationalPolynomial

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) {
    coefficients_.pop_back();
  }
}

RationalPolynomial RationalPolynomial::interpolate(
    const std::vector<Integer>& values) {
  // Forward-difference table, keeping the leading entry of each row.
  std::vector<Integer> row = values;
  std::vector<Integer> leading;
  while (!row.empty()) {
    leading.push_back(row.front());
    for (std::size_t i = 0; i + 1 < row.size(); ++i) row[i] = row[i + 1] - row[i];
    row.pop_back();
  }
  std::vector<Rational> coeffs(values.size(), Rational(0));
  // binom(x, k) as a polynomial, updated by multiplying with (x - k)/(k + 1).
  std::vector<Rational> binom{Rational(1)};
  for (std::size_t k = 0; k < leading.size(); ++k) {
    for (std::size_t d = 0; d < binom.size(); ++d) {
      coeffs[d] += Rational(leading[k]) * binom[d];
    }
    std::vector<Rational> next(binom.size() + 1, Rational(0));
    for (std::size_t d = 0; d < binom.size(); ++d) {
      next[d + 1] += binom[d];
      next[d] -= binom[d] * Rational(static_cast<long long>(k));
    }
    for (auto& c : next) c /= Rational(static_cast<long long>(k + 1));
    binom = std::move(next);
  }
  return RationalPolynomial(std::move(coeffs));
}

Rational RationalPolynomial::operator()(const Integer& x) const {
  Rational acc(0);
  const Rational rx(x);
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * rx + *it;
  }
  return acc;
}

std::string RationalPolynomial::to_string(std::string_view var) const {
  if (coefficients_.empty()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    const Rational& c = coefficients_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    if (d >= 1) mono = std::string(var);
    if (d >= 2) mono += "^" + std::to_string(d);
    if (mono.empty()) {
      out += cgx::to_string(mag);
    } else if (mag == 1) {
      out += mono;
    } else {
      out += cgx::to_string(mag) + "*" + mono;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial invariant

std::vector<Integer> transfer_matrix_values(const Character& psi,
                                            const ClosureOperator& cl,
                                            int count) {
  const auto& closed = cl.closed_sets();
  const std::size_t m = closed.size();
  // Sparse upper-triangular transfer matrix, rows by source index.
  std::vector<std::vector<std::pair<std::size_t, Integer>>> rows(m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (!closed[a].subset_of(closed[b])) continue;
      const std::int64_t w = psi(minor(cl, closed[a], closed[b]));
      if (w != 0) rows[a].emplace_back(b, Integer(w));
    }
  }
  const std::size_t bottom = 0;  // canonical order starts with {}
  const std::size_t top = m - 1;  // and ends with I
  std::vector<Integer> state(m, Integer(0));
  state[bottom] = 1;
  std::vector<Integer> values;
  for (int step = 0; step < count; ++step) {
    values.push_back(state[top]);
    std::vector<Integer> next(m, Integer(0));
    for (std::size_t a = 0; a < m; ++a) {
      if (state[a] == 0) continue;
      for (const auto& [b, w] : rows[a]) next[b] += state[a] * w;
    }
    state = std::move(next);
  }
  return values;
}

RationalPolynomial poly_invariant(const Character& psi,
                                  const ClosureOperator& cl) {
  const int n = cl.ground_size();
  auto values = transfer_matrix_values(psi, cl, n + 2);
  const Integer check = values.back();
  values.pop_back();
  auto chi = RationalPolynomial::interpolate(values);
  if (chi(Integer(n + 1)) != Rational(check)) {
    fail(ErrorCode::kInterpolationMismatch,
         "interpolant of degree <= " + std::to_string(n) +
             " misses the sample at " + std::to_string(n + 1));
  }
  return chi;
}

// ---------------------------------------------------------------------------
// Function-class counts

std::string_view function_class_name(FunctionClass c) {
  switch (c) {
    case FunctionClass::kExtremal: return "extremal";
    case FunctionClass::kStrictlyExtremal: return "strictly_extremal";
    case FunctionClass::kConvex: return "convex";
    case FunctionClass::kStrictlyConvex: return "strictly_convex";
    case FunctionClass::kEnrichedConvex: return "enriched_convex";
    case FunctionClass::kEnrichedExtremal: return "enriched_extremal";
  }
  return "?";
}

bool is_enriched(FunctionClass c) {
  return c == FunctionClass::kEnrichedConvex ||
         c == FunctionClass::kEnrichedExtremal;
}

namespace {

// Position in the chain 1bar < 1 < 2bar < 2 < ...; plain values map to
// themselves.
int enriched_rank(int v) { return v < 0 ? -2 * v - 1 : 2 * v; }

// Every set between lower and upper is closed, i.e. g_{lower:upper} is
// discrete (lower closed).
bool discrete_between(const ClosureOperator& cl, Subset lower, Subset upper) {
  const Subset free = upper - lower;
  const int k = free.size();
  for (Subset::Bits b = 0; b < (Subset::Bits{1} << k); ++b) {
    if (!cl.is_closed(lower | expand(Subset(b), free))) return false;
  }
  return true;
}

template <typename Pred>
Subset preimage(const FunctionValues& f, Pred pred) {
  Subset s;
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (pred(f[x])) s = s.with(static_cast<int>(x));
  }
  return s;
}

bool is_extremal(const ClosureOperator& cl, const FunctionValues& f,
                 bool strict) {
  for (Subset k : cl.closed_sets()) {
    if (k.empty()) continue;
    int top = 0;
    k.for_each_element([&](int x) { top = std::max(top, f[x]); });
    const Subset level = preimage(f, [&](int v) { return v == top; }) & k;
    const Subset ex = extreme_points(cl, k);
    if (strict ? !level.subset_of(ex) : (level & ex).empty()) return false;
  }
  return true;
}

bool is_convex_function(const ClosureOperator& cl, int n,
                        const FunctionValues& f, bool strict) {
  Subset prev;
  for (int m = 1; m <= n; ++m) {
    const Subset a = preimage(f, [&](int v) { return v <= m; });
    if (!cl.is_closed(a)) return false;
    if (strict && !discrete_between(cl, prev, a)) return false;
    prev = a;
  }
  return true;
}

bool is_enriched_convex(const ClosureOperator& cl, int n,
                        const FunctionValues& f) {
  Subset prev;  // A_{i-1} = f^{-1}([[i-1]])
  for (int i = 1; i <= n; ++i) {
    const Subset barred = preimage(f, [&](int v) { return v == -i; });
    const Subset with_bar = prev | barred;
    const Subset a = preimage(f, [&](int v) { return std::abs(v) <= i; });
    if (!cl.is_closed(with_bar) || !cl.is_closed(a)) return false;
    if (!discrete_between(cl, prev, with_bar)) return false;
    prev = a;
  }
  return true;
}

bool is_enriched_extremal(const ClosureOperator& cl, const FunctionValues& f) {
  for (Subset k : cl.closed_sets()) {
    if (k.empty()) continue;
    int low = INT32_MAX;
    k.for_each_element([&](int x) { low = std::min(low, enriched_rank(f[x])); });
    const Subset ex = extreme_points(cl, k);
    bool found = false;
    ex.for_each_element(
        [&](int x) { found = found || enriched_rank(f[x]) == low; });
    if (!found) return false;
  }
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (f[a] > 0) continue;
    const int r = enriched_rank(f[a]);
    const Subset upper =
        preimage(f, [&](int v) { return enriched_rank(v) >= r; });
    if (!extreme_points(cl, upper).contains(static_cast<int>(a))) return false;
  }
  return true;
}

void check_codomain(const ClosureOperator& cl, int n, FunctionClass which,
                    bool force) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "codomain size must be >= 1");
  const std::uint64_t width = is_enriched(which) ? 2ULL * n : n;
  std::uint64_t total = 1;
  for (int i = 0; i < cl.ground_size(); ++i) {
    total *= width;
    if (total > kFunctionCountGuard && !force) {
      fail(ErrorCode::kCodomainTooLarge,
           "more than " + std::to_string(kFunctionCountGuard) + " functions");
    }
  }
}

template <typename Visit>
void for_each_function(int size, int n, bool enriched, Visit visit) {
  std::vector<int> alphabet;
  if (enriched) {
    for (int i = n; i >= 1; --i) alphabet.push_back(-i);
  }
  for (int i = 1; i <= n; ++i) alphabet.push_back(i);
  std::vector<std::size_t> digits(size, 0);
  FunctionValues f(size, alphabet.front());
  while (true) {
    visit(f);
    int pos = size - 1;
    while (pos >= 0 && digits[pos] + 1 == alphabet.size()) {
      digits[pos] = 0;
      f[pos] = alphabet.front();
      --pos;
    }
    if (pos < 0) return;
    f[pos] = alphabet[++digits[pos]];
  }
}

}  // namespace

bool satisfies(const ClosureOperator& cl, int n, FunctionClass which,
               const FunctionValues& f) {
  switch (which) {
    case FunctionClass::kExtremal: return is_extremal(cl, f, false);
    case FunctionClass::kStrictlyExtremal: return is_extremal(cl, f, true);
    case FunctionClass::kConvex: return is_convex_function(cl, n, f, false);
    case FunctionClass::kStrictlyConvex:
      return is_convex_function(cl, n, f, true);
    case FunctionClass::kEnrichedConvex: return is_enriched_convex(cl, n, f);
    case FunctionClass::kEnrichedExtremal: return is_enriched_extremal(cl, f);
  }
  return false;
}

std::uint64_t count_functions(const ClosureOperator& cl, int n,
                              FunctionClass which, bool force) {
  check_codomain(cl, n, which, force);
  std::uint64_t count = 0;
  for_each_function(cl.ground_size(), n, is_enriched(which),
                    [&](const FunctionValues& f) {
                      if (satisfies(cl, n, which, f)) ++count;
                    });
  return count;
}

std::vector<FunctionValues> list_functions(const ClosureOperator& cl, int n,
                                           FunctionClass which, bool force) {
  check_codomain(cl, n, which, force);
  std::vector<FunctionValues> out;
  for_each_function(cl.ground_size(), n, is_enriched(which),
                    [&](const FunctionValues& f) {
                      if (satisfies(cl, n, which, f)) out.push_back(f);
                    });
  return out;
}

// ---------------------------------------------------------------------------
// Flag vectors

Integer FlagVector::at(const IntegerComposition& alpha) const {
  auto it = by_type.find(alpha);
  return it == by_type.end() ? Integer(0) : it->second;
}

FlagVector flag_f(const Character& psi, const ClosureOperator& cl) {
  FlagVector out;
  out.n = cl.ground_size();
  for (const auto& alpha : IntegerComposition::all(out.n)) {
    out.by_type[alpha] = 0;
  }
  std::map<std::pair<Subset, Subset>, std::int64_t> weight;
  auto weight_of = [&](Subset a, Subset b) {
    auto [it, inserted] = weight.try_emplace({a, b}, 0);
    if (inserted) it->second = psi(minor(cl, a, b));
    return it->second;
  };
  const auto& closed = cl.closed_sets();
  std::vector<Subset> blocks;
  auto walk = [&](auto& self, Subset at, Integer value) -> void {
    if (at == cl.full()) {
      SetComposition f(blocks, out.n);
      out.by_type[composition_type(f)] += value;
      out.by_set_composition.emplace(std::move(f), value);
      return;
    }
    for (Subset next : closed) {
      if (next == at || !at.subset_of(next)) continue;
      const std::int64_t w = weight_of(at, next);
      blocks.push_back(next - at);
      self(self, next, value * w);
      blocks.pop_back();
    }
  };
  walk(walk, Subset(), Integer(1));
  return out;
}

namespace {

// out_S = sum over T <= S of sign(|S| - |T|) * in_T, on position sets.
FlagVector subset_transform(const FlagVector& in, bool alternating) {
  FlagVector out;
  out.n = in.n;
  for (const auto& alpha : IntegerComposition::all(in.n)) {
    const PositionSet s = alpha.positions();
    Integer sum = 0;
    // Enumerate submasks of s.
    for (std::uint32_t t = s.bits();; t = (t - 1) & s.bits()) {
      const PositionSet sub(t);
      const Integer v = in.at(IntegerComposition::from_positions(sub, in.n));
      const bool odd = (s.size() - sub.size()) % 2 != 0;
      sum += (alternating && odd) ? Integer(-v) : v;
      if (t == 0) break;
    }
    out.by_type[alpha] = sum;
  }
  return out;
}

}  // namespace

FlagVector flag_h(const FlagVector& f) { return subset_transform(f, true); }

FlagVector flag_f_from_h(const FlagVector& h) {
  return subset_transform(h, false);
}

// ---------------------------------------------------------------------------
// ab- and cd-polynomials

namespace {

std::string format_monomial(const std::string& word) {
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += '*';
    out += word[i];
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string format_terms(const std::map<std::string, Integer>& terms) {
  std::string out;
  for (const auto& [word, c] : terms) {
    if (c == 0) continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const std::string mono = format_monomial(word);
    if (mono.empty()) {
      out += mag.str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.str() + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

// Parses sums like "8c^3 + 8*c*d - 24dc" over a two-letter alphabet.
std::map<std::string, Integer> parse_terms(std::string_view text,
                                           std::string_view alphabet) {
  std::map<std::string, Integer> out;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto bad = [&](const std::string& why) {
    fail(ErrorCode::kParseError,
         "polynomial '" + std::string(text) + "': " + why);
  };
  skip_space();
  if (i == text.size()) bad("empty");
  while (i < text.size()) {
    int sign = 1;
    skip_space();
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
      if (text[i] == '-') sign = -1;
      ++i;
      skip_space();
    }
    Integer coeff = 1;
    std::size_t start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i > start) coeff = Integer(std::string(text.substr(start, i - start)));
    std::string word;
    while (i < text.size()) {
      if (text[i] == '*' || std::isspace(static_cast<unsigned char>(text[i]))) {
        std::size_t j = i;
        while (j < text.size() &&
               (text[j] == '*' || std::isspace(static_cast<unsigned char>(text[j])))) {
          ++j;
        }
        if (j < text.size() && alphabet.find(text[j]) != std::string_view::npos) {
          i = j;
          continue;
        }
        break;
      }
      if (alphabet.find(text[i]) == std::string_view::npos) break;
      const char letter = text[i++];
      int power = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t ps = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == ps) bad("missing exponent");
        power = std::stoi(std::string(text.substr(ps, i - ps)));
      }
      word.append(power, letter);
    }
    if (start == i && word.empty()) bad("expected a term");
    out[word] += sign * coeff;
    skip_space();
    if (i < text.size() && text[i] != '+' && text[i] != '-') {
      bad("unexpected character '" + std::string(1, text[i]) + "'");
    }
  }
  return out;
}

std::vector<std::string> all_ab_words(int n) {
  std::vector<std::string> out;
  const int len = n - 1;
  for (std::uint32_t m = 0; m < (std::uint32_t{1} << len); ++m) {
    out.push_back(ab_word(PositionSet(m << 1), n));
  }
  std::sort(out.begin(), out.end());
  return out;
}

void expand_monomial(const std::string& cd, std::size_t pos, std::string& prefix,
                     std::vector<std::string>& out) {
  if (pos == cd.size()) {
    out.push_back(prefix);
    return;
  }
  const std::size_t keep = prefix.size();
  if (cd[pos] == 'c') {
    for (const char* piece : {"a", "b"}) {
      prefix += piece;
      expand_monomial(cd, pos + 1, prefix, out);
      prefix.resize(keep);
    }
  } else {
    for (const char* piece : {"ab", "ba"}) {
      prefix += piece;
      expand_monomial(cd, pos + 1, prefix, out);
      prefix.resize(keep);
    }
  }
}

std::vector<std::string> expand_monomial(const std::string& cd) {
  std::vector<std::string> out;
  std::string prefix;
  expand_monomial(cd, 0, prefix, out);
  return out;
}

}  // namespace

Integer AbPolynomial::at(const std::string& word) const {
  auto it = coefficients.find(word);
  return it == coefficients.end() ? Integer(0) : it->second;
}

std::string AbPolynomial::to_string() const { return format_terms(coefficients); }

Integer CdPolynomial::at(const std::string& monomial) const {
  auto it = coefficients.find(monomial);
  return it == coefficients.end() ? Integer(0) : it->second;
}

std::string CdPolynomial::to_string() const { return format_terms(coefficients); }

AbPolynomial ab_index(const FlagVector& h) {
  if (h.n < 1) fail(ErrorCode::kInvalidArgument, "ab-index needs n >= 1");
  AbPolynomial out;
  out.n = h.n;
  for (const auto& alpha : IntegerComposition::all(h.n)) {
    out.coefficients[ab_word(alpha.positions(), h.n)] = h.at(alpha);
  }
  return out;
}

AbPolynomial parse_ab_polynomial(std::string_view text, int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "ab-polynomial needs n >= 1");
  AbPolynomial out;
  out.n = n;
  for (const auto& w : all_ab_words(n)) out.coefficients[w] = 0;
  for (auto& [word, c] : parse_terms(text, "ab")) {
    if (c == 0) continue;
    if (static_cast<int>(word.size()) != n - 1) {
      fail(ErrorCode::kDegreeMismatch, "ab-word '" + word + "' has wrong length");
    }
    out.coefficients[word] += c;
  }
  return out;
}

CdPolynomial parse_cd_polynomial(std::string_view text, int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "cd-polynomial needs n >= 1");
  CdPolynomial out;
  out.n = n;
  for (const auto& m : cd_monomials(n - 1)) out.coefficients[m] = 0;
  for (auto& [mono, c] : parse_terms(text, "cd")) {
    if (c == 0) continue;
    if (cd_degree(mono) != n - 1) {
      fail(ErrorCode::kDegreeMismatch, "cd-monomial '" + mono + "' has wrong degree");
    }
    out.coefficients[mono] += c;
  }
  return out;
}

AbPolynomial expand_cd(const CdPolynomial& phi) {
  AbPolynomial out;
  out.n = phi.n;
  for (const auto& w : all_ab_words(phi.n)) out.coefficients[w] = 0;
  for (const auto& [mono, c] : phi.coefficients) {
    if (c == 0) continue;
    for (const auto& w : expand_monomial(mono)) out.coefficients[w] += c;
  }
  return out;
}

CdPolynomial cd_index(const AbPolynomial& psi) {
  if (psi.n < 1) fail(ErrorCode::kInvalidArgument, "cd-index needs n >= 1");
  const auto words = all_ab_words(psi.n);
  const auto basis = cd_monomials(psi.n - 1);
  std::map<std::string, std::size_t> row_of;
  for (std::size_t r = 0; r < words.size(); ++r) row_of[words[r]] = r;
  for (const auto& [w, c] : psi.coefficients) {
    if (!row_of.count(w)) {
      fail(ErrorCode::kDegreeMismatch, "ab-word '" + w + "' has wrong length");
    }
  }
  // Augmented system [E | psi], E[word][monomial] = coefficient of word in
  // the expansion of the monomial.
  const std::size_t rows = words.size();
  const std::size_t cols = basis.size();
  std::vector<std::vector<Rational>> m(rows,
                                       std::vector<Rational>(cols + 1, Rational(0)));
  for (std::size_t c = 0; c < cols; ++c) {
    for (const auto& w : expand_monomial(basis[c])) m[row_of[w]][c] += 1;
  }
  for (std::size_t r = 0; r < rows; ++r) m[r][cols] = Rational(psi.at(words[r]));

  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[rank]);
    const Rational inv = Rational(1) / m[rank][c];
    for (auto& v : m[rank]) v *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const Rational factor = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  if (rank != cols) {
    fail(ErrorCode::kInternalInconsistency, "cd-monomial expansions are dependent");
  }
  CdPolynomial out;
  out.n = psi.n;
  bool integral = true;
  for (std::size_t r = 0; r < rank; ++r) {
    const Rational& v = m[r][cols];
    if (boost::multiprecision::denominator(v) != 1) integral = false;
    out.coefficients[basis[pivot_col[r]]] = boost::multiprecision::numerator(v);
  }
  AbPolynomial residual = psi;
  const AbPolynomial back = expand_cd(out);
  bool zero = integral;
  for (auto& [w, c] : residual.coefficients) {
    c -= back.at(w);
    if (c != 0) zero = false;
  }
  if (!zero) {
    fail(ErrorCode::kNotInCdSpan,
         "not in the cd-span; residual " + residual.to_string());
  }
  return out;
}

// ---------------------------------------------------------------------------
// Flags of closed sets

bool interior_membership(const ClosureOperator& cl, const SetComposition& f) {
  Subset prev;
  for (Subset a : f.prefix_unions()) {
    if (!cl.is_closed(a) || !discrete_between(cl, prev, a)) return false;
    prev = a;
  }
  return true;
}

ExVector ex_vector(const ClosureOperator& cl, const SetComposition& f) {
  ExVector out;
  Subset prev;
  for (Subset a : f.prefix_unions()) {
    if (!cl.is_closed(a)) {
      fail(ErrorCode::kNotAFlag, cl.ground().format(a) + " is not closed");
    }
    const Subset block = a - prev;
    const ClosureOperator piece = minor(cl, prev, a);
    const Subset ex = expand(extreme_points(piece, piece.full()), block);
    out.entries.push_back(ex);
    out.total += ex.size();
    prev = a;
  }
  return out;
}

}  // namespace cgx
