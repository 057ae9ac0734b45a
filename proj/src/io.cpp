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

#include "cgx/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cgx/error.hpp"

namespace cgx {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(std::string_view text, std::size_t byte,
                             const std::string& what) {
  int line = 1;
  int column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  fail(ErrorCode::kParseError, "line " + std::to_string(line) + ", column " +
                                   std::to_string(column) + ": " + what);
}

std::vector<std::string> string_array(const json& value, const char* what) {
  if (!value.is_array()) {
    fail(ErrorCode::kParseError, std::string(what) + " must be an array");
  }
  std::vector<std::string> out;
  for (const auto& item : value) {
    if (!item.is_string()) {
      fail(ErrorCode::kParseError,
           std::string(what) + " must contain only strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::string label_list(const GroundSet& ground, Subset s) {
  std::string out = "[";
  bool first = true;
  for (const auto& l : ground.labels_of(s)) {
    if (!first) out += ", ";
    out += quoted(l);
    first = false;
  }
  return out + "]";
}

}  // namespace

GeometryFile parse_geometry(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    parse_fail(text, e.byte > 0 ? e.byte - 1 : 0, e.what());
  }
  if (!doc.is_object()) fail(ErrorCode::kParseError, "top level must be an object");
  if (!doc.contains("ground")) fail(ErrorCode::kParseError, "missing \"ground\"");
  if (!doc.contains("closed")) fail(ErrorCode::kParseError, "missing \"closed\"");
  for (const auto& [key, value] : doc.items()) {
    if (key != "ground" && key != "closed" && key != "meta") {
      fail(ErrorCode::kParseError, "unexpected key \"" + key + "\"");
    }
  }
  GeometryFile out;
  GroundSet ground(string_array(doc["ground"], "\"ground\""));
  const json& closed = doc["closed"];
  if (!closed.is_array()) fail(ErrorCode::kParseError, "\"closed\" must be an array");
  std::vector<Subset> family;
  std::set<Subset> seen;
  for (const auto& entry : closed) {
    const auto labels = string_array(entry, "each closed set");
    Subset s;
    for (const auto& l : labels) {
      auto i = ground.index_of(l);
      if (!i) fail(ErrorCode::kParseError, "closed set uses unknown label \"" + l + "\"");
      s = s.with(*i);
    }
    if (!seen.insert(s).second) {
      out.warnings.push_back("duplicate closed set " + ground.format(s) +
                             " ignored");
    }
    family.push_back(s);
  }
  if (doc.contains("meta")) {
    if (!doc["meta"].is_object()) {
      fail(ErrorCode::kParseError, "\"meta\" must be an object");
    }
    out.meta_json = doc["meta"].dump();
  }
  out.op = ClosureOperator::validate(std::move(ground), std::move(family));
  return out;
}

GeometryFile read_geometry_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::kParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_geometry(buf.str());
}

std::string serialize_geometry(const ClosureOperator& op,
                               std::string_view meta_json) {
  const GroundSet& ground = op.ground();
  std::string out = "{\n  \"ground\": " + label_list(ground, ground.full()) +
                    ",\n  \"closed\": [";
  const auto& closed = op.closed_sets();
  for (std::size_t i = 0; i < closed.size(); ++i) {
    out += i ? ",\n    " : "\n    ";
    out += label_list(ground, closed[i]);
  }
  out += "\n  ]";
  if (!meta_json.empty()) {
    out += ",\n  \"meta\": " + json::parse(meta_json).dump();
  }
  return out + "\n}\n";
}

// ---------------------------------------------------------------------------
// Generators

Poset parse_poset_edges(std::string_view edges,
                        const std::vector<std::string>& extra_labels) {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::set<std::string> labels(extra_labels.begin(), extra_labels.end());
  std::string item;
  std::stringstream ss{std::string(edges)};
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
  };
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto lt = item.find('<');
    if (lt == std::string::npos) {
      // A bare label adds an element without relations.
      labels.insert(item);
      continue;
    }
    std::string a = trim(item.substr(0, lt));
    std::string b = trim(item.substr(lt + 1));
    if (a.empty() || b.empty() || b.find('<') != std::string::npos) {
      fail(ErrorCode::kParseError, "bad edge \"" + item + "\"");
    }
    labels.insert(a);
    labels.insert(b);
    pairs.emplace_back(std::move(a), std::move(b));
  }
  GroundSet ground(std::vector<std::string>(labels.begin(), labels.end()));
  std::vector<std::pair<int, int>> less;
  for (const auto& [a, b] : pairs) {
    if (a == b) fail(ErrorCode::kCyclicRelations, "edge " + a + "<" + a);
    less.emplace_back(*ground.index_of(a), *ground.index_of(b));
  }
  return Poset::from_relations(std::move(ground), less);
}

std::vector<Point2> parse_points(std::string_view text) {
  std::vector<Point2> out;
  std::stringstream ss{std::string(text)};
  std::string item;
  auto number = [](const std::string& s) {
    try {
      return Rational(s);
    } catch (const std::exception&) {
      fail(ErrorCode::kParseError, "bad coordinate \"" + s + "\"");
    }
  };
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos) {
      fail(ErrorCode::kParseError, "point \"" + item + "\" needs x,y");
    }
    auto strip = [](std::string s) {
      s.erase(std::remove_if(s.begin(), s.end(),
                             [](unsigned char c) { return std::isspace(c); }),
              s.end());
      return s;
    };
    out.push_back({number(strip(item.substr(0, comma))),
                   number(strip(item.substr(comma + 1)))});
  }
  return out;
}

std::vector<std::string> numeric_labels(int n) {
  std::vector<std::string> out;
  const int width = static_cast<int>(std::to_string(n).size());
  for (int i = 1; i <= n; ++i) {
    std::string s = std::to_string(i);
    out.push_back(std::string(width - s.size(), '0') + s);
  }
  return out;
}

namespace {

Rational orientation(const Point2& a, const Point2& b, const Point2& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

bool on_segment(const Point2& a, const Point2& b, const Point2& q) {
  if (orientation(a, b, q) != 0) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool in_triangle(const Point2& a, const Point2& b, const Point2& c,
                 const Point2& q) {
  const Rational abc = orientation(a, b, c);
  if (abc == 0) return false;
  const Rational o1 = orientation(a, b, q);
  const Rational o2 = orientation(b, c, q);
  const Rational o3 = orientation(c, a, q);
  if (abc > 0) return o1 >= 0 && o2 >= 0 && o3 >= 0;
  return o1 <= 0 && o2 <= 0 && o3 <= 0;
}

}  // namespace

ClosureOperator points2d_geometry(const std::vector<Point2>& points,
                                  std::vector<std::string> labels) {
  const int k = static_cast<int>(points.size());
  if (labels.empty()) {
    for (const auto& l : numeric_labels(k)) labels.push_back("p" + l);
  }
  if (static_cast<int>(labels.size()) != k) {
    fail(ErrorCode::kInvalidArgument, "one label per point required");
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      if (points[i].x == points[j].x && points[i].y == points[j].y) {
        fail(ErrorCode::kDuplicatePoints,
             "points " + labels[i] + " and " + labels[j] + " coincide");
      }
    }
  }
  // Ground order is label order; map each ground index to its point.
  GroundSet ground(labels);
  std::vector<Point2> at(k);
  for (int i = 0; i < k; ++i) at[*ground.index_of(labels[i])] = points[i];
  // witnesses[q]: 2- and 3-point sets whose hull contains q (Caratheodory).
  std::vector<std::vector<Subset>> witnesses(k);
  for (int q = 0; q < k; ++q) {
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        if (a == q || b == q) continue;
        if (on_segment(at[a], at[b], at[q])) {
          witnesses[q].push_back(Subset::singleton(a).with(b));
        }
        for (int c = b + 1; c < k; ++c) {
          if (c == q) continue;
          if (in_triangle(at[a], at[b], at[c], at[q])) {
            witnesses[q].push_back(Subset::singleton(a).with(b).with(c));
          }
        }
      }
    }
  }
  std::vector<Subset> closed;
  for (Subset::Bits m = 0; m < (Subset::Bits{1} << k); ++m) {
    const Subset s(m);
    bool hull_closed = true;
    for (int q = 0; q < k && hull_closed; ++q) {
      if (s.contains(q)) continue;
      for (Subset w : witnesses[q]) {
        if (w.subset_of(s)) {
          hull_closed = false;
          break;
        }
      }
    }
    if (hull_closed) closed.push_back(s);
  }
  return ClosureOperator::validate(std::move(ground), std::move(closed));
}

ClosureOperator from_poset(const Poset& p) { return to_convex_geometry(p).op(); }

ClosureOperator chain_geometry(int n, std::vector<std::string> labels) {
  if (labels.empty()) labels = numeric_labels(n);
  if (static_cast<int>(labels.size()) != n) {
    fail(ErrorCode::kInvalidArgument, "one label per element required");
  }
  GroundSet ground(labels);
  std::vector<std::pair<int, int>> less;
  for (int i = 0; i + 1 < n; ++i) {
    less.emplace_back(*ground.index_of(labels[i]), *ground.index_of(labels[i + 1]));
  }
  return from_poset(Poset::from_relations(std::move(ground), less));
}

ClosureOperator antichain_geometry(int n, std::vector<std::string> labels) {
  if (labels.empty()) labels = numeric_labels(n);
  if (static_cast<int>(labels.size()) != n) {
    fail(ErrorCode::kInvalidArgument, "one label per element required");
  }
  return from_poset(Poset(GroundSet(std::move(labels))));
}

// ---------------------------------------------------------------------------
// Corpus

std::vector<ConvexGeometry> enumerate_convex_geometries(int n, bool force) {
  if (n < 0) fail(ErrorCode::kInvalidArgument, "negative ground size");
  if (n > kCorpusGuard && !force) {
    fail(ErrorCode::kGroundTooLarge,
         "corpus enumeration above " + std::to_string(kCorpusGuard) +
             " elements");
  }
  const GroundSet ground(numeric_labels(n));
  const Subset full = ground.full();
  // Proper nonempty subsets from large to small; {} is decided last.
  std::vector<Subset> order;
  for (Subset::Bits m = 0; m < (Subset::Bits{1} << n); ++m) {
    if (Subset(m) != full) order.emplace_back(m);
  }
  std::stable_sort(order.begin(), order.end(), [](Subset a, Subset b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return canonical_less(a, b);
  });
  std::vector<bool> in(std::size_t{1} << n, false);
  std::vector<int> forced(std::size_t{1} << n, 0);
  std::vector<Subset> family{full};
  in[full.bits()] = true;
  std::vector<ConvexGeometry> out;

  auto has_extension = [&](Subset s) {
    bool ok = false;
    (full - s).for_each_element([&](int x) { ok = ok || in[s.with(x).bits()]; });
    return ok;
  };
  auto include = [&](Subset s) {
    for (Subset other : family) ++forced[(s & other).bits()];
    family.push_back(s);
    in[s.bits()] = true;
  };
  auto exclude_last = [&] {
    const Subset s = family.back();
    family.pop_back();
    in[s.bits()] = false;
    for (Subset other : family) --forced[(s & other).bits()];
  };
  // Every set that is the intersection of two members is forced in when its
  // turn comes, so completed families are intersection-closed; the extension
  // test on each included set gives the convex-geometry property.
  auto decide = [&](auto& self, std::size_t t) -> void {
    if (t == order.size()) {
      out.emplace_back(ClosureOperator::validate(ground, family));
      return;
    }
    const Subset s = order[t];
    const bool must = forced[s.bits()] > 0 || s.empty();
    if (!must) self(self, t + 1);
    if (has_extension(s)) {
      include(s);
      self(self, t + 1);
      exclude_last();
    }
  };
  if (n == 0) {
    out.emplace_back(ClosureOperator());
    return out;
  }
  decide(decide, 0);
  return out;
}

std::vector<ConvexGeometry> enumerate_corpus(int max_n, bool force) {
  std::vector<ConvexGeometry> out;
  for (int n = 0; n <= max_n; ++n) {
    auto part = enumerate_convex_geometries(n, force);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Named examples

namespace {

ClosureOperator from_words(std::vector<std::string> labels,
                           std::initializer_list<std::string_view> words) {
  GroundSet ground(std::move(labels));
  std::vector<Subset> family;
  for (std::string_view w : words) {
    Subset s;
    for (char ch : w) s = s.with(*ground.index_of(std::string(1, ch)));
    family.push_back(s);
  }
  return ClosureOperator::validate(std::move(ground), std::move(family));
}

}  // namespace

ClosureOperator colinear3() {
  return from_words({"x", "y", "z"}, {"", "x", "y", "z", "xy", "yz", "xyz"});
}

ClosureOperator example_g1() {
  return from_words({"w", "x", "y", "z"},
                    {"", "x", "y", "z", "w", "xy", "xz", "xw", "xyz", "xyw",
                     "xzw", "xyzw"});
}

ClosureOperator example_g2() {
  return from_words({"w", "x", "y", "z"},
                    {"", "x", "y", "z", "w", "xy", "yz", "zw", "xyz", "yzw",
                     "xyzw"});
}

ClosureOperator example_chief_closure() {
  return from_words({"w", "x", "y", "z"},
                    {"", "x", "y", "w", "xy", "xz", "xw", "yw", "xyzw"});
}

ClosureOperator example_geometric_counterexample() {
  return from_words({"a", "b", "c", "d"},
                    {"", "a", "b", "c", "ab", "bc", "abcd"});
}

}  // namespace cgx
