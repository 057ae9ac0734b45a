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

// GeometryFile JSON reading and writing, generators for closure operators,
// and exhaustive enumeration of labeled convex geometries.

#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cgx/closure.hpp"
#include "cgx/numeric.hpp"
#include "cgx/posets.hpp"

namespace cgx {

struct GeometryFile {
  ClosureOperator op;
  // Free-form "meta" object, kept as its serialized JSON text ("" if absent).
  std::string meta_json;
  std::vector<std::string> warnings;
};

// {"ground":[str...],"closed":[[str...]...],"meta":{...}?}. Throws ParseError
// (with line and column) on malformed input and forwards validation errors.
GeometryFile parse_geometry(std::string_view text);
GeometryFile read_geometry_file(const std::string& path);

// Canonical text: labels sorted, subsets ordered by (size, lex), one closed
// set per line, trailing newline.
std::string serialize_geometry(const ClosureOperator& op,
                               std::string_view meta_json = "");

// "x<y,x<z"; the ground is the set of labels mentioned plus `extra_labels`.
// Throws CyclicRelations.
Poset parse_poset_edges(std::string_view edges,
                        const std::vector<std::string>& extra_labels = {});

struct Point2 {
  Rational x;
  Rational y;
};

// "0/1,0/1;1/1,0/1;2/1,0/1"
std::vector<Point2> parse_points(std::string_view text);

// Closed sets {S : conv(S) n P = S}, decided by exact orientation tests.
// Labels default to p1..pk (zero-padded past 9). Throws DuplicatePoints.
ClosureOperator points2d_geometry(const std::vector<Point2>& points,
                                  std::vector<std::string> labels = {});

ClosureOperator from_poset(const Poset& p);
ClosureOperator chain_geometry(int n, std::vector<std::string> labels = {});
ClosureOperator antichain_geometry(int n, std::vector<std::string> labels = {});

// Labels "1".."n" (zero-padded past 9).
std::vector<std::string> numeric_labels(int n);

inline constexpr int kCorpusGuard = 5;

// Every labeled convex geometry on exactly n elements, labels "1".."n", in a
// deterministic order. Throws GroundTooLarge above kCorpusGuard unless
// `force`.
std::vector<ConvexGeometry> enumerate_convex_geometries(int n,
                                                        bool force = false);
// All sizes 0..max_n concatenated.
std::vector<ConvexGeometry> enumerate_corpus(int max_n, bool force = false);

// The named examples used throughout the tests and the CLI.
ClosureOperator colinear3();
ClosureOperator example_g1();
ClosureOperator example_g2();
ClosureOperator example_chief_closure();
ClosureOperator example_geometric_counterexample();

}  // namespace cgx
