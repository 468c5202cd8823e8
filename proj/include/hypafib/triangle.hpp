// Copyright 2026 The hypafib Authors
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

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hypafib/bigint.hpp"

namespace hypafib {

/// Vertex kinds of the {4,q} triangle. Base is the single row-0 vertex;
/// Winger marks the two ends of every later row. Both project to 'B' in
/// row patterns.
enum class NodeKind : std::uint8_t { kBase, kWinger, kTypeA, kTypeB };

char pattern_letter(NodeKind kind) noexcept;
std::string_view kind_name(NodeKind kind) noexcept;

/// Indices of a vertex's ascendants in the previous row (1 or 2 of them).
struct Parents {
  std::array<std::size_t, 2> index{};
  std::uint8_t count = 0;
};

struct TriangleRow {
  int q = 5;
  std::size_t n = 0;
  std::vector<NodeKind> kinds;
  std::vector<BigInt> values;
  std::vector<Parents> parents;

  std::size_t size() const noexcept { return kinds.size(); }
  /// Left-to-right kinds over {A,B}.
  std::string pattern() const;
};

struct Edge {
  std::size_t row = 0;   // row of the ascendant
  std::size_t from = 0;  // index in `row`
  std::size_t to = 0;    // index in `row + 1`
};

struct LayeredDigraph {
  int q = 5;
  std::vector<TriangleRow> rows;
  std::vector<Edge> edges;

  std::size_t node_count() const noexcept;
};

struct TypeCounts {
  BigInt a;
  BigInt b;
  BigInt s;
};

TriangleRow base_row(int q);

/// Row n+1 from row n. Walking left to right, every adjacent parent pair
/// shares one TypeA child (value = sum of the pair), each interior parent
/// adds its own TypeB children between its shared ones (q-4 for TypeA,
/// q-3 for TypeB; value = parent's value), and each winger adds one
/// outermost winger (value 1).
TriangleRow next_row(const TriangleRow& row);

/// Rows 0..n_max with all descending edges. CapacityError when the vertex
/// total exceeds limits::max_nodes().
LayeredDigraph build(int q, std::size_t n_max);

/// h_n^{[q]} by streaming the row construction (kinds only).
std::string row_pattern(int q, std::size_t n);
/// h_n^{[q]} by the substitution A -> B^{q-4}A, B -> B^{q-4}AB applied
/// to everything after the leading "BA", for n >= 2.
std::string row_pattern_by_rewriting(int q, std::size_t n);

/// Value of vertex k in row n. IndexError when k >= s_n.
BigInt binom_h(int q, std::size_t n, std::size_t k);

/// (a_n, b_n, s_n) with wingers and the base counted as B. Uses the kind
/// transition of the construction, so large n needs no materialized rows.
TypeCounts type_counts(int q, std::size_t n);

/// Number of distinct shortest base-to-vertex paths, by breadth-first
/// search over the explicit edge list; ignores the stored values.
std::vector<std::vector<BigInt>> shortest_path_counts(const LayeredDigraph& g);

/// Graphviz rendering; vertices are labelled "v{n}_{k} [value] (kind)"
/// and grouped one rank per row.
std::string export_dot(const LayeredDigraph& g);

}  // namespace hypafib
