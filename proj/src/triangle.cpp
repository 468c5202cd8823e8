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

#include "hypafib/triangle.hpp"

#include <deque>
#include <sstream>

#include "hypafib/errors.hpp"
#include "hypafib/limits.hpp"
#include "hypafib/seqcore.hpp"

namespace hypafib {
namespace {

void check_nodes(const BigInt& nodes, const char* what) {
  if (nodes > limits::max_nodes()) {
    throw CapacityError(std::string(what) + " needs " + nodes.str() + " vertices, above the cap of " +
                        std::to_string(limits::max_nodes()));
  }
}

std::size_t own_children(int q, NodeKind kind) {
  switch (kind) {
    case NodeKind::kTypeA:
      return static_cast<std::size_t>(q - 4);
    case NodeKind::kTypeB:
      return static_cast<std::size_t>(q - 3);
    default:
      return 0;
  }
}

// Child kinds and parent links of the row after `kinds` (row index n).
void grow(int q, std::size_t n, const std::vector<NodeKind>& kinds, std::vector<NodeKind>& child_kinds,
          std::vector<Parents>& child_parents) {
  child_kinds.clear();
  child_parents.clear();
  if (n == 0) {
    child_kinds = {NodeKind::kWinger, NodeKind::kWinger};
    child_parents = {Parents{{0, 0}, 1}, Parents{{0, 0}, 1}};
    return;
  }
  const std::size_t m = kinds.size();
  child_kinds.push_back(NodeKind::kWinger);
  child_parents.push_back(Parents{{0, 0}, 1});
  for (std::size_t j = 0; j + 1 < m; ++j) {
    if (j > 0) {
      for (std::size_t c = own_children(q, kinds[j]); c > 0; --c) {
        child_kinds.push_back(NodeKind::kTypeB);
        child_parents.push_back(Parents{{j, j}, 1});
      }
    }
    child_kinds.push_back(NodeKind::kTypeA);
    child_parents.push_back(Parents{{j, j + 1}, 2});
  }
  child_kinds.push_back(NodeKind::kWinger);
  child_parents.push_back(Parents{{m - 1, m - 1}, 1});
}

}  // namespace

char pattern_letter(NodeKind kind) noexcept { return kind == NodeKind::kTypeA ? 'A' : 'B'; }

std::string_view kind_name(NodeKind kind) noexcept {
  switch (kind) {
    case NodeKind::kBase:
      return "base";
    case NodeKind::kWinger:
      return "winger";
    case NodeKind::kTypeA:
      return "A";
    case NodeKind::kTypeB:
      return "B";
  }
  return "?";
}

std::string TriangleRow::pattern() const {
  std::string s;
  s.reserve(kinds.size());
  for (NodeKind k : kinds) s.push_back(pattern_letter(k));
  return s;
}

std::size_t LayeredDigraph::node_count() const noexcept {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

TriangleRow base_row(int q) {
  require_valid_q(q);
  TriangleRow r;
  r.q = q;
  r.n = 0;
  r.kinds = {NodeKind::kBase};
  r.values = {BigInt(1)};
  r.parents = {Parents{}};
  return r;
}

TriangleRow next_row(const TriangleRow& row) {
  require_valid_q(row.q);
  TriangleRow out;
  out.q = row.q;
  out.n = row.n + 1;
  check_nodes(row_vertex_count(row.q, out.n), "row");
  grow(row.q, row.n, row.kinds, out.kinds, out.parents);
  out.values.reserve(out.kinds.size());
  for (const Parents& p : out.parents) {
    if (out.kinds[out.values.size()] == NodeKind::kWinger) {
      out.values.emplace_back(1);
    } else if (p.count == 2) {
      out.values.push_back(row.values[p.index[0]] + row.values[p.index[1]]);
    } else {
      out.values.push_back(row.values[p.index[0]]);
    }
  }
  return out;
}

LayeredDigraph build(int q, std::size_t n_max) {
  require_valid_q(q);
  BigInt total = 0;
  for (const auto& t : row_vertex_counts(q, n_max)) total += t.value;
  check_nodes(total, "triangle");

  LayeredDigraph g;
  g.q = q;
  g.rows.reserve(n_max + 1);
  g.rows.push_back(base_row(q));
  for (std::size_t n = 1; n <= n_max; ++n) {
    g.rows.push_back(next_row(g.rows.back()));
    const TriangleRow& r = g.rows.back();
    for (std::size_t k = 0; k < r.size(); ++k) {
      const Parents& p = r.parents[k];
      for (std::uint8_t j = 0; j < p.count; ++j) g.edges.push_back(Edge{n - 1, p.index[j], k});
    }
  }
  return g;
}

std::string row_pattern(int q, std::size_t n) {
  require_valid_q(q);
  check_nodes(row_vertex_count(q, n), "row pattern");
  std::vector<NodeKind> kinds{NodeKind::kBase};
  std::vector<NodeKind> child;
  std::vector<Parents> parents;
  for (std::size_t r = 0; r < n; ++r) {
    grow(q, r, kinds, child, parents);
    kinds.swap(child);
  }
  std::string s;
  s.reserve(kinds.size());
  for (NodeKind k : kinds) s.push_back(pattern_letter(k));
  return s;
}

std::string row_pattern_by_rewriting(int q, std::size_t n) {
  require_valid_q(q);
  check_nodes(row_vertex_count(q, n), "row pattern");
  if (n == 0) return "B";
  if (n == 1) return "BB";
  const std::string pad(static_cast<std::size_t>(q - 4), 'B');
  const std::string image_a = pad + "A";
  const std::string image_b = pad + "AB";
  std::string h = "BAB";
  for (std::size_t r = 2; r < n; ++r) {
    std::string next = "BA";
    for (std::size_t i = 2; i < h.size(); ++i) next += h[i] == 'A' ? image_a : image_b;
    h.swap(next);
  }
  return h;
}

BigInt binom_h(int q, std::size_t n, std::size_t k) {
  const BigInt width = row_vertex_count(q, n);
  if (BigInt(k) >= width) {
    throw IndexError("vertex " + std::to_string(k) + " out of range for row " + std::to_string(n) + " of width " +
                     width.str());
  }
  TriangleRow row = base_row(q);
  for (std::size_t r = 0; r < n; ++r) row = next_row(row);
  return row.values[k];
}

TypeCounts type_counts(int q, std::size_t n) {
  require_valid_q(q);
  if (n == 0) return {0, 1, 1};
  BigInt a = 0, b = 2;
  for (std::size_t r = 1; r < n; ++r) {
    // Interior parents each add one shared A; wingers never own B children.
    BigInt next_a = a + b - 1;
    BigInt next_b = 2 + (q - 4) * a + (q - 3) * (b - 2);
    a = std::move(next_a);
    b = std::move(next_b);
  }
  BigInt s = a + b;
  return {std::move(a), std::move(b), std::move(s)};
}

std::vector<std::vector<BigInt>> shortest_path_counts(const LayeredDigraph& g) {
  std::vector<std::size_t> offset(g.rows.size() + 1, 0);
  for (std::size_t r = 0; r < g.rows.size(); ++r) offset[r + 1] = offset[r] + g.rows[r].size();
  const std::size_t total = offset.back();

  std::vector<std::vector<std::size_t>> adjacency(total);
  for (const Edge& e : g.edges) adjacency[offset[e.row] + e.from].push_back(offset[e.row + 1] + e.to);

  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(total, kUnseen);
  std::vector<BigInt> paths(total, 0);
  std::deque<std::size_t> queue;
  if (total > 0) {
    dist[0] = 0;
    paths[0] = 1;
    queue.push_back(0);
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop_front();
    for (std::size_t v : adjacency[u]) {
      if (dist[v] == kUnseen) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
      if (dist[v] == dist[u] + 1) paths[v] += paths[u];
    }
  }

  std::vector<std::vector<BigInt>> out(g.rows.size());
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    out[r].assign(paths.begin() + static_cast<std::ptrdiff_t>(offset[r]),
                  paths.begin() + static_cast<std::ptrdiff_t>(offset[r + 1]));
  }
  return out;
}

std::string export_dot(const LayeredDigraph& g) {
  std::ostringstream os;
  os << "digraph hpt4_" << g.q << " {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box];\n";
  for (const TriangleRow& r : g.rows) {
    os << "  { rank=same;";
    for (std::size_t k = 0; k < r.size(); ++k) os << " v" << r.n << '_' << k << ';';
    os << " }\n";
    for (std::size_t k = 0; k < r.size(); ++k) {
      os << "  v" << r.n << '_' << k << " [label=\"v" << r.n << '_' << k << " [" << r.values[k] << "] ("
         << kind_name(r.kinds[k]) << ")\"];\n";
    }
  }
  for (const Edge& e : g.edges) {
    os << "  v" << e.row << '_' << e.from << " -> v" << e.row + 1 << '_' << e.to << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace hypafib
