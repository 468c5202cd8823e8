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

#include "hypafib/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "hypafib/correspondence.hpp"
#include "hypafib/errors.hpp"
#include "hypafib/json_io.hpp"
#include "hypafib/limits.hpp"
#include "hypafib/triangle.hpp"
#include "hypafib/wordcore.hpp"

namespace hypafib::cli {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QRange {
  int lo = 0;
  int hi = 0;
};

int parse_int(const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size()) throw UsageError("not an integer: '" + text + "'");
  return v;
}

// "6" or "5..9"
QRange parse_q_range(const std::string& text) {
  const auto dots = text.find("..");
  QRange r;
  if (dots == std::string::npos) {
    r.lo = r.hi = parse_int(text);
  } else {
    r.lo = parse_int(text.substr(0, dots));
    r.hi = parse_int(text.substr(dots + 2));
  }
  if (r.lo > r.hi) throw UsageError("empty q range '" + text + "'");
  require_valid_q(r.lo);
  return r;
}

struct WordOptions {
  std::string family = "fib4q";
  std::optional<int> q;
  unsigned a = 1;
  unsigned b = 1;
  std::optional<std::size_t> i;
  std::optional<std::size_t> prefix;
  std::string format = "text";
};

struct RowOptions {
  std::optional<int> q;
  std::size_t n = 0;
  bool values = false;
  bool pattern = false;
  std::string format = "text";
};

struct VerifyOptions {
  std::string theorem = "all";
  std::string q = "5..9";
  std::optional<std::size_t> depth;
  std::optional<std::size_t> max_length;
  std::string format = "json";
};

struct DensityOptions {
  std::optional<int> q;
  std::size_t index = 25;
  std::optional<std::size_t> row;
  int precision = 12;
  std::string format = "text";
};

struct GraphOptions {
  std::optional<int> q;
  std::size_t n = 0;
  bool dot = false;
  std::string format = "dot";
  std::string output;
};

int cmd_word(const WordOptions& o, std::ostream& out) {
  if (o.i.has_value() == o.prefix.has_value()) throw UsageError("word: give exactly one of --i or --prefix");
  BinaryWord w;
  json::json j;
  if (o.family == "classic") {
    if (o.prefix) throw UsageError("word: --prefix is only available for the fib4q family");
    w = classic_fib_word(*o.i);
    j = json::word("classic", std::nullopt, o.i, w);
  } else if (o.family == "biperiodic") {
    if (o.prefix) throw UsageError("word: --prefix is only available for the fib4q family");
    const BiperiodicParams p(o.a, o.b);
    w = biperiodic_fib_word(p, *o.i);
    j = json::word("biperiodic", std::nullopt, o.i, w, p);
  } else {
    if (!o.q) throw UsageError("word: the fib4q family needs --q");
    if (o.prefix) {
      w = infinite_prefix(*o.q, *o.prefix);
      j = json::word("fib4q", o.q, std::nullopt, w);
    } else {
      w = fib4q_word(*o.q, *o.i);
      j = json::word("fib4q", o.q, o.i, w);
    }
  }
  if (o.format == "json") {
    out << j.dump() << '\n';
  } else {
    out << w.to_string() << '\n';
  }
  return kSuccess;
}

int cmd_row(const RowOptions& o, std::ostream& out) {
  TriangleRow r = base_row(*o.q);
  for (std::size_t k = 0; k < o.n; ++k) r = next_row(r);
  if (o.format == "json") {
    out << json::row(r).dump() << '\n';
    return kSuccess;
  }
  const bool show_pattern = o.pattern || !o.values;
  if (show_pattern) out << r.pattern() << '\n';
  if (o.values) {
    for (std::size_t k = 0; k < r.values.size(); ++k) out << (k ? " " : "") << r.values[k];
    out << '\n';
  }
  return kSuccess;
}

std::size_t default_depth(const std::string& theorem) {
  if (theorem == "morphism") return 12;
  if (theorem == "equivalence") return 8;
  if (theorem == "ominus") return 6;
  if (theorem == "lemmas") return 40;
  return 12;  // properties
}

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const QRange range = parse_q_range(o.q);
  std::vector<std::string> theorems;
  if (o.theorem == "all") {
    theorems = {"morphism", "equivalence", "ominus", "lemmas", "properties"};
  } else {
    theorems = {o.theorem};
  }

  using Cell = std::function<std::vector<VerificationReport>()>;
  std::vector<Cell> cells;
  for (int q = range.lo; q <= range.hi; ++q) {
    for (const std::string& t : theorems) {
      const std::size_t depth = o.depth.value_or(default_depth(t));
      const std::size_t word_bound = o.max_length.value_or(limits::max_word_length());
      cells.emplace_back([q, t, depth, word_bound, &o]() -> std::vector<VerificationReport> {
        if (t == "morphism") {
          std::vector<VerificationReport> reports{verify_morphism_theorem(q, depth, word_bound)};
          if (q == 5) reports.push_back(verify_sigma_square(depth, word_bound));
          return reports;
        }
        if (t == "equivalence") return {verify_row_equivalence(q, depth)};
        if (t == "ominus") return {verify_ominus_theorem(q, depth)};
        if (t == "lemmas") return {verify_lemmas(q, depth)};
        return {verify_properties(q, depth, o.max_length.value_or(100000))};
      });
    }
  }

  // Cells are independent; results are collected in submission order.
  std::vector<std::future<std::vector<VerificationReport>>> pending;
  pending.reserve(cells.size());
  for (auto& cell : cells) pending.push_back(std::async(std::launch::async, cell));
  std::vector<VerificationReport> reports;
  for (auto& f : pending) {
    for (auto& r : f.get()) reports.push_back(std::move(r));
  }

  const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.pass; });
  if (o.format == "json") {
    json::json arr = json::json::array();
    for (const auto& r : reports) arr.push_back(json::report(r));
    out << arr.dump() << '\n';
  } else {
    for (const auto& r : reports) {
      out << (r.pass ? "PASS " : "FAIL ") << r.theorem << " q=" << r.q << " range=[" << r.range_lo << ","
          << r.range_hi << "]";
      if (r.failure) out << " at " << r.failure->index << ": " << r.failure->detail;
      out << '\n';
    }
  }
  return all_pass ? kSuccess : kVerificationFailed;
}

int cmd_density(const DensityOptions& o, std::ostream& out) {
  if (o.precision < 1 || o.precision > 1000) throw UsageError("density: --precision must lie in [1, 1000]");
  const int q = *o.q;
  const std::size_t row = o.row.value_or(o.index);
  const DensityReport d = density_empirical(q, o.index, o.precision);
  const TriangleDensity t = triangle_density(q, row, o.precision);
  const DominantCoefficients c = dominant_coefficients(q, o.precision);
  if (o.format == "json") {
    json::json j;
    j["empirical"] = json::density(d);
    j["triangle"] = json::triangle_density(t, o.precision);
    j["coefficients"] = json::coefficients(c);
    out << j.dump() << '\n';
    return kSuccess;
  }
  auto ratio_text = [&](const Rational& r) {
    return r.defined() ? FixedDecimal::from_rational(r.num, r.den, o.precision + 10).to_string(o.precision)
                       : std::string("null");
  };
  const int gap_digits = o.precision + 10;
  out << "q = " << q << '\n';
  out << "r0 = " << d.r0_closed.to_string(o.precision) << '\n';
  out << "r1 = " << d.r1_closed.to_string(o.precision) << '\n';
  out << "index = " << o.index << '\n';
  out << "zeros ratio d_i/d_i0 = " << ratio_text(d.r0_empirical) << " (gap " << d.gap0.to_string(gap_digits) << ")\n";
  out << "ones ratio d_i/d_i1 = " << ratio_text(d.r1_empirical) << " (gap "
      << (d.gap1 ? d.gap1->to_string(gap_digits) : std::string("null")) << ")\n";
  out << "row = " << row << '\n';
  out << "s_n/b_n = " << ratio_text(t.s_over_b) << " (gap " << t.gap0.to_string(gap_digits) << ")\n";
  out << "s_n/a_n = " << ratio_text(t.s_over_a) << " (gap "
      << (t.gap1 ? t.gap1->to_string(gap_digits) : std::string("null")) << ")\n";
  out << "alpha_s = " << c.alpha_s.to_string(o.precision) << '\n';
  out << "alpha_a = " << c.alpha_a.to_string(o.precision) << '\n';
  out << "alpha_b = " << c.alpha_b.to_string(o.precision) << '\n';
  return kSuccess;
}

int cmd_graph(const GraphOptions& o, std::ostream& out) {
  const std::string format = o.dot ? "dot" : o.format;
  if (o.dot && o.format != "dot") throw UsageError("graph: --dot conflicts with --format " + o.format);
  const LayeredDigraph g = build(*o.q, o.n);
  std::string text;
  if (format == "dot") {
    text = export_dot(g);
  } else {
    json::json rows = json::json::array();
    for (const auto& r : g.rows) rows.push_back(json::row(r));
    text = json::json{{"q", g.q}, {"rows", rows}, {"nodes", g.node_count()}, {"edges", g.edges.size()}}.dump() + "\n";
  }
  if (o.output.empty()) {
    out << text;
  } else {
    std::ofstream file(o.output);
    if (!file) throw UsageError("graph: cannot open '" + o.output + "' for writing");
    file << text;
  }
  return kSuccess;
}

void check_format(const std::string& command, const std::string& format) {
  if (format == "dot" && command != "graph") throw UsageError(command + ": dot output is only available for graph");
  if (format == "text" && command == "graph") throw UsageError("graph: supports --format dot or json");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Hyperbolic Pascal triangles {4,q} and generalized Fibonacci words", "hypafib"};
  app.require_subcommand(1);
  const auto formats = CLI::IsMember({"text", "json", "dot"});

  WordOptions word_opts;
  auto* word = app.add_subcommand("word", "Print a finite word or a prefix of the infinite {4,q} word");
  word->add_option("--family", word_opts.family, "classic | biperiodic | fib4q")
      ->check(CLI::IsMember({"classic", "biperiodic", "fib4q"}));
  word->add_option("--q", word_opts.q, "Schlafli parameter q (>= 5)");
  word->add_option("--a", word_opts.a, "biperiodic coefficient a");
  word->add_option("--b", word_opts.b, "biperiodic coefficient b");
  word->add_option("--i", word_opts.i, "word index");
  word->add_option("--prefix", word_opts.prefix, "length of the infinite-word prefix");
  word->add_option("--format", word_opts.format, "text | json")->check(formats);

  RowOptions row_opts;
  auto* row = app.add_subcommand("row", "Print one row of the triangle");
  row->add_option("--q", row_opts.q, "Schlafli parameter q (>= 5)")->required();
  row->add_option("--n", row_opts.n, "row index")->required();
  row->add_flag("--values", row_opts.values, "print vertex values");
  row->add_flag("--pattern", row_opts.pattern, "print the A/B pattern");
  row->add_option("--format", row_opts.format, "text | json")->check(formats);

  VerifyOptions verify_opts;
  auto* verify = app.add_subcommand("verify", "Check theorems and emit JSON reports");
  verify->add_option("--theorem", verify_opts.theorem, "morphism | equivalence | ominus | lemmas | properties | all")
      ->check(CLI::IsMember({"morphism", "equivalence", "ominus", "lemmas", "properties", "all"}));
  verify->add_option("--q", verify_opts.q, "q or range lo..hi");
  verify->add_option("--depth", verify_opts.depth,
                     "index bound: i for morphism/properties, n for equivalence/lemmas, k for ominus");
  verify->add_option("--max-length", verify_opts.max_length, "stop word checks past this word length");
  verify->add_option("--format", verify_opts.format, "json | text")->check(formats);

  DensityOptions density_opts;
  auto* density = app.add_subcommand("density", "Closed-form and empirical digit densities");
  density->add_option("--q", density_opts.q, "Schlafli parameter q (>= 5)")->required();
  density->add_option("--index", density_opts.index, "word index for d_i ratios");
  density->add_option("--row", density_opts.row, "triangle row for s_n/b_n and s_n/a_n (default: --index)");
  density->add_option("--precision", density_opts.precision, "decimal digits");
  density->add_option("--format", density_opts.format, "text | json")->check(formats);

  GraphOptions graph_opts;
  auto* graph = app.add_subcommand("graph", "Export rows 0..n as a layered digraph");
  graph->add_option("--q", graph_opts.q, "Schlafli parameter q (>= 5)")->required();
  graph->add_option("--n", graph_opts.n, "last row")->required();
  graph->add_flag("--dot", graph_opts.dot, "Graphviz output (default)");
  graph->add_option("--format", graph_opts.format, "dot | json")->check(formats);
  graph->add_option("--output", graph_opts.output, "write to a file instead of stdout");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  try {
    limits::apply_env_overrides();
    for (const std::optional<int>* q : {&word_opts.q, &row_opts.q, &density_opts.q, &graph_opts.q}) {
      if (q->has_value()) require_valid_q(**q);
    }
    if (*word) {
      check_format("word", word_opts.format);
      return cmd_word(word_opts, out);
    }
    if (*row) {
      check_format("row", row_opts.format);
      return cmd_row(row_opts, out);
    }
    if (*verify) {
      check_format("verify", verify_opts.format);
      return cmd_verify(verify_opts, out);
    }
    if (*density) {
      check_format("density", density_opts.format);
      return cmd_density(density_opts, out);
    }
    check_format("graph", graph_opts.format);
    return cmd_graph(graph_opts, out);
  } catch (const CapacityError& e) {
    err << "capacity error: " << e.what() << '\n';
    return kCapacityError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::bad_alloc&) {
    err << "capacity error: out of memory\n";
    return kCapacityError;
  }
}

}  // namespace hypafib::cli
