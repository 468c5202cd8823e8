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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Each check records the first mismatch it finds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hypafib/cli.hpp"
#include "hypafib/correspondence.hpp"
#include "hypafib/errors.hpp"
#include "hypafib/limits.hpp"
#include "hypafib/seqcore.hpp"
#include "hypafib/triangle.hpp"
#include "hypafib/wordcore.hpp"

using namespace hypafib;

namespace {

struct Check {
  std::string detail;
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void report(const VerificationReport& r) {
    if (!r.pass && ok) {
      ok = false;
      detail = r.theorem + " q=" + std::to_string(r.q) +
               (r.failure ? " at " + std::to_string(r.failure->index) + ": " + r.failure->detail : "");
    }
  }
};

bool below_1e6(const FixedDecimal& g) { return g.within(FixedDecimal::from_integer(0, g.scale()), 6); }

std::string str(std::size_t v) { return std::to_string(v); }

int exit_code(std::vector<std::string> args, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (err_text) *err_text = err.str();
  return code;
}

void golden_words(Check& c) {
  const char* classic[] = {"1", "0", "01", "010", "01001", "01001010", "0100101001001", "010010100100101001010"};
  for (std::size_t i = 0; i < 8; ++i) c.expect(classic_fib_word(i).to_string() == classic[i], "f_" + str(i));
  const char* q6[] = {"1",
                      "0",
                      "001",
                      "0010",
                      "00100010001",
                      "001000100010010",
                      "00100010001001000100010001001000100010001"};
  for (std::size_t i = 0; i < 7; ++i) c.expect(fib4q_word(6, i).to_string() == q6[i], "f_" + str(i) + "^[6]");
  const char* prefixes[] = {
      "01001010010010100101001001010010010100101001001010010100",
      "00100010001001000100010001001000100010001001000100010010",
      "00010000100001000010001000010000100001000010001000010000",
      "00001000001000001000001000001000010000010000010000010000",
  };
  for (int q = 5; q <= 8; ++q) {
    c.expect(infinite_prefix(q, 56).to_string() == prefixes[q - 5], "prefix q=" + std::to_string(q));
  }
}

void golden_patterns(Check& c) {
  const char* listing[] = {"B", "BB", "BAB", "BABAB", "BABABBABAB", "BABABBABABBABBABABBABAB"};
  for (std::size_t n = 0; n < 6; ++n) c.expect(row_pattern(5, n) == listing[n], "h_" + str(n) + "^[5]");
  // Rows beyond the default vertex cap (q = 9, n = 12 has about 2.3e8
  // vertices) are checked through the string-only rewriting path; rows
  // within the cap are also rebuilt by the construction and compared.
  const std::size_t default_cap = limits::max_nodes();
  limits::ScopedLimits guard(limits::max_word_length(), 300'000'000);
  for (int q = 5; q <= 9; ++q) {
    for (std::size_t n = 0; n <= 12; ++n) {
      const std::string tag = " q=" + std::to_string(q) + " n=" + str(n);
      const BigInt s = row_vertex_count(q, n);
      const std::string rewritten = row_pattern_by_rewriting(q, n);
      c.expect(BigInt(rewritten.size()) == s, "|h_n| (rewriting)" + tag);
      if (s <= default_cap) c.expect(row_pattern(q, n) == rewritten, "construction vs rewriting" + tag);
    }
  }
}

void morphism(Check& c) {
  for (int q = 5; q <= 9; ++q) c.report(verify_morphism_theorem(q, 200, 1000000));
  c.report(verify_sigma_square(200, 1000000));
  const Morphism s2 = compose(sigma(), sigma());
  const Morphism s5 = sigma_q(5);
  c.expect(s2 == s5, "sigma^[5] images differ from sigma^2");
}

void equivalence(Check& c) {
  limits::ScopedLimits guard(limits::max_word_length(), 50'000'000);
  for (int q = 5; q <= 9; ++q) {
    c.report(verify_row_equivalence(q, 10));
    for (std::size_t n = 2; n <= 10; ++n) {
      c.expect(fib4q_length(q, 2 * n - 3) == biperiodic_fib({1, static_cast<unsigned>(q - 4)}, 2 * n - 2),
               "|f_{2n-3}| q=" + std::to_string(q) + " n=" + str(n));
      c.expect(phi_map(BinaryWord::from_string("01") + fib4q_word(q, 2 * n - 3)) == row_pattern(q, n),
               "phi q=" + std::to_string(q) + " n=" + str(n));
    }
  }
}

void ominus(Check& c) {
  for (int q = 5; q <= 8; ++q) c.report(verify_ominus_theorem(q, 8));
}

void lemmas(Check& c) {
  for (int q = 5; q <= 12; ++q) c.report(verify_lemmas(q, 40));
  for (unsigned a = 1; a <= 5; ++a) {
    for (unsigned b = 1; b <= 5; ++b) {
      const BiperiodicParams p{a, b};
      for (std::size_t i = 4; i <= 40; ++i) {
        c.expect(biperiodic_fib(p, i) == BigInt(a * b + 2) * biperiodic_fib(p, i - 2) - biperiodic_fib(p, i - 4),
                 "fourth-order law a=" + std::to_string(a) + " b=" + std::to_string(b) + " i=" + str(i));
      }
    }
  }
}

void densities(Check& c) {
  const ClosedFormDensity d5 = density_closed_form(5, 20);
  c.expect(d5.r0.to_string(12) == "1.618033988750", "r0^[5]");
  c.expect(d5.r1.to_string(12) == "2.618033988750", "r1^[5]");
  for (int q = 5; q <= 10; ++q) {
    const std::string tag = " q=" + std::to_string(q);
    const DensityReport e = density_empirical(q, 25, 30);
    c.expect(below_1e6(e.gap0), "word gap0" + tag);
    c.expect(e.gap1 && below_1e6(*e.gap1), "word gap1" + tag);
    const TriangleDensity t = triangle_density(q, 25, 30);
    c.expect(below_1e6(t.gap0), "triangle gap0" + tag);
    c.expect(t.gap1 && below_1e6(*t.gap1), "triangle gap1" + tag);
    const DominantCoefficients a = dominant_coefficients(q, 40);
    const ClosedFormDensity r = density_closed_form(q, 40);
    c.expect((a.alpha_a + a.alpha_b).within(a.alpha_s, 12), "alpha sum" + tag);
    c.expect((a.alpha_s / a.alpha_b).within(r.r0, 10), "alpha_s/alpha_b" + tag);
    c.expect((a.alpha_s / a.alpha_a).within(r.r1, 10), "alpha_s/alpha_a" + tag);
  }
}

void bfs_oracle(Check& c) {
  for (int q = 5; q <= 7; ++q) {
    const LayeredDigraph g = build(q, 8);
    const auto counts = shortest_path_counts(g);
    for (std::size_t n = 0; n < g.rows.size(); ++n) {
      c.expect(counts[n] == g.rows[n].values, "q=" + std::to_string(q) + " row " + str(n));
    }
  }
}

void properties(Check& c) {
  for (int q = 5; q <= 8; ++q) c.report(verify_properties(q, 200, 100000));
}

void degenerate(Check& c) {
  for (const char* q : {"4", "3", "0", "-2"}) {
    std::string err;
    c.expect(exit_code({"row", "--q", q, "--n", "2"}, &err) == cli::kUsageError, std::string("exit for q=") + q);
    if (std::string(q) == "4") c.expect(err.find(kDegenerateQMessage) != std::string::npos, "degeneracy message");
  }
  c.expect(exit_code({"word", "--q", "4", "--i", "3"}) == cli::kUsageError, "word q=4");
  c.expect(exit_code({"verify", "--q", "4..6"}) == cli::kUsageError, "verify q=4..6");
  {
    limits::ScopedLimits guard(1000, 1000);
    bool threw = false;
    try {
      (void)fib4q_word(6, 20);
    } catch (const CapacityError&) {
      threw = true;
    }
    c.expect(threw, "word capacity error");
    threw = false;
    try {
      (void)build(7, 8);
    } catch (const CapacityError&) {
      threw = true;
    }
    c.expect(threw, "graph capacity error");
  }
  c.expect(exit_code({"word", "--q", "6", "--i", "60"}) == cli::kCapacityError, "word exit 3");
  c.expect(exit_code({"graph", "--q", "9", "--n", "14"}) == cli::kCapacityError, "graph exit 3");
}

struct Criterion {
  int id;
  const char* title;
  double budget_s;  // 0 = no runtime bound
  std::function<void(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "golden words and infinite-word prefixes", 1.0, golden_words},
      {2, "golden row patterns and row lengths", 0, golden_patterns},
      {3, "morphism theorem and sigma^[5] = sigma^2", 0, morphism},
      {4, "word/row correspondence by disjoint paths", 0, equivalence},
      {5, "suffix-deletion identities", 0, ominus},
      {6, "sequence lemmas (exact)", 0, lemmas},
      {7, "densities and dominant coefficients", 5.0, densities},
      {8, "BFS oracle equals incremental values", 10.0, bfs_oracle},
      {9, "word property suite", 0, properties},
      {10, "degenerate q and capacity errors", 0, degenerate},
  };
  int failures = 0;
  for (const auto& cr : criteria) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (cr.budget_s > 0 && secs >= cr.budget_s) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "runtime %.2fs exceeds %.0fs", secs, cr.budget_s);
      c.expect(false, buf);
    }
    std::printf("[%s] criterion %2d: %s (%.3fs)%s%s\n", c.ok ? "PASS" : "FAIL", cr.id, cr.title, secs,
                c.ok ? "" : " -- ", c.detail.c_str());
    if (!c.ok) ++failures;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
