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

#include "hypafib/json_io.hpp"

namespace hypafib::json {
namespace {

// Gaps are reported with the guard digits included so tiny values survive.
constexpr int kGuardDigits = 10;

json decimal_or_null(const std::optional<FixedDecimal>& v, int digits) {
  return v ? json(v->to_string(digits)) : json(nullptr);
}

}  // namespace

json word(std::string_view family, std::optional<int> q, std::optional<std::size_t> i, const BinaryWord& w,
          std::optional<BiperiodicParams> params) {
  json j;
  j["family"] = family;
  j["q"] = q ? json(*q) : json(nullptr);
  j["i"] = i ? json(*i) : json(nullptr);
  j["word"] = w.to_string();
  j["length"] = w.size();
  if (params) {
    j["a"] = params->a;
    j["b"] = params->b;
  }
  return j;
}

json row(const TriangleRow& r) {
  json values = json::array();
  for (const BigInt& v : r.values) values.push_back(v.str());
  return {{"q", r.q}, {"n", r.n}, {"kinds", r.pattern()}, {"values", std::move(values)}};
}

json report(const VerificationReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["q"] = r.q;
  j["range"] = {r.range_lo, r.range_hi};
  j["pass"] = r.pass;
  j["failure"] = r.failure ? json{{"index", r.failure->index}, {"detail", r.failure->detail}} : json(nullptr);
  json notes = json::object();
  for (const auto& [k, v] : r.notes) notes[k] = v;
  j["notes"] = std::move(notes);
  return j;
}

json rational(const Rational& r, int digits) {
  if (!r.defined()) return nullptr;
  return {{"num", r.num.str()},
          {"den", r.den.str()},
          {"decimal", FixedDecimal::from_rational(r.num, r.den, digits + kGuardDigits).to_string(digits)}};
}

json density(const DensityReport& d) {
  const int gap_digits = d.precision + kGuardDigits;
  json j;
  j["q"] = d.q;
  j["index"] = d.index;
  j["precision"] = d.precision;
  j["r0_closed"] = d.r0_closed.to_string(d.precision);
  j["r1_closed"] = d.r1_closed.to_string(d.precision);
  j["r0_empirical"] = rational(d.r0_empirical, d.precision);
  j["r1_empirical"] = rational(d.r1_empirical, d.precision);
  j["gap0"] = d.gap0.to_string(gap_digits);
  j["gap1"] = decimal_or_null(d.gap1, gap_digits);
  j["observation_gap0_shrinks"] = d.gap0_shrinks ? json(*d.gap0_shrinks) : json(nullptr);
  return j;
}

json triangle_density(const TriangleDensity& t, int precision) {
  const int gap_digits = precision + kGuardDigits;
  return {{"q", t.q},
          {"n", t.n},
          {"s_over_b", rational(t.s_over_b, precision)},
          {"s_over_a", rational(t.s_over_a, precision)},
          {"gap0", t.gap0.to_string(gap_digits)},
          {"gap1", decimal_or_null(t.gap1, gap_digits)}};
}

json coefficients(const DominantCoefficients& c) {
  return {{"q", c.q},
          {"precision", c.precision},
          {"alpha_s", c.alpha_s.to_string(c.precision)},
          {"alpha_a", c.alpha_a.to_string(c.precision)},
          {"alpha_b", c.alpha_b.to_string(c.precision)}};
}

}  // namespace hypafib::json
