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

// JSON renderings of words, rows and reports. Objects use nlohmann::json's
// default (lexicographically sorted) key order, so dump() output is
// canonical and parse/dump round-trips byte for byte. Big integers are
// always decimal strings.

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "hypafib/binary_word.hpp"
#include "hypafib/correspondence.hpp"
#include "hypafib/seqcore.hpp"
#include "hypafib/triangle.hpp"

namespace hypafib::json {

using nlohmann::json;

/// {"family","q","i","word","length"}; q and i are null where they do not
/// apply (classic family has no q; infinite prefixes have no i).
json word(std::string_view family, std::optional<int> q, std::optional<std::size_t> i, const BinaryWord& w,
          std::optional<BiperiodicParams> params = std::nullopt);

/// {"q","n","kinds","values"}; kinds is the A/B pattern string.
json row(const TriangleRow& r);

json report(const VerificationReport& r);

json density(const DensityReport& d);
json triangle_density(const TriangleDensity& t, int precision);
json coefficients(const DominantCoefficients& c);

json rational(const Rational& r, int digits);

}  // namespace hypafib::json
