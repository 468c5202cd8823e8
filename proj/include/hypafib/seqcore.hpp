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

#include <cstddef>
#include <vector>

#include "hypafib/bigint.hpp"

namespace hypafib {

/// Coefficients of the biperiodic Fibonacci recurrence: `a` multiplies at
/// even indices, `b` at odd ones. Both must be >= 1.
struct BiperiodicParams {
  unsigned a = 1;
  unsigned b = 1;

  BiperiodicParams() = default;
  BiperiodicParams(unsigned a_, unsigned b_);
};

struct SequenceTerm {
  std::size_t index = 0;
  BigInt value;
};

/// F_i with F_0 = 0, F_1 = 1.
BigInt fibonacci(std::size_t i);

/// F_i^{(a,b)}: F_0 = 0, F_1 = 1, F_i = c F_{i-1} + F_{i-2} with c = a for
/// even i and c = b for odd i.
BigInt biperiodic_fib(BiperiodicParams p, std::size_t i);

/// s_n, the number of vertices in row n of the {4,q} triangle:
/// 1, 2, 3, q, then s_n = (q-1)s_{n-1} - (q-1)s_{n-2} + s_{n-3}.
BigInt row_vertex_count(int q, std::size_t n);

/// u_n = (q-2)u_{n-1} - u_{n-2}, u_1 = 0, u_2 = 1. Undefined for n = 0.
BigInt u_seq(int q, std::size_t n);

/// u_n through the ternary recurrence shared with s_n (seeded with
/// u_1..u_3 = 0, 1, q-2). Agrees with u_seq; kept separate so tests can
/// compare both recurrences.
BigInt u_seq_ternary(int q, std::size_t n);

/// Terms s_0..s_{n_max}.
std::vector<SequenceTerm> row_vertex_counts(int q, std::size_t n_max);

}  // namespace hypafib
