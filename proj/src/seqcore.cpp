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

#include "hypafib/seqcore.hpp"

#include <string>

#include "hypafib/errors.hpp"

namespace hypafib {

BiperiodicParams::BiperiodicParams(unsigned a_, unsigned b_) : a(a_), b(b_) {
  if (a == 0 || b == 0) throw DomainError("biperiodic parameters must be positive integers");
}

BigInt fibonacci(std::size_t i) { return biperiodic_fib(BiperiodicParams{1, 1}, i); }

BigInt biperiodic_fib(BiperiodicParams p, std::size_t i) {
  if (p.a == 0 || p.b == 0) throw DomainError("biperiodic parameters must be positive integers");
  if (i == 0) return 0;
  BigInt prev = 0;
  BigInt cur = 1;
  for (std::size_t k = 2; k <= i; ++k) {
    BigInt next = (k % 2 == 0 ? p.a : p.b) * cur + prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<SequenceTerm> row_vertex_counts(int q, std::size_t n_max) {
  require_valid_q(q);
  std::vector<SequenceTerm> terms;
  terms.reserve(n_max + 1);
  const BigInt seeds[4] = {1, 2, 3, q};
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n < 4) {
      terms.push_back({n, seeds[n]});
    } else {
      BigInt v = (q - 1) * terms[n - 1].value - (q - 1) * terms[n - 2].value + terms[n - 3].value;
      terms.push_back({n, std::move(v)});
    }
  }
  return terms;
}

BigInt row_vertex_count(int q, std::size_t n) {
  require_valid_q(q);
  if (n < 4) {
    const int seeds[4] = {1, 2, 3, q};
    return seeds[n];
  }
  BigInt s3 = 2, s2 = 3, s1 = q;  // s_{n-3}, s_{n-2}, s_{n-1}
  for (std::size_t k = 4; k <= n; ++k) {
    BigInt next = (q - 1) * s1 - (q - 1) * s2 + s3;
    s3 = std::move(s2);
    s2 = std::move(s1);
    s1 = std::move(next);
  }
  return s1;
}

BigInt u_seq(int q, std::size_t n) {
  require_valid_q(q);
  if (n == 0) throw DomainError("u_n is defined only for n >= 1");
  if (n == 1) return 0;
  BigInt prev = 0, cur = 1;
  for (std::size_t k = 3; k <= n; ++k) {
    BigInt next = (q - 2) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt u_seq_ternary(int q, std::size_t n) {
  require_valid_q(q);
  if (n == 0) throw DomainError("u_n is defined only for n >= 1");
  if (n <= 3) {
    const int seeds[4] = {0, 0, 1, q - 2};
    return seeds[n];
  }
  BigInt u3 = 0, u2 = 1, u1 = q - 2;
  for (std::size_t k = 4; k <= n; ++k) {
    BigInt next = (q - 1) * u1 - (q - 1) * u2 + u3;
    u3 = std::move(u2);
    u2 = std::move(u1);
    u1 = std::move(next);
  }
  return u1;
}

}  // namespace hypafib
