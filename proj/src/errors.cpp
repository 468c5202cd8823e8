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

#include "hypafib/errors.hpp"

namespace hypafib {

const char* const kDegenerateQMessage =
    "q = 4 is degenerate: f_{2k}^[4] = 1 and f_{2k+1}^[4] = 1^k 0, so the words have no limit; "
    "use q >= 5";

DegenerateQError::DegenerateQError() : DomainError(ErrorCode::kDegenerateQ, kDegenerateQMessage) {}

void require_valid_q(long long q) {
  if (q == 4) throw DegenerateQError();
  if (q < 5) throw DomainError("q must be at least 5 (got " + std::to_string(q) + ")");
}

}  // namespace hypafib
