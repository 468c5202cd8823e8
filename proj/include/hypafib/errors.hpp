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

#include <stdexcept>
#include <string>

namespace hypafib {

enum class ErrorCode {
  kDomain,
  kDegenerateQ,
  kCapacity,
  kSuffixMismatch,
  kIndex,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(ErrorCode::kDomain, what) {}

 protected:
  DomainError(ErrorCode code, const std::string& what) : Error(code, what) {}
};

/// Raised for q = 4, where the word family collapses (f_{2k} = 1,
/// f_{2k+1} = 1^k 0) and has no limit word.
class DegenerateQError : public DomainError {
 public:
  DegenerateQError();
};

class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(ErrorCode::kCapacity, what) {}
};

class SuffixMismatchError : public Error {
 public:
  explicit SuffixMismatchError(const std::string& what) : Error(ErrorCode::kSuffixMismatch, what) {}
};

class IndexError : public Error {
 public:
  explicit IndexError(const std::string& what) : Error(ErrorCode::kIndex, what) {}
};

/// Message carried by DegenerateQError; the CLI prints it verbatim.
extern const char* const kDegenerateQMessage;

/// Throws DegenerateQError for q == 4 and DomainError for any other q < 5.
void require_valid_q(long long q);

}  // namespace hypafib
