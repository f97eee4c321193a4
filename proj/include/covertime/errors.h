// Copyright 2026 The covertime Authors
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

#ifndef COVERTIME_ERRORS_H_
#define COVERTIME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace covertime {

enum class ErrorCode {
  kMalformedInput,
  kInfeasibleInput,
  kCapacity,
  kUnsupportedOracle,
  kNontermination,
  kUsage,
  // A proved invariant failed at runtime. Always a bug.
  kInternal,
};

const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace covertime

#endif  // COVERTIME_ERRORS_H_
