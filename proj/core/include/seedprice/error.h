// Copyright 2026 The seedprice Authors.
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

#ifndef SEEDPRICE_ERROR_H_
#define SEEDPRICE_ERROR_H_

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace seedprice {

enum class ErrorCode {
  kDuplicateEdge,
  kSelfLoop,
  kNegativeWeight,
  kNegativeValuation,
  kUnknownNode,
  kDuplicateNode,
  kNotConcave,
  kInvalidPriceSet,
  kEmptyPriceSet,
  kInvalidQuantity,
  kSeedsExceedStock,
  kInstanceTooLarge,
  kMissingSeedForRandom,
  kInvalidParams,
  kMalformedLine,
  kInvalidArgument,
  kIoFailure,
  kInvariantViolation,
};

std::string_view to_string(ErrorCode code);

// All library failures are reported as Error. Parsers attach the 1-based
// line number of the offending input line.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<std::size_t> line = std::nullopt);

  ErrorCode code() const noexcept { return code_; }
  std::optional<std::size_t> line() const noexcept { return line_; }

 private:
  ErrorCode code_;
  std::optional<std::size_t> line_;
};

}  // namespace seedprice

#endif  // SEEDPRICE_ERROR_H_
