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

#include "seedprice/error.h"

namespace seedprice {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kNegativeWeight: return "NegativeWeight";
    case ErrorCode::kNegativeValuation: return "NegativeValuation";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kNotConcave: return "NotConcave";
    case ErrorCode::kInvalidPriceSet: return "InvalidPriceSet";
    case ErrorCode::kEmptyPriceSet: return "EmptyPriceSet";
    case ErrorCode::kInvalidQuantity: return "InvalidQuantity";
    case ErrorCode::kSeedsExceedStock: return "SeedsExceedStock";
    case ErrorCode::kInstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::kMissingSeedForRandom: return "MissingSeedForRandom";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kMalformedLine: return "MalformedLine";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kInvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

namespace {

std::string format_message(ErrorCode code, const std::string& message,
                           std::optional<std::size_t> line) {
  std::string out(to_string(code));
  if (line) out += " (line " + std::to_string(*line) + ")";
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& message,
             std::optional<std::size_t> line)
    : std::runtime_error(format_message(code, message, line)),
      code_(code),
      line_(line) {}

}  // namespace seedprice
