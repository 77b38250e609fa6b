// Copyright 2026 The leafshape Authors
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

#include "leafshape/error.hpp"

namespace leafshape {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kAllBackground: return "AllBackground";
    case ErrorCode::kDegenerateShape: return "DegenerateShape";
    case ErrorCode::kInvalidIndex: return "InvalidIndex";
    case ErrorCode::kFrequencyOutOfRange: return "FrequencyOutOfRange";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kEmptyDatabase: return "EmptyDatabase";
    case ErrorCode::kInsufficientResults: return "InsufficientResults";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kDuplicatePath: return "DuplicatePath";
    case ErrorCode::kMissingCache: return "MissingCache";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace leafshape
