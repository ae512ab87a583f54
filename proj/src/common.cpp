// Copyright 2026 The dpts Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dpts/common.hpp"

namespace dpts {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::empty_series:
      return "EmptySeries";
    case ErrorCode::negative_value:
      return "NegativeValue";
    case ErrorCode::non_integer_count:
      return "NonIntegerCount";
    case ErrorCode::non_integer_stride:
      return "NonIntegerStride";
    case ErrorCode::length_mismatch:
      return "LengthMismatch";
    case ErrorCode::invalid_sigma:
      return "InvalidSigma";
    case ErrorCode::invalid_params:
      return "InvalidParams";
    case ErrorCode::alpha_below_sampling_rate:
      return "AlphaBelowSamplingRate";
    case ErrorCode::invalid_stats:
      return "InvalidStats";
    case ErrorCode::unsatisfiable:
      return "Unsatisfiable";
    case ErrorCode::invalid_epsilon:
      return "InvalidEpsilon";
    case ErrorCode::invalid_k:
      return "InvalidK";
    case ErrorCode::empty_subsample:
      return "EmptySubsample";
    case ErrorCode::empty_draw:
      return "EmptyDraw";
    case ErrorCode::invalid_c:
      return "InvalidC";
    case ErrorCode::invalid_config:
      return "InvalidConfig";
    case ErrorCode::parse_error:
      return "ParseError";
    case ErrorCode::gap_in_index:
      return "GapInIndex";
  }
  return "UnknownError";
}

}  // namespace dpts
