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

#pragma once

#include <stdexcept>
#include <string>

namespace dpts {

enum class ErrorCode {
  empty_series,
  negative_value,
  non_integer_count,
  non_integer_stride,
  length_mismatch,
  invalid_sigma,
  invalid_params,
  alpha_below_sampling_rate,
  invalid_stats,
  unsatisfiable,
  invalid_epsilon,
  invalid_k,
  empty_subsample,
  empty_draw,
  invalid_c,
  invalid_config,
  parse_error,
  gap_in_index,
};

const char* error_code_name(ErrorCode code);

/// Exception carrying a machine-readable error code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

/// Non-throwing validation outcome; `code`/`message` are meaningful only when
/// `ok` is false.
struct Validation {
  bool ok = true;
  ErrorCode code = ErrorCode::invalid_params;
  std::string message;

  static Validation pass() { return Validation{}; }
  static Validation fail(ErrorCode code, std::string message) {
    return Validation{false, code, std::move(message)};
  }
};

}  // namespace dpts
