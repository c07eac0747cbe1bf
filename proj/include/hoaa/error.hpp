// Copyright 2026 The HOAA Authors
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

namespace hoaa {

enum class ErrorCode {
  kInvalidInput,
  kInvalidOutput,
  kWidthMismatch,
  kUnsupportedConfiguration,
  kConfiguration,
  kDomain,
  kTooLargeDomain,
};

// Every failure raised by the library carries one of the codes above so the
// CLI can map it onto an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Raised by a chain when an accurate P1A cell asserts its second carry.
class UnsupportedConfigurationError : public Error {
 public:
  UnsupportedConfigurationError(int position, const std::string& what)
      : Error(ErrorCode::kUnsupportedConfiguration, what), position_(position) {}

  int position() const noexcept { return position_; }

 private:
  int position_;
};

}  // namespace hoaa
