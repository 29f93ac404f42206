/*
   Copyright 2026 The polymod Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

namespace polymod {

enum class ErrorKind {
    Parse,
    InvalidArgument,
    ArityMismatch,
    NotAnLModule,
    Underdetermined,
    NotNilpotent,
    UnsupportedExpr,
    RangeExceeded,
    ThresholdUnmet,
    Cancelled,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Domain error carrying a machine-readable certificate. The CLI serializes
// detail() verbatim into its error object.
class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message, nlohmann::json detail = nlohmann::json::object())
        : std::runtime_error(message), kind_(kind), detail_(std::move(detail)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const nlohmann::json& detail() const noexcept { return detail_; }

  private:
    ErrorKind kind_;
    nlohmann::json detail_;
};

}  // namespace polymod
