// Copyright 2026 The qclint Authors.
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
#include <utility>

#include "qclint/source_span.hpp"

namespace qclint {

/// Raised by both frontends on the first syntax or format violation.
/// Parsing does not recover: one error aborts the file.
class ParseError : public std::runtime_error {
 public:
  ParseError(SourceSpan span, const std::string& message)
      : std::runtime_error(message), span_(std::move(span)) {}

  const SourceSpan& span() const { return span_; }

 private:
  SourceSpan span_;
};

/// Raised by the configuration loader on malformed documents or unknown
/// rule ids.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace qclint
