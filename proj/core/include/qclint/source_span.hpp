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

#include <string>

namespace qclint {

/// Location of a source construct. Lines and columns are 1-based; length is
/// the number of characters the construct covers (at least 1).
struct SourceSpan {
  std::string file;
  int line = 1;
  int column = 1;
  int length = 1;

  bool operator==(const SourceSpan&) const = default;
};

/// "file:line:column" form used by diagnostics.
std::string to_string(const SourceSpan& span);

}  // namespace qclint
