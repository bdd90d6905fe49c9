// Copyright 2026 The ctsynth Authors
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

namespace ctsynth {

/// Base class for all library errors. `code()` is the machine-readable tag
/// the CLI prints as `error=<code>`.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

#define CTSYNTH_DEFINE_ERROR(Name, Code)                                    \
  class Name : public Error {                                               \
   public:                                                                  \
    explicit Name(const std::string& what) : Error(Code, what) {}           \
  };

CTSYNTH_DEFINE_ERROR(CapExceeded, "CapExceeded")
CTSYNTH_DEFINE_ERROR(DimensionMismatch, "DimensionMismatch")
CTSYNTH_DEFINE_ERROR(NotBlockDiagonal, "NotBlockDiagonal")
CTSYNTH_DEFINE_ERROR(NonRealEntry, "NonRealEntry")
CTSYNTH_DEFINE_ERROR(ParityMismatch, "ParityMismatch")
CTSYNTH_DEFINE_ERROR(EpsilonTooSmall, "EpsilonTooSmall")
CTSYNTH_DEFINE_ERROR(InconsistentInput, "InconsistentInput")
CTSYNTH_DEFINE_ERROR(NotSpecialUnitary, "NotSpecialUnitary")
CTSYNTH_DEFINE_ERROR(ParseError, "ParseError")

#undef CTSYNTH_DEFINE_ERROR

}  // namespace ctsynth
