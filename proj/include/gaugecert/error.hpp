// Copyright 2026 The gaugecert Authors
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

namespace gaugecert {

enum class Errc {
  kInvalidArgument,
  kParseError,
  kNonRational,
  kNoSolution,
  kBadParameters,
  kDegenerate,
  kNotHomologySphere,
  kClosedFormMismatch,
  kHypothesisFailed,
  kEmptyBoundary,
  kNegativeCharge,
  kNotDefinite,
  kSingularPivot,
};

const char* ErrcName(Errc code);

// True for codes that indicate a bug in this library rather than bad input.
bool IsInternalError(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(ErrcName(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void Fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

inline void Require(bool condition, Errc code, const std::string& what) {
  if (!condition) Fail(code, what);
}

}  // namespace gaugecert
