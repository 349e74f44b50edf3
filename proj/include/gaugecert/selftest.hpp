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

#include <cstdint>
#include <string>
#include <vector>

namespace gaugecert {

struct SelftestCheck {
  std::string name;
  std::int64_t cases = 0;
  std::int64_t mismatches = 0;
  std::string first_mismatch;

  bool ok() const { return cases > 0 && mismatches == 0; }
};

// NZ identity grid, index formula agreement grid and brute-force C(e)
// comparisons. quick shrinks the grids.
std::vector<SelftestCheck> RunSelftest(bool quick);

}  // namespace gaugecert
