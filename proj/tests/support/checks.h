// Copyright 2026 The rfx Authors
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

#ifndef RFX_TESTS_SUPPORT_CHECKS_H_
#define RFX_TESTS_SUPPORT_CHECKS_H_

#include <cstdint>
#include <string>

namespace rfx::testing {

// Outcome of one randomized or exhaustive check. Keeps the first failure.
struct CheckReport {
  bool passed = true;
  int cases = 0;
  std::string failure;
  std::string summary;

  void expect(bool ok, const std::string& what) {
    if (!ok && passed) {
      passed = false;
      failure = what;
    }
  }
};

CheckReport golden_suite();
CheckReport oracle_equivalence(int models, std::uint64_t seed);
CheckReport maxsat_optimality(int cases, std::uint64_t seed);
CheckReport anytime_contract(int forests, std::uint64_t seed,
                             double seconds_per_forest);
CheckReport delta_probable_contract(int trees, std::uint64_t seed);
CheckReport parity_fixture();
CheckReport size_ordering(int forests, std::uint64_t seed);
CheckReport approximation_ratio(int trees, std::uint64_t seed);

}  // namespace rfx::testing

#endif  // RFX_TESTS_SUPPORT_CHECKS_H_
