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

#ifndef RFX_NUMERIC_H_
#define RFX_NUMERIC_H_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace rfx {

// Model counts grow as 2^n; counts and probabilities are kept exact.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt pow2(int exponent) {
  BigInt r = 1;
  r <<= exponent;
  return r;
}

// Parses "3/4", "0.75", "1e-2" or "2" into an exact rational. Decimal
// fractions are read digit by digit, so "0.1" is exactly 1/10.
Rational parse_rational(std::string_view text);

double to_double(const Rational& r);
std::string to_string(const Rational& r);

}  // namespace rfx

#endif  // RFX_NUMERIC_H_
