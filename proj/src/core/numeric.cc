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

#include "rfx/numeric.h"

#include <cctype>
#include <stdexcept>

namespace rfx {

namespace {

BigInt parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw std::invalid_argument("malformed number '" + std::string(whole) +
                                  "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational result;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_digits(s.substr(0, slash), text);
    BigInt den = parse_digits(s.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" +
                                              std::string(text) + "'");
    result = Rational(num, den);
  } else {
    int exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_part = s.substr(e + 1);
      bool exp_negative = false;
      if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
        exp_negative = exp_part.front() == '-';
        exp_part.remove_prefix(1);
      }
      BigInt magnitude = parse_digits(exp_part, text);
      if (magnitude > 4096) {
        throw std::invalid_argument("exponent out of range in '" +
                                    std::string(text) + "'");
      }
      exponent = magnitude.convert_to<int>();
      if (exp_negative) exponent = -exponent;
      s = s.substr(0, e);
    }
    std::string digits;
    int scale = 0;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
      digits = std::string(s.substr(0, dot)) + std::string(s.substr(dot + 1));
      scale = static_cast<int>(s.size() - dot - 1);
    } else {
      digits = std::string(s);
    }
    BigInt mantissa = parse_digits(digits, text);
    exponent -= scale;
    BigInt ten_power = 1;
    for (int i = 0; i < (exponent < 0 ? -exponent : exponent); ++i) ten_power *= 10;
    result = exponent >= 0 ? Rational(mantissa * ten_power)
                           : Rational(mantissa, ten_power);
  }
  return negative ? Rational(-result) : result;
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace rfx
