// Copyright 2026 The sptc Authors
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

#ifndef SPTC_RATIONAL_HPP_
#define SPTC_RATIONAL_HPP_

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace sptc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den" in lowest terms; the denominator is always printed.
std::string to_string(const Rational& value);

// Accepts "a/b", plain integers and decimal literals such as "0.125" or
// "1e-3"; decimals are converted exactly.
Rational parse_rational(std::string_view text);

// Smallest e with 2^e >= value. value must be positive.
unsigned ceil_log2(const BigInt& value);

BigInt pow2(unsigned exponent);

long double to_long_double(const Rational& value);

}  // namespace sptc

#endif  // SPTC_RATIONAL_HPP_
