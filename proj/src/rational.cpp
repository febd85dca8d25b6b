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

#include "sptc/rational.hpp"

#include <cctype>

#include "sptc/error.hpp"

namespace sptc {

std::string to_string(const Rational& value) {
  return boost::multiprecision::numerator(value).str() + "/" +
         boost::multiprecision::denominator(value).str();
}

namespace {

BigInt parse_integer(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw_parse("empty number in '" + std::string(whole) + "'");
  BigInt out = 0;
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw_parse("not a number: '" + std::string(whole) + "'");
    out = out * 10 + (ch - '0');
  }
  return out;
}

BigInt pow10(unsigned exponent) {
  BigInt out = 1;
  for (unsigned i = 0; i < exponent; ++i) out *= 10;
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational out;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_integer(text.substr(0, slash), whole);
    BigInt den = parse_integer(text.substr(slash + 1), whole);
    if (den == 0) throw_parse("zero denominator in '" + std::string(whole) + "'");
    out = Rational(num, den);
  } else {
    long exponent = 0;
    if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
      std::string_view exp_text = text.substr(e + 1);
      bool exp_negative = false;
      if (!exp_text.empty() && (exp_text.front() == '-' || exp_text.front() == '+')) {
        exp_negative = exp_text.front() == '-';
        exp_text.remove_prefix(1);
      }
      BigInt magnitude = parse_integer(exp_text, whole);
      if (magnitude > 4000) throw_parse("exponent out of range in '" + std::string(whole) + "'");
      exponent = magnitude.convert_to<long>() * (exp_negative ? -1 : 1);
      text = text.substr(0, e);
    }
    std::string digits;
    long scale = 0;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
      digits = std::string(text.substr(0, dot)) + std::string(text.substr(dot + 1));
      scale = static_cast<long>(text.size() - dot - 1);
    } else {
      digits = std::string(text);
    }
    BigInt mantissa = parse_integer(digits, whole);
    long shift = exponent - scale;
    if (shift >= 0) {
      out = Rational(mantissa * pow10(static_cast<unsigned>(shift)));
    } else {
      out = Rational(mantissa, pow10(static_cast<unsigned>(-shift)));
    }
  }
  return negative ? Rational(-out) : out;
}

unsigned ceil_log2(const BigInt& value) {
  if (value <= 0) throw_invalid("ceil_log2 of a non-positive value");
  if (value == 1) return 0;
  BigInt below = value - 1;
  return static_cast<unsigned>(boost::multiprecision::msb(below)) + 1;
}

BigInt pow2(unsigned exponent) {
  BigInt out = 1;
  out <<= exponent;
  return out;
}

long double to_long_double(const Rational& value) {
  return value.convert_to<long double>();
}

}  // namespace sptc
