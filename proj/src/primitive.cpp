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

#include <algorithm>
#include <array>
#include <numeric>

#include "sptc/error.hpp"
#include "sptc/field.hpp"

namespace sptc {

namespace {

// Lexicographically smallest primitive polynomials, full form including the
// leading term, indexed by degree.
constexpr std::array<std::uint64_t, 33> kPrimitiveTable = {
    0x0,        0x3,        0x7,        0xb,        0x13,       0x25,
    0x43,       0x83,       0x11d,      0x211,      0x409,      0x805,
    0x1053,     0x201b,     0x402b,     0x8003,     0x1002d,    0x20009,
    0x40027,    0x80027,    0x100009,   0x200005,   0x400003,   0x800021,
    0x100001b,  0x2000009,  0x4000047,  0x8000027,  0x10000009, 0x20000005,
    0x40000053, 0x80000009, 0x1000000af,
};

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Deterministic for all 64-bit n with these bases.
bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

// Pollard-Brent; n must be an odd composite.
std::uint64_t find_divisor(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    auto f = [&](std::uint64_t x) { return (mul_mod(x, x, n) + c) % n; };
    std::uint64_t x = 2, y = 2, d = 1;
    while (d == 1) {
      x = f(x);
      y = f(f(y));
      d = std::gcd(x > y ? x - y : y - x, n);
    }
    if (d != n) return d;
  }
}

void factor_into(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull}) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
      factor_into(n, out);
      return;
    }
  }
  std::uint64_t d = find_divisor(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

// Multiplication modulo x^s + poly_low, same routine as the field uses.
std::uint64_t poly_mul(std::uint64_t a, std::uint64_t b, unsigned s, std::uint64_t poly_low) {
  const std::uint64_t mask = s == 64 ? ~0ull : ((1ull << s) - 1);
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    const bool top = (a >> (s - 1)) & 1;
    a = (a << 1) & mask;
    if (top) a ^= poly_low;
  }
  return r;
}

std::uint64_t poly_pow(std::uint64_t a, std::uint64_t k, unsigned s, std::uint64_t poly_low) {
  std::uint64_t r = 1;
  while (k) {
    if (k & 1) r = poly_mul(r, a, s, poly_low);
    a = poly_mul(a, a, s, poly_low);
    k >>= 1;
  }
  return r;
}

}  // namespace

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_primitive(unsigned s, std::uint64_t poly_low) {
  if (s == 0 || s > GaloisField::kMaxDegree) return false;
  const std::uint64_t mask = s == 64 ? ~0ull : ((1ull << s) - 1);
  if ((poly_low & ~mask) != 0) return false;
  const std::uint64_t order = mask;  // 2^s - 1
  const std::uint64_t x = s == 1 ? (poly_low & 1) : 2;
  if (poly_pow(x, order, s, poly_low) != 1) return false;
  for (std::uint64_t p : prime_factors(order)) {
    if (poly_pow(x, order / p, s, poly_low) == 1) return false;
  }
  return true;
}

std::uint64_t search_primitive_polynomial(unsigned s) {
  if (s == 0 || s > GaloisField::kMaxDegree)
    throw_invalid("field degree must be in [1, 64], got " + std::to_string(s));
  if (s == 1) return 1;
  const std::uint64_t mask = s == 64 ? ~0ull : ((1ull << s) - 1);
  // The constant term of a primitive polynomial is always 1.
  for (std::uint64_t low = 1;; low += 2) {
    if (is_primitive(s, low)) return low;
    if (low >= mask - 1) break;
  }
  throw_invariant("no primitive polynomial of degree " + std::to_string(s));
}

std::uint64_t smallest_primitive_polynomial(unsigned s) {
  if (s == 0 || s > GaloisField::kMaxDegree)
    throw_invalid("field degree must be in [1, 64], got " + std::to_string(s));
  if (s < kPrimitiveTable.size()) return kPrimitiveTable[s] ^ (1ull << s);
  return search_primitive_polynomial(s);
}

}  // namespace sptc
