// Copyright 2026 the charp authors
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

#ifndef CHARP_FP_HPP
#define CHARP_FP_HPP

#include <cstdint>

#include "charp/errors.hpp"

namespace charp {

// Residues live in [0, p). p is word-sized (p <= 2^31 - 1) so products of
// two residues fit in int64 without overflow.
using fp_t = std::int64_t;

inline bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

inline fp_t fp_reduce(fp_t a, fp_t p) {
  fp_t r = a % p;
  return r < 0 ? r + p : r;
}

inline fp_t fp_add(fp_t a, fp_t b, fp_t p) {
  fp_t r = a + b;
  return r >= p ? r - p : r;
}

inline fp_t fp_sub(fp_t a, fp_t b, fp_t p) {
  fp_t r = a - b;
  return r < 0 ? r + p : r;
}

inline fp_t fp_neg(fp_t a, fp_t p) { return a == 0 ? 0 : p - a; }

inline fp_t fp_mul(fp_t a, fp_t b, fp_t p) { return (a * b) % p; }

inline fp_t fp_pow(fp_t a, std::uint64_t e, fp_t p) {
  fp_t r = 1 % p;
  fp_t base = fp_reduce(a, p);
  while (e) {
    if (e & 1) r = fp_mul(r, base, p);
    base = fp_mul(base, base, p);
    e >>= 1;
  }
  return r;
}

/// Inverse by extended Euclid.
inline fp_t fp_inv(fp_t a, fp_t p) {
  a = fp_reduce(a, p);
  if (a == 0) throw structure_error("division by zero in F_p");
  fp_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    fp_t q = r / newr;
    fp_t tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  return t < 0 ? t + p : t;
}

inline fp_t fp_div(fp_t a, fp_t b, fp_t p) { return fp_mul(a, fp_inv(b, p), p); }

}  // namespace charp

#endif  // CHARP_FP_HPP
