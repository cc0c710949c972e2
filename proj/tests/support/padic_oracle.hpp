// Copyright 2026 The qdyn Authors.
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

#include <set>

#include "qdyn/exact/rational.hpp"

namespace qdyn::testing {

/// Valuation by repeated division; x != 0.
inline long valuation(const BigRational& x, long p) {
  long v = 0;
  BigInt n = x.num();
  BigInt d = x.den();
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  while (d % p == 0) {
    d /= p;
    --v;
  }
  return v;
}

/// Square test by listing unit squares modulo p^3 (odd p, x != 0).
inline bool square_oracle(const BigRational& x, long p) {
  const long v = valuation(x, p);
  if (v % 2 != 0) return false;
  const long m = p * p * p;
  const BigRational unit = x * BigRational(p).pow(-v);
  BigInt den_inv;
  BigInt den = unit.den() % m;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), BigInt(m).get_mpz_t());
  BigInt r = (unit.num() * den_inv) % m;
  if (r < 0) r += m;
  std::set<long> squares;
  for (long t = 1; t < m; ++t) {
    if (t % p != 0) squares.insert((t * t) % m);
  }
  return squares.count(r.get_si()) > 0;
}

}  // namespace qdyn::testing
