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

#include "qdyn/exact/polynomial.hpp"
#include "qdyn/exact/rational.hpp"

namespace qdyn::testing {

/// Legendre polynomial P_k by Bonnet's recursion.
inline RatPolynomial legendre(int k) {
  RatPolynomial prev = RatPolynomial::constant(BigRational(1));
  if (k == 0) return prev;
  RatPolynomial cur = RatPolynomial::monomial(BigRational(1), 1);
  for (int j = 1; j < k; ++j) {
    RatPolynomial next = BigRational(BigInt(1), BigInt(j + 1)) *
                         (BigRational(2 * j + 1) * (RatPolynomial::monomial(BigRational(1), 1) * cur) -
                          BigRational(j) * prev);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

/// Resultant over the rationals by the Euclidean recurrence.
inline BigRational resultant(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return BigRational(0);
  if (b.degree() == 0) return b.leading().pow(a.degree());
  const RatPolynomial r = divmod(a, b).second;
  if (r.is_zero()) return BigRational(0);
  BigRational sign((a.degree() * b.degree()) % 2 == 0 ? 1 : -1);
  return sign * b.leading().pow(a.degree() - r.degree()) * resultant(b, r);
}

/// prod_{i<j} (y_i - y_j)^2 over the n zeros of (1 - t^2) P'_{n-1}(t)
/// rescaled into [-1/2, 1/2]. These zeros are the n-point Fekete set of the
/// segment, so the value is D_n, computed here without any optimization.
inline BigRational lobatto_discriminant(int n) {
  const RatPolynomial one_minus_t2({BigRational(1), BigRational(0), BigRational(-1)});
  const RatPolynomial nodes = (one_minus_t2 * legendre(n - 1).derivative()).scaled_argument(BigRational(2)).monic();
  const int d = nodes.degree();
  const BigRational sign((d * (d - 1) / 2) % 2 == 0 ? 1 : -1);
  return sign * resultant(nodes, nodes.derivative());
}

}  // namespace qdyn::testing
