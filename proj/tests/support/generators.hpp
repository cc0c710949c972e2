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

#include <cstdint>
#include <random>
#include <vector>

#include "qdyn/exact/algebra.hpp"
#include "qdyn/exact/polynomial.hpp"
#include "qdyn/exact/rational.hpp"

namespace qdyn::testing {

/// Seeded generator shared by the property tests; each suite picks its own seed.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  BigRational rational(long max_num, long max_den) {
    return BigRational(BigInt(integer(-max_num, max_num)), BigInt(integer(1, max_den)));
  }

  BigRational nonzero_rational(long max_num, long max_den) {
    for (;;) {
      BigRational q = rational(max_num, max_den);
      if (!q.is_zero()) return q;
    }
  }

  RatPolynomial polynomial(int max_degree, long max_coeff) {
    std::vector<BigRational> c(static_cast<std::size_t>(integer(0, max_degree)) + 1);
    for (auto& x : c) x = rational(max_coeff, 4);
    return RatPolynomial(std::move(c));
  }

  AlgebraicElement element(const AlgebraPtr& alg, long max_num, long max_den) {
    std::vector<BigRational> coords(static_cast<std::size_t>(alg->dimension()));
    for (auto& x : coords) x = rational(max_num, max_den);
    return AlgebraicElement(alg, std::move(coords));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

/// p evaluated at an algebra element by Horner's rule.
inline AlgebraicElement evaluate(const RatPolynomial& p, const AlgebraicElement& x) {
  AlgebraicElement acc = AlgebraicElement::rational(x.algebra(), BigRational(0));
  for (int k = p.degree(); k >= 0; --k) {
    acc = acc * x + AlgebraicElement::rational(x.algebra(), p.coeff(k));
  }
  return acc;
}

inline RatPolynomial poly(std::initializer_list<long> constant_first) {
  std::vector<BigRational> c;
  for (long v : constant_first) c.emplace_back(v);
  return RatPolynomial(std::move(c));
}

inline IntPolynomial ipoly(std::initializer_list<long> constant_first) {
  std::vector<BigInt> c;
  for (long v : constant_first) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

inline BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

}  // namespace qdyn::testing
