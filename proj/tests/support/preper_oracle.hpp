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

#include <algorithm>
#include <cmath>
#include <set>
#include <string>
#include <vector>

#include "qdyn/exact/algebra.hpp"
#include "qdyn/exact/surd.hpp"

namespace qdyn::testing {

/// Preperiodic points of x^2 - 1 among the roots of monic integer
/// polynomials of degree <= 2 with coefficients in [-4, 4] whose roots lie
/// in [-s, s] (checked numerically), s the golden ratio. Each root is
/// iterated exactly for up to 64 steps; a repeat marks it preperiodic and an
/// iterate with |x| > 4 marks it escaping. Values as canonical strings.
inline std::set<std::string> brute_force_preper_minus_one() {
  const double s = (1 + std::sqrt(5.0)) / 2;
  std::vector<SurdSum> roots;
  for (long c0 = -4; c0 <= 4; ++c0) roots.emplace_back(BigRational(-c0));
  for (long c1 = -4; c1 <= 4; ++c1) {
    for (long c0 = -4; c0 <= 4; ++c0) {
      const long disc = c1 * c1 - 4 * c0;
      if (disc < 0) continue;
      for (int sign : {-1, 1}) {
        roots.push_back(SurdSum(BigRational(BigInt(-c1), BigInt(2))) +
                        SurdSum::term(BigRational(BigInt(sign), BigInt(2)), BigInt(disc)));
      }
    }
  }
  std::set<std::string> out;
  for (const SurdSum& r : roots) {
    const double rd = static_cast<double>(r.to_long_double());
    const double conj = static_cast<double>((SurdSum(2 * r.rational_part()) - r).to_long_double());
    if (std::abs(rd) > s + 1e-9 || std::abs(conj) > s + 1e-9) continue;
    std::set<BigInt> radicands;
    for (const auto& [m, coeff] : r.terms()) {
      if (m != 1) radicands.insert(m);
    }
    const AlgebraPtr alg = algebra_for_radicands(radicands);
    AlgebraicElement x = AlgebraicElement::from_surd(alg, r);
    std::vector<AlgebraicElement> seen;
    for (int step = 0; step < 64; ++step) {
      if (std::find(seen.begin(), seen.end(), x) != seen.end()) {
        out.insert(r.str());
        break;
      }
      if (std::abs(static_cast<double>(x.value().to_long_double())) > 4) break;
      seen.push_back(x);
      x = x * x - AlgebraicElement::rational(alg, BigRational(1));
    }
  }
  return out;
}

}  // namespace qdyn::testing
