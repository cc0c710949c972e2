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

#include "qdyn/exact/sturm.hpp"

#include "qdyn/errors.hpp"

namespace qdyn {

std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p) {
  if (p.is_zero()) throw InvalidInput("Sturm sequence of the zero polynomial");
  std::vector<RatPolynomial> chain;
  chain.push_back(p.normalized_positive());
  if (p.degree() == 0) return chain;
  chain.push_back(p.derivative().normalized_positive());
  for (;;) {
    const auto& a = chain[chain.size() - 2];
    const auto& b = chain.back();
    RatPolynomial r = divmod(a, b).second;
    if (r.is_zero()) break;
    chain.push_back((-r).normalized_positive());
  }
  return chain;
}

int sign_variations(const std::vector<RatPolynomial>& chain, const SurdSum& x) {
  int variations = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = x.is_rational() ? q(x.rational_part()).sign() : q(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int sturm_count(const RatPolynomial& p, const SurdInterval& interval) {
  if (p.is_zero()) throw InvalidInput("sturm_count on the zero polynomial");
  const int order = compare(interval.lo, interval.hi);
  if (order > 0) throw InvalidInput("sturm_count interval with lo > hi");
  const RatPolynomial sf = squarefree_part(p);
  if (sf.degree() < 1) return 0;
  const bool lo_is_root = sf(interval.lo).is_zero();
  if (order == 0) return lo_is_root ? 1 : 0;
  const auto chain = sturm_sequence(sf);
  const int half_open = sign_variations(chain, interval.lo) - sign_variations(chain, interval.hi);
  return half_open + (lo_is_root ? 1 : 0);
}

int sturm_count(const RatPolynomial& p, const RationalInterval& interval) {
  return sturm_count(p, SurdInterval{SurdSum(interval.lo), SurdSum(interval.hi)});
}

int sturm_count(const IntPolynomial& p, const RationalInterval& interval) {
  return sturm_count(p.to_rational(), interval);
}

int count_roots_with_multiplicity(const RatPolynomial& p, const SurdInterval& interval) {
  if (p.is_zero()) throw InvalidInput("root count of the zero polynomial");
  int total = 0;
  RatPolynomial current = p;
  // Each root of multiplicity k survives in exactly k of the iterated gcds.
  while (current.degree() >= 1) {
    total += sturm_count(current, interval);
    current = gcd(current, current.derivative());
  }
  return total;
}

}  // namespace qdyn
