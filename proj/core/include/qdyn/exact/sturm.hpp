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

#include <vector>

#include "qdyn/exact/polynomial.hpp"
#include "qdyn/exact/surd.hpp"

namespace qdyn {

/// Closed interval whose endpoints are sums of square roots; the enumeration
/// intervals [-s, s] are rarely rational.
struct SurdInterval {
  SurdSum lo;
  SurdSum hi;
};

/// Canonical Sturm chain p, p', -rem(...), each scaled to |leading| = 1.
std::vector<RatPolynomial> sturm_sequence(const RatPolynomial& p);

/// Number of sign changes of the chain at x, zeros skipped.
int sign_variations(const std::vector<RatPolynomial>& chain, const SurdSum& x);

/// Distinct real roots of p in the closed interval [lo, hi]. Sign variations
/// give the half-open count on (lo, hi]; the lower endpoint is added back by
/// exact evaluation. A non-squarefree p is reduced to its squarefree part.
int sturm_count(const RatPolynomial& p, const SurdInterval& interval);
int sturm_count(const IntPolynomial& p, const RationalInterval& interval);
int sturm_count(const RatPolynomial& p, const RationalInterval& interval);

/// Real roots of p in [lo, hi] counted with multiplicity.
int count_roots_with_multiplicity(const RatPolynomial& p, const SurdInterval& interval);

}  // namespace qdyn
