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

#include <map>

#include "qdyn/exact/rational.hpp"
#include "qdyn/exact/surd.hpp"
#include "qdyn/padicdyn.hpp"
#include "qdyn/trichotomy.hpp"

namespace qdyn {

/// Local capacities of an adelic set over Q. Finite places not listed have
/// capacity 1; every local degree is 1.
struct AdelicSetDescriptor {
  CapacityValue archimedean_factor;
  std::map<BigInt, CapacityValue> finite_factors;

  CapacityValue finite_factor(const BigInt& p) const;
  CapacityValue total() const;
};

/// Capacity of a real segment: a quarter of its length.
SurdSum segment_capacity(const SurdSum& length);

/// Capacity of Z_p, p^(-1/(p-1)).
CapacityValue zp_capacity(const BigInt& p);

/// [-a_c, a_c] at infinity, the v-adic filled Julia sets (capacity 1) elsewhere.
AdelicSetDescriptor totally_real_adelic_set(const BigRational& c);
/// a_c / 2. Throws OutOfRange for c > 1/4.
CapacityValue adelic_capacity_totally_real(const BigRational& c);

/// Z_p at p, the filled Julia sets elsewhere.
AdelicSetDescriptor totally_padic_adelic_set(const BigRational& c, const PAdicContext& ctx);
/// p^(-1/(p-1)). Throws OutOfRange when |c|_p > 1.
CapacityValue adelic_capacity_totally_padic(const BigRational& c, const PAdicContext& ctx);

}  // namespace qdyn
