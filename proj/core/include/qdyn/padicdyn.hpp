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

#include <optional>
#include <string>

#include "qdyn/exact/rational.hpp"
#include "qdyn/trichotomy.hpp"

namespace qdyn {

/// An odd prime. Construction rejects composites (InvalidPrime) and p = 2
/// (UnsupportedPrime): the square-class arguments below need odd p.
class PAdicContext {
 public:
  explicit PAdicContext(const BigInt& p);
  const BigInt& p() const { return p_; }

 private:
  BigInt p_;
};

bool is_prime(const BigInt& n);

/// v_p(q); +infinity for q = 0.
struct PAdicValuation {
  bool infinite = false;
  long value = 0;
  friend bool operator==(const PAdicValuation&, const PAdicValuation&) = default;
};

PAdicValuation vp(const BigRational& q, const BigInt& p);
/// |q|_p = p^(-v_p(q)), with |0|_p = 0.
BigRational abs_p(const BigRational& q, const BigInt& p);

struct SquareTest {
  bool square = false;
  /// Set for q = 0, which is reported as a square (0 = 0^2).
  bool degenerate = false;
};

/// q is a square in Q_p iff v_p(q) is even and its unit part is a nonzero
/// quadratic residue mod p.
SquareTest is_square_in_Qp(const BigRational& q, const PAdicContext& ctx);

/// Square root mod p^k of a p-adic unit that is a square, by Tonelli-Shanks
/// mod p and Hensel lifting. Returns nullopt for non-squares.
std::optional<BigInt> hensel_sqrt(const BigRational& unit, const PAdicContext& ctx, unsigned k);

/// Residue of a p-integral rational modulo p^k.
BigInt reduce_mod_pk(const BigRational& q, const BigInt& p, unsigned k);

enum class PAdicShapeTag { UnitBall, Empty, CantorInQp };
std::string to_string(PAdicShapeTag t);

struct PAdicShape {
  PAdicShapeTag tag = PAdicShapeTag::UnitBall;
  /// |c|_p when |c|_p > 1: points of the filled Julia set satisfy |x|_p^2 = |c|_p.
  std::optional<BigRational> sphere_radius;
};

PAdicShape classify_nonarch_filled_julia(const BigRational& c, const PAdicContext& ctx);

/// Finite for |c|_p <= 1, Empty for |c|_p > 1 with -c a non-square in Q_p,
/// Infinite for |c|_p > 1 with -c a square.
TrichotomyReport classify_totally_padic(const BigRational& c, const PAdicContext& ctx);

/// True iff 1 - 4c is a square in Q_p, i.e. f_c has a fixed point in Q_p.
bool has_totally_padic_fixed_point(const BigRational& c, const PAdicContext& ctx);

/// The fixed point (1 + sqrt(1 - 4c)) / 2 modulo p^k when it lies in Z_p.
struct HenselWitness {
  BigInt residue;
  BigInt modulus;
  unsigned precision = 0;
};
std::optional<HenselWitness> fixed_point_witness(const BigRational& c, const PAdicContext& ctx, unsigned k = 8);
/// The point (-1 + sqrt(-3 - 4c)) / 2 of period dividing 2, modulo p^k, when
/// it lies in Z_p. Its conjugate lies in Z_p as well.
std::optional<HenselWitness> period_two_witness(const BigRational& c, const PAdicContext& ctx, unsigned k = 8);

inline BigRational quadratic_map_padic(const BigRational& x, const BigRational& c) { return x * x + c; }

}  // namespace qdyn
