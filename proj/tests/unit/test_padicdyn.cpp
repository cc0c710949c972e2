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

#include <doctest.h>

#include <set>

#include "qdyn/errors.hpp"
#include "qdyn/padicdyn.hpp"
#include "support/generators.hpp"
#include "support/padic_oracle.hpp"

using namespace qdyn;
using qdyn::testing::Gen;
using qdyn::testing::q;
using qdyn::testing::square_oracle;
using qdyn::testing::valuation;

namespace {

PAdicContext ctx(long p) { return PAdicContext(BigInt(p)); }

}  // namespace

TEST_CASE("context validates the prime") {
  CHECK(ctx(3).p() == 3);
  CHECK_THROWS_AS(ctx(2), UnsupportedPrime);
  CHECK_THROWS_AS(ctx(9), InvalidPrime);
  CHECK_THROWS_AS(ctx(1), InvalidPrime);
  CHECK_THROWS_AS(ctx(-3), InvalidPrime);
  CHECK(is_prime(BigInt(101)));
  CHECK_FALSE(is_prime(BigInt(91)));
}

TEST_CASE("valuations") {
  CHECK(vp(q(1, 5), BigInt(5)).value == -1);
  CHECK(vp(q(50), BigInt(5)).value == 2);
  CHECK(vp(q(3, 4), BigInt(5)).value == 0);
  CHECK(vp(q(0), BigInt(5)).infinite);
  CHECK(abs_p(q(7, 9), BigInt(3)) == q(9));
  CHECK(abs_p(q(0), BigInt(3)) == q(0));
}

TEST_CASE("documented square tests") {
  CHECK(is_square_in_Qp(q(4, 25), ctx(5)).square);
  CHECK_FALSE(is_square_in_Qp(q(-1, 5), ctx(5)).square);
  CHECK(is_square_in_Qp(q(-1), ctx(5)).square);
  CHECK_FALSE(is_square_in_Qp(q(-1), ctx(3)).square);
  const SquareTest zero = is_square_in_Qp(q(0), ctx(7));
  CHECK(zero.square);
  CHECK(zero.degenerate);
}

TEST_CASE("squares of rationals are squares") {
  Gen g(31);
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (int i = 0; i < 100; ++i) {
      const BigRational x = g.nonzero_rational(500, 500);
      CHECK(is_square_in_Qp(x * x, ctx(p)).square);
    }
  }
}

TEST_CASE("square test matches the mod p^3 oracle") {
  Gen g(32);
  for (long p : {3L, 5L, 7L, 11L}) {
    for (int i = 0; i < 200; ++i) {
      BigRational x = g.nonzero_rational(2000, 2000);
      // spread valuations a little further
      x *= BigRational(p).pow(g.integer(-3, 3));
      CHECK_MESSAGE(is_square_in_Qp(x, ctx(p)).square == square_oracle(x, p), "x = ", x.str(), ", p = ", p);
    }
  }
}

TEST_CASE("Hensel square roots") {
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    const PAdicContext c = ctx(p);
    for (long u = 1; u < 60; ++u) {
      if (u % p == 0) continue;
      const auto r = hensel_sqrt(q(u), c, 6);
      const BigInt m = qdyn::pow(BigInt(p), 6);
      CHECK(r.has_value() == is_square_in_Qp(q(u), c).square);
      if (r) CHECK((*r * *r - u) % m == 0);
    }
  }
  CHECK(reduce_mod_pk(q(1, 2), BigInt(5), 2) == 13);
}

TEST_CASE("non-archimedean filled Julia sets") {
  CHECK(classify_nonarch_filled_julia(q(-1), ctx(3)).tag == PAdicShapeTag::UnitBall);
  const PAdicShape fifth = classify_nonarch_filled_julia(q(1, 5), ctx(5));
  CHECK(fifth.tag == PAdicShapeTag::Empty);
  CHECK(fifth.sphere_radius == q(5));
  const PAdicShape ninth = classify_nonarch_filled_julia(q(7, 9), ctx(3));
  CHECK(ninth.sphere_radius == q(9));
  CHECK(classify_nonarch_filled_julia(q(-4, 25), ctx(5)).tag == PAdicShapeTag::CantorInQp);
}

TEST_CASE("totally p-adic trichotomy") {
  const TrichotomyReport a = classify_totally_padic(q(-1), ctx(3));
  CHECK(a.tag == Trichotomy::Finite);
  REQUIRE(a.capacity.has_value());
  CHECK(a.capacity->str() == "3^(-1/2)");
  // 1 - 4c = 5 is not a 3-adic square, but -3 - 4c = 1 is: 0 and -1 form a 2-cycle
  REQUIRE(a.witness.has_value());
  CHECK(a.witness->find("(-1+sqrt(-3-4c))/2") == 0);
  CHECK(classify_totally_padic(q(1, 5), ctx(5)).tag == Trichotomy::Empty);
  CHECK(classify_totally_padic(q(-4, 25), ctx(5)).tag == Trichotomy::Infinite);
  CHECK_FALSE(classify_totally_padic(q(1, 5), ctx(5)).capacity.has_value());
}

TEST_CASE("empty totally p-adic set implies a non-unit-ball Julia set") {
  Gen g(33);
  for (long p : {3L, 5L, 7L}) {
    for (int i = 0; i < 150; ++i) {
      const BigRational c = g.rational(300, 300) * BigRational(p).pow(g.integer(-2, 1));
      if (classify_totally_padic(c, ctx(p)).tag == Trichotomy::Empty) {
        CHECK(classify_nonarch_filled_julia(c, ctx(p)).tag != PAdicShapeTag::UnitBall);
      }
    }
  }
}

TEST_CASE("fixed points and witnesses") {
  CHECK(has_totally_padic_fixed_point(q(0), ctx(5)));
  CHECK_FALSE(has_totally_padic_fixed_point(q(-1), ctx(5)));
  CHECK(has_totally_padic_fixed_point(q(-6), ctx(5)));
  for (long p : {3L, 5L, 7L, 11L}) {
    for (long cn = -12; cn <= 12; ++cn) {
      const BigRational c(cn);
      const auto w = fixed_point_witness(c, ctx(p));
      CHECK(w.has_value() == has_totally_padic_fixed_point(c, ctx(p)));
      if (w) CHECK((w->residue * w->residue + cn - w->residue) % w->modulus == 0);
      if (const auto w2 = period_two_witness(c, ctx(p))) {
        // x^2 + x + c + 1 = 0 gives f(f(x)) = x
        CHECK((w2->residue * w2->residue + w2->residue + cn + 1) % w2->modulus == 0);
      }
    }
  }
}

TEST_CASE("strong triangle inequality keeps the unit ball") {
  Gen g(34);
  for (long p : {3L, 5L, 7L}) {
    for (int i = 0; i < 200; ++i) {
      BigRational x = g.rational(200, 50);
      BigRational c = g.rational(200, 50);
      // clear p from the denominators
      while (vp(x, BigInt(p)).value < 0) x *= BigRational(p);
      while (!c.is_zero() && vp(c, BigInt(p)).value < 0) c *= BigRational(p);
      const BigRational fx = quadratic_map_padic(x, c);
      CHECK((fx.is_zero() || vp(fx, BigInt(p)).value >= 0));
    }
  }
}

TEST_CASE("valuations double along escaping orbits") {
  Gen g(35);
  for (long p : {3L, 5L, 7L}) {
    for (int i = 0; i < 60; ++i) {
      const BigRational c = g.nonzero_rational(50, 50) * BigRational(p).pow(g.integer(-3, 2));
      const long vc = valuation(c, p);
      // v(x) < min(0, v(c)/2), i.e. |x|_p > 1 and |x|_p^2 > |c|_p
      const long bound = std::min(0L, vc >= 0 ? vc / 2 : (vc - 1) / 2);
      long vx = bound - g.integer(1, 2);
      if (2 * vx >= vc) vx = (vc - 1) / 2 - 1;
      BigRational x(g.integer(1, 40) * (g.integer(0, 1) ? 1 : -1));
      while (x.num() % p == 0) x += BigRational(1);
      x *= BigRational(p).pow(vx);
      const long v0 = valuation(x, p);
      REQUIRE(2 * v0 < vc);
      REQUIRE(v0 < 0);
      BigRational y = x;
      for (int n = 1; n <= 5; ++n) {
        y = quadratic_map_padic(y, c);
        CHECK(vp(y, BigInt(p)).value == (1L << n) * v0);
      }
    }
  }
}
