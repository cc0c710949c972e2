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

#include "qdyn/errors.hpp"
#include "qdyn/realdyn.hpp"
#include "support/generators.hpp"

using namespace qdyn;
using qdyn::testing::Gen;
using qdyn::testing::q;

namespace {

AlgebraicElement in_q5(const SurdSum& s) { return AlgebraicElement::from_surd(algebra_make(BigInt(5)), s); }

SurdSum golden() { return SurdSum(q(1, 2)) + SurdSum::term(q(1, 2), BigInt(5)); }

/// Random c <= 1/4 with small height.
BigRational parameter_at_most_quarter(Gen& g) {
  for (;;) {
    BigRational c = g.rational(40, 12);
    if (c <= q(1, 4)) return c;
  }
}

}  // namespace

TEST_CASE("fixed point radius") {
  CHECK(fixed_point_radius(q(1, 4)) == QuadraticSurd(q(1, 2)));
  CHECK(fixed_point_radius(q(-2)) == QuadraticSurd(q(2)));
  const QuadraticSurd a = fixed_point_radius(q(1, 5));
  CHECK(a.u() == q(1, 2));
  CHECK(a.v() == q(1, 10));
  CHECK(a.n() == 5);
  CHECK(fixed_point_radius(q(-1)).str() == "(1+sqrt(5))/2");
  CHECK(fixed_point_radius(q(-6)).str() == "3");
  CHECK_THROWS_AS(fixed_point_radius(q(1, 3)), OutOfRange);
}

TEST_CASE("a_c is fixed by f_c exactly") {
  Gen g(21);
  for (int i = 0; i < 200; ++i) {
    const BigRational c = parameter_at_most_quarter(g);
    const QuadraticSurd a = fixed_point_radius(c);
    CHECK(a * a + QuadraticSurd(c) == a);
    CHECK(a.compare(q(1, 2)) >= 0);
  }
}

TEST_CASE("quadratic surd canonical form") {
  const QuadraticSurd folded(q(1), q(3), BigInt(1));
  CHECK(folded.is_rational());
  CHECK(folded == QuadraticSurd(q(4)));
  CHECK(QuadraticSurd(q(0), q(1), BigInt(8)) == QuadraticSurd(q(0), q(2), BigInt(2)));
  CHECK_THROWS_AS(QuadraticSurd(q(1), q(1), BigInt(2)) + QuadraticSurd(q(1), q(1), BigInt(3)), InvalidInput);
}

TEST_CASE("real filled Julia shape") {
  CHECK(classify_real_filled_julia(q(1)).tag == JuliaShapeTag::Empty);
  CHECK_FALSE(classify_real_filled_julia(q(1)).radius.has_value());
  const RealJuliaShape m1 = classify_real_filled_julia(q(-1));
  CHECK(m1.tag == JuliaShapeTag::Interval);
  CHECK(m1.radius->str() == "(1+sqrt(5))/2");
  const RealJuliaShape m3 = classify_real_filled_julia(q(-3));
  CHECK(m3.tag == JuliaShapeTag::ContainedInInterval);
  CHECK(m3.radius->str() == "(1+sqrt(13))/2");
  CHECK(classify_real_filled_julia(q(-2)).tag == JuliaShapeTag::Interval);
  CHECK(classify_real_filled_julia(q(1, 4)).tag == JuliaShapeTag::Interval);
}

TEST_CASE("totally real trichotomy") {
  CHECK(classify_totally_real(q(1, 2)).tag == Trichotomy::Empty);
  const TrichotomyReport zero = classify_totally_real(q(0));
  CHECK(zero.tag == Trichotomy::NonemptyFinite);
  CHECK(zero.witness == "1");
  REQUIRE(zero.capacity.has_value());
  CHECK(zero.capacity->str() == "1/2");
  CHECK(classify_totally_real(q(-2)).tag == Trichotomy::Infinite);
  CHECK(classify_totally_real(q(1, 4)).tag == Trichotomy::NonemptyFinite);
  CHECK(classify_totally_real(BigRational(BigInt(-199999), BigInt(100000))).tag == Trichotomy::NonemptyFinite);
  CHECK(classify_totally_real(BigRational(BigInt(25001), BigInt(100000))).tag == Trichotomy::Empty);
}

TEST_CASE("the two classifications agree on emptiness") {
  Gen g(22);
  for (int i = 0; i < 300; ++i) {
    const BigRational c = g.rational(60, 13);
    const bool empty_set = classify_totally_real(c).tag == Trichotomy::Empty;
    const bool empty_julia = classify_real_filled_julia(c).tag == JuliaShapeTag::Empty;
    CHECK(empty_set == empty_julia);
    CHECK(empty_set == (c > q(1, 4)));
  }
}

TEST_CASE("escape test") {
  const AlgebraPtr q5 = algebra_make(BigInt(5));
  CHECK(escape_test(AlgebraicElement::rational(q5, q(2)), q(-1)) == EscapeVerdict::Escapes);
  CHECK(escape_test(in_q5(golden()), q(-1)) == EscapeVerdict::OnBoundary);
  CHECK(escape_test(in_q5(-golden()), q(-1)) == EscapeVerdict::OnBoundary);
  CHECK(escape_test(AlgebraicElement::rational(q5, q(1)), q(-1)) == EscapeVerdict::Inside);
  // the conjugate 1 - sqrt 5 is about -1.236, inside; 1 + sqrt 5 escapes
  CHECK(escape_test(in_q5(SurdSum(1) + SurdSum::sqrt(q(5))), q(-1)) == EscapeVerdict::Escapes);
  // sqrt 5 - 1/2 is about 1.736 > a_c while its conjugate is inside
  CHECK(escape_test(in_q5(SurdSum::sqrt(q(5)) - SurdSum(q(1, 2))), q(-1)) == EscapeVerdict::Escapes);
  CHECK_THROWS_AS(escape_test(AlgebraicElement::rational(q5, q(0)), q(1)), OutOfRange);
}

TEST_CASE("forward invariance of [-a_c, a_c]") {
  Gen g(23);
  for (int i = 0; i < 300; ++i) {
    BigRational c = parameter_at_most_quarter(g);
    if (c < q(-2)) c = q(-2);
    const SurdSum a = fixed_point_radius(c).to_surd();
    const BigRational a_lo = a.enclosure(q(1, 1000000)).lo;
    const BigRational x = a_lo * g.rational(1000, 1000);
    if (x.abs() > a_lo) continue;
    const BigRational fx = quadratic_map(x, c);
    CHECK(compare(SurdSum(fx.abs()), a) <= 0);
  }
}

TEST_CASE("orbits escape linearly when c > 1/4") {
  Gen g(24);
  for (int i = 0; i < 100; ++i) {
    const BigRational c = q(1, 4) + BigRational(BigInt(g.integer(1, 20)), BigInt(g.integer(1, 9)));
    const BigRational eps = c - q(1, 4);
    const BigRational x0 = g.rational(9, 5);
    BigRational x = x0;
    for (int n = 1; n <= 5; ++n) {
      x = quadratic_map(x, c);
      CHECK(x > x0 + BigRational(n) * eps);
    }
  }
}
