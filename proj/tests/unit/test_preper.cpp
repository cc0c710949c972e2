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

#include <cmath>
#include <map>
#include <set>

#include "qdyn/errors.hpp"
#include "qdyn/exact/sturm.hpp"
#include "qdyn/preper.hpp"
#include "support/generators.hpp"
#include "support/preper_oracle.hpp"

using namespace qdyn;
using qdyn::testing::Gen;
using qdyn::testing::ipoly;
using qdyn::testing::q;

namespace {

SurdSum golden() { return SurdSum(q(1, 2)) + SurdSum::term(q(1, 2), BigInt(5)); }

RatPolynomial rpoly(std::initializer_list<BigRational> constant_first) {
  return RatPolynomial(std::vector<BigRational>(constant_first));
}

/// Minimal polynomials of a set, with multiplicity.
std::multiset<std::string> min_polys(const PreperSet& set) {
  std::multiset<std::string> out;
  for (const auto& e : set.elements) out.insert(e.min_poly.str());
  return out;
}

std::multiset<std::string> expected(std::initializer_list<std::pair<RatPolynomial, int>> polys) {
  std::multiset<std::string> out;
  for (const auto& [p, count] : polys) {
    for (int i = 0; i < count; ++i) out.insert(p.str());
  }
  return out;
}

/// Monic integer polynomials of degree d in the box |e_k| <= C(d, k) ceil(s)^k
/// with every root in [-s, s] and no integer root (so irreducible for d <= 3).
std::vector<IntPolynomial> box_oracle(const SurdSum& s, int d) {
  const long top = s.enclosure(q(1, 1000)).hi.ceil().get_si();
  std::vector<long> bound(static_cast<std::size_t>(d) + 1);
  for (int k = 1; k <= d; ++k) {
    bound[static_cast<std::size_t>(k)] =
        binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(k)).get_si() * static_cast<long>(std::pow(top, k));
  }
  std::vector<IntPolynomial> out;
  std::vector<long> e(static_cast<std::size_t>(d) + 1, 0);
  const SurdInterval interval{-s, s};
  auto rec = [&](auto&& self, int k) -> void {
    if (k > d) {
      std::vector<BigInt> coeffs(static_cast<std::size_t>(d) + 1);
      coeffs[static_cast<std::size_t>(d)] = 1;
      for (int j = 1; j <= d; ++j) coeffs[static_cast<std::size_t>(d - j)] = e[static_cast<std::size_t>(j)];
      IntPolynomial p(coeffs);
      if (count_roots_with_multiplicity(p.to_rational(), interval) != d) return;
      if (d > 1) {
        for (long r = -top; r <= top; ++r) {
          if (p.to_rational()(BigRational(r)).is_zero()) return;
        }
      }
      out.push_back(p);
      return;
    }
    for (long v = -bound[static_cast<std::size_t>(k)]; v <= bound[static_cast<std::size_t>(k)]; ++v) {
      e[static_cast<std::size_t>(k)] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntPolynomial> of_degree(const std::vector<IntPolynomial>& all, int d) {
  std::vector<IntPolynomial> out;
  for (const auto& p : all) {
    if (p.degree() == d) out.push_back(p);
  }
  return out;
}

const char* const kDeskParameters[] = {"0", "1/4", "-1", "1/5"};

}  // namespace

TEST_SUITE("model") {
  TEST_CASE("conjugated models") {
    const ConjugatedModel quarter = conjugated_model(q(1, 4));
    CHECK(quarter.map_rule() == "(x^2 + 1)/2");
    CHECK(quarter.half_length == SurdSum(1));
    CHECK(quarter.algebra->dimension() == 1);
    const ConjugatedModel m1 = conjugated_model(q(-1));
    CHECK(m1.map_rule() == "x^2 - 1");
    CHECK(m1.half_length == golden());
    const ConjugatedModel fifth = conjugated_model(q(1, 5));
    CHECK(fifth.map_rule() == "(x^2 + 1)/sqrt(5)");
    CHECK(fifth.half_length == golden());
    CHECK(fifth.algebra->dimension() == 2);
    const ConjugatedModel eighth = conjugated_model(q(1, 8));
    CHECK(eighth.sqrt_b_root == 2);
    CHECK(eighth.sqrt_b_radicand == 2);
    CHECK(eighth.map_rule() == "(x^2 + 1)/(2*sqrt(2))");
    CHECK(conjugated_model(q(0)).map_rule() == "x^2");
    CHECK_THROWS_AS(conjugated_model(q(-2)), OutOfRange);
    CHECK_THROWS_AS(conjugated_model(q(1, 3)), OutOfRange);
  }

  TEST_CASE("phi conjugates g to f_c") {
    Gen g(51);
    for (int i = 0; i < 80; ++i) {
      BigRational c = g.rational(30, 12);
      if (!(c > q(-2)) || c > q(1, 4)) continue;
      const ConjugatedModel m = conjugated_model(c);
      const AlgebraPtr alg = algebra_make(m.sqrt_b_radicand, BigInt(g.integer(0, 1) ? 3 : 1));
      const AlgebraicElement x = g.element(alg, 9, 4);
      const AlgebraicElement phi_x = m.to_original(x);
      const AlgebraicElement f_phi_x = phi_x * phi_x + AlgebraicElement::rational(alg, c);
      CHECK(m.to_original(m.apply(x)) == f_phi_x);
    }
  }
}

TEST_SUITE("enumeration") {
  TEST_CASE("documented candidate lists") {
    const auto m1 = enumerate_candidates(conjugated_model(q(-1)), 2);
    std::vector<std::string> got;
    for (const auto& p : m1) got.push_back(p.str());
    CHECK(got == std::vector<std::string>{"t - 1", "t", "t + 1", "t^2 - t - 1", "t^2 - 2", "t^2 + t - 1"});
    std::vector<std::string> quarter;
    for (const auto& p : enumerate_candidates(conjugated_model(q(1, 4)), 1)) quarter.push_back(p.str());
    CHECK(quarter == std::vector<std::string>{"t - 1", "t", "t + 1"});
  }

  TEST_CASE("degree 1 gives the integers of the interval") {
    Gen g(52);
    for (int i = 0; i < 40; ++i) {
      const SurdSum s = SurdSum(g.rational(30, 7).abs()) + SurdSum::term(g.rational(9, 5).abs(), BigInt(2));
      const long fl = s.enclosure(q(1, 1000000)).lo.floor().get_si();
      // skip samples too close to an integer for the floor above
      if (compare(s, SurdSum(fl + 1)) >= 0) continue;
      const auto found = enumerate_totally_real_integers(s, 1);
      REQUIRE(found.size() == static_cast<std::size_t>(2 * fl + 1));
      // t - fl, ..., t + fl in coefficient order
      for (long k = -fl; k <= fl; ++k) CHECK(found[static_cast<std::size_t>(k + fl)] == ipoly({k, 1}));
    }
  }

  TEST_CASE("no candidates of degree 3 to 6 in the golden interval") {
    const auto all = enumerate_totally_real_integers(golden(), 6);
    CHECK(all.size() == 6);
    for (const auto& p : all) CHECK(p.degree() <= 2);
  }

  TEST_CASE("agrees with a brute-force coefficient box") {
    const SurdSum wide = SurdSum::term(q(1, 2), BigInt(2)) + SurdSum::term(q(1, 2), BigInt(6));
    for (const SurdSum& s : {SurdSum(1), golden(), wide, SurdSum(2), SurdSum(q(3, 2))}) {
      const auto fast = enumerate_totally_real_integers(s, 3);
      for (int d = 1; d <= 3; ++d) {
        CHECK_MESSAGE(of_degree(fast, d) == box_oracle(s, d), "s = ", s.str(), ", degree ", d);
      }
    }
  }

  TEST_CASE("interval [-2, 2] holds 2cos(2 pi k / n)") {
    // One minimal polynomial per n with phi(n) <= 6: n = 1, 2, 3, 4, 6 give
    // degree 1, n = 5, 8, 10, 12 degree 2, and n = 7, 9, 14, 18 degree 3
    const auto all = enumerate_totally_real_integers(SurdSum(2), 3);
    CHECK(of_degree(all, 1).size() == 5);
    CHECK(of_degree(all, 2).size() == 4);
    CHECK(of_degree(all, 3).size() == 4);
    CHECK(std::find(all.begin(), all.end(), ipoly({1, -3, 0, 1})) != all.end());
  }

  TEST_CASE("capacity threshold") {
    CHECK_THROWS_AS(enumerate_candidates(conjugated_model(q(1, 7)), 2), CapacityNotSubcritical);
  }
}

TEST_SUITE("orbits") {
  TEST_CASE("documented orbits") {
    const ConjugatedModel m1 = conjugated_model(q(-1));
    const AlgebraPtr q1 = m1.algebra;
    const OrbitOutcome zero = orbit_classify(AlgebraicElement::rational(q1, q(0)), m1);
    CHECK(zero.kind == OrbitOutcome::Kind::Preperiodic);
    CHECK(zero.tail_length == 0);
    CHECK(zero.period == 2);

    const ConjugatedModel quarter = conjugated_model(q(1, 4));
    const OrbitOutcome z4 = orbit_classify(AlgebraicElement::rational(quarter.algebra, q(0)), quarter);
    CHECK(z4.kind == OrbitOutcome::Kind::Rejected);
    CHECK(z4.reason == RejectReason::NonIntegral);
    CHECK(z4.steps_used == 1);
    CHECK(z4.orbit.back() == AlgebraicElement::rational(quarter.algebra, q(1, 2)));

    const AlgebraPtr q2 = algebra_make(BigInt(2));
    const OrbitOutcome r2 = orbit_classify(AlgebraicElement::from_surd(q2, SurdSum::sqrt(q(2))), m1);
    CHECK(r2.kind == OrbitOutcome::Kind::Preperiodic);
    CHECK(r2.tail_length == 2);
    CHECK(r2.period == 2);

    const AlgebraPtr q5 = algebra_make(BigInt(5));
    const OrbitOutcome gold = orbit_classify(AlgebraicElement::from_surd(q5, golden()), m1);
    CHECK(gold.kind == OrbitOutcome::Kind::Preperiodic);
    CHECK(gold.tail_length == 0);
    CHECK(gold.period == 1);

    const OrbitOutcome two = orbit_classify(AlgebraicElement::rational(q1, q(2)), m1);
    CHECK(two.kind == OrbitOutcome::Kind::Rejected);
    CHECK(two.reason == RejectReason::ArchimedeanEscape);
    CHECK(two.steps_used == 0);
  }

  TEST_CASE("orbit errors and caps") {
    const ConjugatedModel fifth = conjugated_model(q(1, 5));
    CHECK_THROWS_AS(orbit_classify(AlgebraicElement::rational(algebra_make(BigInt(2)), q(0)), fifth), AlgebraMismatch);
    const ConjugatedModel m1 = conjugated_model(q(-1));
    const OrbitOutcome capped =
        orbit_classify(AlgebraicElement::from_surd(algebra_make(BigInt(2)), SurdSum::sqrt(q(2))), m1, 1);
    CHECK(capped.kind == OrbitOutcome::Kind::Unresolved);
    CHECK(capped.steps_used == 1);
    CHECK(kronecker_step_cap(1, SurdSum(1)) == 4);
    CHECK(kronecker_step_cap(2, golden()) == 39);
    CHECK(kronecker_step_cap(8, SurdSum(q(19, 10))) == 1000000);
  }

  TEST_CASE("candidate roots") {
    const ConjugatedModel fifth = conjugated_model(q(1, 5));
    const auto roots = candidate_roots(ipoly({-2, 0, 1}), fifth);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value() == -SurdSum::sqrt(q(2)));
    CHECK(roots[1].value() == SurdSum::sqrt(q(2)));
    CHECK(roots[0].algebra()->dimension() == 4);
    CHECK_THROWS_AS(candidate_roots(ipoly({1, -3, 0, 1}), fifth), UnsupportedCandidate);
  }
}

TEST_SUITE("preperiodic sets") {
  TEST_CASE("c = 0") {
    const PreperSet set = totally_real_preper_set(q(0), 8);
    CHECK(min_polys(set) == expected({{rpoly({q(-1), q(1)}), 1}, {rpoly({q(0), q(1)}), 1}, {rpoly({q(1), q(1)}), 1}}));
  }

  TEST_CASE("c = 1/4") {
    const PreperSet set = totally_real_preper_set(q(1, 4), 8);
    CHECK(min_polys(set) == expected({{rpoly({q(-1, 2), q(1)}), 1}, {rpoly({q(1, 2), q(1)}), 1}}));
    REQUIRE(set.elements.size() == 2);
    CHECK(set.elements[0].value.str() == "1/2");
    CHECK(set.elements[1].value.str() == "-1/2");
  }

  TEST_CASE("c = -1") {
    const PreperSet set = totally_real_preper_set(q(-1), 8);
    CHECK(set.bound.n0 == 7);
    CHECK(set.search_degree == 6);
    CHECK(min_polys(set) == expected({{rpoly({q(-1), q(1)}), 1},
                                      {rpoly({q(0), q(1)}), 1},
                                      {rpoly({q(1), q(1)}), 1},
                                      {rpoly({q(-2), q(0), q(1)}), 2},
                                      {rpoly({q(-1), q(1), q(1)}), 2},
                                      {rpoly({q(-1), q(-1), q(1)}), 2}}));
  }

  TEST_CASE("c = 1/5") {
    const PreperSet set = totally_real_preper_set(q(1, 5), 8);
    CHECK(min_polys(set) == expected({{rpoly({q(1, 5), q(-1), q(1)}), 2}, {rpoly({q(1, 5), q(1), q(1)}), 2}}));
    std::set<std::string> values;
    for (const auto& e : set.elements) values.insert(e.value.str());
    // (+-1 +- sqrt 5) / (2 sqrt 5)
    CHECK(values == std::set<std::string>{"(5+sqrt(5))/10", "(5-sqrt(5))/10", "(-5+sqrt(5))/10", "(-5-sqrt(5))/10"});
  }

  TEST_CASE("pipeline errors") {
    for (const char* c : {"-1/2", "1/6"}) {
      try {
        totally_real_preper_set(BigRational::parse(c), 8);
        FAIL("expected BoundTooLarge");
      } catch (const BoundTooLarge& e) {
        CHECK(e.bound() == 97);
        CHECK(e.budget() == 8);
      }
    }
    CHECK_THROWS_AS(totally_real_preper_set(q(1, 7), 8), CapacityNotSubcritical);
    CHECK_THROWS_AS(totally_real_preper_set(q(-3, 2), 8), CapacityNotSubcritical);
    CHECK_THROWS_AS(totally_real_preper_set(q(-2), 8), OutOfRange);
    CHECK_THROWS_AS(totally_real_preper_set(q(1), 8), OutOfRange);
    try {
      totally_real_preper_set(q(-1), 5);
      FAIL("expected BoundTooLarge");
    } catch (const BoundTooLarge& e) {
      CHECK(e.bound() == 6);
    }
  }

  TEST_CASE("closure, soundness and termination on every desk-scale set") {
    for (const char* c : kDeskParameters) {
      const PreperSet set = totally_real_preper_set(BigRational::parse(c), 8);
      CHECK(is_galois_closed(set.elements));
      CHECK_FALSE(set.has_unresolved());
      for (const auto& e : set.elements) {
        const PreperCertificate cert = verify_preperiodic(e.value, set.c);
        CHECK(cert.preperiodic);
        CHECK(cert.m < cert.n);
        // every root of the minimal polynomial is in the set
        int roots_in_set = 0;
        for (const auto& other : set.elements) {
          if (qdyn::testing::evaluate(e.min_poly, other.value).is_zero()) ++roots_in_set;
        }
        CHECK(roots_in_set == e.min_poly.degree());
      }
    }
  }

  TEST_CASE("conjugation equivariance on every candidate") {
    for (const char* cs : {"0", "1/4", "-1", "1/5", "1/8", "-3/4", "-5/4", "1/9", "-1/9"}) {
      const BigRational c = BigRational::parse(cs);
      const ConjugatedModel model = conjugated_model(c);
      if (compare(SurdSum(2) * model.half_length, SurdSum(4)) >= 0) continue;
      for (const auto& p : enumerate_candidates(model, 2)) {
        for (const auto& root : candidate_roots(p, model)) {
          const OrbitOutcome o = orbit_classify(root, model);
          CHECK(o.kind != OrbitOutcome::Kind::Unresolved);
          CHECK_MESSAGE(o.preperiodic() == verify_preperiodic(model.to_original(root), c).preperiodic, "c = ", cs,
                        ", root ", root.str());
        }
      }
    }
  }

  TEST_CASE("brute-force oracle for c = -1") {
    const std::set<std::string> oracle = qdyn::testing::brute_force_preper_minus_one();
    std::set<std::string> pipeline;
    for (const auto& e : totally_real_preper_set(q(-1), 8).elements) pipeline.insert(e.value.str());
    CHECK(pipeline == oracle);
    CHECK(pipeline.size() == 9);
  }

  TEST_CASE("deterministic order") {
    const PreperSet a = totally_real_preper_set(q(-1), 8);
    const PreperSet b = totally_real_preper_set(q(-1), 8);
    REQUIRE(a.elements.size() == b.elements.size());
    for (std::size_t i = 0; i < a.elements.size(); ++i) CHECK(a.elements[i].value == b.elements[i].value);
  }
}

TEST_SUITE("verification") {
  TEST_CASE("documented certificates") {
    const PreperCertificate gold = verify_preperiodic(AlgebraicElement::from_surd(algebra_make(BigInt(5)), golden()), q(-1));
    CHECK(gold.preperiodic);
    CHECK(gold.m == 0);
    CHECK(gold.n == 1);
    const PreperCertificate half = verify_preperiodic(AlgebraicElement::rational(algebra_make(BigInt(1)), q(1, 2)), q(1, 4));
    CHECK(half.preperiodic);
    CHECK(half.m == 0);
    CHECK(half.n == 1);
    const PreperCertificate third = verify_preperiodic(AlgebraicElement::rational(algebra_make(BigInt(1)), q(1, 3)), q(0));
    CHECK_FALSE(third.preperiodic);
    CHECK_FALSE(third.unresolved);
    const PreperCertificate above = verify_preperiodic(AlgebraicElement::rational(algebra_make(BigInt(1)), q(0)), q(1));
    CHECK_FALSE(above.preperiodic);
  }

  TEST_CASE("infinite case still certifies rational cycles") {
    // c = -2: 2 is fixed, 0 -> -2 -> 2
    const AlgebraPtr q1 = algebra_make(BigInt(1));
    const PreperCertificate zero = verify_preperiodic(AlgebraicElement::rational(q1, q(0)), q(-2));
    CHECK(zero.preperiodic);
    CHECK(zero.m == 2);
    CHECK(zero.n == 3);
  }
}
