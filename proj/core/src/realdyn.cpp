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

#include "qdyn/realdyn.hpp"

#include "qdyn/capacity.hpp"
#include "qdyn/errors.hpp"

namespace qdyn {

QuadraticSurd::QuadraticSurd(const BigRational& u) : u_(u) {}

QuadraticSurd::QuadraticSurd(BigRational u, BigRational v, const BigInt& n) : u_(std::move(u)) {
  if (sgn(n) < 0) throw InvalidInput("QuadraticSurd radicand must be nonnegative");
  if (n == 0 || v.is_zero()) return;
  const SquarefreeSplit split = squarefree_decompose(n);
  BigRational scaled = v * BigRational(split.root);
  if (split.squarefree == 1) {
    u_ += scaled;
    return;
  }
  v_ = std::move(scaled);
  n_ = split.squarefree;
}

SurdSum QuadraticSurd::to_surd() const {
  SurdSum s(u_);
  if (!v_.is_zero()) s += SurdSum::term(v_, n_);
  return s;
}

int QuadraticSurd::compare(const BigRational& q) const { return (to_surd() - SurdSum(q)).sign(); }

namespace {

BigInt common_radicand(const QuadraticSurd& a, const QuadraticSurd& b) {
  if (a.is_rational()) return b.n();
  if (b.is_rational() || a.n() == b.n()) return a.n();
  throw InvalidInput("QuadraticSurd operands with different radicands");
}

}  // namespace

QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b) {
  return {a.u_ + b.u_, a.v_ + b.v_, common_radicand(a, b)};
}

QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b) {
  return {a.u_ - b.u_, a.v_ - b.v_, common_radicand(a, b)};
}

QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b) {
  const BigInt n = common_radicand(a, b);
  return {a.u_ * b.u_ + a.v_ * b.v_ * BigRational(n), a.u_ * b.v_ + a.v_ * b.u_, n};
}

QuadraticSurd fixed_point_radius(const BigRational& c) {
  const BigRational quarter(BigInt(1), BigInt(4));
  if (c > quarter) {
    throw OutOfRange("a_c is defined only for c <= 1/4 (got c = " + c.str() + ")");
  }
  const BigRational half(BigInt(1), BigInt(2));
  const SurdSum root = SurdSum::sqrt(BigRational(1) - BigRational(4) * c);
  if (root.is_rational()) return {half + half * root.rational_part()};
  const auto& [m, coeff] = *root.terms().begin();
  return {half, half * coeff, m};
}

std::string to_string(JuliaShapeTag t) {
  switch (t) {
    case JuliaShapeTag::Empty: return "Empty";
    case JuliaShapeTag::Interval: return "Interval";
    case JuliaShapeTag::ContainedInInterval: return "ContainedInInterval";
  }
  return "?";
}

RealJuliaShape classify_real_filled_julia(const BigRational& c) {
  if (c > BigRational(BigInt(1), BigInt(4))) return {JuliaShapeTag::Empty, std::nullopt};
  // At c = -2 both the equality and the containment statement hold; the
  // equality wins.
  const JuliaShapeTag tag = c >= BigRational(-2) ? JuliaShapeTag::Interval : JuliaShapeTag::ContainedInInterval;
  return {tag, fixed_point_radius(c)};
}

TrichotomyReport classify_totally_real(const BigRational& c) {
  TrichotomyReport r;
  r.setting = "totally real";
  if (c > BigRational(BigInt(1), BigInt(4))) {
    r.tag = Trichotomy::Empty;
    r.note = "c > 1/4: the real filled Julia set is empty";
    return r;
  }
  const QuadraticSurd a = fixed_point_radius(c);
  r.capacity = adelic_capacity_totally_real(c);
  if (c > BigRational(-2)) {
    r.tag = Trichotomy::NonemptyFinite;
    r.witness = a.str();
    r.note = "-2 < c <= 1/4: adelic capacity a_c/2 < 1; the fixed point a_c is a member";
  } else {
    r.tag = Trichotomy::Infinite;
    r.note = "c <= -2: every preperiodic point is totally real";
  }
  return r;
}

std::string to_string(EscapeVerdict v) {
  switch (v) {
    case EscapeVerdict::Escapes: return "Escapes";
    case EscapeVerdict::Inside: return "Inside";
    case EscapeVerdict::OnBoundary: return "OnBoundary";
  }
  return "?";
}

namespace {

int refined_sign(const SurdSum& d, const EpsSchedule& schedule) {
  if (d.is_zero()) return 0;
  if (d.is_rational()) return d.sign();
  BigRational eps = schedule.initial;
  // Nonzero surd sums are bounded away from zero, so this terminates.
  for (;;) {
    const RationalInterval box = d.enclosure(eps);
    if (box.lo.sign() > 0) return 1;
    if (box.hi.sign() < 0) return -1;
    eps = eps * eps;
  }
}

}  // namespace

EscapeVerdict escape_against(const AlgebraicElement& x, const SurdSum& bound, const EpsSchedule& schedule) {
  bool boundary = false;
  for (const SurdSum& e : x.embeddings()) {
    const int upper = refined_sign(bound - e, schedule);
    const int lower = refined_sign(bound + e, schedule);
    if (upper < 0 || lower < 0) return EscapeVerdict::Escapes;
    if (upper == 0 || lower == 0) boundary = true;
  }
  return boundary ? EscapeVerdict::OnBoundary : EscapeVerdict::Inside;
}

EscapeVerdict escape_test(const AlgebraicElement& x, const BigRational& c, const EpsSchedule& schedule) {
  return escape_against(x, fixed_point_radius(c).to_surd(), schedule);
}

}  // namespace qdyn
