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

#include "qdyn/capacity.hpp"

#include <iomanip>
#include <sstream>

#include "qdyn/errors.hpp"
#include "qdyn/realdyn.hpp"

namespace qdyn {

namespace {

HighFloat to_high(const BigRational& q) {
  return HighFloat(q.num().get_str()) / HighFloat(q.den().get_str());
}

HighFloat prime_power_value(const PrimePower& pp) {
  return boost::multiprecision::exp(to_high(pp.exponent) * boost::multiprecision::log(HighFloat(pp.p.get_str())));
}

}  // namespace

std::string format_decimal(const HighFloat& v, int digits) {
  if (digits < 1) digits = 1;
  if (digits > 45) digits = 45;
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

CapacityValue::CapacityValue(SurdSum exact) : exact_(exact), value_(exact.to_high()) {}

CapacityValue::CapacityValue(PrimePower exact) : exact_(exact), value_(prime_power_value(exact)) {}

CapacityValue CapacityValue::approximate(HighFloat v) {
  CapacityValue c;
  c.exact_ = std::monostate{};
  c.value_ = std::move(v);
  return c;
}

int CapacityValue::compare_to_one() const {
  if (const auto* s = std::get_if<SurdSum>(&exact_)) return compare(*s, SurdSum(1));
  if (const auto* pp = std::get_if<PrimePower>(&exact_)) return pp->exponent.sign();
  return value_ < 1 ? -1 : (value_ > 1 ? 1 : 0);
}

bool CapacityValue::is_one() const {
  if (const auto* s = std::get_if<SurdSum>(&exact_)) return *s == SurdSum(1);
  if (const auto* pp = std::get_if<PrimePower>(&exact_)) return pp->exponent.is_zero();
  return false;
}

std::string CapacityValue::str() const {
  if (const auto* s = std::get_if<SurdSum>(&exact_)) return s->str();
  if (const auto* pp = std::get_if<PrimePower>(&exact_)) {
    if (pp->exponent.is_zero()) return "1";
    return pp->p.get_str() + "^(" + pp->exponent.str() + ")";
  }
  return decimal(30);
}

std::string CapacityValue::decimal(int digits) const { return format_decimal(value_, digits); }

CapacityValue operator*(const CapacityValue& a, const CapacityValue& b) {
  if (a.is_one()) return b;
  if (b.is_one()) return a;
  const auto* sa = std::get_if<SurdSum>(&a.exact_);
  const auto* sb = std::get_if<SurdSum>(&b.exact_);
  if (sa && sb) return CapacityValue(*sa * *sb);
  const auto* pa = std::get_if<PrimePower>(&a.exact_);
  const auto* pb = std::get_if<PrimePower>(&b.exact_);
  if (pa && pb && pa->p == pb->p) return CapacityValue(PrimePower{pa->p, pa->exponent + pb->exponent});
  return CapacityValue::approximate(a.value_ * b.value_);
}

std::string to_string(Trichotomy t) {
  switch (t) {
    case Trichotomy::Empty: return "Empty";
    case Trichotomy::NonemptyFinite: return "NonemptyFinite";
    case Trichotomy::Finite: return "Finite";
    case Trichotomy::Infinite: return "Infinite";
  }
  return "?";
}

CapacityValue AdelicSetDescriptor::finite_factor(const BigInt& p) const {
  auto it = finite_factors.find(p);
  return it == finite_factors.end() ? CapacityValue(SurdSum(1)) : it->second;
}

CapacityValue AdelicSetDescriptor::total() const {
  CapacityValue acc = archimedean_factor;
  for (const auto& [p, f] : finite_factors) acc = acc * f;
  return acc;
}

SurdSum segment_capacity(const SurdSum& length) {
  if (length.sign() < 0) throw InvalidInput("segment length must be nonnegative");
  return SurdSum(BigRational(BigInt(1), BigInt(4))) * length;
}

CapacityValue zp_capacity(const BigInt& p) {
  if (!is_prime(p)) throw InvalidPrime(p.get_str() + " is not a prime");
  return CapacityValue(PrimePower{p, BigRational(BigInt(-1), BigInt(p - 1))});
}

AdelicSetDescriptor totally_real_adelic_set(const BigRational& c) {
  const QuadraticSurd a = fixed_point_radius(c);
  AdelicSetDescriptor d;
  d.archimedean_factor = CapacityValue(segment_capacity(SurdSum(2) * a.to_surd()));
  return d;
}

CapacityValue adelic_capacity_totally_real(const BigRational& c) {
  if (c > BigRational(BigInt(1), BigInt(4))) {
    throw OutOfRange("archimedean filled Julia set is empty for c > 1/4");
  }
  return totally_real_adelic_set(c).total();
}

AdelicSetDescriptor totally_padic_adelic_set(const BigRational& c, const PAdicContext& ctx) {
  if (abs_p(c, ctx.p()) > BigRational(1)) {
    throw OutOfRange("|c|_p > 1: the local set at p is not Z_p");
  }
  AdelicSetDescriptor d;
  d.archimedean_factor = CapacityValue(SurdSum(1));
  d.finite_factors.emplace(ctx.p(), zp_capacity(ctx.p()));
  return d;
}

CapacityValue adelic_capacity_totally_padic(const BigRational& c, const PAdicContext& ctx) {
  return totally_padic_adelic_set(c, ctx).total();
}

}  // namespace qdyn
