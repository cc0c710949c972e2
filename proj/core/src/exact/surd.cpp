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

#include "qdyn/exact/surd.hpp"

#include <cmath>
#include <sstream>

#include "qdyn/errors.hpp"

namespace qdyn {

RationalInterval::RationalInterval(BigRational l, BigRational h) : lo(std::move(l)), hi(std::move(h)) {
  if (hi < lo) throw InvalidInput("interval with lo > hi");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
  return {a.lo + b.lo, a.hi + b.hi};
}

RationalInterval operator*(const BigRational& s, const RationalInterval& a) {
  if (s.sign() >= 0) return {s * a.lo, s * a.hi};
  return {s * a.hi, s * a.lo};
}

namespace {

constexpr unsigned long kTrialLimit = 1UL << 20;

}  // namespace

SquarefreeSplit squarefree_decompose(const BigInt& n) {
  if (sgn(n) < 0) throw InvalidInput("squarefree decomposition of negative integer");
  if (n == 0) return {BigInt(0), BigInt(0)};
  BigInt rest = n;
  BigInt root = 1;
  BigInt free = 1;
  for (unsigned long p = 2; p < kTrialLimit; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) == 0) continue;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= p;
    if (e % 2 == 1) free *= p;
  }
  if (rest > 1) {
    const BigInt limit = BigInt(kTrialLimit);
    if (rest < limit * limit) {
      free *= rest;  // prime cofactor
    } else if (is_perfect_square(rest)) {
      SquarefreeSplit inner = squarefree_decompose(isqrt(rest));
      root *= inner.root * inner.root * inner.squarefree;
    } else if (rest < limit * limit * limit) {
      free *= rest;  // product of at most two distinct large primes
    } else {
      throw InvalidInput("cannot certify squarefree part of " + n.get_str());
    }
  }
  return {root, free};
}

bool is_squarefree(const BigInt& n) {
  if (sgn(n) <= 0) return false;
  return squarefree_decompose(n).root == 1;
}

namespace {

BigRational dyadic_up(const BigRational& x, unsigned long bits) {
  BigInt scale = BigInt(1) << bits;
  BigRational y = x * BigRational(scale);
  return BigRational(y.ceil(), scale);
}

BigRational dyadic_down(const BigRational& x, unsigned long bits) {
  BigInt scale = BigInt(1) << bits;
  BigRational y = x * BigRational(scale);
  return BigRational(y.floor(), scale);
}

}  // namespace

RationalInterval sqrt_enclosure(const BigInt& n, const BigRational& eps) {
  if (sgn(n) < 0) throw InvalidInput("sqrt of negative integer");
  if (eps.sign() <= 0) throw InvalidInput("enclosure width must be positive");
  if (is_perfect_square(n)) return RationalInterval::point(BigRational(isqrt(n)));
  const BigRational nn(n);
  BigRational upper(BigInt(isqrt(n) + 1));
  unsigned long bits = 16;
  for (;;) {
    BigRational lower = dyadic_down(nn / upper, bits);
    if (upper - lower <= eps) return {lower, upper};
    upper = dyadic_up((upper + nn / upper) / BigRational(2), bits);
    bits *= 2;
  }
}

SurdSum::SurdSum(const BigRational& q) {
  if (!q.is_zero()) terms_.emplace(BigInt(1), q);
}

SurdSum SurdSum::term(const BigRational& coeff, const BigInt& radicand) {
  SurdSum s;
  if (coeff.is_zero() || radicand == 0) return s;
  const SquarefreeSplit split = squarefree_decompose(radicand);
  s.add_term(split.squarefree, coeff * BigRational(split.root));
  return s;
}

SurdSum SurdSum::sqrt(const BigRational& q) {
  if (q.sign() < 0) throw InvalidInput("sqrt of negative rational " + q.str());
  return term(BigRational(BigInt(1), q.den()), BigInt(q.num() * q.den()));
}

void SurdSum::add_term(const BigInt& m, const BigRational& q) {
  if (q.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool SurdSum::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1);
}

BigRational SurdSum::rational_part() const { return coeff(BigInt(1)); }

BigRational SurdSum::coeff(const BigInt& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigRational(0) : it->second;
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

SurdSum SurdSum::operator-() const {
  SurdSum r;
  for (const auto& [m, q] : terms_) r.terms_.emplace(m, -q);
  return r;
}

SurdSum operator*(const SurdSum& a, const SurdSum& b) {
  SurdSum r;
  for (const auto& [m1, q1] : a.terms_) {
    for (const auto& [m2, q2] : b.terms_) {
      const BigInt g = gcd(m1, m2);
      const BigInt m = BigInt(m1 / g) * BigInt(m2 / g);
      r.add_term(m, q1 * q2 * BigRational(g));
    }
  }
  return r;
}

SurdSum SurdSum::pow(unsigned e) const {
  SurdSum result(1);
  SurdSum base = *this;
  while (e) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e) base = base * base;
  }
  return result;
}

RationalInterval SurdSum::enclosure(const BigRational& eps) const {
  RationalInterval acc = RationalInterval::point(BigRational(0));
  if (terms_.empty()) return acc;
  const BigRational share = eps / BigRational(static_cast<long>(terms_.size()));
  for (const auto& [m, q] : terms_) {
    if (m == 1) {
      acc = acc + RationalInterval::point(q);
      continue;
    }
    const RationalInterval root = sqrt_enclosure(m, share / q.abs());
    acc = acc + q * root;
  }
  return acc;
}

int SurdSum::sign() const {
  if (terms_.empty()) return 0;
  bool all_pos = true;
  bool all_neg = true;
  for (const auto& [m, q] : terms_) {
    all_pos = all_pos && q.sign() > 0;
    all_neg = all_neg && q.sign() < 0;
  }
  if (all_pos) return 1;
  if (all_neg) return -1;
  if (terms_.size() == 2 && terms_.begin()->first == 1) {
    // u + v sqrt(m) with opposite signs: compare u^2 against v^2 m.
    const BigRational& u = terms_.begin()->second;
    const auto& [m, v] = *std::next(terms_.begin());
    const int c = cmp((u * u).raw(), (v * v * BigRational(m)).raw());
    return c > 0 ? u.sign() : v.sign();
  }
  BigRational eps(BigInt(1), BigInt(1) << 24);
  for (;;) {
    const RationalInterval box = enclosure(eps);
    if (box.lo.sign() > 0) return 1;
    if (box.hi.sign() < 0) return -1;
    eps = eps * eps;
  }
}

long double SurdSum::to_long_double() const {
  long double acc = 0.0L;
  for (const auto& [m, q] : terms_) {
    long double root = m == 1 ? 1.0L : std::sqrt(BigRational(m).to_long_double());
    acc += q.to_long_double() * root;
  }
  return acc;
}

HighFloat SurdSum::to_high() const {
  HighFloat acc = 0;
  for (const auto& [m, q] : terms_) {
    HighFloat qq = HighFloat(q.raw().get_num().get_str()) / HighFloat(q.raw().get_den().get_str());
    if (m == 1) {
      acc += qq;
    } else {
      acc += qq * boost::multiprecision::sqrt(HighFloat(m.get_str()));
    }
  }
  return acc;
}

std::string SurdSum::str() const {
  if (terms_.empty()) return "0";
  BigInt common = 1;
  for (const auto& [m, q] : terms_) common = lcm(common, q.den());
  std::ostringstream inner;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    const BigInt k = (q * BigRational(common)).num();
    const bool neg = k < 0;
    const BigInt mag = neg ? BigInt(-k) : k;
    if (neg) inner << "-";
    else if (!first) inner << "+";
    if (m == 1) {
      inner << mag.get_str();
    } else {
      if (mag != 1) inner << mag.get_str() << "*";
      inner << "sqrt(" << m.get_str() << ")";
    }
    first = false;
  }
  if (common == 1) return inner.str();
  if (terms_.size() == 1) return inner.str() + "/" + common.get_str();
  return "(" + inner.str() + ")/" + common.get_str();
}

int compare(const SurdSum& a, const SurdSum& b) { return (a - b).sign(); }

}  // namespace qdyn
