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

#include "qdyn/padicdyn.hpp"

#include "qdyn/capacity.hpp"
#include "qdyn/errors.hpp"

namespace qdyn {

bool is_prime(const BigInt& n) {
  return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0;
}

PAdicContext::PAdicContext(const BigInt& p) : p_(p) {
  if (!is_prime(p)) throw InvalidPrime(p.get_str() + " is not a prime");
  if (p == 2) {
    throw UnsupportedPrime(
        "p = 2 is not supported: the totally p-adic trichotomy is stated for odd primes only");
  }
}

namespace {

long strip(BigInt& z, const BigInt& p) {
  long e = 0;
  while (z != 0 && mpz_divisible_p(z.get_mpz_t(), p.get_mpz_t()) != 0) {
    mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

/// Unit part q * p^(-v_p(q)) of a nonzero rational.
BigRational unit_part(const BigRational& q, const BigInt& p) {
  BigInt n = q.num();
  BigInt d = q.den();
  strip(n, p);
  strip(d, p);
  return BigRational(n, d);
}

BigInt mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt powmod(const BigInt& b, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt invmod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0) {
    throw InvalidInput("no inverse of " + a.get_str() + " mod " + m.get_str());
  }
  return r;
}

/// Square root of a quadratic residue a mod an odd prime p.
BigInt tonelli_shanks(const BigInt& a_in, const BigInt& p) {
  const BigInt a = mod(a_in, p);
  if (a == 0) return BigInt(0);
  BigInt q = p - 1;
  unsigned long s = 0;
  while (mpz_even_p(q.get_mpz_t())) {
    q >>= 1;
    ++s;
  }
  if (s == 1) return powmod(a, BigInt((p + 1) / 4), p);
  BigInt z = 2;
  while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;
  BigInt m_val = s;
  BigInt c = powmod(z, q, p);
  BigInt t = powmod(a, q, p);
  BigInt r = powmod(a, BigInt((q + 1) / 2), p);
  while (t != 1) {
    unsigned long i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = mod(BigInt(tt * tt), p);
      ++i;
    }
    BigInt b = c;
    for (unsigned long j = 0; j + 1 < m_val.get_ui() - i; ++j) b = mod(BigInt(b * b), p);
    m_val = i;
    c = mod(BigInt(b * b), p);
    t = mod(BigInt(t * c), p);
    r = mod(BigInt(r * b), p);
  }
  return r;
}

}  // namespace

PAdicValuation vp(const BigRational& q, const BigInt& p) {
  if (!is_prime(p)) throw InvalidPrime(p.get_str() + " is not a prime");
  if (q.is_zero()) return {true, 0};
  BigInt n = q.num();
  BigInt d = q.den();
  return {false, strip(n, p) - strip(d, p)};
}

BigRational abs_p(const BigRational& q, const BigInt& p) {
  const PAdicValuation v = vp(q, p);
  if (v.infinite) return BigRational(0);
  return BigRational(p).pow(-v.value);
}

SquareTest is_square_in_Qp(const BigRational& q, const PAdicContext& ctx) {
  if (q.is_zero()) return {true, true};
  const PAdicValuation v = vp(q, ctx.p());
  if (v.value % 2 != 0) return {false, false};
  const BigRational u = unit_part(q, ctx.p());
  // n/d is a square mod p iff n*d is.
  const BigInt nd = mod(BigInt(u.num() * u.den()), ctx.p());
  return {mpz_legendre(nd.get_mpz_t(), ctx.p().get_mpz_t()) == 1, false};
}

BigInt reduce_mod_pk(const BigRational& q, const BigInt& p, unsigned k) {
  const BigInt modulus = qdyn::pow(p, k);
  if (mpz_divisible_p(q.den().get_mpz_t(), p.get_mpz_t()) != 0) {
    throw InvalidInput(q.str() + " is not p-integral");
  }
  return mod(BigInt(q.num() * invmod(q.den(), modulus)), modulus);
}

std::optional<BigInt> hensel_sqrt(const BigRational& unit, const PAdicContext& ctx, unsigned k) {
  const BigInt& p = ctx.p();
  if (k == 0) throw InvalidInput("hensel_sqrt precision must be positive");
  if (vp(unit, p).value != 0 || unit.is_zero()) throw InvalidInput("hensel_sqrt expects a p-adic unit");
  const BigInt a_p = reduce_mod_pk(unit, p, 1);
  if (mpz_legendre(a_p.get_mpz_t(), p.get_mpz_t()) != 1) return std::nullopt;
  BigInt r = tonelli_shanks(a_p, p);
  // Newton on t^2 - a doubles the p-adic precision each step.
  unsigned have = 1;
  while (have < k) {
    have = std::min(2 * have, k);
    const BigInt modulus = qdyn::pow(p, have);
    const BigInt a = reduce_mod_pk(unit, p, have);
    const BigInt f = mod(BigInt(r * r - a), modulus);
    const BigInt inv = invmod(mod(BigInt(2 * r), modulus), modulus);
    r = mod(BigInt(r - f * inv), modulus);
  }
  return r;
}

std::string to_string(PAdicShapeTag t) {
  switch (t) {
    case PAdicShapeTag::UnitBall: return "UnitBall";
    case PAdicShapeTag::Empty: return "Empty";
    case PAdicShapeTag::CantorInQp: return "CantorInQp";
  }
  return "?";
}

PAdicShape classify_nonarch_filled_julia(const BigRational& c, const PAdicContext& ctx) {
  const BigRational size = abs_p(c, ctx.p());
  if (size <= BigRational(1)) return {PAdicShapeTag::UnitBall, std::nullopt};
  const bool square = is_square_in_Qp(-c, ctx).square;
  return {square ? PAdicShapeTag::CantorInQp : PAdicShapeTag::Empty, size};
}

bool has_totally_padic_fixed_point(const BigRational& c, const PAdicContext& ctx) {
  return is_square_in_Qp(BigRational(1) - BigRational(4) * c, ctx).square;
}

namespace {

/// (shift + sqrt(disc)) / 2 modulo p^k when disc is a square in Q_p and the
/// result is p-integral; p is odd, so 2 is invertible.
std::optional<HenselWitness> half_root(const BigRational& c, const BigInt& shift, const BigRational& disc,
                                       const PAdicContext& ctx, unsigned k) {
  const BigInt& p = ctx.p();
  if (abs_p(c, p) > BigRational(1)) return std::nullopt;
  const BigInt modulus = qdyn::pow(p, k);
  BigInt root = 0;
  if (!disc.is_zero()) {
    if (!is_square_in_Qp(disc, ctx).square) return std::nullopt;
    const long v = vp(disc, p).value;
    auto unit_root = hensel_sqrt(unit_part(disc, p), ctx, k);
    if (!unit_root) return std::nullopt;
    root = mod(BigInt(*unit_root * qdyn::pow(p, static_cast<unsigned long>(v / 2))), modulus);
  }
  const BigInt half = invmod(BigInt(2), modulus);
  return HenselWitness{mod(BigInt((shift + root) * half), modulus), modulus, k};
}

}  // namespace

std::optional<HenselWitness> fixed_point_witness(const BigRational& c, const PAdicContext& ctx, unsigned k) {
  return half_root(c, BigInt(1), BigRational(1) - BigRational(4) * c, ctx, k);
}

std::optional<HenselWitness> period_two_witness(const BigRational& c, const PAdicContext& ctx, unsigned k) {
  return half_root(c, BigInt(-1), BigRational(-3) - BigRational(4) * c, ctx, k);
}

TrichotomyReport classify_totally_padic(const BigRational& c, const PAdicContext& ctx) {
  TrichotomyReport r;
  r.setting = "totally " + ctx.p().get_str() + "-adic";
  const BigRational size = abs_p(c, ctx.p());
  if (size <= BigRational(1)) {
    r.tag = Trichotomy::Finite;
    r.capacity = adelic_capacity_totally_padic(c, ctx);
    if (auto w = fixed_point_witness(c, ctx)) {
      r.witness = "(1+sqrt(1-4c))/2 = " + w->residue.get_str() + " mod " + ctx.p().get_str() + "^" +
                  std::to_string(w->precision);
      r.note = "|c|_p <= 1: 1-4c is a square in Q_p, so the Hensel fixed point is a member";
    } else if (auto w2 = period_two_witness(c, ctx)) {
      r.witness = "(-1+sqrt(-3-4c))/2 = " + w2->residue.get_str() + " mod " + ctx.p().get_str() + "^" +
                  std::to_string(w2->precision);
      r.note = "|c|_p <= 1: -3-4c is a square in Q_p, so a Hensel point of period 2 is a member";
    } else {
      r.note = "|c|_p <= 1: finite; nonemptiness unknown (neither 1-4c nor -3-4c is a square in Q_p)";
    }
    return r;
  }
  if (is_square_in_Qp(-c, ctx).square) {
    r.tag = Trichotomy::Infinite;
    r.note = "|c|_p > 1 and -c is a square in Q_p: every preperiodic point is totally p-adic";
  } else {
    r.tag = Trichotomy::Empty;
    r.note = "|c|_p > 1 and -c is not a square in Q_p: the Q_p filled Julia set is empty";
  }
  return r;
}

}  // namespace qdyn
