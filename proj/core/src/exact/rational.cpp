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

#include "qdyn/exact/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "qdyn/errors.hpp"

namespace qdyn {

std::string to_string(const BigInt& z) { return z.get_str(); }

std::size_t hash_value(const BigInt& z) {
  // Fold the limbs; enough for unordered containers over coordinates.
  std::size_t h = static_cast<std::size_t>(mpz_sgn(z.get_mpz_t()) + 1);
  const std::size_t n = mpz_size(z.get_mpz_t());
  for (std::size_t i = 0; i < n; ++i) {
    h ^= static_cast<std::size_t>(mpz_getlimbn(z.get_mpz_t(), i)) +
         0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

BigInt parse_int(std::string_view s, std::string_view whole) {
  bool neg = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw InvalidInput("malformed rational literal '" + std::string(whole) + "'");
  }
  BigInt z(std::string(s), 10);
  return neg ? BigInt(-z) : z;
}

}  // namespace

BigRational BigRational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw InvalidInput("empty rational literal");

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    BigInt num = parse_int(s.substr(0, slash), text);
    std::string_view den_text = s.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
    }
    BigInt den(std::string(den_text), 10);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return BigRational(num, den);
  }

  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    bool neg = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      neg = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if ((int_part.empty() && frac.empty()) ||
        (!int_part.empty() && !all_digits(int_part)) ||
        (!frac.empty() && !all_digits(frac))) {
      throw InvalidInput("malformed decimal literal '" + std::string(text) + "'");
    }
    std::string digits = std::string(int_part) + std::string(frac);
    BigInt num(digits.empty() ? std::string("0") : digits, 10);
    BigInt den = qdyn::pow(BigInt(10), frac.size());
    if (neg) num = -num;
    return BigRational(num, den);
  }

  return BigRational(parse_int(s, text));
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(q_))); }

BigRational BigRational::inverse() const {
  if (is_zero()) throw InvalidInput("inverse of zero");
  return BigRational(den(), num());
}

BigRational BigRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  BigInt n = qdyn::pow(num(), static_cast<unsigned long>(e));
  BigInt d = qdyn::pow(den(), static_cast<unsigned long>(e));
  return BigRational(n, d);
}

BigInt BigRational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigInt BigRational::ceil() const {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

long double BigRational::to_long_double() const {
  // Scale so a 64-bit mantissa survives when both parts are huge.
  const long nb = static_cast<long>(mpz_sizeinbase(q_.get_num_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(q_.get_den_mpz_t(), 2));
  if (nb < 1000 && db < 1000) {
    return static_cast<long double>(q_.get_num().get_d()) /
           static_cast<long double>(q_.get_den().get_d());
  }
  const long shift = nb - db - 80;
  BigInt scaled;
  if (shift >= 0) {
    BigInt d = q_.get_den();
    d <<= static_cast<mp_bitcnt_t>(shift);
    mpz_tdiv_q(scaled.get_mpz_t(), q_.get_num_mpz_t(), d.get_mpz_t());
  } else {
    BigInt n = q_.get_num();
    n <<= static_cast<mp_bitcnt_t>(-shift);
    mpz_tdiv_q(scaled.get_mpz_t(), n.get_mpz_t(), q_.get_den_mpz_t());
  }
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, scaled.get_mpz_t());
  return std::ldexp(static_cast<long double>(mant), static_cast<int>(exp + shift));
}

std::string BigRational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

BigRational& BigRational::operator+=(const BigRational& o) {
  q_ += o.q_;
  return *this;
}
BigRational& BigRational::operator-=(const BigRational& o) {
  q_ -= o.q_;
  return *this;
}
BigRational& BigRational::operator*=(const BigRational& o) {
  q_ *= o.q_;
  return *this;
}
BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw InvalidInput("division by zero");
  q_ /= o.q_;
  return *this;
}
BigRational BigRational::operator-() const { return BigRational(mpq_class(-q_)); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) {
  return os << q.str();
}

std::size_t hash_value(const BigRational& q) {
  std::size_t h = hash_value(q.raw().get_num());
  return h ^ (hash_value(q.raw().get_den()) * 0x100000001b3ULL);
}

BigInt binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

BigInt pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_perfect_square(const BigInt& z) {
  return sgn(z) >= 0 && mpz_perfect_square_p(z.get_mpz_t()) != 0;
}

BigInt isqrt(const BigInt& z) {
  if (sgn(z) < 0) throw InvalidInput("isqrt of negative integer");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), z.get_mpz_t());
  return r;
}

}  // namespace qdyn
