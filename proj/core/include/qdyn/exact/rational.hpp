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

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

namespace qdyn {

using BigInt = mpz_class;

std::string to_string(const BigInt& z);
std::size_t hash_value(const BigInt& z);

/// Arbitrary-precision rational kept in lowest terms with a positive
/// denominator. The zero value is always 0/1.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : q_(v) {}  // NOLINT
  BigRational(const BigInt& num, const BigInt& den);

  /// Parses "A", "A/B", or a decimal literal such as "-0.25" exactly.
  static BigRational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  BigRational abs() const;
  BigRational inverse() const;
  /// Integer power, negative exponents allowed for nonzero values.
  BigRational pow(long e) const;
  BigInt floor() const;
  BigInt ceil() const;

  double to_double() const { return q_.get_d(); }
  long double to_long_double() const;
  std::string str() const;

  const mpq_class& raw() const { return q_; }

  BigRational& operator+=(const BigRational& o);
  BigRational& operator-=(const BigRational& o);
  BigRational& operator*=(const BigRational& o);
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const;

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return a.q_ == b.q_;
  }
  friend std::strong_ordering operator<=>(const BigRational& a,
                                          const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
           : c > 0 ? std::strong_ordering::greater
                   : std::strong_ordering::equal;
  }

 private:
  explicit BigRational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const BigRational& q);
std::size_t hash_value(const BigRational& q);

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long e);
bool is_perfect_square(const BigInt& z);
BigInt isqrt(const BigInt& z);

}  // namespace qdyn

template <>
struct std::hash<qdyn::BigRational> {
  std::size_t operator()(const qdyn::BigRational& q) const {
    return qdyn::hash_value(q);
  }
};
