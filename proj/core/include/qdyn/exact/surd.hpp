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

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <string>

#include "qdyn/exact/rational.hpp"

namespace qdyn {

/// Floating type for renderings and products whose exact form is huge.
using HighFloat = boost::multiprecision::cpp_bin_float_50;

/// Closed interval [lo, hi] with rational endpoints.
struct RationalInterval {
  BigRational lo;
  BigRational hi;

  RationalInterval() = default;
  RationalInterval(BigRational l, BigRational h);
  static RationalInterval point(const BigRational& x) { return {x, x}; }

  BigRational width() const { return hi - lo; }
  bool contains(const BigRational& x) const { return lo <= x && x <= hi; }
  /// True when the interval lies strictly on one side of zero.
  bool excludes_zero() const { return lo.sign() > 0 || hi.sign() < 0; }

  friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
  friend RationalInterval operator*(const BigRational& s, const RationalInterval& a);
  friend bool operator==(const RationalInterval&, const RationalInterval&) = default;
};

struct SquarefreeSplit {
  BigInt root;        // k
  BigInt squarefree;  // m, with n = k^2 * m
};

/// Writes n = k^2 m with m squarefree. Trial division; throws InvalidInput
/// for inputs whose large cofactor cannot be certified squarefree.
SquarefreeSplit squarefree_decompose(const BigInt& n);
bool is_squarefree(const BigInt& n);

/// Rational enclosure of sqrt(n) of width at most eps, by interval Newton on
/// t^2 - n with dyadic endpoints. The precision doubles each round.
RationalInterval sqrt_enclosure(const BigInt& n, const BigRational& eps);

/// Exact real number sum_i q_i * sqrt(m_i) with distinct squarefree m_i >= 1.
/// Square roots of distinct squarefree integers are linearly independent over
/// the rationals, so the value is zero iff every coefficient is zero; this
/// makes sign() exact and its refinement loop terminating.
class SurdSum {
 public:
  using Terms = std::map<BigInt, BigRational>;

  SurdSum() = default;
  SurdSum(const BigRational& q);  // NOLINT(google-explicit-constructor)
  SurdSum(long v) : SurdSum(BigRational(v)) {}  // NOLINT
  /// coeff * sqrt(radicand) for any nonnegative integer radicand.
  static SurdSum term(const BigRational& coeff, const BigInt& radicand);
  /// sqrt(q) for a nonnegative rational q.
  static SurdSum sqrt(const BigRational& q);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  BigRational rational_part() const;
  /// Coefficient of sqrt(m) for squarefree m (zero if absent).
  BigRational coeff(const BigInt& m) const;

  int sign() const;
  SurdSum abs() const { return sign() < 0 ? -*this : *this; }
  RationalInterval enclosure(const BigRational& eps) const;
  long double to_long_double() const;
  HighFloat to_high() const;

  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o);
  friend SurdSum operator+(SurdSum a, const SurdSum& b) { return a += b; }
  friend SurdSum operator-(SurdSum a, const SurdSum& b) { return a -= b; }
  friend SurdSum operator*(const SurdSum& a, const SurdSum& b);
  SurdSum operator-() const;
  SurdSum pow(unsigned e) const;

  friend bool operator==(const SurdSum&, const SurdSum&) = default;

  /// Canonical rendering, e.g. "(1+sqrt(5))/2", "sqrt(5)/10", "-3".
  std::string str() const;

 private:
  void add_term(const BigInt& m, const BigRational& q);
  Terms terms_;
};

int compare(const SurdSum& a, const SurdSum& b);

}  // namespace qdyn
