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

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "qdyn/exact/rational.hpp"

namespace qdyn {

class SurdSum;

/// Univariate polynomial over the rationals, constant term first. The
/// coefficient vector never carries trailing zeros; the zero polynomial has
/// an empty vector and degree -1.
class RatPolynomial {
 public:
  RatPolynomial() = default;
  explicit RatPolynomial(std::vector<BigRational> coeffs);
  static RatPolynomial constant(const BigRational& c);
  /// The monomial c * t^k.
  static RatPolynomial monomial(const BigRational& c, int k);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == BigRational(1); }
  const std::vector<BigRational>& coeffs() const { return coeffs_; }
  /// Coefficient of t^k; zero beyond the degree.
  BigRational coeff(int k) const;
  const BigRational& leading() const;

  BigRational operator()(const BigRational& x) const;
  SurdSum operator()(const SurdSum& x) const;
  double eval_double(double x) const;

  RatPolynomial derivative() const;
  RatPolynomial monic() const;
  /// Divides by |leading coefficient|; keeps the sign pattern.
  RatPolynomial normalized_positive() const;
  /// Substitutes t -> lambda * t.
  RatPolynomial scaled_argument(const BigRational& lambda) const;
  bool has_integer_coefficients() const;

  friend RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b);
  friend RatPolynomial operator*(const BigRational& s, const RatPolynomial& p);
  RatPolynomial operator-() const;

  friend bool operator==(const RatPolynomial&, const RatPolynomial&) = default;

  /// Renders as "t^2 - t - 1" in the given variable.
  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Quotient and remainder of a by b over the rationals.
std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a,
                                               const RatPolynomial& b);
/// Monic gcd (zero when both inputs are zero).
RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b);
/// p / gcd(p, p'), made monic.
RatPolynomial squarefree_part(const RatPolynomial& p);

/// Polynomial with integer coefficients, constant term first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int k) const;

  RatPolynomial to_rational() const;
  /// Returns true and the quotient when a monic divisor divides exactly.
  bool divisible_by(const IntPolynomial& monic_divisor, IntPolynomial* quotient = nullptr) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;
  /// Ordering by degree, then coefficients from the leading term down.
  friend std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b);

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Converts a rational polynomial with integer coefficients; throws
/// InvalidInput otherwise.
IntPolynomial to_integer_polynomial(const RatPolynomial& p);

}  // namespace qdyn
