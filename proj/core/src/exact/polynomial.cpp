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

#include "qdyn/exact/polynomial.hpp"

#include <sstream>

#include "qdyn/errors.hpp"
#include "qdyn/exact/surd.hpp"

namespace qdyn {

RatPolynomial::RatPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

RatPolynomial RatPolynomial::constant(const BigRational& c) {
  return RatPolynomial(std::vector<BigRational>{c});
}

RatPolynomial RatPolynomial::monomial(const BigRational& c, int k) {
  std::vector<BigRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return RatPolynomial(std::move(v));
}

void RatPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

BigRational RatPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return BigRational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

const BigRational& RatPolynomial::leading() const {
  if (is_zero()) throw InvalidInput("leading coefficient of zero polynomial");
  return coeffs_.back();
}

BigRational RatPolynomial::operator()(const BigRational& x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

SurdSum RatPolynomial::operator()(const SurdSum& x) const {
  SurdSum acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + SurdSum(*it);
  return acc;
}

double RatPolynomial::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->to_double();
  return acc;
}

RatPolynomial RatPolynomial::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) {
    d[k - 1] = coeffs_[k] * BigRational(static_cast<long>(k));
  }
  return RatPolynomial(std::move(d));
}

RatPolynomial RatPolynomial::monic() const {
  if (is_zero()) return {};
  return leading().inverse() * *this;
}

RatPolynomial RatPolynomial::normalized_positive() const {
  if (is_zero()) return {};
  return leading().abs().inverse() * *this;
}

RatPolynomial RatPolynomial::scaled_argument(const BigRational& lambda) const {
  std::vector<BigRational> v = coeffs_;
  BigRational power(1);
  for (auto& c : v) {
    c *= power;
    power *= lambda;
  }
  return RatPolynomial(std::move(v));
}

bool RatPolynomial::has_integer_coefficients() const {
  for (const auto& c : coeffs_) {
    if (!c.is_integer()) return false;
  }
  return true;
}

RatPolynomial operator+(const RatPolynomial& a, const RatPolynomial& b) {
  std::vector<BigRational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i < a.coeffs_.size()) v[i] += a.coeffs_[i];
    if (i < b.coeffs_.size()) v[i] += b.coeffs_[i];
  }
  return RatPolynomial(std::move(v));
}

RatPolynomial RatPolynomial::operator-() const {
  std::vector<BigRational> v = coeffs_;
  for (auto& c : v) c = -c;
  return RatPolynomial(std::move(v));
}

RatPolynomial operator-(const RatPolynomial& a, const RatPolynomial& b) { return a + (-b); }

RatPolynomial operator*(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigRational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return RatPolynomial(std::move(v));
}

RatPolynomial operator*(const BigRational& s, const RatPolynomial& p) {
  std::vector<BigRational> v = p.coeffs_;
  for (auto& c : v) c *= s;
  return RatPolynomial(std::move(v));
}

namespace {

void append_term(std::ostringstream& os, bool first, int sign, const std::string& mag,
                 int k, const std::string& var) {
  if (first) {
    if (sign < 0) os << "-";
  } else {
    os << (sign < 0 ? " - " : " + ");
  }
  const bool unit = mag == "1";
  if (k == 0) {
    os << mag;
    return;
  }
  if (!unit) os << mag << "*";
  os << var;
  if (k > 1) os << "^" << k;
}

}  // namespace

std::string RatPolynomial::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    append_term(os, first, c.sign(), c.abs().str(), k, var);
    first = false;
  }
  return os.str();
}

std::pair<RatPolynomial, RatPolynomial> divmod(const RatPolynomial& a, const RatPolynomial& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPolynomial{}, a};
  std::vector<BigRational> rem = a.coeffs();
  std::vector<BigRational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const BigRational inv_lead = b.leading().inverse();
  const int db = b.degree();
  for (int k = a.degree(); k >= db; --k) {
    const BigRational& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    BigRational f = top * inv_lead;
    quo[static_cast<std::size_t>(k - db)] = f;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {RatPolynomial(std::move(quo)), RatPolynomial(std::move(rem))};
}

RatPolynomial gcd(const RatPolynomial& a, const RatPolynomial& b) {
  RatPolynomial x = a;
  RatPolynomial y = b;
  while (!y.is_zero()) {
    RatPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

RatPolynomial squarefree_part(const RatPolynomial& p) {
  if (p.degree() < 1) return p.monic();
  RatPolynomial g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(int k) const {
  if (k < 0 || k > degree()) return BigInt(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

RatPolynomial IntPolynomial::to_rational() const {
  std::vector<BigRational> v;
  v.reserve(coeffs_.size());
  for (const auto& c : coeffs_) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

bool IntPolynomial::divisible_by(const IntPolynomial& d, IntPolynomial* quotient) const {
  if (!d.is_monic()) throw InvalidInput("divisible_by expects a monic divisor");
  if (degree() < d.degree()) return is_zero();
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quo(static_cast<std::size_t>(degree() - d.degree() + 1));
  const int dd = d.degree();
  for (int k = degree(); k >= dd; --k) {
    const BigInt f = rem[static_cast<std::size_t>(k)];
    if (f == 0) continue;
    quo[static_cast<std::size_t>(k - dd)] = f;
    for (int j = 0; j <= dd; ++j) {
      rem[static_cast<std::size_t>(k - dd + j)] -= f * d.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  for (int j = 0; j < dd; ++j) {
    if (rem[static_cast<std::size_t>(j)] != 0) return false;
  }
  if (quotient) *quotient = IntPolynomial(std::move(quo));
  return true;
}

std::strong_ordering operator<=>(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  for (int k = a.degree(); k >= 0; --k) {
    const int c = cmp(a.coeffs_[static_cast<std::size_t>(k)], b.coeffs_[static_cast<std::size_t>(k)]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string IntPolynomial::str(const std::string& var) const { return to_rational().str(var); }

IntPolynomial to_integer_polynomial(const RatPolynomial& p) {
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (!c.is_integer()) throw InvalidInput("polynomial has non-integer coefficient " + c.str());
    v.push_back(c.num());
  }
  return IntPolynomial(std::move(v));
}

}  // namespace qdyn
