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

#include <optional>
#include <string>

#include "qdyn/exact/algebra.hpp"
#include "qdyn/exact/rational.hpp"
#include "qdyn/exact/surd.hpp"
#include "qdyn/trichotomy.hpp"

namespace qdyn {

/// u + v sqrt(n) with n squarefree. n in {0, 1} folds into u and leaves v = 0.
class QuadraticSurd {
 public:
  QuadraticSurd() = default;
  QuadraticSurd(const BigRational& u);  // NOLINT(google-explicit-constructor)
  QuadraticSurd(BigRational u, BigRational v, const BigInt& n);

  const BigRational& u() const { return u_; }
  const BigRational& v() const { return v_; }
  const BigInt& n() const { return n_; }
  bool is_rational() const { return v_.is_zero(); }

  SurdSum to_surd() const;
  int sign() const { return to_surd().sign(); }
  /// Exact comparison against a rational.
  int compare(const BigRational& q) const;
  long double to_long_double() const { return to_surd().to_long_double(); }
  std::string str() const { return to_surd().str(); }

  friend QuadraticSurd operator+(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator-(const QuadraticSurd& a, const QuadraticSurd& b);
  friend QuadraticSurd operator*(const QuadraticSurd& a, const QuadraticSurd& b);
  friend bool operator==(const QuadraticSurd&, const QuadraticSurd&) = default;

 private:
  BigRational u_;
  BigRational v_;
  BigInt n_ = 0;
};

/// a_c = (1 + sqrt(1 - 4c)) / 2, the larger fixed point of x^2 + c.
/// Throws OutOfRange for c > 1/4.
QuadraticSurd fixed_point_radius(const BigRational& c);

/// f_c(x) = x^2 + c on rationals.
inline BigRational quadratic_map(const BigRational& x, const BigRational& c) { return x * x + c; }

enum class JuliaShapeTag { Empty, Interval, ContainedInInterval };
std::string to_string(JuliaShapeTag t);

struct RealJuliaShape {
  JuliaShapeTag tag = JuliaShapeTag::Empty;
  std::optional<QuadraticSurd> radius;
};

/// Empty for c > 1/4, exactly [-a_c, a_c] for -2 <= c <= 1/4, and contained
/// in [-a_c, a_c] for c < -2.
RealJuliaShape classify_real_filled_julia(const BigRational& c);

/// Empty for c > 1/4, NonemptyFinite (witness a_c) for -2 < c <= 1/4,
/// Infinite for c <= -2.
TrichotomyReport classify_totally_real(const BigRational& c);

enum class EscapeVerdict { Escapes, Inside, OnBoundary };
std::string to_string(EscapeVerdict v);

/// Starting width and number of squaring rounds for the interval comparisons
/// of escape tests. Exact zero detection runs first, so the schedule only
/// trades work against early exits.
struct EpsSchedule {
  BigRational initial{BigInt(1), BigInt(1) << 20};
};

/// Compares every real embedding of x against +-bound.
EscapeVerdict escape_against(const AlgebraicElement& x, const SurdSum& bound,
                             const EpsSchedule& schedule = {});

/// escape_against with bound a_c. Requires c <= 1/4.
EscapeVerdict escape_test(const AlgebraicElement& x, const BigRational& c,
                          const EpsSchedule& schedule = {});

}  // namespace qdyn
