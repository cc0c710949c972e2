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
#include <variant>

#include "qdyn/exact/rational.hpp"
#include "qdyn/exact/surd.hpp"

namespace qdyn {

/// p raised to a rational exponent, e.g. 5^(-1/4).
struct PrimePower {
  BigInt p;
  BigRational exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A capacity with its exact form (surd sum or prime power) when one is known
/// and a 50-digit float rendering.
class CapacityValue {
 public:
  using Exact = std::variant<std::monostate, SurdSum, PrimePower>;

  CapacityValue() : CapacityValue(SurdSum(1)) {}
  explicit CapacityValue(SurdSum exact);
  explicit CapacityValue(PrimePower exact);
  /// Float-only value (product of two non-trivial exact forms).
  static CapacityValue approximate(HighFloat v);

  const Exact& exact() const { return exact_; }
  bool has_exact() const { return !std::holds_alternative<std::monostate>(exact_); }
  const HighFloat& value() const { return value_; }
  bool is_one() const;
  /// Sign of value - 1, exact whenever an exact form exists.
  int compare_to_one() const;

  /// Canonical exact string ("(1+sqrt(5))/4", "5^(-1/4)") or the float.
  std::string str() const;
  std::string decimal(int digits) const;

  friend CapacityValue operator*(const CapacityValue& a, const CapacityValue& b);

 private:
  Exact exact_;
  HighFloat value_;
};

enum class Trichotomy { Empty, NonemptyFinite, Finite, Infinite };

std::string to_string(Trichotomy t);

struct TrichotomyReport {
  Trichotomy tag = Trichotomy::Empty;
  /// "totally real" or "totally p-adic (p = 3)".
  std::string setting;
  /// An explicit member when one is known (canonical string).
  std::optional<std::string> witness;
  /// Capacity of the adelic set used for the finiteness argument.
  std::optional<CapacityValue> capacity;
  std::string note;
};

std::string format_decimal(const HighFloat& v, int digits);

}  // namespace qdyn
