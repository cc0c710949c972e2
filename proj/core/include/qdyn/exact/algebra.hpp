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

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qdyn/exact/polynomial.hpp"
#include "qdyn/exact/surd.hpp"

namespace qdyn {

/// Totally real algebra Q, Q(sqrt b) or Q(sqrt b, sqrt D) on the basis of
/// square roots of squarefree integers {1, sqrt b, sqrt D, sqrt(bD/g^2)}.
/// Products of basis elements are stored as rational coordinate vectors.
class Algebra {
 public:
  int dimension() const { return static_cast<int>(radicands_.size()); }
  /// Basis element i denotes sqrt(radicands()[i]); radicands()[0] == 1.
  const std::vector<BigInt>& radicands() const { return radicands_; }
  /// The at most two surds adjoined to Q.
  const std::vector<BigInt>& generators() const { return generators_; }
  /// Coordinates of e_i * e_j.
  const std::vector<BigRational>& product(int i, int j) const;
  /// Basis index of sqrt(m), or -1.
  int index_of(const BigInt& m) const;
  bool contains_sqrt(const BigInt& m) const { return m == 1 || index_of(m) >= 0; }
  std::string basis_label(int i) const;

  /// One sign vector per real embedding (sign choices of the generators),
  /// giving the image sign of every basis element. Identity first.
  const std::vector<std::vector<int>>& embedding_signs() const { return signs_; }
  int embedding_count() const { return static_cast<int>(signs_.size()); }

  /// Exhaustive commutativity and associativity check of the table.
  bool table_is_consistent() const;

  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.radicands_ == b.radicands_;
  }

 private:
  friend std::shared_ptr<const Algebra> algebra_make(const BigInt&, const std::optional<BigInt>&);
  Algebra() = default;

  std::vector<BigInt> radicands_;
  std::vector<BigInt> generators_;
  std::vector<std::vector<BigRational>> table_;
  std::vector<std::vector<int>> signs_;
};

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Builds the algebra for squarefree positive b and optional D. Radicands
/// equal to 1, or D == b, drop out and shrink the dimension.
AlgebraPtr algebra_make(const BigInt& b, const std::optional<BigInt>& D = std::nullopt);

/// Smallest supported algebra containing sqrt(m) for every squarefree m in
/// the set; throws InvalidInput when that needs dimension > 4.
AlgebraPtr algebra_for_radicands(const std::set<BigInt>& radicands);

class AlgebraicElement {
 public:
  AlgebraicElement(AlgebraPtr algebra, std::vector<BigRational> coords);
  static AlgebraicElement rational(AlgebraPtr algebra, const BigRational& q);
  /// Exact embedding of a surd sum whose radicands all lie in the algebra.
  static AlgebraicElement from_surd(AlgebraPtr algebra, const SurdSum& s);

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<BigRational>& coords() const { return coords_; }
  bool is_rational() const;
  bool is_zero() const;

  /// Image under the k-th real embedding.
  SurdSum embedding(int k) const;
  std::vector<SurdSum> embeddings() const;
  /// The element as a real number under the identity embedding.
  SurdSum value() const { return embedding(0); }

  friend AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b);
  friend AlgebraicElement operator*(const BigRational& s, const AlgebraicElement& a);
  AlgebraicElement operator-() const;

  friend bool operator==(const AlgebraicElement& a, const AlgebraicElement& b);

  std::string str() const { return value().str(); }

 private:
  AlgebraPtr algebra_;
  std::vector<BigRational> coords_;
};

std::size_t hash_value(const AlgebraicElement& x);

struct AlgebraicElementHash {
  std::size_t operator()(const AlgebraicElement& x) const { return hash_value(x); }
};

/// Monic minimal polynomial over Q, from the first linear dependency among
/// 1, x, x^2, ... solved by exact elimination.
RatPolynomial min_poly(const AlgebraicElement& x);
bool is_algebraic_integer(const AlgebraicElement& x);

/// One interval of width <= eps per real embedding, in embedding order.
std::vector<RationalInterval> real_embeddings(const AlgebraicElement& x, const BigRational& eps);

}  // namespace qdyn
