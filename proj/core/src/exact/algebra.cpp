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

#include "qdyn/exact/algebra.hpp"

#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

BigInt squarefree_product(const BigInt& a, const BigInt& b) {
  const BigInt g = gcd(a, b);
  return BigInt(a / g) * BigInt(b / g);
}

std::optional<std::vector<BigRational>> solve_in_span(const std::vector<std::vector<BigRational>>& vectors,
                                                      const std::vector<BigRational>& target) {
  const std::size_t rows = target.size();
  const std::size_t cols = vectors.size();
  // Augmented matrix [v_0 ... v_{k-1} | target].
  std::vector<std::vector<BigRational>> m(rows, std::vector<BigRational>(cols + 1));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = vectors[c][r];
    m[r][cols] = target[r];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t pr = row;
    while (pr < rows && m[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[row]);
    const BigRational inv = m[row][c].inverse();
    for (auto& e : m[row]) e *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m[r][c].is_zero()) continue;
      const BigRational f = m[r][c];
      for (std::size_t k = c; k <= cols; ++k) m[r][k] -= f * m[row][k];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < rows; ++r) {
    if (!m[r][cols].is_zero()) return std::nullopt;
  }
  std::vector<BigRational> x(cols);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = m[r][cols];
  return x;
}

}  // namespace

const std::vector<BigRational>& Algebra::product(int i, int j) const {
  return table_.at(static_cast<std::size_t>(i * dimension() + j));
}

int Algebra::index_of(const BigInt& m) const {
  for (std::size_t i = 0; i < radicands_.size(); ++i) {
    if (radicands_[i] == m) return static_cast<int>(i);
  }
  return -1;
}

std::string Algebra::basis_label(int i) const {
  const BigInt& m = radicands_.at(static_cast<std::size_t>(i));
  return m == 1 ? std::string("1") : "sqrt(" + m.get_str() + ")";
}

bool Algebra::table_is_consistent() const {
  const int n = dimension();
  auto mul = [&](const std::vector<BigRational>& x, const std::vector<BigRational>& y) {
    std::vector<BigRational> r(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      if (x[static_cast<std::size_t>(i)].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (y[static_cast<std::size_t>(j)].is_zero()) continue;
        const BigRational f = x[static_cast<std::size_t>(i)] * y[static_cast<std::size_t>(j)];
        const auto& p = product(i, j);
        for (int k = 0; k < n; ++k) r[static_cast<std::size_t>(k)] += f * p[static_cast<std::size_t>(k)];
      }
    }
    return r;
  };
  auto unit = [&](int i) {
    std::vector<BigRational> e(static_cast<std::size_t>(n));
    e[static_cast<std::size_t>(i)] = BigRational(1);
    return e;
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (product(i, j) != product(j, i)) return false;
      for (int k = 0; k < n; ++k) {
        if (mul(product(i, j), unit(k)) != mul(unit(i), product(j, k))) return false;
      }
    }
  }
  return true;
}

AlgebraPtr algebra_make(const BigInt& b, const std::optional<BigInt>& D) {
  auto check = [](const BigInt& v, const char* name) {
    if (!is_squarefree(v)) {
      throw InvalidRadicand(std::string(name) + " = " + v.get_str() +
                            " is not a positive squarefree integer");
    }
  };
  check(b, "b");
  if (D) check(*D, "D");

  std::shared_ptr<Algebra> alg(new Algebra());
  if (b != 1) alg->generators_.push_back(b);
  if (D && *D != 1 && *D != b) alg->generators_.push_back(*D);

  alg->radicands_.push_back(BigInt(1));
  for (const auto& g : alg->generators_) alg->radicands_.push_back(g);
  if (alg->generators_.size() == 2) {
    alg->radicands_.push_back(squarefree_product(alg->generators_[0], alg->generators_[1]));
  }

  const int n = alg->dimension();
  alg->table_.resize(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const BigInt& mi = alg->radicands_[static_cast<std::size_t>(i)];
      const BigInt& mj = alg->radicands_[static_cast<std::size_t>(j)];
      const BigInt g = gcd(mi, mj);
      const BigInt m = BigInt(mi / g) * BigInt(mj / g);
      std::vector<BigRational> coords(static_cast<std::size_t>(n));
      const int k = alg->index_of(m);
      if (k < 0) throw InvalidRadicand("basis not closed under multiplication");
      coords[static_cast<std::size_t>(k)] = BigRational(g);
      alg->table_[static_cast<std::size_t>(i * n + j)] = std::move(coords);
    }
  }

  const std::size_t gens = alg->generators_.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << gens); ++mask) {
    std::vector<int> gen_sign(gens);
    for (std::size_t g = 0; g < gens; ++g) gen_sign[g] = (mask >> g) & 1U ? -1 : 1;
    std::vector<int> s(static_cast<std::size_t>(n), 1);
    for (std::size_t g = 0; g < gens; ++g) s[g + 1] = gen_sign[g];
    if (gens == 2) s[3] = gen_sign[0] * gen_sign[1];
    alg->signs_.push_back(std::move(s));
  }

  if (!alg->table_is_consistent()) throw InvalidRadicand("inconsistent multiplication table");
  return alg;
}

AlgebraPtr algebra_for_radicands(const std::set<BigInt>& radicands) {
  std::vector<BigInt> rs;
  for (const auto& m : radicands) {
    if (m != 1) rs.push_back(m);
  }
  if (rs.empty()) return algebra_make(BigInt(1));
  if (rs.size() == 1) return algebra_make(rs[0]);
  AlgebraPtr alg = algebra_make(rs[0], rs[1]);
  for (const auto& m : rs) {
    if (!alg->contains_sqrt(m)) {
      throw InvalidInput("element needs an algebra of dimension > 4");
    }
  }
  return alg;
}

AlgebraicElement::AlgebraicElement(AlgebraPtr algebra, std::vector<BigRational> coords)
    : algebra_(std::move(algebra)), coords_(std::move(coords)) {
  if (!algebra_) throw InvalidInput("element without algebra");
  if (static_cast<int>(coords_.size()) != algebra_->dimension()) {
    throw InvalidInput("coordinate count does not match algebra dimension");
  }
}

AlgebraicElement AlgebraicElement::rational(AlgebraPtr algebra, const BigRational& q) {
  std::vector<BigRational> c(static_cast<std::size_t>(algebra->dimension()));
  c[0] = q;
  return {std::move(algebra), std::move(c)};
}

AlgebraicElement AlgebraicElement::from_surd(AlgebraPtr algebra, const SurdSum& s) {
  std::vector<BigRational> c(static_cast<std::size_t>(algebra->dimension()));
  for (const auto& [m, q] : s.terms()) {
    const int k = algebra->index_of(m);
    if (k < 0) throw AlgebraMismatch("sqrt(" + m.get_str() + ") is not in the algebra");
    c[static_cast<std::size_t>(k)] = q;
  }
  return {std::move(algebra), std::move(c)};
}

bool AlgebraicElement::is_rational() const {
  for (std::size_t i = 1; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) return false;
  }
  return true;
}

bool AlgebraicElement::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

SurdSum AlgebraicElement::embedding(int k) const {
  const auto& signs = algebra_->embedding_signs().at(static_cast<std::size_t>(k));
  SurdSum s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    const BigRational q = signs[i] > 0 ? coords_[i] : -coords_[i];
    s += SurdSum::term(q, algebra_->radicands()[i]);
  }
  return s;
}

std::vector<SurdSum> AlgebraicElement::embeddings() const {
  std::vector<SurdSum> out;
  for (int k = 0; k < algebra_->embedding_count(); ++k) out.push_back(embedding(k));
  return out;
}

namespace {

void require_same(const AlgebraicElement& a, const AlgebraicElement& b) {
  if (a.algebra() != b.algebra() && !(*a.algebra() == *b.algebra())) {
    throw AlgebraMismatch("operands live in different algebras");
  }
}

}  // namespace

AlgebraicElement operator+(const AlgebraicElement& a, const AlgebraicElement& b) {
  require_same(a, b);
  std::vector<BigRational> c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
  return {a.algebra_, std::move(c)};
}

AlgebraicElement operator-(const AlgebraicElement& a, const AlgebraicElement& b) {
  require_same(a, b);
  std::vector<BigRational> c = a.coords_;
  for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
  return {a.algebra_, std::move(c)};
}

AlgebraicElement operator*(const AlgebraicElement& a, const AlgebraicElement& b) {
  require_same(a, b);
  const int n = a.algebra_->dimension();
  std::vector<BigRational> c(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const BigRational& x = a.coords_[static_cast<std::size_t>(i)];
    if (x.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      const BigRational& y = b.coords_[static_cast<std::size_t>(j)];
      if (y.is_zero()) continue;
      const BigRational f = x * y;
      const auto& p = a.algebra_->product(i, j);
      for (int k = 0; k < n; ++k) {
        if (!p[static_cast<std::size_t>(k)].is_zero()) c[static_cast<std::size_t>(k)] += f * p[static_cast<std::size_t>(k)];
      }
    }
  }
  return {a.algebra_, std::move(c)};
}

AlgebraicElement operator*(const BigRational& s, const AlgebraicElement& a) {
  std::vector<BigRational> c = a.coords_;
  for (auto& e : c) e *= s;
  return {a.algebra_, std::move(c)};
}

AlgebraicElement AlgebraicElement::operator-() const { return BigRational(-1) * *this; }

bool operator==(const AlgebraicElement& a, const AlgebraicElement& b) {
  if (a.algebra_ != b.algebra_ && !(*a.algebra_ == *b.algebra_)) return false;
  return a.coords_ == b.coords_;
}

std::size_t hash_value(const AlgebraicElement& x) {
  std::size_t h = 0;
  for (const auto& c : x.coords()) h = h * 1099511628211ULL ^ hash_value(c);
  return h;
}

RatPolynomial min_poly(const AlgebraicElement& x) {
  const int n = x.algebra()->dimension();
  std::vector<std::vector<BigRational>> powers;
  AlgebraicElement power = AlgebraicElement::rational(x.algebra(), BigRational(1));
  powers.push_back(power.coords());
  for (int k = 1; k <= n; ++k) {
    power = power * x;
    if (auto dep = solve_in_span(powers, power.coords())) {
      // x^k = sum dep_i x^i, so t^k - sum dep_i t^i annihilates x.
      std::vector<BigRational> coeffs(static_cast<std::size_t>(k) + 1);
      for (int i = 0; i < k; ++i) coeffs[static_cast<std::size_t>(i)] = -(*dep)[static_cast<std::size_t>(i)];
      coeffs[static_cast<std::size_t>(k)] = BigRational(1);
      return RatPolynomial(std::move(coeffs));
    }
    powers.push_back(power.coords());
  }
  throw Error("min_poly: no dependency within algebra dimension");
}

bool is_algebraic_integer(const AlgebraicElement& x) {
  return min_poly(x).has_integer_coefficients();
}

std::vector<RationalInterval> real_embeddings(const AlgebraicElement& x, const BigRational& eps) {
  if (eps.sign() <= 0) throw InvalidInput("real_embeddings: eps must be positive");
  std::vector<RationalInterval> out;
  for (const auto& s : x.embeddings()) out.push_back(s.enclosure(eps));
  return out;
}

}  // namespace qdyn
