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

#include "qdyn/criterion.hpp"

#include "qdyn/errors.hpp"

namespace qdyn {

namespace {

HighFloat to_high(const BigRational& q) {
  return HighFloat(q.num().get_str()) / HighFloat(q.den().get_str());
}

CriterionRow make_row(int n, const HighFloat& log_two_s, const FeketeConfig& config,
                      const CriterionRow* previous) {
  CriterionRow row;
  row.n = n;
  const HighFloat log_a = HighFloat(n * (n - 1)) * log_two_s + log_fekete_discriminant(n, config);
  row.a_n = boost::multiprecision::exp(log_a);
  row.b_exact = b_sequence(n);
  row.b_n = to_high(row.b_exact);
  if (previous) {
    row.a_ratio = row.a_n / previous->a_n;
    row.b_ratio = row.b_n / previous->b_n;
  }
  return row;
}

void require_positive(const SurdSum& s) {
  if (s.sign() <= 0) throw InvalidInput("half-length must be positive");
}

}  // namespace

BigRational b_sequence(int n) {
  if (n < 1) throw InvalidInput("b_n needs n >= 1");
  const BigInt fact = factorial(static_cast<unsigned long>(n));
  return BigRational(pow(BigInt(n), static_cast<unsigned long>(2 * n)), BigInt(fact * fact));
}

CriterionTrace criterion_sequences(const SurdSum& s, int n_max, const FeketeConfig& config) {
  require_positive(s);
  if (n_max < 2) throw InvalidInput("criterion_sequences needs n_max >= 2");
  const HighFloat log_two_s = boost::multiprecision::log(HighFloat(2) * s.to_high());
  CriterionTrace trace;
  for (int n = 2; n <= n_max; ++n) {
    const CriterionRow* prev = trace.rows.empty() ? nullptr : &trace.rows.back();
    trace.rows.push_back(make_row(n, log_two_s, config, prev));
  }
  return trace;
}

DegreeBound degree_bound(const SurdSum& s, int n_max, const FeketeConfig& config) {
  require_positive(s);
  if (compare(SurdSum(2) * s, SurdSum(4)) >= 0) {
    throw CapacityNotSubcritical("interval length 2s = " + (SurdSum(2) * s).str() +
                                 " is not below 4 (segment capacity >= 1)");
  }
  if (n_max < 2) throw InvalidInput("degree_bound needs n_max >= 2");
  const HighFloat log_two_s = boost::multiprecision::log(HighFloat(2) * s.to_high());
  DegreeBound result;
  auto& rows = result.trace.rows;
  rows.push_back(make_row(2, log_two_s, config, nullptr));
  for (int n = 2; n <= n_max; ++n) {
    rows.push_back(make_row(n + 1, log_two_s, config, &rows.back()));
    const CriterionRow& here = rows[rows.size() - 2];
    const CriterionRow& next = rows.back();
    if (here.a_n < here.b_n && *next.a_ratio < *next.b_ratio) {
      result.n0 = n;
      result.trace.n0 = n;
      return result;
    }
  }
  throw NoBoundFound("no n0 <= " + std::to_string(n_max) + " satisfies the a_n/b_n criterion");
}

}  // namespace qdyn
