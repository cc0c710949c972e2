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
#include <vector>

#include "qdyn/exact/rational.hpp"
#include "qdyn/exact/surd.hpp"
#include "qdyn/fekete.hpp"

namespace qdyn {

/// One row of the a_n / b_n comparison for the interval [-s, s]:
///   a_n = d_n([-s, s])^(n(n-1)) = (2s)^(n(n-1)) D_n,  b_n = n^(2n) / (n!)^2.
/// Ratios are a_n / a_{n-1} and b_n / b_{n-1} (absent for n = 2).
struct CriterionRow {
  int n = 0;
  HighFloat a_n = 0;
  HighFloat b_n = 0;
  BigRational b_exact;
  std::optional<HighFloat> a_ratio;
  std::optional<HighFloat> b_ratio;
};

struct CriterionTrace {
  std::vector<CriterionRow> rows;  // contiguous in n, starting at 2
  std::optional<int> n0;
};

BigRational b_sequence(int n);

/// Rows n = 2..n_max.
CriterionTrace criterion_sequences(const SurdSum& s, int n_max, const FeketeConfig& config = {});

struct DegreeBound {
  /// Smallest n0 <= n_max with a_{n0} < b_{n0} and
  /// a_{n0+1}/a_{n0} < b_{n0+1}/b_{n0}.
  int n0 = 0;
  /// Every algebraic integer with all conjugates in [-s, s] has degree < n0.
  int max_degree() const { return n0 - 1; }
  CriterionTrace trace;  // rows 2..n0+1
};

/// Throws CapacityNotSubcritical when 2s >= 4 and NoBoundFound when no n0
/// <= n_max qualifies.
DegreeBound degree_bound(const SurdSum& s, int n_max, const FeketeConfig& config = {});

}  // namespace qdyn
