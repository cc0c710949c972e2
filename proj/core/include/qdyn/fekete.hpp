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

#include "qdyn/errors.hpp"
#include "qdyn/exact/surd.hpp"

namespace qdyn {

struct FeketeConfig {
  /// Convergence threshold on max_i |sum_{j != i} 1/(x_i - x_j)| over the
  /// interior points.
  long double tol = 1e-11L;
  int max_iters = 200;
  /// Largest n accepted by fekete_discriminant.
  int n_max = 12;
  double rel_tol = 1e-9;
};

struct FeketeResult {
  int n = 0;
  long double half_length = 0;
  /// Sorted ascending; points.front() == -s and points.back() == s.
  std::vector<long double> points;
  /// sum_{i<j} 2 log|x_i - x_j|
  HighFloat log_product = 0;
  /// exp(log_product / (n (n - 1)))
  HighFloat n_diameter = 0;
  long double max_gradient = 0;
  int iterations = 0;
  bool converged = false;
};

class Unconverged : public Error {
 public:
  explicit Unconverged(FeketeResult best)
      : Error("Fekete optimization did not converge"), best_(std::move(best)) {}
  const FeketeResult& best() const { return best_; }

 private:
  FeketeResult best_;
};

/// Maximizes sum_{i<j} log(x_j - x_i) over n sorted points in [-s, s].
/// The extreme points are pinned at +-s; the n - 2 interior points start at
/// Chebyshev nodes and follow damped Newton steps on the stationarity
/// condition. The objective is strictly concave on the ordered region, so
/// the stationary point is the unique maximizer.
FeketeResult fekete_points(int n, long double s, const FeketeConfig& config = {});
FeketeResult fekete_points(int n, const SurdSum& s, const FeketeConfig& config = {});

/// Sum of 2 log|x_i - x_j| for an arbitrary configuration.
HighFloat log_pair_product(const std::vector<long double>& points);

/// D_n: the maximum of prod_{i<j} (x_i - x_j)^2 over n points of [-1/2, 1/2].
/// Requires 2 <= n <= config.n_max.
HighFloat fekete_discriminant(int n, const FeketeConfig& config = {});
/// log D_n without the n_max cap.
HighFloat log_fekete_discriminant(int n, const FeketeConfig& config = {});

}  // namespace qdyn
