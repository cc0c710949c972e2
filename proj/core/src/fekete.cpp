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

#include "qdyn/fekete.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Core>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdyn {

namespace {

using Vec = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;

long double objective(const std::vector<long double>& x) {
  long double f = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) f += std::log(x[j] - x[i]);
  }
  return f;
}

/// Gradient of the objective restricted to interior points 1..n-2.
Vec interior_gradient(const std::vector<long double>& x) {
  const std::size_t n = x.size();
  Vec g(static_cast<Eigen::Index>(n - 2));
  for (std::size_t i = 1; i + 1 < n; ++i) {
    long double acc = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) acc += 1.0L / (x[i] - x[j]);
    }
    g(static_cast<Eigen::Index>(i - 1)) = acc;
  }
  return g;
}

/// Negated Hessian over the interior points; positive definite.
Mat negated_hessian(const std::vector<long double>& x) {
  const std::size_t n = x.size();
  const auto m = static_cast<Eigen::Index>(n - 2);
  Mat h = Mat::Zero(m, m);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    long double diag = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const long double d = x[i] - x[j];
      const long double w = 1.0L / (d * d);
      diag += w;
      if (j >= 1 && j + 1 < n) h(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) = -w;
    }
    h(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(i - 1)) = diag;
  }
  return h;
}

bool strictly_sorted(const std::vector<long double>& x) {
  for (std::size_t i = 1; i < x.size(); ++i) {
    if (!(x[i] > x[i - 1])) return false;
  }
  return true;
}

void finalize(FeketeResult& r) {
  r.log_product = log_pair_product(r.points);
  r.n_diameter = boost::multiprecision::exp(r.log_product / HighFloat(r.n * (r.n - 1)));
}

}  // namespace

HighFloat log_pair_product(const std::vector<long double>& points) {
  HighFloat acc = 0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      HighFloat d = HighFloat(points[j]) - HighFloat(points[i]);
      acc += 2 * boost::multiprecision::log(boost::multiprecision::abs(d));
    }
  }
  return acc;
}

FeketeResult fekete_points(int n, long double s, const FeketeConfig& config) {
  if (n < 2) throw InvalidInput("fekete_points needs n >= 2");
  if (!(s > 0)) throw InvalidInput("fekete_points needs a positive half-length");

  FeketeResult r;
  r.n = n;
  r.half_length = s;
  r.points.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    r.points[static_cast<std::size_t>(i)] =
        -s * std::cos(std::numbers::pi_v<long double> * static_cast<long double>(i) / static_cast<long double>(n - 1));
  }
  r.points.front() = -s;
  r.points.back() = s;
  // Symmetric configurations put the middle point at 0 exactly.
  if (n % 2 == 1) r.points[static_cast<std::size_t>(n / 2)] = 0;

  if (n == 2) {
    r.converged = true;
    finalize(r);
    return r;
  }

  long double f = objective(r.points);
  for (int iter = 0; iter < config.max_iters; ++iter) {
    const Vec g = interior_gradient(r.points);
    r.max_gradient = g.cwiseAbs().maxCoeff();
    r.iterations = iter;
    if (r.max_gradient < config.tol) {
      r.converged = true;
      break;
    }
    const Vec step = negated_hessian(r.points).llt().solve(g);
    long double alpha = 1;
    bool accepted = false;
    for (int tries = 0; tries < 60; ++tries, alpha /= 2) {
      std::vector<long double> trial = r.points;
      for (int i = 1; i + 1 < n; ++i) trial[static_cast<std::size_t>(i)] += alpha * step(i - 1);
      if (!strictly_sorted(trial)) continue;
      const long double ft = objective(trial);
      // Near the optimum rounding dominates; accept non-decreasing steps.
      if (ft >= f - 1e-15L * std::abs(f)) {
        r.points = std::move(trial);
        f = ft;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;
  }
  if (!r.converged) {
    const Vec g = interior_gradient(r.points);
    r.max_gradient = g.cwiseAbs().maxCoeff();
    r.converged = r.max_gradient < config.tol;
  }
  finalize(r);
  if (!r.converged) throw Unconverged(r);
  return r;
}

FeketeResult fekete_points(int n, const SurdSum& s, const FeketeConfig& config) {
  return fekete_points(n, s.to_long_double(), config);
}

HighFloat log_fekete_discriminant(int n, const FeketeConfig& config) {
  return fekete_points(n, 0.5L, config).log_product;
}

HighFloat fekete_discriminant(int n, const FeketeConfig& config) {
  if (n < 2 || n > config.n_max) {
    throw InvalidInput("fekete_discriminant needs 2 <= n <= " + std::to_string(config.n_max));
  }
  return boost::multiprecision::exp(log_fekete_discriminant(n, config));
}

}  // namespace qdyn
