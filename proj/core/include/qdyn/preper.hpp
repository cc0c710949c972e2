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
#include <vector>

#include "qdyn/criterion.hpp"
#include "qdyn/exact/algebra.hpp"
#include "qdyn/exact/polynomial.hpp"
#include "qdyn/exact/rational.hpp"
#include "qdyn/exact/surd.hpp"
#include "qdyn/fekete.hpp"

namespace qdyn {

/// f_c with c = a/b conjugated by phi(x) = x / sqrt(b):
///   g(x) = phi^{-1}(f_c(phi(x))) = (x^2 + a) / sqrt(b),
/// whose preperiodic points are algebraic integers. The real filled Julia
/// set of g is [-s, s] with s = a_c sqrt(b) = (sqrt(b) + sqrt(b - 4a)) / 2.
struct ConjugatedModel {
  BigRational c;
  BigInt a;
  BigInt b;
  /// b = sqrt_b_root^2 * sqrt_b_radicand with the radicand squarefree.
  BigInt sqrt_b_root;
  BigInt sqrt_b_radicand;
  SurdSum sqrt_b;
  SurdSum half_length;
  /// Q(sqrt(sqrt_b_radicand)); g maps any algebra containing it to itself.
  AlgebraPtr algebra;

  bool accepts(const AlgebraPtr& alg) const { return alg->contains_sqrt(sqrt_b_radicand); }
  /// 1 / sqrt(b) inside alg.
  AlgebraicElement inverse_sqrt_b(const AlgebraPtr& alg) const;
  AlgebraicElement apply(const AlgebraicElement& x) const;
  /// phi(x) = x / sqrt(b): model coordinates back to f_c coordinates.
  AlgebraicElement to_original(const AlgebraicElement& x) const;
  std::string map_rule() const;
};

/// Requires -2 < c <= 1/4 (OutOfRange otherwise).
ConjugatedModel conjugated_model(const BigRational& c);

/// All monic irreducible integer polynomials of degree <= max_degree whose
/// roots are real and lie in [-s, s] (endpoints included), sorted by degree
/// then coefficients. Coefficients are fixed from the top down; at level k
/// the (d-k)-th derivative, which depends only on the first k coefficients,
/// must itself have all k roots in [-s, s]. Rolle's theorem makes this
/// necessary, and the interlacing of its roots with those of the previous
/// level bounds the new coefficient to a short range, each member of which
/// is checked exactly with Sturm sequences.
std::vector<IntPolynomial> enumerate_totally_real_integers(const SurdSum& s, int max_degree);

/// enumerate_totally_real_integers on the model interval. Throws
/// CapacityNotSubcritical when 2s >= 4.
std::vector<IntPolynomial> enumerate_candidates(const ConjugatedModel& model, int max_degree);

/// Roots of a degree 1 or 2 candidate as elements of Q(sqrt r, sqrt D),
/// smallest first. Throws UnsupportedCandidate for higher degrees.
std::vector<AlgebraicElement> candidate_roots(const IntPolynomial& p, const ConjugatedModel& model);

enum class RejectReason { ArchimedeanEscape, NonIntegral, PAdicEscape };
std::string to_string(RejectReason r);

struct OrbitOutcome {
  enum class Kind { Preperiodic, Rejected, Unresolved };
  Kind kind = Kind::Unresolved;
  int tail_length = 0;
  int period = 0;
  RejectReason reason = RejectReason::NonIntegral;
  /// Index of the orbit element that triggered a rejection.
  int steps_used = 0;
  /// x0, g(x0), ... up to and including the repeated or rejected element.
  std::vector<AlgebraicElement> orbit;

  bool preperiodic() const { return kind == Kind::Preperiodic; }
  std::string str() const;
};

/// Number of monic integer polynomials of degree <= dim whose coefficients
/// satisfy |e_k| <= C(d, k) s^k, plus one, capped at 10^6. An integral orbit
/// confined to [-s, s] in an algebra of that dimension repeats within it.
long kronecker_step_cap(int dim, const SurdSum& s);

/// Iterates g exactly. Rejects the first non-integral orbit element (every
/// preperiodic point of g is an algebraic integer) and the first element
/// with an embedding outside [-s, s].
OrbitOutcome orbit_classify(const AlgebraicElement& x0, const ConjugatedModel& model,
                            std::optional<long> step_cap = std::nullopt);

struct PreperCertificate {
  bool preperiodic = false;
  bool unresolved = false;
  /// f_c^n(x) = f_c^m(x) with 0 <= m < n.
  int m = 0;
  int n = 0;
  std::string reason;
};

/// Re-checks a point by iterating f_c itself in the algebra of x. Rejects
/// when an embedding leaves [-a_c, a_c] or when b x_k^2 is not an algebraic
/// integer (b the denominator of c).
PreperCertificate verify_preperiodic(const AlgebraicElement& x, const BigRational& c, long step_cap = 1000000);

struct PreperElement {
  AlgebraicElement value;      // in f_c coordinates
  RatPolynomial min_poly;      // over Q, monic
  IntPolynomial model_min_poly;  // of sqrt(b) * value
  OrbitOutcome model_orbit;
  PreperCertificate certificate;
};

struct PreperOptions {
  /// Search range for the degree criterion; the c = -1/2 bound needs ~100.
  int criterion_n_max = 160;
  FeketeConfig fekete;
  std::optional<long> step_cap;
};

/// Orbit outcome of one root of one candidate polynomial.
struct CandidateOutcome {
  IntPolynomial candidate;
  AlgebraicElement root;
  OrbitOutcome outcome;
};

struct PreperSet {
  BigRational c;
  ConjugatedModel model;
  DegreeBound bound;
  /// Candidate degrees searched: bound.max_degree().
  int search_degree = 0;
  std::vector<IntPolynomial> candidates;
  /// Every candidate root in candidate order, preperiodic or not.
  std::vector<CandidateOutcome> classified;
  std::vector<PreperElement> elements;

  bool has_unresolved() const;
};

/// PrePer(f_c) intersected with the totally real numbers, for -2 < c <= 1/4
/// with 2s < 4. Throws BoundTooLarge when the degree bound exceeds
/// degree_budget.
PreperSet totally_real_preper_set(const BigRational& c, int degree_budget, const PreperOptions& options = {});

/// Each minimal polynomial occurs exactly degree-many times.
bool is_galois_closed(const std::vector<PreperElement>& elements);

}  // namespace qdyn
