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

#include "qdyn/preper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <unordered_map>

#include "qdyn/errors.hpp"
#include "qdyn/exact/sturm.hpp"
#include "qdyn/realdyn.hpp"

namespace qdyn {

namespace {

constexpr long kStepCapCeiling = 1000000;

/// Depth-first search over c_1, ..., c_d of t^d + c_1 t^{d-1} + ... + c_d.
class CandidateSearch {
 public:
  CandidateSearch(const SurdSum& s, int d, const std::vector<IntPolynomial>& lower)
      : interval_{-s, s}, s_(s.to_long_double()), d_(d), lower_(lower), c_(static_cast<std::size_t>(d) + 1) {
    c_[0] = 1;
    binom_.assign(static_cast<std::size_t>(d) + 1, std::vector<long double>(static_cast<std::size_t>(d) + 1, 0));
    for (int n = 0; n <= d; ++n) {
      for (int k = 0; k <= n; ++k) {
        binom_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] =
            binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k)).get_d();
      }
    }
  }

  std::vector<IntPolynomial> run() {
    descend(1, {});
    return std::move(found_);
  }

 private:
  long double binom(int n, int k) const {
    return binom_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

  /// Q_k(t) = sum_{j<=k} C(d-j, k-j) c_j t^(k-j), a multiple of the
  /// (d-k)-th derivative of the final polynomial.
  long double eval_level(int k, long double t, bool with_constant, long double* magnitude = nullptr) const {
    long double acc = 0;
    long double mag = 0;
    const int top = with_constant ? k : k - 1;
    for (int j = 0; j <= top; ++j) {
      const long double term = binom(d_ - j, k - j) * c_[static_cast<std::size_t>(j)].get_d() *
                               std::pow(t, static_cast<long double>(k - j));
      acc += term;
      mag += std::abs(term);
    }
    if (magnitude) *magnitude = mag;
    return acc;
  }

  RatPolynomial exact_level(int k) const {
    std::vector<BigRational> coeffs(static_cast<std::size_t>(k) + 1);
    for (int j = 0; j <= k; ++j) {
      coeffs[static_cast<std::size_t>(k - j)] =
          BigRational(BigInt(binomial(static_cast<unsigned long>(d_ - j), static_cast<unsigned long>(k - j)) *
                             c_[static_cast<std::size_t>(j)]));
    }
    return RatPolynomial(std::move(coeffs));
  }

  /// Roots of Q_k, one per bracket between consecutive critical points.
  std::vector<long double> level_roots(int k, const std::vector<long double>& critical) const {
    std::vector<long double> edges;
    edges.push_back(-s_);
    edges.insert(edges.end(), critical.begin(), critical.end());
    edges.push_back(s_);
    std::vector<long double> roots;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
      long double lo = edges[i];
      long double hi = edges[i + 1];
      long double flo = eval_level(k, lo, true);
      const long double fhi = eval_level(k, hi, true);
      if (flo == 0) {
        roots.push_back(lo);
        continue;
      }
      if (fhi == 0 || (flo > 0) == (fhi > 0)) {
        // A multiple root sits on a critical point; rounding hides the sign change.
        roots.push_back(std::abs(flo) < std::abs(fhi) ? lo : hi);
        continue;
      }
      for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        const long double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        const long double fm = eval_level(k, mid, true);
        if (fm == 0) {
          lo = hi = mid;
          break;
        }
        if ((fm > 0) == (flo > 0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      roots.push_back(lo + (hi - lo) / 2);
    }
    std::sort(roots.begin(), roots.end());
    return roots;
  }

  void descend(int k, const std::vector<long double>& critical) {
    // Sign conditions on Q_k = R + c_k coming from the endpoints and from the
    // alternating extrema at the roots of Q_{k-1}.
    long double lower = -std::numeric_limits<long double>::infinity();
    long double upper = std::numeric_limits<long double>::infinity();
    long double scale = 1;
    auto at_least = [&](long double v) { lower = std::max(lower, v); };
    auto at_most = [&](long double v) { upper = std::min(upper, v); };
    long double mag = 0;
    at_least(-eval_level(k, s_, false, &mag));
    scale = std::max(scale, mag);
    const long double at_minus = -eval_level(k, -s_, false, &mag);
    scale = std::max(scale, mag);
    if (k % 2 == 0) {
      at_least(at_minus);
    } else {
      at_most(at_minus);
    }
    for (int j = 1; j <= k - 1; ++j) {
      const long double v = -eval_level(k, critical[static_cast<std::size_t>(j - 1)], false, &mag);
      scale = std::max(scale, mag);
      if ((k - 1 - j) % 2 == 0) {
        at_most(v);
      } else {
        at_least(v);
      }
    }
    const long double margin = 1e-7L * scale;
    const auto first = static_cast<long long>(std::ceil(lower - margin));
    const auto last = static_cast<long long>(std::floor(upper + margin));
    for (long long v = first; v <= last; ++v) {
      c_[static_cast<std::size_t>(k)] = BigInt(static_cast<long>(v));
      const RatPolynomial q = exact_level(k);
      if (count_roots_with_multiplicity(q, interval_) != k) continue;
      if (k == d_) {
        accept();
      } else {
        descend(k + 1, level_roots(k, critical));
      }
    }
    c_[static_cast<std::size_t>(k)] = 0;
  }

  void accept() {
    std::vector<BigInt> coeffs(static_cast<std::size_t>(d_) + 1);
    for (int j = 0; j <= d_; ++j) coeffs[static_cast<std::size_t>(d_ - j)] = c_[static_cast<std::size_t>(j)];
    IntPolynomial p(std::move(coeffs));
    // Any monic factor again has all its roots in [-s, s], so checking the
    // irreducible candidates of lower degree settles irreducibility.
    for (const auto& q : lower_) {
      if (2 * q.degree() > d_) break;
      if (p.divisible_by(q)) return;
    }
    found_.push_back(std::move(p));
  }

  SurdInterval interval_;
  long double s_;
  int d_;
  const std::vector<IntPolynomial>& lower_;
  std::vector<BigInt> c_;
  std::vector<std::vector<long double>> binom_;
  std::vector<IntPolynomial> found_;
};

const char* kind_name(OrbitOutcome::Kind k) {
  switch (k) {
    case OrbitOutcome::Kind::Preperiodic: return "Preperiodic";
    case OrbitOutcome::Kind::Rejected: return "Rejected";
    case OrbitOutcome::Kind::Unresolved: return "Unresolved";
  }
  return "?";
}

/// Leading coefficient first; used for deterministic ordering.
int compare_polys(const RatPolynomial& a, const RatPolynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
  for (int k = a.degree(); k >= 0; --k) {
    const auto ord = a.coeff(k) <=> b.coeff(k);
    if (ord < 0) return -1;
    if (ord > 0) return 1;
  }
  return 0;
}

}  // namespace

AlgebraicElement ConjugatedModel::inverse_sqrt_b(const AlgebraPtr& alg) const {
  if (!accepts(alg)) throw AlgebraMismatch("algebra does not contain sqrt(" + to_string(sqrt_b_radicand) + ")");
  const BigRational coeff(BigInt(1), BigInt(sqrt_b_root * sqrt_b_radicand));
  return AlgebraicElement::from_surd(alg, SurdSum::term(coeff, sqrt_b_radicand));
}

AlgebraicElement ConjugatedModel::apply(const AlgebraicElement& x) const {
  const auto& alg = x.algebra();
  return (x * x + AlgebraicElement::rational(alg, BigRational(a))) * inverse_sqrt_b(alg);
}

AlgebraicElement ConjugatedModel::to_original(const AlgebraicElement& x) const {
  return x * inverse_sqrt_b(x.algebra());
}

std::string ConjugatedModel::map_rule() const {
  std::string num = "x^2";
  if (a > 0) num += " + " + to_string(a);
  if (a < 0) num += " - " + to_string(BigInt(-a));
  if (b == 1) return num;
  std::string den = sqrt_b.str();
  if (den.find_first_of("+-*/ ") != std::string::npos) den = "(" + den + ")";
  return "(" + num + ")/" + den;
}

ConjugatedModel conjugated_model(const BigRational& c) {
  if (!(c > BigRational(-2)) || c > BigRational(BigInt(1), BigInt(4))) {
    throw OutOfRange("conjugated model needs -2 < c <= 1/4, got c = " + c.str());
  }
  ConjugatedModel m;
  m.c = c;
  m.a = c.num();
  m.b = c.den();
  const SquarefreeSplit split = squarefree_decompose(m.b);
  m.sqrt_b_root = split.root;
  m.sqrt_b_radicand = split.squarefree;
  m.sqrt_b = SurdSum::sqrt(BigRational(m.b));
  m.half_length = SurdSum(BigRational(BigInt(1), BigInt(2))) *
                  (m.sqrt_b + SurdSum::sqrt(BigRational(BigInt(m.b - 4 * m.a))));
  m.algebra = algebra_make(split.squarefree);
  return m;
}

std::vector<IntPolynomial> enumerate_totally_real_integers(const SurdSum& s, int max_degree) {
  if (max_degree < 1) throw InvalidInput("enumeration needs max_degree >= 1");
  if (s.sign() < 0) throw InvalidInput("enumeration needs s >= 0");
  std::vector<IntPolynomial> all;
  for (int d = 1; d <= max_degree; ++d) {
    auto found = CandidateSearch(s, d, all).run();
    std::sort(found.begin(), found.end());
    all.insert(all.end(), found.begin(), found.end());
  }
  return all;
}

std::vector<IntPolynomial> enumerate_candidates(const ConjugatedModel& model, int max_degree) {
  if (compare(SurdSum(2) * model.half_length, SurdSum(4)) >= 0) {
    throw CapacityNotSubcritical("interval length " + (SurdSum(2) * model.half_length).str() + " is not below 4");
  }
  return enumerate_totally_real_integers(model.half_length, max_degree);
}

std::vector<AlgebraicElement> candidate_roots(const IntPolynomial& p, const ConjugatedModel& model) {
  if (p.degree() == 1) {
    return {AlgebraicElement::rational(model.algebra, BigRational(BigInt(-p.coeff(0))))};
  }
  if (p.degree() != 2) {
    throw UnsupportedCandidate("candidate " + p.str() + " has degree " + std::to_string(p.degree()) +
                               "; orbit arithmetic supports degree <= 2");
  }
  const BigInt B = p.coeff(1);
  const BigInt C = p.coeff(0);
  const BigInt disc = B * B - 4 * C;
  const SquarefreeSplit split = squarefree_decompose(disc);
  const AlgebraPtr alg = algebra_make(model.sqrt_b_radicand, split.squarefree);
  const SurdSum centre(BigRational(BigInt(-B), BigInt(2)));
  const SurdSum offset = SurdSum::term(BigRational(split.root, BigInt(2)), split.squarefree);
  return {AlgebraicElement::from_surd(alg, centre - offset), AlgebraicElement::from_surd(alg, centre + offset)};
}

std::string to_string(RejectReason r) {
  switch (r) {
    case RejectReason::ArchimedeanEscape: return "ArchimedeanEscape";
    case RejectReason::NonIntegral: return "NonIntegral";
    case RejectReason::PAdicEscape: return "PAdicEscape";
  }
  return "?";
}

std::string OrbitOutcome::str() const {
  std::string out = kind_name(kind);
  switch (kind) {
    case Kind::Preperiodic:
      out += " {tail " + std::to_string(tail_length) + ", period " + std::to_string(period) + "}";
      break;
    case Kind::Rejected:
      out += " (" + to_string(reason) + " at step " + std::to_string(steps_used) + ")";
      break;
    case Kind::Unresolved:
      out += " {steps " + std::to_string(steps_used) + "}";
      break;
  }
  return out;
}

long kronecker_step_cap(int dim, const SurdSum& s) {
  if (dim < 1) throw InvalidInput("kronecker_step_cap needs dim >= 1");
  const BigRational s_hi = s.abs().enclosure(BigRational(BigInt(1), BigInt(1) << 20)).hi;
  BigInt total = 1;
  for (int d = 1; d <= dim; ++d) {
    BigInt count = 1;
    for (int k = 1; k <= d; ++k) {
      const BigRational bound =
          BigRational(binomial(static_cast<unsigned long>(d), static_cast<unsigned long>(k))) * s_hi.pow(k);
      count *= 2 * bound.floor() + 1;
    }
    total += count;
    if (total >= kStepCapCeiling) return kStepCapCeiling;
  }
  return total.get_si();
}

OrbitOutcome orbit_classify(const AlgebraicElement& x0, const ConjugatedModel& model, std::optional<long> step_cap) {
  if (!model.accepts(x0.algebra())) {
    throw AlgebraMismatch("orbit start does not lie in an algebra containing sqrt(" +
                          to_string(model.sqrt_b_radicand) + ")");
  }
  const long cap = step_cap ? *step_cap : kronecker_step_cap(x0.algebra()->dimension(), model.half_length);
  OrbitOutcome out;
  std::unordered_map<AlgebraicElement, int, AlgebraicElementHash> seen;
  AlgebraicElement x = x0;
  for (int i = 0;; ++i) {
    if (auto it = seen.find(x); it != seen.end()) {
      out.kind = OrbitOutcome::Kind::Preperiodic;
      out.tail_length = it->second;
      out.period = i - it->second;
      out.steps_used = i;
      out.orbit.push_back(x);
      return out;
    }
    out.orbit.push_back(x);
    if (!is_algebraic_integer(x)) {
      out.kind = OrbitOutcome::Kind::Rejected;
      out.reason = RejectReason::NonIntegral;
      out.steps_used = i;
      return out;
    }
    if (escape_against(x, model.half_length) == EscapeVerdict::Escapes) {
      out.kind = OrbitOutcome::Kind::Rejected;
      out.reason = RejectReason::ArchimedeanEscape;
      out.steps_used = i;
      return out;
    }
    if (i >= cap) {
      out.kind = OrbitOutcome::Kind::Unresolved;
      out.steps_used = i;
      return out;
    }
    seen.emplace(x, i);
    x = model.apply(x);
  }
}

PreperCertificate verify_preperiodic(const AlgebraicElement& x0, const BigRational& c, long step_cap) {
  PreperCertificate cert;
  if (c > BigRational(BigInt(1), BigInt(4))) {
    cert.reason = "no real number is preperiodic when c > 1/4";
    return cert;
  }
  const SurdSum radius = fixed_point_radius(c).to_surd();
  const BigRational b(c.den());
  const AlgebraicElement shift = AlgebraicElement::rational(x0.algebra(), c);
  std::unordered_map<AlgebraicElement, int, AlgebraicElementHash> seen;
  AlgebraicElement x = x0;
  for (int i = 0;; ++i) {
    if (auto it = seen.find(x); it != seen.end()) {
      cert.preperiodic = true;
      cert.m = it->second;
      cert.n = i;
      cert.reason = "f_c^" + std::to_string(i) + "(x) = f_c^" + std::to_string(it->second) + "(x)";
      return cert;
    }
    if (escape_against(x, radius) == EscapeVerdict::Escapes) {
      cert.reason = "iterate " + std::to_string(i) + " leaves [-a_c, a_c]";
      return cert;
    }
    if (!is_algebraic_integer(b * (x * x))) {
      cert.reason = "iterate " + std::to_string(i) + " has b*x^2 not integral";
      return cert;
    }
    if (i >= step_cap) {
      cert.unresolved = true;
      cert.reason = "step cap " + std::to_string(step_cap) + " reached";
      return cert;
    }
    seen.emplace(x, i);
    x = x * x + shift;
  }
}

bool is_galois_closed(const std::vector<PreperElement>& elements) {
  std::map<std::string, std::pair<int, int>> groups;  // count, degree
  for (const auto& e : elements) {
    auto& g = groups[e.min_poly.str()];
    ++g.first;
    g.second = e.min_poly.degree();
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (compare(elements[i].value.value(), elements[j].value.value()) == 0) return false;
    }
  }
  return std::all_of(groups.begin(), groups.end(), [](const auto& kv) { return kv.second.first == kv.second.second; });
}

bool PreperSet::has_unresolved() const {
  return std::any_of(classified.begin(), classified.end(), [](const CandidateOutcome& o) {
    return o.outcome.kind == OrbitOutcome::Kind::Unresolved;
  });
}

PreperSet totally_real_preper_set(const BigRational& c, int degree_budget, const PreperOptions& options) {
  ConjugatedModel model = conjugated_model(c);
  DegreeBound bound = degree_bound(model.half_length, options.criterion_n_max, options.fekete);
  if (bound.max_degree() > degree_budget) throw BoundTooLarge(bound.max_degree(), degree_budget);

  PreperSet out{c, model, std::move(bound), 0, {}, {}, {}};
  out.search_degree = out.bound.max_degree();
  out.candidates = enumerate_candidates(model, out.search_degree);
  for (const auto& p : out.candidates) {
    for (const auto& root : candidate_roots(p, model)) {
      OrbitOutcome outcome = orbit_classify(root, model, options.step_cap);
      if (outcome.preperiodic()) {
        AlgebraicElement value = model.to_original(root);
        PreperCertificate cert = verify_preperiodic(value, c);
        if (!cert.preperiodic) {
          throw Error("internal: " + value.str() + " is preperiodic for the model but fails direct verification (" +
                      cert.reason + ")");
        }
        out.elements.push_back(PreperElement{value, min_poly(value), p, outcome, cert});
      }
      out.classified.push_back(CandidateOutcome{p, root, std::move(outcome)});
    }
  }
  std::sort(out.elements.begin(), out.elements.end(), [](const PreperElement& x, const PreperElement& y) {
    const int ord = compare_polys(x.min_poly, y.min_poly);
    if (ord != 0) return ord < 0;
    return compare(x.value.value(), y.value.value()) < 0;
  });
  if (!is_galois_closed(out.elements)) throw Error("internal: preperiodic set is not closed under conjugation");
  return out;
}

}  // namespace qdyn
