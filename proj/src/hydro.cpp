/*
 * Copyright 2026 The hhoforms Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hho/hydro.hpp"

#include <algorithm>

#include "hho/error.hpp"

namespace hho {

FluxParams::FluxParams(QMatrix A_, RationalVector B_) : A(std::move(A_)), B(std::move(B_)) {
  if (A.rows() != B.size() || A.cols() != B.size()) throw ArityError("A must be n x n with B of length n");
  if (!A.is_skew()) throw DomainError("A is not skew");
}

ConservativeSystem::ConservativeSystem(Hho2 op, FluxParams params, RationalVector constants, MultiPoly denominator,
                                       std::vector<MultiPoly> numerators, std::vector<MultiPoly> jacobian_numerators)
    : op_(std::move(op)),
      params_(std::move(params)),
      constants_(std::move(constants)),
      den_(std::move(denominator)),
      num_(std::move(numerators)),
      jac_(std::move(jacobian_numerators)) {}

FluxParams ConservativeSystem::effective_params() const {
  const std::size_t n = this->n();
  QMatrix A = params_.A;
  RationalVector B = params_.B;
  for (const auto& [t, v] : op_.T().coefficients()) {
    // (T.c)_jl = T_jkl c^k over all orderings of the stored triple.
    const std::size_t idx[3] = {t[0], t[1], t[2]};
    for (int r = 0; r < 3; ++r) {
      const std::size_t j = idx[r], k = idx[(r + 1) % 3], l = idx[(r + 2) % 3];
      A(j, l) += v * constants_[k];
      A(l, j) -= v * constants_[k];
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) B[j] += op_.g0()(j, k) * constants_[k];
  }
  return FluxParams(std::move(A), std::move(B));
}

std::vector<RationalFn> ConservativeSystem::flux() const {
  std::vector<RationalFn> out;
  out.reserve(num_.size());
  for (const auto& N : num_) out.emplace_back(N, den_);
  return out;
}

RationalFn ConservativeSystem::velocity(std::size_t i, std::size_t j) const {
  return RationalFn(jac_.at(i * n() + j), den_ * den_);
}

bool ConservativeSystem::jacobian_constant() const {
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      if (!velocity(i, j).is_constant()) return false;
    }
  }
  return true;
}

ConservativeSystem generate_flux(const Hho2& op, const FluxParams& params, const RationalVector& constants,
                                 Execution exec) {
  const std::size_t n = op.n();
  if (params.n() != n) throw ArityError("flux parameters do not match the operator dimension");
  if (!constants.empty() && constants.size() != n) throw ArityError("additive constants must have length n");
  if (op.is_degenerate()) throw DomainError("operator is degenerate: Pf(g) = 0");
  RationalVector c = constants.empty() ? RationalVector(n) : constants;

  const SkewInverse inv = inverse_skew(op.metric(), exec);
  const MultiPoly& P = inv.pfaffian;
  std::vector<MultiPoly> W(n, MultiPoly(n));
  for (std::size_t j = 0; j < n; ++j) {
    W[j] = MultiPoly::constant(n, params.B[j]);
    for (std::size_t l = 0; l < n; ++l) {
      if (sgn(params.A(j, l)) != 0) W[j] += MultiPoly::variable(n, l) * params.A(j, l);
    }
  }
  std::vector<MultiPoly> N(n, MultiPoly(n));
#pragma omp parallel for if (exec == Execution::parallel)
  for (long i = 0; i < static_cast<long>(n); ++i) {
    MultiPoly sum = P * c[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (!inv.numerators(i, j).is_zero() && !W[j].is_zero()) sum += inv.numerators(i, j) * W[j];
    }
    N[i] = std::move(sum);
  }
  std::vector<MultiPoly> dP(n);
  for (std::size_t p = 0; p < n; ++p) dP[p] = P.derivative(p);
  std::vector<MultiPoly> F(n * n, MultiPoly(n));
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long idx = 0; idx < static_cast<long>(n * n); ++idx) {
    const std::size_t i = static_cast<std::size_t>(idx) / n, p = static_cast<std::size_t>(idx) % n;
    F[idx] = N[i].derivative(p) * P - N[i] * dP[p];
  }
  return ConservativeSystem(op, params, std::move(c), P, std::move(N), std::move(F));
}

JetEvaluator::JetEvaluator(const ConservativeSystem& sys)
    : n_(sys.n()), P_(sys.denominator()), N_(sys.numerators()) {
  const std::size_t n = n_;
  dP_.resize(n);
  ddP_.resize(n * n);
  dN_.resize(n * n);
  ddN_.resize(n * n * n);
  for (std::size_t p = 0; p < n; ++p) {
    dP_[p] = P_.derivative(p);
    for (std::size_t l = 0; l < n; ++l) ddP_[p * n + l] = dP_[p].derivative(l);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      dN_[i * n + p] = N_[i].derivative(p);
      for (std::size_t l = 0; l < n; ++l) ddN_[(i * n + p) * n + l] = dN_[i * n + p].derivative(l);
    }
  }
}

FluxJet JetEvaluator::at(std::span<const Rational> u) const {
  const std::size_t n = n_;
  const Rational P = P_.evaluate(u);
  if (sgn(P) == 0) throw PoleError("Pf(g) vanishes at the sample point");
  const Rational invP = 1 / P;
  RationalVector dP(n);
  for (std::size_t p = 0; p < n; ++p) dP[p] = dP_[p].evaluate(u);
  FluxJet jet{RationalVector(n), QMatrix(n, n), std::vector<QMatrix>(n, QMatrix(n, n))};
  // N = V P differentiated once and twice.
  for (std::size_t i = 0; i < n; ++i) jet.V[i] = N_[i].evaluate(u) * invP;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) jet.J(i, p) = (dN_[i * n + p].evaluate(u) - jet.V[i] * dP[p]) * invP;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t l = p; l < n; ++l) {
        const Rational v = (ddN_[(i * n + p) * n + l].evaluate(u) - jet.J(i, l) * dP[p] - jet.J(i, p) * dP[l] -
                            jet.V[i] * ddP_[p * n + l].evaluate(u)) *
                           invP;
        jet.H[i](p, l) = v;
        jet.H[i](l, p) = v;
      }
    }
  }
  return jet;
}

namespace {

CompatReport compat_core(const Hho2& op, const std::vector<MultiPoly>& N, const MultiPoly& D, Execution exec) {
  const std::size_t n = op.n();
  const PolyMatrix& g = op.metric();
  std::vector<MultiPoly> dD(n);
  for (std::size_t p = 0; p < n; ++p) dD[p] = D.derivative(p);
  // F[k*n+p] = D^2 V^k_{,p}
  std::vector<MultiPoly> F(n * n, MultiPoly(n));
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long idx = 0; idx < static_cast<long>(n * n); ++idx) {
    const std::size_t k = static_cast<std::size_t>(idx) / n, p = static_cast<std::size_t>(idx) % n;
    F[idx] = N[k].derivative(p) * D - N[k] * dD[p];
  }
  std::vector<MultiPoly> FD(n * n, MultiPoly(n));
  // G[(k*n+p)*n+l] = D^3 V^k_{,pl}
  std::vector<MultiPoly> G(n * n * n, MultiPoly(n));
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long idx = 0; idx < static_cast<long>(n * n); ++idx) {
    const std::size_t p = static_cast<std::size_t>(idx) % n;
    FD[idx] = F[idx] * D;
    for (std::size_t l = p; l < n; ++l) G[idx * n + l] = F[idx].derivative(l) * D - F[idx] * dD[l] * Rational(2);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t l = 0; l < p; ++l) G[(k * n + p) * n + l] = G[(k * n + l) * n + p];
    }
  }

  CompatReport report;
  report.symbolic = true;
  std::vector<std::array<std::size_t, 2>> pairs;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = p; q < n; ++q) pairs.push_back({p, q});
  }
  std::vector<char> first_ok(pairs.size(), 0);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long idx = 0; idx < static_cast<long>(pairs.size()); ++idx) {
    const auto [p, q] = pairs[idx];
    MultiPoly sum(n);
    for (std::size_t j = 0; j < n; ++j) {
      if (!g(q, j).is_zero()) sum += g(q, j) * F[j * n + p];
      if (!g(p, j).is_zero()) sum += g(p, j) * F[j * n + q];
    }
    first_ok[idx] = sum.is_zero();
  }
  const std::size_t triples = n * n * n;
  std::vector<char> second_ok(triples, 0);
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long idx = 0; idx < static_cast<long>(triples); ++idx) {
    const std::size_t p = static_cast<std::size_t>(idx) / (n * n);
    const std::size_t q = (static_cast<std::size_t>(idx) / n) % n;
    const std::size_t l = static_cast<std::size_t>(idx) % n;
    MultiPoly sum(n);
    for (std::size_t k = 0; k < n; ++k) {
      if (!g(q, k).is_zero()) sum += g(q, k) * G[(k * n + p) * n + l];
      const Rational t1 = op.T()(p, q, k);
      if (sgn(t1) != 0) sum += FD[k * n + l] * t1;
      const Rational t2 = op.T()(q, k, l);
      if (sgn(t2) != 0) sum += FD[k * n + p] * t2;
    }
    second_ok[idx] = sum.is_zero();
  }
  report.first_checked = pairs.size();
  report.second_checked = triples;
  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    if (!first_ok[idx]) report.first_failures.push_back(pairs[idx]);
  }
  for (std::size_t idx = 0; idx < triples; ++idx) {
    if (!second_ok[idx]) report.second_failures.push_back({idx / (n * n), (idx / n) % n, idx % n});
  }
  return report;
}

}  // namespace

CompatReport check_compat(const Hho2& op, const std::vector<RationalFn>& V, Execution exec) {
  const std::size_t n = op.n();
  if (V.size() != n) throw ArityError("flux vector must have length n");
  MultiPoly D = MultiPoly::constant(n, 1);
  for (const auto& v : V) {
    if (v.arity() != n) throw ArityError("flux components must be functions of u^1..u^n");
    const MultiPoly g = gcd(D, v.denominator());
    D = (D / g) * v.denominator();
  }
  std::vector<MultiPoly> N;
  N.reserve(n);
  for (const auto& v : V) N.push_back(v.numerator() * (D / v.denominator()));
  return compat_core(op, N, D, exec);
}

CompatReport check_compat(const ConservativeSystem& sys, Execution exec) {
  return compat_core(sys.op(), sys.numerators(), sys.denominator(), exec);
}

CompatReport check_compat_pointwise(const ConservativeSystem& sys, const std::vector<RationalVector>& points,
                                    Execution exec) {
  const std::size_t n = sys.n();
  const JetEvaluator jets(sys);
  const Hho2& op = sys.op();
  std::vector<std::vector<std::array<std::size_t, 2>>> first(points.size());
  std::vector<std::vector<std::array<std::size_t, 3>>> second(points.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long s = 0; s < static_cast<long>(points.size()); ++s) {
    const FluxJet jet = jets.at(points[s]);
    const QMatrix g = op.metric_at(points[s]);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p; q < n; ++q) {
        Rational sum = 0;
        for (std::size_t j = 0; j < n; ++j) sum += g(q, j) * jet.J(j, p) + g(p, j) * jet.J(j, q);
        if (sgn(sum) != 0) first[s].push_back({p, q});
      }
    }
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t l = 0; l < n; ++l) {
          Rational sum = 0;
          for (std::size_t k = 0; k < n; ++k) {
            sum += g(q, k) * jet.H[k](p, l) + op.T()(p, q, k) * jet.J(k, l) + op.T()(q, k, l) * jet.J(k, p);
          }
          if (sgn(sum) != 0) second[s].push_back({p, q, l});
        }
      }
    }
  }
  CompatReport report;
  report.points = points.size();
  report.first_checked = points.size() * n * (n + 1) / 2;
  report.second_checked = points.size() * n * n * n;
  for (std::size_t s = 0; s < points.size(); ++s) {
    report.first_failures.insert(report.first_failures.end(), first[s].begin(), first[s].end());
    report.second_failures.insert(report.second_failures.end(), second[s].begin(), second[s].end());
  }
  return report;
}

std::vector<std::string> HamiltonianDensity::names() const {
  std::vector<std::string> out;
  for (std::size_t s = 1; s <= n; ++s) out.push_back("b" + std::to_string(s));
  for (std::size_t s = 1; s <= n; ++s) out.push_back("b" + std::to_string(s) + "_x");
  for (std::size_t s = 1; s <= n; ++s) out.push_back("b" + std::to_string(s) + "_xx");
  return out;
}

HamiltonianDensity hamiltonian_density(const FluxParams& params) {
  const std::size_t n = params.n();
  const std::size_t arity = 3 * n;
  MultiPoly h(arity);
  for (std::size_t s = 0; s < n; ++s) {
    MultiPoly factor = MultiPoly::constant(arity, params.B[s]);
    for (std::size_t l = 0; l < n; ++l) {
      if (sgn(params.A(s, l)) != 0) factor += MultiPoly::variable(arity, n + l) * (params.A(s, l) / 2);
    }
    h -= factor * MultiPoly::variable(arity, s);
  }
  return {n, h};
}

std::vector<MultiPoly> euler_operator(const HamiltonianDensity& density) {
  const std::size_t n = density.n;
  const MultiPoly& h = density.h;
  for (std::size_t s = 0; s < n; ++s) {
    if (h.degree_in(2 * n + s) > 0) throw DomainError("density depends on second derivatives");
  }
  // Total x-derivative on functions of (b, b_x).
  const auto Dx = [&](const MultiPoly& f) {
    MultiPoly out(3 * n);
    for (std::size_t s = 0; s < n; ++s) {
      const MultiPoly fb = f.derivative(s);
      if (!fb.is_zero()) out += fb * MultiPoly::variable(3 * n, n + s);
      const MultiPoly fbx = f.derivative(n + s);
      if (!fbx.is_zero()) out += fbx * MultiPoly::variable(3 * n, 2 * n + s);
    }
    return out;
  };
  std::vector<MultiPoly> out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(h.derivative(k) - Dx(h.derivative(n + k)));
  return out;
}

bool euler_check(const HamiltonianDensity& density, const FluxParams& params) {
  const std::size_t n = density.n;
  const auto E = euler_operator(density);
  for (std::size_t k = 0; k < n; ++k) {
    MultiPoly expected = MultiPoly::constant(3 * n, -params.B[k]);
    for (std::size_t s = 0; s < n; ++s) {
      if (sgn(params.A(k, s)) != 0) expected -= MultiPoly::variable(3 * n, n + s) * params.A(k, s);
    }
    if (!(E[k] == expected)) return false;
  }
  return true;
}

CasimirReport casimir_check(const Hho2& op) {
  CasimirReport r;
  r.rank = generic_rank(op.metric());
  r.kernel_dim = op.n() - r.rank;
  return r;
}

bool PlueckerRelations::ok() const {
  return std::all_of(holds.begin(), holds.end(), [](bool b) { return b; });
}

PlueckerRelations pluecker_relations(const ConservativeSystem& sys) {
  const std::size_t n = sys.n();
  const FluxParams eff = sys.effective_params();
  const Hho2& op = sys.op();
  const auto pairs = pluecker_pairs(n + 2);
  PlueckerRelations out{QMatrix(n, pairs.size()), std::vector<bool>(n, false)};
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      const auto [a, b] = pairs[c];
      if (b < n) {
        out.coefficients(j, c) = op.T()(j, a, b);
      } else if (b == n) {
        out.coefficients(j, c) = op.g0()(j, a);
      } else if (a < n) {
        out.coefficients(j, c) = eff.A(j, a);
      } else {
        out.coefficients(j, c) = eff.B[j];
      }
    }
  }
  // Plucker coordinates of the line through X = (u,1,0) and Y = (V,0,1),
  // scaled by the denominator P so that they are polynomials.
  const MultiPoly& P = sys.denominator();
  const auto& N = sys.numerators();
  const auto scaled = [&](std::size_t a, std::size_t b) -> MultiPoly {
    if (b < n) return MultiPoly::variable(n, a) * N[b] - MultiPoly::variable(n, b) * N[a];
    if (b == n) return -N[a];
    if (a < n) return MultiPoly::variable(n, a) * P;
    return P;
  };
  for (std::size_t j = 0; j < n; ++j) {
    MultiPoly sum(n);
    for (std::size_t c = 0; c < pairs.size(); ++c) {
      if (sgn(out.coefficients(j, c)) != 0) sum += scaled(pairs[c].first, pairs[c].second) * out.coefficients(j, c);
    }
    out.holds[j] = sum.is_zero();
  }
  return out;
}

FamilyDimension family_dimension(const Hho2& op, const std::vector<RationalVector>& points) {
  const std::size_t n = op.n();
  std::vector<QMatrix> metrics;
  for (const auto& u : points) metrics.push_back(op.metric_at(u));
  std::vector<RationalVector> rows;
  const auto image = [&](const QMatrix& A, const RationalVector& B, const RationalVector& c) {
    RationalVector row;
    for (std::size_t s = 0; s < points.size(); ++s) {
      RationalVector W = A * std::span<const Rational>(points[s]);
      for (std::size_t j = 0; j < n; ++j) W[j] += B[j];
      RationalVector V = metrics[s].solve(W);
      for (std::size_t j = 0; j < n; ++j) row.push_back(V[j] + c[j]);
    }
    return row;
  };
  const RationalVector zero(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      QMatrix A(n, n);
      A(a, b) = 1;
      A(b, a) = -1;
      rows.push_back(image(A, zero, zero));
    }
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n);
    e[j] = 1;
    rows.push_back(image(QMatrix(n, n), e, zero));
  }
  for (std::size_t j = 0; j < n; ++j) {
    RationalVector e(n);
    e[j] = 1;
    rows.push_back(image(QMatrix(n, n), zero, e));
  }
  QMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = rows[r][c];
  }
  return {rows.size(), m.rank()};
}

FluxStructure flux_structure(const ConservativeSystem& sys) {
  FluxStructure out;
  const int bound = static_cast<int>(sys.n() / 2);
  for (const auto& v : sys.flux()) {
    out.denominators_divide = out.denominators_divide && sys.op().pfaffian().divide_exact(v.denominator()).has_value();
    out.max_numerator_degree = std::max(out.max_numerator_degree, v.numerator().degree());
  }
  out.numerator_degree_ok = out.max_numerator_degree <= bound;
  return out;
}

}  // namespace hho
