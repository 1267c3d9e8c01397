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

#include "hho/diagnostics.hpp"

#include <algorithm>
#include <mutex>

#include <boost/multiprecision/mpfr.hpp>

#include "hho/error.hpp"
#include "hho/residue.hpp"

namespace hho {

bool Tensor12::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Tensor12::antisymmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k <= j; ++k) {
        if ((*this)(i, j, k) != -(*this)(i, k, j)) return false;
      }
    }
  }
  return true;
}

FluxJet flux_jet(const std::vector<RationalFn>& V, std::span<const Rational> u) {
  const std::size_t n = V.size();
  if (u.size() != n) throw ArityError("point has the wrong dimension");
  FluxJet jet{RationalVector(n), QMatrix(n, n), std::vector<QMatrix>(n, QMatrix(n, n))};
  for (std::size_t i = 0; i < n; ++i) {
    jet.V[i] = V[i].evaluate(u);
    for (std::size_t p = 0; p < n; ++p) {
      const RationalFn d = V[i].derivative(p);
      jet.J(i, p) = d.evaluate(u);
      for (std::size_t l = 0; l < n; ++l) jet.H[i](p, l) = d.derivative(l).evaluate(u);
    }
  }
  return jet;
}

Tensor12 nijenhuis(const FluxJet& jet) {
  const std::size_t n = jet.V.size();
  const QMatrix& L = jet.J;
  // dL(i, k, p) = d L^i_k / d u^p
  const auto dL = [&](std::size_t i, std::size_t k, std::size_t p) -> const Rational& { return jet.H[i](k, p); };
  Tensor12 N(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t p = 0; p < n; ++p) {
          s += L(p, j) * dL(i, k, p) - L(p, k) * dL(i, j, p) - L(i, p) * (dL(p, k, j) - dL(p, j, k));
        }
        N(i, j, k) = s;
      }
    }
  }
  return N;
}

Tensor12 nijenhuis_closed_form(const Hho2& op, const FluxJet& jet, std::span<const Rational> u) {
  const std::size_t n = op.n();
  const auto ginv = op.metric_at(u).inverse();
  if (!ginv) throw PoleError("metric is singular at the sample point");
  const QMatrix& L = jet.J;
  const QMatrix L2 = L * L;
  const std::vector<Rational> T = op.T().dense();
  const auto t = [&](std::size_t a, std::size_t b, std::size_t c) -> const Rational& { return T[(a * n + b) * n + c]; };
  // inner(a, j, k) = T_jal L2^l_k - T_kal L2^l_j - 2 T_alp L^l_k L^p_j
  Tensor12 inner(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) {
          s += t(j, a, l) * L2(l, k) - t(k, a, l) * L2(l, j);
          for (std::size_t p = 0; p < n; ++p) {
            const Rational& tv = t(a, l, p);
            if (sgn(tv) != 0) s -= 2 * tv * L(l, k) * L(p, j);
          }
        }
        inner(a, j, k) = s;
      }
    }
  }
  Tensor12 N(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t a = 0; a < n; ++a) s += (*ginv)(i, a) * inner(a, j, k);
        N(i, j, k) = s;
      }
    }
  }
  return N;
}

Tensor12 haantjes(const Tensor12& N, const QMatrix& L) {
  const std::size_t n = N.n();
  const QMatrix L2 = L * L;
  Tensor12 X(n), Y(n), Z(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        Rational x = 0, y = 0, z = 0;
        for (std::size_t p = 0; p < n; ++p) {
          x += N(a, p, c) * L(p, b);  // X(i,j,r) = N^i_pr L^p_j
          y += N(a, b, p) * L(p, c);  // Y(p,j,k) = N^p_jr L^r_k
          z += N(a, p, c) * L(p, b);  // Z(p,j,k) = N^p_rk L^r_j
        }
        X(a, b, c) = x;
        Y(a, b, c) = y;
        Z(a, b, c) = z;
      }
    }
  }
  Tensor12 H(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t p = 0; p < n; ++p) {
          s += X(i, j, p) * L(p, k) - L(i, p) * (Y(p, j, k) + Z(p, j, k)) + L2(i, p) * N(p, j, k);
        }
        H(i, j, k) = s;
      }
    }
  }
  return H;
}

namespace {

UPoly to_upoly(const MultiPoly& p) { return UPoly::from_multipoly(p); }

// M(l)_hj = T_hji V^i + A'_hj - l g_hj at one point, in Q[l].
PolyMatrix pencil_at(const ConservativeSystem& sys, const FluxParams& eff, std::span<const Rational> V,
                     const QMatrix& g) {
  const std::size_t n = sys.n();
  const Hho2& op = sys.op();
  PolyMatrix M(n, 1);
  const MultiPoly l = MultiPoly::variable(1, 0);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t j = 0; j < n; ++j) {
      Rational c = eff.A(h, j);
      for (std::size_t i = 0; i < n; ++i) c += op.T()(h, j, i) * V[i];
      M(h, j) = MultiPoly::constant(1, c) - l * g(h, j);
    }
  }
  return M;
}

PolyMatrix shifted_poly(const QMatrix& L) {
  const std::size_t n = L.rows();
  PolyMatrix m = PolyMatrix::from_rational(L, 1);
  for (std::size_t i = 0; i < n; ++i) m(i, i) -= MultiPoly::variable(1, 0);
  return m;
}

}  // namespace

CharpolySquare charpoly_square(const ConservativeSystem& sys, Execution exec) {
  const std::size_t n = sys.n();
  const std::size_t m = n + 1;
  const Hho2& op = sys.op();
  const FluxParams eff = sys.effective_params();
  const MultiPoly P = sys.denominator().with_arity(m);
  const MultiPoly lam = MultiPoly::variable(m, n);
  std::vector<MultiPoly> N;
  for (const auto& x : sys.numerators()) N.push_back(x.with_arity(m));
  PolyMatrix g(n, m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) g(i, j) = op.metric()(i, j).with_arity(m);
  }
  PolyMatrix Mhat(n, m);
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t j = 0; j < n; ++j) {
      MultiPoly e = P * eff.A(h, j) - lam * g(h, j) * P;
      for (std::size_t i = 0; i < n; ++i) {
        const Rational t = op.T()(h, j, i);
        if (sgn(t) != 0) e += N[i] * t;
      }
      Mhat(h, j) = std::move(e);
    }
  }
  CharpolySquare out;
  out.skew = Mhat.is_skew();
  const MultiPoly P2 = P * P;
  bool identity = true;
  for (std::size_t h = 0; h < n && identity; ++h) {
    for (std::size_t j = 0; j < n && identity; ++j) {
      MultiPoly rhs = -(lam * P2 * g(h, j));
      for (std::size_t i = 0; i < n; ++i) {
        if (!g(h, i).is_zero()) rhs += g(h, i) * sys.jacobian_numerators()[i * n + j].with_arity(m);
      }
      identity = P * Mhat(h, j) == rhs;
    }
  }
  out.matrix_identity = identity;
  if (!out.skew) return out;
  MultiPoly pf = pfaffian(Mhat, exec);
  // Pf(Mhat) = P^{n/2} Pf(M); divide out P where possible before reducing.
  std::size_t power = n / 2 + 1;
  while (power > 0) {
    auto q = pf.divide_exact(P);
    if (!q) break;
    pf = std::move(*q);
    --power;
  }
  // gcd(pf, P) = 1 implies pf is coprime to every power of P, and so is pf^2.
  if (power == 0 || gcd(pf, P).is_constant()) {
    MultiPoly den = P.pow(static_cast<unsigned>(power));
    out.charpoly = RationalFn::from_coprime(pf * pf, den * den);
    out.sqrt_charpoly = RationalFn::from_coprime(std::move(pf), std::move(den));
  } else {
    out.sqrt_charpoly = RationalFn(pf, P.pow(static_cast<unsigned>(power)));
    out.charpoly = out.sqrt_charpoly * out.sqrt_charpoly;
  }
  out.square_root_degree = out.sqrt_charpoly.numerator().degree_in(n) == static_cast<int>(n / 2) &&
                           out.sqrt_charpoly.denominator().degree_in(n) == 0;
  return out;
}

PointCharpoly charpoly_at(const ConservativeSystem& sys, const FluxJet& jet, std::span<const Rational> u) {
  const Rational pg = sys.op().pfaffian().evaluate(u);
  if (sgn(pg) == 0) throw PoleError("Pf(g) vanishes at the sample point");
  PointCharpoly out;
  out.direct = to_upoly(det_bareiss(shifted_poly(jet.J), Execution::serial));
  const PolyMatrix M = pencil_at(sys, sys.effective_params(), jet.V, sys.op().metric_at(u));
  out.sqrt_charpoly = (1 / pg) * to_upoly(pfaffian(M, Execution::serial));
  return out;
}

PointDiagnosis diag_check(const ConservativeSystem& sys, const JetEvaluator& jets, std::span<const Rational> u) {
  const std::size_t n = sys.n();
  const Hho2& op = sys.op();
  PointDiagnosis d;
  d.u.assign(u.begin(), u.end());
  const FluxJet jet = jets.at(u);
  const Tensor12 N = nijenhuis(jet);
  d.nijenhuis_zero = N.is_zero();
  d.nijenhuis_antisymmetric = N.antisymmetric();
  d.nijenhuis_forms_agree = N == nijenhuis_closed_form(op, jet, u);
  d.haantjes_zero = haantjes(N, jet.J).is_zero();

  const QMatrix g = op.metric_at(u);
  const Rational pg = op.pfaffian().evaluate(u);
  const PolyMatrix M = pencil_at(sys, sys.effective_params(), jet.V, g);
  const SkewInverse minors = inverse_skew(M, Execution::serial);
  const UPoly pfM = to_upoly(minors.pfaffian);
  const UPoly dpfM = pfM.derivative();
  d.sqrt_charpoly = (1 / pg) * pfM;
  d.charpoly_consistent = to_upoly(det_bareiss(shifted_poly(jet.J), Execution::serial)) == d.sqrt_charpoly * d.sqrt_charpoly;

  const UMatrix shift = shifted(jet.J);
  const auto factors = squarefree_decomposition(d.sqrt_charpoly);
  d.diagonalizable = true;
  d.linearly_degenerate = true;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (factors[k].degree() < 1) continue;
    const unsigned multiplicity = static_cast<unsigned>(k + 1);
    for (auto& piece : eliminate_modulo(shift, factors[k])) {
      EigenBlock b;
      b.factor = piece.modulus;
      b.algebraic = 2 * multiplicity;
      b.geometric = n - piece.rank;
      if (auto roots = rational_roots(b.factor)) b.rational_roots = std::move(*roots);
      const auto& h = piece.modulus;
      if (auto inv = dpfM.inverse_mod(h)) {
        // dl/du^j = -(dPf/du^j) / (dPf/dl) on the root set of h.
        std::vector<UPoly> grad(n);
        for (std::size_t j = 0; j < n; ++j) {
          UPoly s;
          for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t c = a + 1; c < n; ++c) {
              Rational cst = 0;
              for (std::size_t i = 0; i < n; ++i) cst += op.T()(a, c, i) * jet.J(i, j);
              const UPoly dM = UPoly::constant(cst) - op.T()(a, c, j) * UPoly::x();
              if (dM.is_zero()) continue;
              s = s + to_upoly(minors.numerators(c, a)) * dM;
            }
          }
          grad[j] = (-(s * *inv)) % h;
        }
        bool ok = true;
        for (const auto& r : piece.kernel) {
          UPoly dot;
          for (std::size_t j = 0; j < n; ++j) dot = dot + grad[j] * r[j];
          ok = ok && (dot % h).is_zero();
        }
        b.linearly_degenerate = ok;
        d.linearly_degenerate = d.linearly_degenerate && ok;
      }
      d.diagonalizable = d.diagonalizable && b.geometric == b.algebraic;
      d.exceptional = d.exceptional || b.exceptional();
      d.blocks.push_back(std::move(b));
    }
  }
  return d;
}

DiagnosticsReport diagnose(const ConservativeSystem& sys, const std::vector<RationalVector>& points, Execution exec) {
  const JetEvaluator jets(sys);
  DiagnosticsReport report;
  report.points.resize(points.size());
#pragma omp parallel for schedule(dynamic) if (exec == Execution::parallel)
  for (long s = 0; s < static_cast<long>(points.size()); ++s) report.points[s] = diag_check(sys, jets, points[s]);
  return report;
}

namespace {

template <class F>
bool all_points(const DiagnosticsReport& r, F f) {
  return std::all_of(r.points.begin(), r.points.end(), f);
}

}  // namespace

bool DiagnosticsReport::all_haantjes_zero() const {
  return all_points(*this, [](const PointDiagnosis& p) { return p.haantjes_zero; });
}
bool DiagnosticsReport::all_nijenhuis_agree() const {
  return all_points(*this, [](const PointDiagnosis& p) { return p.nijenhuis_forms_agree; });
}
bool DiagnosticsReport::all_charpoly_consistent() const {
  return all_points(*this, [](const PointDiagnosis& p) { return p.charpoly_consistent; });
}
bool DiagnosticsReport::all_diagonalizable() const {
  return all_points(*this, [](const PointDiagnosis& p) { return p.diagonalizable; });
}
bool DiagnosticsReport::all_linearly_degenerate() const {
  return all_points(*this, [](const PointDiagnosis& p) { return p.linearly_degenerate; });
}
bool DiagnosticsReport::any_exceptional() const {
  return !all_points(*this, [](const PointDiagnosis& p) { return !p.exceptional; });
}

LinearityReport linearity_report(const ConservativeSystem& sys, const std::vector<RationalVector>& points,
                                 Execution exec) {
  LinearityReport r;
  r.linear = sys.jacobian_constant();
  const DiagnosticsReport d = diagnose(sys, points, exec);
  r.spot_points = d.points.size();
  for (const auto& p : d.points) {
    for (const auto& b : p.blocks) {
      if (!b.linearly_degenerate) continue;
      ++r.spot_blocks;
      r.spot_ok = r.spot_ok && *b.linearly_degenerate;
    }
  }
  return r;
}

namespace {

using Real = boost::multiprecision::mpfr_float;

struct Cx {
  Real re, im;
};

Cx operator+(const Cx& a, const Cx& b) { return {a.re + b.re, a.im + b.im}; }
Cx operator-(const Cx& a, const Cx& b) { return {a.re - b.re, a.im - b.im}; }
Cx operator*(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Cx operator/(const Cx& a, const Cx& b) {
  const Real d = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}
Real abs(const Cx& a) { return sqrt(a.re * a.re + a.im * a.im); }

Real to_real(const Rational& x) {
  return Real(x.get_num().get_str()) / Real(x.get_den().get_str());
}

class PrecisionScope {
 public:
  // The default precision is process-wide, so float diagnoses run one at a time.
  explicit PrecisionScope(unsigned digits) : lock_(mutex()), old_(Real::default_precision()) {
    Real::default_precision(digits + 10);
  }
  ~PrecisionScope() { Real::default_precision(old_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  static std::mutex& mutex() {
    static std::mutex m;
    return m;
  }
  std::lock_guard<std::mutex> lock_;
  unsigned old_;
};

Cx horner(const std::vector<Cx>& c, const Cx& z) {
  Cx r{Real(0), Real(0)};
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * z + *it;
  return r;
}

std::size_t numeric_rank(std::vector<std::vector<Cx>> m, const Real& tol) {
  const std::size_t n = m.size();
  Real scale = 0;
  for (const auto& row : m) {
    for (const auto& x : row) scale = std::max(scale, abs(x));
  }
  if (scale == 0) return 0;
  std::size_t rank = 0;
  std::vector<bool> used(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    Real best = 0;
    for (std::size_t i = rank; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (used[j]) continue;
        const Real a = abs(m[i][j]);
        if (a > best) {
          best = a;
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == n || best <= tol * scale) break;
    std::swap(m[pr], m[rank]);
    used[pc] = true;
    for (std::size_t i = rank + 1; i < n; ++i) {
      const Cx f = m[i][pc] / m[rank][pc];
      for (std::size_t j = 0; j < n; ++j) m[i][j] = m[i][j] - f * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

FloatDiagnosis diag_check_float(const ConservativeSystem& sys, const FluxJet& jet, std::span<const Rational> u,
                                unsigned digits) {
  const PrecisionScope scope(digits);
  FloatDiagnosis out;
  out.digits = digits;
  const std::size_t n = sys.n();
  const PointCharpoly pc = charpoly_at(sys, jet, u);
  const UPoly& s = pc.sqrt_charpoly;
  const int d = s.degree();
  const Real lead = to_real(s.leading());
  std::vector<Cx> c;
  for (int k = 0; k <= d; ++k) c.push_back({to_real(s.coefficient(k)) / lead, Real(0)});

  const Real eps = pow(Real(10), -static_cast<int>(digits) + 5);
  std::vector<Cx> z(d);
  const Cx seed{Real("0.4"), Real("0.9")};
  Cx w{Real(1), Real(0)};
  for (int k = 0; k < d; ++k) {
    w = w * seed;
    z[k] = w;
  }
  for (int iter = 0; iter < 2000 && !out.converged && d > 0; ++iter) {
    Real delta = 0;
    for (int k = 0; k < d; ++k) {
      Cx den{Real(1), Real(0)};
      for (int j = 0; j < d; ++j) {
        if (j != k) den = den * (z[k] - z[j]);
      }
      const Cx step = horner(c, z[k]) / den;
      z[k] = z[k] - step;
      delta = std::max(delta, abs(step));
    }
    out.converged = delta < eps;
  }
  if (d == 0) out.converged = true;

  const Real tol = pow(Real(10), -static_cast<int>(digits) / 2);
  std::vector<bool> taken(d, false);
  out.diagonalizable = true;
  for (int k = 0; k < d; ++k) {
    if (taken[k]) continue;
    std::size_t mult = 0;
    for (int j = k; j < d; ++j) {
      if (!taken[j] && abs(z[j] - z[k]) < tol * (1 + abs(z[k]))) {
        taken[j] = true;
        ++mult;
      }
    }
    std::vector<std::vector<Cx>> m(n, std::vector<Cx>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m[i][j] = {to_real(jet.J(i, j)), Real(0)};
      m[i][i] = m[i][i] - z[k];
    }
    FloatEigen e;
    const auto prec = static_cast<std::streamsize>(std::min(digits, 30u));
    e.real = z[k].re.str(prec);
    e.imag = z[k].im.str(prec);
    e.geometric = n - numeric_rank(std::move(m), tol);
    out.diagonalizable = out.diagonalizable && e.geometric == 2 * mult;
    out.eigenvalues.push_back(std::move(e));
  }
  return out;
}

}  // namespace hho
