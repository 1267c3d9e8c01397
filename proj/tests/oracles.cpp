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

#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

Dense dense(const hho::QMatrix& m) {
  Dense d(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) d[i][j] = m(i, j);
  }
  return d;
}

Rational det_leibniz(const Dense& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) inversions += perm[a] > perm[b];
    }
    Rational p = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n && sgn(p) != 0; ++i) p *= m[i][perm[i]];
    total += p;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

namespace {

void matchings(const Dense& m, std::vector<std::size_t>& free, std::vector<std::pair<std::size_t, std::size_t>>& pairs,
               Rational& total) {
  if (free.empty()) {
    // sign = (-1)^(number of crossing pairs)
    int crossings = 0;
    for (std::size_t a = 0; a < pairs.size(); ++a) {
      for (std::size_t b = 0; b < pairs.size(); ++b) {
        const auto [i, j] = pairs[a];
        const auto [k, l] = pairs[b];
        crossings += i < k && k < j && j < l;
      }
    }
    Rational p = crossings % 2 ? -1 : 1;
    for (const auto& [i, j] : pairs) p *= m[i][j];
    total += p;
    return;
  }
  const std::size_t first = free.front();
  for (std::size_t t = 1; t < free.size(); ++t) {
    const std::size_t partner = free[t];
    std::vector<std::size_t> rest;
    for (std::size_t s = 1; s < free.size(); ++s) {
      if (s != t) rest.push_back(free[s]);
    }
    pairs.emplace_back(first, partner);
    matchings(m, rest, pairs, total);
    pairs.pop_back();
  }
}

Rational det_gauss(Dense m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(m[p][k]) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      std::swap(m[p], m[k]);
      det = -det;
    }
    det *= m[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m[i][k] / m[k][k];
      for (std::size_t j = k; j < n; ++j) m[i][j] -= f * m[k][j];
    }
  }
  return det;
}

}  // namespace

Rational pfaffian_matchings(const Dense& m) {
  std::vector<std::size_t> free(m.size());
  std::iota(free.begin(), free.end(), 0);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  Rational total = 0;
  if (m.size() % 2 == 0) matchings(m, free, pairs, total);
  return total;
}

Dense inverse(const Dense& m) {
  const std::size_t n = m.size();
  Dense a = m;
  Dense inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a[p][k]) == 0) ++p;
    if (p == n) return {};
    std::swap(a[p], a[k]);
    std::swap(inv[p], inv[k]);
    const Rational piv = a[k][k];
    for (std::size_t j = 0; j < n; ++j) {
      a[k][j] /= piv;
      inv[k][j] /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a[i][k]) == 0) continue;
      const Rational f = a[i][k];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[k][j];
        inv[i][j] -= f * inv[k][j];
      }
    }
  }
  return inv;
}

Dense multiply(const Dense& a, const Dense& b) {
  Dense c(a.size(), std::vector<Rational>(b[0].size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < b.size(); ++k) {
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

std::vector<Rational> apply(const Dense& a, const std::vector<Rational>& v) {
  std::vector<Rational> r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  }
  return r;
}

Dense3 pullback(const Dense3& w, const Dense& a, std::size_t d) {
  Dense3 out(d * d * d);
  for (std::size_t l = 0; l < d; ++l) {
    for (std::size_t m = 0; m < d; ++m) {
      for (std::size_t n = 0; n < d; ++n) {
        Rational s = 0;
        for (std::size_t x = 0; x < d; ++x) {
          for (std::size_t y = 0; y < d; ++y) {
            for (std::size_t z = 0; z < d; ++z) {
              const Rational& c = w[(x * d + y) * d + z];
              if (sgn(c) != 0) s += c * a[x][l] * a[y][m] * a[z][n];
            }
          }
        }
        out[(l * d + m) * d + n] = s;
      }
    }
  }
  return out;
}

Dense3 form_dense(const hho::SkewTensor3& form) {
  const std::size_t d = form.dim();
  Dense3 out(d * d * d);
  for (const auto& [t, v] : form.coefficients()) {
    const std::size_t i = t[0], j = t[1], k = t[2];
    out[(i * d + j) * d + k] = v;
    out[(j * d + k) * d + i] = v;
    out[(k * d + i) * d + j] = v;
    out[(j * d + i) * d + k] = -v;
    out[(i * d + k) * d + j] = -v;
    out[(k * d + j) * d + i] = -v;
  }
  return out;
}

Dense metric_at(const hho::Hho2& op, const std::vector<Rational>& u) {
  const std::size_t n = op.n();
  const Dense3 T = form_dense(op.T());
  Dense g = dense(op.g0());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) g[i][j] += T[(i * n + j) * n + k] * u[k];
    }
  }
  return g;
}

Jet flux_jet(const hho::Hho2& op, const hho::QMatrix& A, const std::vector<Rational>& B,
             const std::vector<Rational>& c, const std::vector<Rational>& u) {
  const std::size_t n = op.n();
  const Dense3 T = form_dense(op.T());
  const auto t = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return T[(i * n + j) * n + k]; };
  const Dense ginv = inverse(metric_at(op, u));
  std::vector<Rational> W = B;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) W[i] += A(i, j) * u[j];
  }
  const std::vector<Rational> V0 = oracle::apply(ginv, W);
  Jet jet;
  jet.V = V0;
  for (std::size_t i = 0; i < n; ++i) jet.V[i] += c.empty() ? Rational(0) : c[i];
  Dense rhs(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t l = 0; l < n; ++l) {
      rhs[j][l] = A(j, l);
      for (std::size_t k = 0; k < n; ++k) rhs[j][l] -= t(j, k, l) * V0[k];
    }
  }
  jet.J = multiply(ginv, rhs);
  jet.H.assign(n, Dense(n, std::vector<Rational>(n)));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t l = 0; l < n; ++l) {
      std::vector<Rational> r(n);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) r[j] -= t(j, k, p) * jet.J[k][l] + t(j, k, l) * jet.J[k][p];
      }
      const auto h = oracle::apply(ginv, r);
      for (std::size_t i = 0; i < n; ++i) jet.H[i][p][l] = h[i];
    }
  }
  return jet;
}

Dense3 nijenhuis_brackets(const Jet& jet) {
  const std::size_t n = jet.V.size();
  const Dense& L = jet.J;
  // d(i, k, p) = d_p L^i_k
  const auto d = [&](std::size_t i, std::size_t k, std::size_t p) -> const Rational& { return jet.H[i][k][p]; };
  Dense3 N(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Rational bracket_LL = 0, bracket_LX = 0, bracket_XL = 0;
        for (std::size_t p = 0; p < n; ++p) bracket_LL += L[p][j] * d(i, k, p) - L[p][k] * d(i, j, p);
        for (std::size_t p = 0; p < n; ++p) {
          bracket_LX += L[i][p] * -d(p, j, k);  // L [L e_j, e_k]
          bracket_XL += L[i][p] * d(p, k, j);   // L [e_j, L e_k]
        }
        N[(i * n + j) * n + k] = bracket_LL - bracket_LX - bracket_XL;
      }
    }
  }
  return N;
}

Dense3 haantjes_bilinear(const Dense3& N, const Dense& L) {
  const std::size_t n = L.size();
  const auto nn = [&](std::size_t i, std::size_t j, std::size_t k) -> const Rational& { return N[(i * n + j) * n + k]; };
  const Dense L2 = multiply(L, L);
  Dense3 H(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Rational s = 0;
        for (std::size_t p = 0; p < n; ++p) s += L2[i][p] * nn(p, j, k);
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) s += nn(i, a, b) * L[a][j] * L[b][k];
        }
        for (std::size_t p = 0; p < n; ++p) {
          Rational inner = 0;
          for (std::size_t a = 0; a < n; ++a) inner += nn(p, a, k) * L[a][j] + nn(p, j, a) * L[a][k];
          s -= L[i][p] * inner;
        }
        H[(i * n + j) * n + k] = s;
      }
    }
  }
  return H;
}

hho::MultiPoly random_poly(hho::Rng& rng, std::size_t arity, int max_degree, std::size_t terms) {
  hho::MultiPoly p(arity);
  for (std::size_t t = 0; t < terms; ++t) {
    hho::MultiPoly m = hho::MultiPoly::constant(arity, Rational(rng.uniform(-5, 5)));
    const int degree = static_cast<int>(rng.uniform(0, max_degree));
    for (int e = 0; e < degree; ++e) {
      m = m * hho::MultiPoly::variable(arity, static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(arity) - 1)));
    }
    p += m;
  }
  return p;
}

hho::PolyMatrix random_skew_poly(hho::Rng& rng, std::size_t dim, std::size_t arity, int max_degree) {
  hho::PolyMatrix m(dim, arity);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      m(i, j) = random_poly(rng, arity, max_degree, 2);
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

std::vector<Rational> charpoly_interpolated(const Dense& J) {
  const std::size_t n = J.size();
  std::vector<Rational> xs, ys;
  for (std::size_t s = 0; s <= n; ++s) {
    Dense m = J;
    for (std::size_t i = 0; i < n; ++i) m[i][i] -= Rational(static_cast<long>(s));
    xs.push_back(static_cast<long>(s));
    ys.push_back(det_gauss(m));
  }
  // Lagrange basis products expanded into monomial coefficients.
  std::vector<Rational> coeffs(n + 1);
  for (std::size_t a = 0; a <= n; ++a) {
    std::vector<Rational> basis{1};
    Rational denom = 1;
    for (std::size_t b = 0; b <= n; ++b) {
      if (b == a) continue;
      std::vector<Rational> next(basis.size() + 1);
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[b];
      }
      basis = std::move(next);
      denom *= xs[a] - xs[b];
    }
    for (std::size_t k = 0; k <= n; ++k) coeffs[k] += ys[a] * basis[k] / denom;
  }
  return coeffs;
}

}  // namespace oracle
