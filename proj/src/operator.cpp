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

#include "hho/operator.hpp"

#include "hho/error.hpp"

namespace hho {

namespace {

PolyMatrix build_metric(const SkewTensor3& T, const QMatrix& g0) {
  const std::size_t n = T.dim();
  PolyMatrix g = PolyMatrix::from_rational(g0, n);
  for (const auto& [t, v] : T.coefficients()) {
    const auto [i, j, k] = t;
    const MultiPoly ui = MultiPoly::variable(n, i) * v;
    const MultiPoly uj = MultiPoly::variable(n, j) * v;
    const MultiPoly uk = MultiPoly::variable(n, k) * v;
    g(i, j) += uk;
    g(j, i) -= uk;
    g(j, k) += ui;
    g(k, j) -= ui;
    g(k, i) += uj;
    g(i, k) -= uj;
  }
  return g;
}

}  // namespace

Hho2::Hho2(SkewTensor3 T, QMatrix g0) : T_(std::move(T)), g0_(std::move(g0)) {
  const std::size_t n = T_.dim();
  if (n == 0 || n % 2 != 0) throw ArityError("operator dimension must be even and positive");
  if (g0_.rows() != n || g0_.cols() != n) throw ArityError("g0 size does not match T");
  if (!g0_.is_skew()) throw DomainError("g0 is not skew");
  metric_ = build_metric(T_, g0_);
  pfaffian_ = hho::pfaffian(metric_);
}

Hho2 Hho2::from_dense(std::size_t n, std::span<const Rational> T, const QMatrix& g0) {
  return Hho2(SkewTensor3::from_dense(n, T), g0);
}

QMatrix Hho2::metric_at(std::span<const Rational> u) const {
  if (u.size() != n()) throw ArityError("point has the wrong dimension");
  QMatrix g = g0_;
  for (const auto& [t, v] : T_.coefficients()) {
    const auto [i, j, k] = t;
    g(i, j) += v * u[k];
    g(j, i) -= v * u[k];
    g(j, k) += v * u[i];
    g(k, j) -= v * u[i];
    g(k, i) += v * u[j];
    g(i, k) -= v * u[j];
  }
  return g;
}

ValidationReport validate(const Hho2& op) {
  ValidationReport r;
  r.tensor_skew = SkewTensor3::from_dense(op.n(), op.T().dense()) == op.T();
  r.g0_skew = op.g0().is_skew();
  r.pfaffian = op.pfaffian();
  r.degenerate = op.is_degenerate();
  return r;
}

SkewTensor3 extend_tensor(const Hho2& op) {
  const std::size_t n = op.n();
  SkewTensor3 ext(n + 1);
  for (const auto& [t, v] : op.T().coefficients()) ext.set(t[0], t[1], t[2], v);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = j + 1; k < n; ++k) ext.set(j, k, n, op.g0()(j, k));
  }
  return ext;
}

Hho2 split_tensor(const SkewTensor3& extended) {
  if (extended.dim() == 0) throw ArityError("extended tensor of dimension zero");
  const std::size_t n = extended.dim() - 1;
  SkewTensor3 T(n);
  QMatrix g0(n, n);
  for (const auto& [t, v] : extended.coefficients()) {
    if (t[2] == n) {
      g0(t[0], t[1]) = v;
      g0(t[1], t[0]) = -v;
    } else {
      T.set(t[0], t[1], t[2], v);
    }
  }
  return Hho2(std::move(T), std::move(g0));
}

MultiPoly affine_factor(const LinearMap& a) {
  const std::size_t n = a.dim() - 1;
  MultiPoly A = MultiPoly::constant(n, a.matrix()(n, n));
  for (std::size_t k = 0; k < n; ++k) A += MultiPoly::variable(n, k) * a.matrix()(n, k);
  return A;
}

Hho2 transform(const Hho2& op, const LinearMap& a) {
  if (a.dim() != op.n() + 1) throw ArityError("linear map must act on dimension n+1");
  return split_tensor(pullback(extend_tensor(op), a));
}

ConformalCheck conformal_check(const Hho2& op, const LinearMap& a, std::span<const Rational> u) {
  const std::size_t n = op.n();
  if (a.dim() != n + 1) throw ArityError("linear map must act on dimension n+1");
  if (u.size() != n) throw ArityError("point has the wrong dimension");
  const QMatrix& m = a.matrix();
  RationalVector x(u.begin(), u.end());
  x.push_back(1);
  const RationalVector y = m * std::span<const Rational>(x);
  ConformalCheck r;
  r.factor = y[n];
  if (sgn(r.factor) == 0) throw PoleError("affine factor vanishes at the point");
  const Rational& A = r.factor;
  r.image.assign(y.begin(), y.begin() + static_cast<long>(n));
  for (auto& v : r.image) v /= A;

  QMatrix J(n, n);
  const Rational A2 = A * A;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) J(i, j) = (m(i, j) * A - y[i] * m(n, j)) / A2;
  }
  const Hho2 image_op = transform(op, a);
  const QMatrix g_image = op.metric_at(r.image);
  const QMatrix g_here = image_op.metric_at(u);
  const Rational A3 = A2 * A;
  r.identity_holds = J.transpose() * g_image * J == (1 / A3) * g_here;

  const Rational detJ = J.determinant();
  Rational An1 = 1;
  for (std::size_t k = 0; k <= n; ++k) An1 *= A;
  r.jacobian_det_holds = detJ * An1 == a.determinant();

  const std::vector<Rational> image_span = r.image;
  const Rational pf_image = op.pfaffian().evaluate(image_span);
  const Rational pf_here = image_op.pfaffian().evaluate(u);
  Rational scale = 1;
  for (std::size_t k = 0; k < 3 * n / 2; ++k) scale *= A;
  r.pfaffian_holds = pf_here == scale * detJ * pf_image;
  return r;
}

}  // namespace hho
