#pragma once

#include <string>
#include <utility>
#include <vector>

#include "quivkit/matrix.hpp"

namespace quivkit {

struct BlowupDims {
  long long k;
  long long l;
  long long dimW_minus_r;  // dim W = dimW_minus_r + r
  std::vector<long long> dimK;  // dim K_s = k - a_s, s = 1..n
  std::vector<long long> dimL;  // dim L_s = k
};

inline BlowupDims dims_kl(const std::vector<long long>& a, long long c) {
  long long sp = 0, sm = 0, sa = 0;
  for (long long x : a) {
    sp += x * (x + 1);
    sm += x * (x - 1);
    sa += x;
  }
  BlowupDims d{c + sp / 2, c + sm / 2, 0, {}, {}};
  const long long n = static_cast<long long>(a.size());
  d.dimW_minus_r = 2 * (n + 1) * d.k - 2 * sa;
  if (d.k < 0 || d.l < 0) fail(ErrorKind::invalid_invariants, "k = " + std::to_string(d.k) + ", l = " + std::to_string(d.l));
  for (long long x : a) {
    if (d.k - x < 0) fail(ErrorKind::invalid_invariants, "dim K_s = k - a_s is negative");
    d.dimK.push_back(d.k - x);
    d.dimL.push_back(d.k);
  }
  return d;
}

// (A, C0, C1; B_s; B'_s; e; f) on the blowup of the plane at n points.
template <Field F>
struct BlowupDatum {
  std::size_t r;
  std::vector<long long> a;
  long long c;
  std::vector<std::pair<typename F::value_type, typename F::value_type>> points;
  Matrix<F> A, C0, C1;
  std::vector<Matrix<F>> B, Bp;
  Matrix<F> e, f;

  BlowupDims dims() const { return dims_kl(a, c); }
  const F& field() const { return A.field(); }

  void validate() const {
    require(r > 0, ErrorKind::shape, "rank r must be positive");
    auto D = dims();
    const std::size_t n = a.size();
    const auto k = static_cast<std::size_t>(D.k), l = static_cast<std::size_t>(D.l);
    require(points.size() == n && B.size() == n && Bp.size() == n, ErrorKind::shape, "need one point, B_s and B'_s per blown-up point");
    const F& K = field();
    for (std::size_t s = 0; s < n; ++s)
      for (std::size_t t = s + 1; t < n; ++t)
        require(!(K.equal(points[s].first, points[t].first) && K.equal(points[s].second, points[t].second)), ErrorKind::shape,
                "blown-up points must be distinct");
    auto chk = [&](const Matrix<F>& m, std::size_t rows, std::size_t cols, const std::string& name) {
      require(m.rows() == rows && m.cols() == cols, ErrorKind::shape,
              name + " has shape " + m.shape() + ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
      A.same_field(m);
    };
    chk(A, l, k, "A");
    chk(C0, l, k, "C0");
    chk(C1, l, k, "C1");
    for (std::size_t s = 0; s < n; ++s) {
      auto ks = static_cast<std::size_t>(D.dimK[s]);
      chk(B[s], k, ks, "B_" + std::to_string(s + 1));
      chk(Bp[s], l, ks, "B'_" + std::to_string(s + 1));
    }
    chk(e, r, k, "e");
    chk(f, l, r, "f");
  }
};

template <Field F>
struct BlowupMatrices {
  Matrix<F> M, Q0, Q1;
};

template <Field F>
BlowupMatrices<F> blowup_assemble(const BlowupDatum<F>& d) {
  d.validate();
  const F& K = d.field();
  auto D = d.dims();
  const std::size_t n = d.a.size(), k = static_cast<std::size_t>(D.k), l = static_cast<std::size_t>(D.l);
  const std::size_t N = l + n * k;
  Matrix<F> M(K, N, N), Q0(K, N, N), Q1(K, N, N);
  M.set_block(0, 0, d.A);
  Q0.set_block(0, 0, -d.C0);
  Q1.set_block(0, 0, -d.C1);
  std::size_t col = k;
  for (std::size_t s = 0; s < n; ++s) {
    const auto& p0 = d.points[s].first;
    const auto& p1 = d.points[s].second;
    std::size_t row = l + s * k;
    Matrix<F> I = Matrix<F>::identity(K, k);
    M.set_block(0, col, d.Bp[s]);
    M.set_block(row, 0, I);
    M.set_block(row, col, d.B[s]);
    Q0.set_block(0, col, d.Bp[s].scale(p0));
    Q0.set_block(row, 0, I.scale(p0));
    Q0.set_block(row, col, d.B[s].scale(p0));
    Q1.set_block(0, col, d.Bp[s].scale(p1));
    Q1.set_block(row, 0, I.scale(p1));
    Q1.set_block(row, col, d.B[s].scale(p1));
    col += d.B[s].cols();
  }
  return BlowupMatrices<F>{M, Q0, Q1};
}

template <Field F>
Matrix<F> blowup_commutator(const BlowupMatrices<F>& m) {
  auto Mi = m.M.inverse();
  if (!Mi) fail(ErrorKind::not_in_chart, "M is singular");
  return m.Q0 * *Mi * m.Q1 - m.Q1 * *Mi * m.Q0;
}

// Upper-left l x k block of Q0 M^-1 Q1 - Q1 M^-1 Q0, plus f e.
template <Field F>
Matrix<F> blowup_residual(const BlowupDatum<F>& d) {
  auto m = blowup_assemble(d);
  auto D = d.dims();
  auto X = blowup_commutator(m);
  return X.block(0, 0, static_cast<std::size_t>(D.l), static_cast<std::size_t>(D.k)) + d.f * d.e;
}

// (h, g) with h = diag(h0, h1..hn), g = [[g0, g1..gn], [0, diag(h0^-1)]].
template <Field F>
struct BlowupGroupElement {
  std::vector<Matrix<F>> h;  // h0 (k x k), h_s ((k - a_s) square)
  std::vector<Matrix<F>> g;  // g0 (l x l), g_s (l x k)
};

template <Field F>
std::pair<Matrix<F>, Matrix<F>> blowup_group_matrices(const BlowupGroupElement<F>& el, const BlowupDatum<F>& d) {
  auto D = d.dims();
  const F& K = d.field();
  const std::size_t n = d.a.size(), k = static_cast<std::size_t>(D.k), l = static_cast<std::size_t>(D.l);
  if (el.h.size() != n + 1 || el.g.size() != n + 1) fail(ErrorKind::group_shape, "need n+1 blocks in both h and g");
  auto shape_ok = [](const Matrix<F>& m, std::size_t rows, std::size_t cols) { return m.rows() == rows && m.cols() == cols; };
  if (!shape_ok(el.h[0], k, k)) fail(ErrorKind::group_shape, "h0 must be k x k");
  if (!shape_ok(el.g[0], l, l)) fail(ErrorKind::group_shape, "g0 must be l x l");
  for (std::size_t s = 1; s <= n; ++s) {
    auto ks = static_cast<std::size_t>(D.dimK[s - 1]);
    if (!shape_ok(el.h[s], ks, ks)) fail(ErrorKind::group_shape, "h_" + std::to_string(s) + " must be (k - a_s) square");
    if (!shape_ok(el.g[s], l, k)) fail(ErrorKind::group_shape, "g_" + std::to_string(s) + " must be l x k");
  }
  for (const auto& m : el.h) m.same_field(d.A);
  for (const auto& m : el.g) m.same_field(d.A);
  Matrix<F> h0i = inverse_or_throw(el.h[0], ErrorKind::singular_group_element, "h0");
  inverse_or_throw(el.g[0], ErrorKind::singular_group_element, "g0");
  for (std::size_t s = 1; s <= n; ++s) inverse_or_throw(el.h[s], ErrorKind::singular_group_element, "h_" + std::to_string(s));
  Matrix<F> H = block_diag(el.h, K);
  const std::size_t N = l + n * k;
  Matrix<F> G(K, N, N);
  G.set_block(0, 0, el.g[0]);
  for (std::size_t s = 1; s <= n; ++s) {
    G.set_block(0, l + (s - 1) * k, el.g[s]);
    G.set_block(l + (s - 1) * k, l + (s - 1) * k, h0i);
  }
  return {G, H};
}

// Applies M -> gMh, Q_j -> gQ_jh, e -> e h0, f -> g0 f and reads the
// primitive blocks back out of the transformed matrices.
template <Field F>
BlowupDatum<F> blowup_group_action(const BlowupGroupElement<F>& el, const BlowupDatum<F>& d) {
  d.validate();
  auto [G, H] = blowup_group_matrices(el, d);
  auto m = blowup_assemble(d);
  Matrix<F> M = G * m.M * H, Q0 = G * m.Q0 * H, Q1 = G * m.Q1 * H;
  auto D = d.dims();
  const std::size_t n = d.a.size(), k = static_cast<std::size_t>(D.k), l = static_cast<std::size_t>(D.l);
  BlowupDatum<F> out{d.r,  d.a,     d.c, d.points, M.block(0, 0, l, k), -Q0.block(0, 0, l, k), -Q1.block(0, 0, l, k), {}, {},
                     d.e * el.h[0], el.g[0] * d.f};
  std::size_t col = k;
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t ks = static_cast<std::size_t>(D.dimK[s]);
    out.Bp.push_back(M.block(0, col, l, ks));
    out.B.push_back(M.block(l + s * k, col, k, ks));
    col += ks;
  }
  // the group preserves the shape of M and Q_j; anything else is a bug
  auto again = blowup_assemble(out);
  require(again.M == M && again.Q0 == Q0 && again.Q1 == Q1, ErrorKind::internal, "group action left the ADHM block shape");
  return out;
}

}  // namespace quivkit
