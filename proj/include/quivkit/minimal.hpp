#pragma once

#include <string>
#include <vector>

#include "quivkit/matrix.hpp"

namespace quivkit {

struct MinimalInvariants {
  long long n, r, a, c;
  long long C_m;
  bool nonempty;
  long long k1, k2, k3, k4;
  long long moduli_dim;
};

inline MinimalInvariants minimal_invariants(long long n, long long r, long long a, long long c) {
  if (n < 1 || r < 1) fail(ErrorKind::normalization, "n and r must be positive");
  if (a < 0 || a > r - 1) fail(ErrorKind::normalization, "a = " + std::to_string(a) + " outside [0, r-1]");
  MinimalInvariants v{n, r, a, c, 0, false, 0, 0, 0, 0, 0};
  v.C_m = n * a * (1 - a) / 2;
  v.k1 = c + n * a * (a - 1) / 2;
  v.nonempty = v.k1 >= 0;
  v.k2 = v.k1 + n * a;
  v.k3 = v.k1 + (n - 1) * a;
  v.k4 = v.k1 + r - a;
  v.moduli_dim = 2 * r * c + (r - 1) * n * a * a;
  return v;
}

// (b_1..b_{n-1}, theta): a point of Hom(C^{r-a}, C^a)^{n-1} x GL(r).
template <Field F>
struct MinimalPoint {
  std::size_t n, r, a;
  std::vector<Matrix<F>> b;
  Matrix<F> theta;

  void validate() const {
    require(n >= 1 && r >= 1, ErrorKind::shape, "n and r must be positive");
    if (a > r - 1) fail(ErrorKind::normalization, "a must lie in [0, r-1]");
    require(b.size() == n - 1, ErrorKind::shape, "expected n-1 = " + std::to_string(n - 1) + " blocks b_q");
    for (const auto& m : b) {
      require(m.rows() == a && m.cols() == r - a, ErrorKind::shape, "b_q must be a x (r-a), got " + m.shape());
      theta.same_field(m);
    }
    require(theta.rows() == r && theta.cols() == r, ErrorKind::shape, "theta must be r x r");
    if (!theta.is_invertible()) fail(ErrorKind::singular_group_element, "theta is singular");
  }
  const F& field() const { return theta.field(); }
  bool operator==(const MinimalPoint&) const = default;
};

// Block data (beta, xi) of the minimal-case monad. xi stacks c_0..c_{n-1}
// (each na x r, with n sub-blocks of a rows) over w ((r-a) x r).
template <Field F>
struct MonadPoint {
  std::size_t n, r, a;
  Matrix<F> beta10, beta11;
  std::vector<Matrix<F>> beta2;  // q = 0..n+1
  Matrix<F> xi;

  std::size_t N() const { return (n - 1) * a; }
  void validate() const {
    require(n >= 1 && r >= 1 && a <= r - 1, ErrorKind::shape, "need n, r >= 1 and 0 <= a <= r-1");
    const std::size_t N = this->N(), na = n * a;
    auto chk = [&](const Matrix<F>& m, std::size_t rows, std::size_t cols, const std::string& name) {
      require(m.rows() == rows && m.cols() == cols, ErrorKind::shape,
              name + " has shape " + m.shape() + ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
      xi.same_field(m);
    };
    chk(beta10, N, na, "beta10");
    chk(beta11, N, na, "beta11");
    require(beta2.size() == n + 2, ErrorKind::shape, "beta2 needs n+2 blocks");
    for (std::size_t q = 0; q < n + 2; ++q) chk(beta2[q], N, r - a, "beta2[" + std::to_string(q) + "]");
    chk(xi, n * na + (r - a), r, "xi");
  }
  const F& field() const { return xi.field(); }
  Matrix<F> c_block(std::size_t m) const { return xi.block(m * n * a, 0, n * a, r); }
  Matrix<F> w_block() const { return xi.block(n * n * a, 0, r - a, r); }
  bool operator==(const MonadPoint&) const = default;
};

namespace detail {

// P with xi = P Theta for points in normal form: first a columns stack
// (-1)^m E_m, last r-a columns the identity on the w rows.
template <Field F>
Matrix<F> normal_form_frame(const F& K, std::size_t n, std::size_t r, std::size_t a) {
  Matrix<F> P(K, n * n * a + (r - a), r);
  for (std::size_t m = 0; m < n; ++m) {
    auto sign = (m % 2 == 0) ? K.one() : K.neg(K.one());
    for (std::size_t t = 0; t < a; ++t) P.set(m * n * a + m * a + t, t, sign);
  }
  for (std::size_t t = 0; t < r - a; ++t) P.set(n * n * a + t, a + t, K.one());
  return P;
}

}  // namespace detail

// The closed immersion j. xi is built from Theta = theta^-1 so that the
// induced action on theta is theta -> theta g^-1.
template <Field F>
MonadPoint<F> embed_j(const MinimalPoint<F>& pt) {
  pt.validate();
  const F& K = pt.field();
  const std::size_t n = pt.n, r = pt.r, a = pt.a, N = (n - 1) * a, na = n * a;
  Matrix<F> b10(K, N, na), b11(K, N, na);
  for (std::size_t t = 0; t < N; ++t) {
    b10.set(t, t, K.one());
    b11.set(t, a + t, K.one());
  }
  std::vector<Matrix<F>> b2(n + 2, Matrix<F>(K, N, r - a));
  for (std::size_t q = 1; q < n; ++q) b2[n + 1].set_block((q - 1) * a, 0, pt.b[q - 1]);
  Matrix<F> Theta = *pt.theta.inverse();
  return MonadPoint<F>{n, r, a, b10, b11, b2, detail::normal_form_frame(K, n, r, a) * Theta};
}

template <Field F>
struct PhiMatrices {
  Matrix<F> Phi;      // n(n-1)a square
  Matrix<F> PhiPlus;  // (n+1)(n-1)a x n^2 a
};

// Row block m' of PhiPlus is beta10 c_{m'-1} + beta11 c_{m'}; Phi keeps the
// target blocks 0..n-1 and source blocks 0..n-2.
template <Field F>
PhiMatrices<F> build_phi(const MonadPoint<F>& mp) {
  mp.validate();
  const F& K = mp.field();
  const std::size_t n = mp.n, N = mp.N(), na = n * mp.a;
  Matrix<F> PP(K, (n + 1) * N, n * na);
  for (std::size_t mp_ = 0; mp_ <= n; ++mp_) {
    if (mp_ >= 1) PP.set_block(mp_ * N, (mp_ - 1) * na, mp.beta10);
    if (mp_ < n) PP.set_block(mp_ * N, mp_ * na, mp.beta11);
  }
  Matrix<F> Phi = PP.block(0, 0, n * N, (n - 1) * na);
  return PhiMatrices<F>{Phi, PP};
}

// B2stack holds beta2[q] at row block n - q, q = 0..n.
template <Field F>
Matrix<F> build_b2stack(const MonadPoint<F>& mp) {
  const std::size_t n = mp.n, N = mp.N();
  Matrix<F> S(mp.field(), (n + 1) * N, mp.r - mp.a);
  for (std::size_t q = 0; q <= n; ++q) S.set_block((n - q) * N, 0, mp.beta2[q]);
  return S;
}

struct MembershipReport {
  bool phi_invertible;
  bool framing_zero;
  bool xi_injective;
  bool member() const { return phi_invertible && framing_zero && xi_injective; }
};

template <Field F>
Matrix<F> framing_residual(const MonadPoint<F>& mp) {
  auto ph = build_phi(mp);
  return hstack(ph.PhiPlus, build_b2stack(mp)) * mp.xi;
}

template <Field F>
MembershipReport membership(const MonadPoint<F>& mp) {
  mp.validate();
  auto ph = build_phi(mp);
  MembershipReport rep{};
  rep.phi_invertible = ph.Phi.rows() == 0 || ph.Phi.is_invertible();
  rep.framing_zero = (hstack(ph.PhiPlus, build_b2stack(mp)) * mp.xi).is_zero();
  rep.xi_injective = mp.xi.rank() == mp.r;
  return rep;
}

template <Field F>
bool check_membership(const MonadPoint<F>& mp) {
  return membership(mp).member();
}

// Element (psi, chi) of G_k: psi11 in GL(na), psi12 = sum_q psi12[q] y^q
// (q = 0..n-1, each na x (r-a)), psi22 in GL(r-a), chi in GL((n-1)a).
template <Field F>
struct GkElement {
  Matrix<F> psi11;
  std::vector<Matrix<F>> psi12;
  Matrix<F> psi22;
  Matrix<F> chi;
};

template <Field F>
GkElement<F> gk_identity(const F& K, std::size_t n, std::size_t r, std::size_t a) {
  return GkElement<F>{Matrix<F>::identity(K, n * a), std::vector<Matrix<F>>(n, Matrix<F>(K, n * a, r - a)),
                      Matrix<F>::identity(K, r - a), Matrix<F>::identity(K, (n - 1) * a)};
}

template <Field F>
MonadPoint<F> gk_action(const GkElement<F>& g, const MonadPoint<F>& mp) {
  mp.validate();
  const std::size_t n = mp.n, r = mp.r, a = mp.a, N = mp.N(), na = n * a;
  auto sq = [](const Matrix<F>& m, std::size_t k) { return m.rows() == k && m.cols() == k; };
  if (!sq(g.psi11, na) || !sq(g.psi22, r - a) || !sq(g.chi, N) || g.psi12.size() != n)
    fail(ErrorKind::group_shape, "G_k element has the wrong block shapes");
  for (const auto& m : g.psi12)
    if (m.rows() != na || m.cols() != r - a) fail(ErrorKind::group_shape, "psi12 coefficients must be na x (r-a)");
  Matrix<F> p11i = inverse_or_throw(g.psi11, ErrorKind::singular_group_element, "psi11");
  Matrix<F> p22i = inverse_or_throw(g.psi22, ErrorKind::singular_group_element, "psi22");
  inverse_or_throw(g.chi, ErrorKind::singular_group_element, "chi");
  const F& K = mp.field();
  auto M = [&](long q) {
    if (q < 0 || q >= static_cast<long>(n)) return Matrix<F>(K, na, r - a);
    return p11i * g.psi12[static_cast<std::size_t>(q)];
  };
  MonadPoint<F> out{n, r, a, g.chi * mp.beta10 * p11i, g.chi * mp.beta11 * p11i, {}, Matrix<F>(K, mp.xi.rows(), r)};
  for (std::size_t q = 0; q <= n; ++q)
    out.beta2.push_back(g.chi * (mp.beta2[q] - mp.beta10 * M(static_cast<long>(q)) - mp.beta11 * M(static_cast<long>(q) - 1)) * p22i);
  out.beta2.push_back(g.chi * mp.beta2[n + 1] * p22i);
  Matrix<F> w = mp.w_block();
  for (std::size_t m = 0; m < n; ++m) out.xi.set_block(m * na, 0, g.psi11 * mp.c_block(m) + g.psi12[n - 1 - m] * w);
  out.xi.set_block(n * na, 0, g.psi22 * w);
  return out;
}

// Reduction to the image of j: returns pt with embed_j(pt) in the G_k-orbit
// of mp. Step 1 brings beta10 to (1|0), step 2 brings beta11 to (0|1)
// keeping beta10, step 3 clears beta2[0..n], step 4 reads off (b, theta).
template <Field F>
MinimalPoint<F> normalize(const MonadPoint<F>& mp) {
  mp.validate();
  if (!check_membership(mp)) fail(ErrorKind::not_in_pk, "point does not satisfy the membership conditions");
  const F& K = mp.field();
  const std::size_t n = mp.n, r = mp.r, a = mp.a, N = mp.N(), na = n * a;
  if (n == 1 || a == 0) {
    auto th = mp.xi.inverse();
    require(th.has_value(), ErrorKind::internal, "xi is not invertible");
    std::vector<Matrix<F>> b(n - 1, Matrix<F>(K, a, r - a));
    for (std::size_t q = 1; q < n; ++q) b[q - 1] = mp.beta2[n + 1].block((q - 1) * a, 0, a, r - a);
    return MinimalPoint<F>{n, r, a, b, *th};
  }
  MonadPoint<F> cur = mp;

  // step 1
  {
    auto res = cur.beta10.rref();
    require(res.rank == N, ErrorKind::internal, "beta10 is not of full row rank");
    Matrix<F> T(K, na, na);
    for (std::size_t k = 0; k < N; ++k) T.set(res.pivots[k], k, K.one());
    T.set_block(0, N, res.kernel);
    GkElement<F> g = gk_identity(K, n, r, a);
    g.chi = *cur.beta10.select_cols(res.pivots).inverse();
    g.psi11 = inverse_or_throw(T, ErrorKind::internal, "step-1 change of basis");
    cur = gk_action(g, cur);
  }

  // step 2
  {
    Matrix<F> P = cur.beta11.block(0, 0, N, N);
    Matrix<F> Q = cur.beta11.block(0, N, N, a);
    std::vector<Matrix<F>> pw{Q};  // pw[k] = P^k Q
    for (std::size_t k = 1; k < n; ++k) pw.push_back(P * pw.back());
    std::vector<Matrix<F>> cols;
    for (std::size_t k = n - 1; k-- > 0;) cols.push_back(pw[k]);
    Matrix<F> Mx = hstack(cols, K, N);
    auto Z = Mx.solve(pw[n - 1]);
    require(Z.has_value() && Mx.is_invertible(), ErrorKind::internal, "controllability matrix is singular");
    std::vector<Matrix<F>> Gam(n - 1, Matrix<F>(K, a, a));
    for (std::size_t i = 0; i + 1 < n; ++i) Gam[n - 2 - i] = Z->block(i * a, 0, a, a);
    std::vector<Matrix<F>> w;
    for (std::size_t j = 0; j + 1 < n; ++j) {
      Matrix<F> wj = pw[n - 2 - j];
      for (std::size_t k = 0; k + j + 3 <= n; ++k) wj = wj - pw[k] * Gam[k + j + 1];
      w.push_back(wj);
    }
    Matrix<F> Mxp = hstack(w, K, N);
    Matrix<F> Tinv(K, na, na);
    Tinv.set_block(0, 0, Mxp);
    for (std::size_t k = 0; k + 1 < n; ++k) Tinv.set_block(N, k * a, -Gam[k]);
    Tinv.set_block(N, N, Matrix<F>::identity(K, a));
    GkElement<F> g = gk_identity(K, n, r, a);
    g.chi = inverse_or_throw(Mxp, ErrorKind::internal, "step-2 basis");
    g.psi11 = inverse_or_throw(Tinv, ErrorKind::internal, "step-2 change of basis");
    cur = gk_action(g, cur);
  }

  // step 3: beta10 M_q + beta11 M_{q-1} = beta2[q], q = 0..n
  {
    Matrix<F> S(K, (n + 1) * N, n * na), rhs(K, (n + 1) * N, r - a);
    for (std::size_t q = 0; q <= n; ++q) {
      if (q < n) S.set_block(q * N, q * na, cur.beta10);
      if (q >= 1) S.set_block(q * N, (q - 1) * na, cur.beta11);
      rhs.set_block(q * N, 0, cur.beta2[q]);
    }
    auto Ms = S.solve(rhs);
    require(Ms.has_value(), ErrorKind::internal, "step-3 linear system has no solution");
    GkElement<F> g = gk_identity(K, n, r, a);
    for (std::size_t q = 0; q < n; ++q) g.psi12[q] = Ms->block(q * na, 0, na, r - a);
    cur = gk_action(g, cur);
  }

  // step 4
  Matrix<F> Theta(K, r, r);
  Theta.set_block(0, 0, cur.xi.block(0, 0, a, r));
  Theta.set_block(a, 0, cur.w_block());
  require(detail::normal_form_frame(K, n, r, a) * Theta == cur.xi, ErrorKind::internal, "normalized xi is not in normal form");
  auto th = Theta.inverse();
  require(th.has_value(), ErrorKind::internal, "normalized Theta is singular");
  std::vector<Matrix<F>> b;
  for (std::size_t q = 1; q < n; ++q) b.push_back(cur.beta2[n + 1].block((q - 1) * a, 0, a, r - a));
  MinimalPoint<F> out{n, r, a, b, *th};
  require(embed_j(out) == cur, ErrorKind::internal, "normal form does not reproduce the reduced point");
  return out;
}

template <Field F>
struct Fingerprint {
  std::vector<std::size_t> pivots;
  Matrix<F> basis;  // a x r, rows span E
  std::vector<Matrix<F>> b;

  bool operator==(const Fingerprint&) const = default;
};

// Canonical representative of the GL(a,r)-orbit: E = span of the first a
// columns of theta in RREF, theta moved to theta_c = [R^T | unit vectors] by
// g = theta_c^-1 theta = [[A, B], [0, C]], and b_q -> A b_q C^-1.
template <Field F>
Fingerprint<F> fingerprint(const MinimalPoint<F>& pt) {
  pt.validate();
  const F& K = pt.field();
  const std::size_t r = pt.r, a = pt.a;
  if (a == 0) return Fingerprint<F>{{}, Matrix<F>(K, 0, r), {}};
  auto res = pt.theta.block(0, 0, r, a).transpose().rref();
  Matrix<F> R = res.R.block(0, 0, a, r);
  Matrix<F> thc(K, r, r);
  thc.set_block(0, 0, R.transpose());
  std::size_t col = a;
  for (std::size_t i = 0; i < r; ++i)
    if (std::find(res.pivots.begin(), res.pivots.end(), i) == res.pivots.end()) thc.set(i, col++, K.one());
  Matrix<F> g = *thc.inverse() * pt.theta;
  require(g.block(a, 0, r - a, a).is_zero(), ErrorKind::internal, "canonical frame is not parabolic-related");
  Matrix<F> A = g.block(0, 0, a, a);
  Matrix<F> Ci = *g.block(a, a, r - a, r - a).inverse();
  Fingerprint<F> fp{res.pivots, R, {}};
  for (const auto& bq : pt.b) fp.b.push_back(A * bq * Ci);
  return fp;
}

// Parabolic action b -> A b C^-1, theta -> theta g^-1 for g = [[A, B], [0, C]].
template <Field F>
MinimalPoint<F> parabolic_action(const Matrix<F>& g, const MinimalPoint<F>& pt) {
  pt.validate();
  const std::size_t r = pt.r, a = pt.a;
  require(g.rows() == r && g.cols() == r && g.block(a, 0, r - a, a).is_zero(), ErrorKind::group_shape, "g must lie in GL(a, r)");
  Matrix<F> gi = inverse_or_throw(g, ErrorKind::singular_group_element, "g");
  Matrix<F> A = g.block(0, 0, a, a);
  Matrix<F> Ci = *g.block(a, a, r - a, r - a).inverse();
  MinimalPoint<F> out{pt.n, r, a, {}, pt.theta * gi};
  for (const auto& bq : pt.b) out.b.push_back(A * bq * Ci);
  return out;
}

}  // namespace quivkit
