#pragma once

#include <optional>
#include <vector>

#include "quivkit/adhm_p2.hpp"
#include "quivkit/blowup.hpp"
#include "quivkit/flag.hpp"
#include "quivkit/hirzebruch.hpp"
#include "quivkit/minimal.hpp"
#include "quivkit/random.hpp"

namespace quivkit {

inline constexpr int sample_attempts = 1000;

template <Field F>
Matrix<F> random_matrix(const F& K, std::size_t rows, std::size_t cols, Rng& rng, long long bound = 3) {
  Matrix<F> m(K, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j, K.from_int(rng.range(-bound, bound)));
  return m;
}

template <Field F>
Matrix<F> random_invertible(const F& K, std::size_t n, Rng& rng, long long bound = 3) {
  for (int t = 0; t < sample_attempts; ++t) {
    Matrix<F> m = random_matrix(K, n, n, rng, bound);
    if (m.is_invertible()) return m;
  }
  fail(ErrorKind::internal, "could not draw an invertible matrix");
}

// Full column rank rows x cols matrix.
template <Field F>
Matrix<F> random_injective(const F& K, std::size_t rows, std::size_t cols, Rng& rng) {
  for (int t = 0; t < sample_attempts; ++t) {
    Matrix<F> m = random_matrix(K, rows, cols, rng);
    if (m.rank() == cols) return m;
  }
  fail(ErrorKind::internal, "could not draw an injective matrix");
}

// L with L M = 1 for M of full column rank.
template <Field F>
Matrix<F> left_inverse(const Matrix<F>& M) {
  auto res = M.transpose().rref();
  require(res.rank == M.cols(), ErrorKind::internal, "left inverse of a non-injective map");
  Matrix<F> sq(M.field(), M.cols(), M.cols());
  Matrix<F> S(M.field(), M.cols(), M.rows());
  for (std::size_t k = 0; k < M.cols(); ++k) {
    sq.set_block(k, 0, M.row(res.pivots[k]));
    S.set(k, res.pivots[k], M.field().one());
  }
  return *sq.inverse() * S;
}

// Random B1, i; j drawn from the solvable locus tr(Z i j) = 0 for Z in the
// centralizer of B1; B2 solved from [B1, B2] = -ij. Repeated until Im i
// generates C^c.
template <Field F>
AdhmP2<F> sample_p2(const F& K, std::size_t r, std::size_t c, Rng& rng) {
  require(r > 0, ErrorKind::shape, "rank r must be positive");
  for (int t = 0; t < sample_attempts; ++t) {
    Matrix<F> B1 = random_matrix(K, c, c, rng), i = random_matrix(K, c, r, rng);
    // ad_{B1} as a c^2 x c^2 matrix on row-major coordinates
    Matrix<F> ad(K, c * c, c * c);
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t b = 0; b < c; ++b)
        detail::put_flat(ad, a * c + b, 0, commutator(B1, detail::unit(K, c, c, a, b)));
    Matrix<F> Z = ad.kernel();
    // conditions on j (r x c, row-major): tr(Z_k i j) = sum_{x,y} j_{xy} (Z_k i)_{yx}
    Matrix<F> cond(K, Z.cols(), r * c);
    for (std::size_t k = 0; k < Z.cols(); ++k) {
      Matrix<F> Zk(K, c, c);
      for (std::size_t a = 0; a < c * c; ++a) Zk.set(a / c, a % c, Z.at(a, k));
      Matrix<F> Zi = Zk * i;
      for (std::size_t x = 0; x < r; ++x)
        for (std::size_t y = 0; y < c; ++y) cond.set(k, x * c + y, Zi.at(y, x));
    }
    Matrix<F> J = cond.kernel();
    Matrix<F> jv = J * random_matrix(K, J.cols(), 1, rng);
    Matrix<F> j(K, r, c);
    for (std::size_t a = 0; a < r * c; ++a) j.set(a / c, a % c, jv.at(a, 0));
    Matrix<F> rhs(K, c * c, 1);
    detail::put_flat(rhs, 0, 0, -(i * j));
    auto sol = ad.solve(rhs);
    require(sol.has_value(), ErrorKind::internal, "moment equation has no solution on the solvable locus");
    Matrix<F> b2 = *sol + Z * random_matrix(K, Z.cols(), 1, rng);
    Matrix<F> B2(K, c, c);
    for (std::size_t a = 0; a < c * c; ++a) B2.set(a / c, a % c, b2.at(a, 0));
    AdhmP2<F> d{r, c, B1, B2, i, j};
    if (stability_closure(d).stable) return d;
  }
  fail(ErrorKind::internal, "no stable P^2 datum found");
}

// A2 = 1, A1 = X, C_1 = Y with Y a polynomial in X and C_{q+1} = X^q Y, then
// scrambled by a random (phi1, phi2). Repeated until (P3) holds.
template <Field F>
HirzRank1<F> sample_hirz1(const F& K, std::size_t n, std::size_t c, Rng& rng) {
  require(n > 0, ErrorKind::shape, "n must be positive");
  for (int t = 0; t < sample_attempts; ++t) {
    Matrix<F> X = random_matrix(K, c, c, rng, 2);
    Matrix<F> Y(K, c, c), P = Matrix<F>::identity(K, c);
    for (std::size_t k = 0; k < std::max<std::size_t>(c, 1); ++k) {
      Y = Y + P.scale(K.from_int(rng.range(-2, 2)));
      P = P * X;
    }
    HirzRank1<F> d{n, c, X, Matrix<F>::identity(K, c), {Y}, random_matrix(K, 1, c, rng)};
    for (std::size_t q = 1; q < n; ++q) d.C.push_back(X * d.C.back());
    if (!check_P3(d).holds) continue;
    return hirz_action(random_invertible(K, c, rng), random_invertible(K, c, rng), d);
  }
  fail(ErrorKind::internal, "no datum satisfying (P3) found");
}

template <Field F>
MinimalPoint<F> sample_minimal(const F& K, std::size_t n, std::size_t r, std::size_t a, Rng& rng) {
  minimal_invariants(static_cast<long long>(n), static_cast<long long>(r), static_cast<long long>(a), 0);
  MinimalPoint<F> pt{n, r, a, {}, random_invertible(K, r, rng)};
  for (std::size_t q = 1; q < n; ++q) pt.b.push_back(random_matrix(K, a, r - a, rng));
  return pt;
}

template <Field F>
GkElement<F> random_gk(const F& K, std::size_t n, std::size_t r, std::size_t a, Rng& rng) {
  GkElement<F> g{random_invertible(K, n * a, rng), {}, random_invertible(K, r - a, rng), random_invertible(K, (n - 1) * a, rng)};
  for (std::size_t q = 0; q < n; ++q) g.psi12.push_back(random_matrix(K, n * a, r - a, rng));
  return g;
}

// theta+-stable representation of F_{d,n}: e and A_p injective, the B's and
// f's solved from the relations from the top vertex down.
template <Field F>
FlagRep<F> sample_flag(const F& K, std::size_t d, std::size_t n, std::size_t u, const std::vector<std::size_t>& v, Rng& rng) {
  require(d >= 1 && n >= 1 && v.size() == d, ErrorKind::shape, "need d >= 1, n >= 1 and d dimensions");
  std::size_t prev = u;
  for (auto x : v) {
    require(x > 0 && x < prev, ErrorKind::shape, "dimensions must satisfy u > v_0 > ... > v_{d-1} > 0");
    prev = x;
  }
  FlagRep<F> r{d, n, u, v, random_injective(K, u, v[0], rng), {}, {}, {}};
  for (std::size_t p = 1; p < d; ++p) r.A.push_back(random_injective(K, v[p - 1], v[p], rng));
  r.B.assign(d - 1, {});
  for (std::size_t q = 1; q < n; ++q) {
    std::vector<Matrix<F>> Bq(d, Matrix<F>(K, 0, 0));  // Bq[p] = B_pq
    for (std::size_t p = d; p-- > 1;) {
      const Matrix<F>& Ap = r.A[p - 1];
      Matrix<F> lk = left_kernel(Ap);
      Matrix<F> base = random_matrix(K, v[p], lk.rows(), rng) * lk;
      if (p + 1 < d) base = base + r.A[p] * Bq[p + 1] * left_inverse(Ap);
      Bq[p] = base;
    }
    Matrix<F> lk = left_kernel(r.e);
    Matrix<F> fq = random_matrix(K, v[0], lk.rows(), rng) * lk;
    if (d > 1) fq = fq - r.A[0] * Bq[1] * left_inverse(r.e);
    r.f.push_back(fq);
    for (std::size_t p = 1; p < d; ++p) r.B[p - 1].push_back(Bq[p]);
  }
  require(all_zero(check_flag_relations(r)), ErrorKind::internal, "sampled flag representation violates the relations");
  return r;
}

template <Field F>
BlowupDatum<F> sample_blowup(const F& K, std::size_t r, const std::vector<long long>& a, long long c, Rng& rng) {
  auto D = dims_kl(a, c);
  const std::size_t n = a.size(), k = static_cast<std::size_t>(D.k), l = static_cast<std::size_t>(D.l);
  for (int t = 0; t < sample_attempts; ++t) {
    BlowupDatum<F> d{r, a, c, {}, random_matrix(K, l, k, rng), random_matrix(K, l, k, rng), random_matrix(K, l, k, rng),
                     {}, {}, random_matrix(K, r, k, rng), random_matrix(K, l, r, rng)};
    bool distinct = true;
    for (std::size_t s = 0; s < n; ++s) {
      d.points.emplace_back(K.from_int(rng.range(-5, 5)), K.from_int(rng.range(-5, 5)));
      for (std::size_t u = 0; u < s; ++u)
        if (K.equal(d.points[u].first, d.points[s].first) && K.equal(d.points[u].second, d.points[s].second)) distinct = false;
      auto ks = static_cast<std::size_t>(D.dimK[s]);
      d.B.push_back(random_matrix(K, k, ks, rng));
      d.Bp.push_back(random_matrix(K, l, ks, rng));
    }
    if (!distinct || !blowup_assemble(d).M.is_invertible()) continue;
    return d;
  }
  fail(ErrorKind::internal, "no blowup datum with invertible M found");
}

template <Field F>
BlowupGroupElement<F> random_blowup_group(const F& K, const BlowupDatum<F>& d, Rng& rng) {
  auto D = d.dims();
  const std::size_t n = d.a.size(), k = static_cast<std::size_t>(D.k), l = static_cast<std::size_t>(D.l);
  BlowupGroupElement<F> g{{random_invertible(K, k, rng)}, {random_invertible(K, l, rng)}};
  for (std::size_t s = 0; s < n; ++s) {
    g.h.push_back(random_invertible(K, static_cast<std::size_t>(D.dimK[s]), rng));
    g.g.push_back(random_matrix(K, l, k, rng));
  }
  return g;
}

}  // namespace quivkit
