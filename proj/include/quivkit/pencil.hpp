#pragma once

#include <string>
#include <vector>

#include "quivkit/extension.hpp"
#include "quivkit/factor.hpp"
#include "quivkit/matrix.hpp"

namespace quivkit {

// det(nu1*A1 + nu2*A2) as a binary form of degree c; coeffs[k] multiplies
// nu1^k nu2^(c-k).
template <Field F>
struct PencilPoly {
  F field;
  int degree = 0;
  std::vector<typename F::value_type> coeffs;

  bool is_zero() const {
    for (const auto& v : coeffs)
      if (!field.is_zero(v)) return false;
    return true;
  }
  typename F::value_type eval(const typename F::value_type& nu1, const typename F::value_type& nu2) const {
    auto acc = field.zero();
    for (int k = 0; k <= degree; ++k) {
      auto term = field.mul(pow(field, nu1, static_cast<std::uint64_t>(k)), pow(field, nu2, static_cast<std::uint64_t>(degree - k)));
      acc = field.add(acc, field.mul(coeffs[static_cast<std::size_t>(k)], term));
    }
    return acc;
  }
  // p(t) = det(A1 + t A2)
  Poly<F> dehomogenized() const {
    std::vector<typename F::value_type> c(static_cast<std::size_t>(degree) + 1, field.zero());
    for (int k = 0; k <= degree; ++k) c[static_cast<std::size_t>(degree - k)] = coeffs[static_cast<std::size_t>(k)];
    return Poly<F>(field, c);
  }
};

namespace detail {

// Fraction-free (Bareiss) determinant over F[t]; used when F has too few
// elements for interpolation.
template <Field F>
Poly<F> bareiss_det(std::vector<std::vector<Poly<F>>> M, const F& field) {
  const std::size_t n = M.size();
  if (n == 0) return Poly<F>::constant(field, field.one());
  Poly<F> prev = Poly<F>::constant(field, field.one());
  bool neg = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && M[p][k].is_zero()) ++p;
    if (p == n) return Poly<F>(field);
    if (p != k) {
      std::swap(M[p], M[k]);
      neg = !neg;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) M[i][j] = (M[k][k] * M[i][j] - M[i][k] * M[k][j]) / prev;
    prev = M[k][k];
  }
  return neg ? -M[n - 1][n - 1] : M[n - 1][n - 1];
}

}  // namespace detail

template <Field F>
PencilPoly<F> pencil_det(const Matrix<F>& A1, const Matrix<F>& A2) {
  require(A1.is_square() && A2.is_square() && A1.rows() == A2.rows(), ErrorKind::shape,
          "pencil needs equal square matrices, got " + A1.shape() + " and " + A2.shape());
  A1.same_field(A2);
  const F& K = A1.field();
  const int c = static_cast<int>(A1.rows());
  PencilPoly<F> out{K, c, std::vector<typename F::value_type>(static_cast<std::size_t>(c) + 1, K.zero())};
  Poly<F> p(K);
  const std::uint64_t ch = K.characteristic();
  if (ch == 0 || ch > static_cast<std::uint64_t>(c)) {
    // Lagrange interpolation of det(A1 + t A2) at t = 0..c
    for (int i = 0; i <= c; ++i) {
      auto ti = K.from_int(i);
      auto yi = (A1 + A2.scale(ti)).det();
      if (K.is_zero(yi)) continue;
      Poly<F> basis = Poly<F>::constant(K, yi);
      for (int j = 0; j <= c; ++j) {
        if (j == i) continue;
        auto inv = K.inv(K.from_int(i - j));
        basis = basis * Poly<F>(K, {K.mul(K.neg(K.from_int(j)), inv), inv});
      }
      p = p + basis;
    }
  } else {
    std::vector<std::vector<Poly<F>>> M(static_cast<std::size_t>(c), std::vector<Poly<F>>(static_cast<std::size_t>(c), Poly<F>(K)));
    for (int i = 0; i < c; ++i)
      for (int j = 0; j < c; ++j)
        M[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Poly<F>(K, {A1.at(i, j), A2.at(i, j)});
    p = detail::bareiss_det(std::move(M), K);
  }
  for (int m = 0; m <= p.degree(); ++m) out.coeffs[static_cast<std::size_t>(c - m)] = p.coeff(m);
  require(K.equal(out.coeffs[static_cast<std::size_t>(c)], A1.det()), ErrorKind::internal, "pencil interpolation disagrees with det(A1)");
  return out;
}

template <Field F>
bool is_regular_pencil(const Matrix<F>& A1, const Matrix<F>& A2) {
  return !pencil_det(A1, A2).is_zero();
}

enum class RootKind { finite, infinity, algebraic };

// One projective zero [nu1:nu2] of the pencil determinant, written over
// L = F[x]/(factor). For finite roots factor = x - t, for the point at
// infinity factor = x; in both cases L is F itself in disguise.
template <Field F>
struct SingularLocus {
  RootKind kind;
  Poly<F> factor;
  ExtensionField<F> L;
  typename ExtensionField<F>::value_type nu1;
  typename ExtensionField<F>::value_type nu2;
  Matrix<ExtensionField<F>> kernel;  // basis of ker(nu1 A1 + nu2 A2) over L

  // rational root t (nu = (1, t)); meaningful for RootKind::finite
  typename F::value_type root() const { return L.base().neg(factor.coeff(0)); }
  std::string describe() const {
    if (kind == RootKind::infinity) return "[0:1]";
    if (kind == RootKind::finite) return "[1:" + L.base().to_string(root()) + "]";
    return "[1:x] mod " + factor.to_string();
  }
};

template <Field F>
Matrix<ExtensionField<F>> lift_matrix(const Matrix<F>& m, const ExtensionField<F>& L) {
  return m.template map<ExtensionField<F>>(L, [&](const typename F::value_type& v) { return L.embed(v); });
}

template <Field F>
std::vector<SingularLocus<F>> singular_loci(const Matrix<F>& A1, const Matrix<F>& A2) {
  auto form = pencil_det(A1, A2);
  if (form.is_zero()) fail(ErrorKind::irregular_pencil, "det(nu1 A1 + nu2 A2) vanishes identically");
  const F& K = A1.field();
  std::vector<SingularLocus<F>> out;
  auto make = [&](RootKind kind, const Poly<F>& f, bool at_infinity) {
    ExtensionField<F> L(f);
    auto nu1 = at_infinity ? L.zero() : L.one();
    auto nu2 = at_infinity ? L.one() : L.reduce(Poly<F>::x(K));
    auto P = lift_matrix(A1, L).scale(nu1) + lift_matrix(A2, L).scale(nu2);
    out.push_back(SingularLocus<F>{kind, f, L, nu1, nu2, P.kernel()});
  };
  for (const auto& f : irreducible_factors(form.dehomogenized()))
    make(f.degree() == 1 ? RootKind::finite : RootKind::algebraic, f, false);
  if (K.is_zero(form.coeffs[0])) make(RootKind::infinity, Poly<F>::x(K), true);
  return out;
}

}  // namespace quivkit
