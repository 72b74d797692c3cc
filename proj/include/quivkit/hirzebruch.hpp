#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quivkit/adhm_p2.hpp"
#include "quivkit/matrix.hpp"
#include "quivkit/pencil.hpp"

namespace quivkit {

// Rank-one ADHM datum (A1, A2; C_1..C_n; e) on the n-th Hirzebruch surface.
template <Field F>
struct HirzRank1 {
  std::size_t n;
  std::size_t c;
  Matrix<F> A1, A2;
  std::vector<Matrix<F>> C;  // C[q-1] = C_q
  Matrix<F> e;               // 1 x c

  void validate() const {
    require(n > 0, ErrorKind::shape, "n must be positive");
    require(C.size() == n, ErrorKind::shape, "expected " + std::to_string(n) + " matrices C_q, got " + std::to_string(C.size()));
    auto chk = [&](const Matrix<F>& m, std::size_t rows, const std::string& name) {
      require(m.rows() == rows && m.cols() == c, ErrorKind::shape, name + " has shape " + m.shape());
      A1.same_field(m);
    };
    chk(A1, c, "A1");
    chk(A2, c, "A2");
    for (std::size_t q = 0; q < n; ++q) chk(C[q], c, "C_" + std::to_string(q + 1));
    chk(e, 1, "e");
  }
  const F& field() const { return A1.field(); }
};

template <Field F>
struct NamedResidual {
  std::string name;
  Matrix<F> value;
};

template <Field F>
std::vector<NamedResidual<F>> check_P1(const HirzRank1<F>& d) {
  d.validate();
  std::vector<NamedResidual<F>> out;
  if (d.n == 1) {
    out.push_back({"A1 C1 A2 - A2 C1 A1", d.A1 * d.C[0] * d.A2 - d.A2 * d.C[0] * d.A1});
    return out;
  }
  for (std::size_t q = 1; q < d.n; ++q) {
    const auto& Cq = d.C[q - 1];
    const auto& Cn = d.C[q];
    std::string qs = std::to_string(q), q1 = std::to_string(q + 1);
    out.push_back({"A1 C" + qs + " - A2 C" + q1, d.A1 * Cq - d.A2 * Cn});
    out.push_back({"C" + qs + " A1 - C" + q1 + " A2", Cq * d.A1 - Cn * d.A2});
  }
  return out;
}

template <Field F>
bool P1_holds(const HirzRank1<F>& d) {
  for (const auto& r : check_P1(d))
    if (!r.value.is_zero()) return false;
  return true;
}

template <Field F>
bool check_P2(const HirzRank1<F>& d) {
  d.validate();
  return is_regular_pencil(d.A1, d.A2);
}

struct P3Result {
  bool holds = true;
  std::string root;         // pencil zero [nu1:nu2] carrying a violating vector
  std::size_t dimension = 0;  // dimension of the violating invariant subspace
};

// (P3) by exact search over the zeros of det(nu1 A1 + nu2 A2), with
// lambda1 = nu2 and lambda2 = nu1. At a zero, write W = ker(nu1 A1 + nu2 A2)
// cap ker e, X = C_1 A_2, Y = C_n A_1, s = (-1)^n lambda2^n, t = lambda1^n.
// A violating v is a common eigenvector of X and Y in W with s*beta = t*alpha
// (alpha, beta the eigenvalues). If s != 0 this means v in U = W cap
// ker(s Y - t X) and v an X-eigenvector; if s = 0 then alpha = 0 and v must
// be a Y-eigenvector in W cap ker X. Eigenvectors (over the algebraic
// closure) exist in U exactly when the largest invariant subspace inside U
// is nonzero, which is computed over the field of the root.
template <Field F>
P3Result check_P3(const HirzRank1<F>& d) {
  d.validate();
  if constexpr (!std::is_same_v<F, RationalField> && !std::is_same_v<F, PrimeField>) {
    fail(ErrorKind::unsupported, "(P3) needs pencil roots, available over Q and F_p only");
  } else {
    P3Result res;
    for (const auto& loc : singular_loci(d.A1, d.A2)) {
      const auto& L = loc.L;
      auto lift = [&](const Matrix<F>& m) { return lift_matrix(m, L); };
      auto X = lift(d.C[0] * d.A2);
      auto Y = lift(d.C[d.n - 1] * d.A1);
      auto W = intersect(loc.kernel, lift(d.e).kernel());
      if (W.cols() == 0) continue;
      auto lambda1 = loc.nu2, lambda2 = loc.nu1;
      auto s = pow(L, lambda2, d.n);
      if (d.n % 2 == 1) s = L.neg(s);
      auto t = pow(L, lambda1, d.n);
      Matrix<ExtensionField<F>> inv(L, 0, 0);
      if (!L.is_zero(s)) {
        auto U = W * ((Y.scale(s) - X.scale(t)) * W).kernel();
        inv = largest_invariant_subspace(X, U);
      } else {
        auto U = W * (X * W).kernel();
        inv = largest_invariant_subspace(Y, U);
      }
      if (inv.cols() > 0) {
        res.holds = false;
        res.root = loc.describe();
        res.dimension = inv.cols();
        return res;
      }
    }
    return res;
  }
}

template <Field F>
HirzRank1<F> hirz_action(const Matrix<F>& phi1, const Matrix<F>& phi2, const HirzRank1<F>& d) {
  d.validate();
  require(phi1.is_square() && phi1.rows() == d.c && phi2.is_square() && phi2.rows() == d.c, ErrorKind::singular_group_element,
          "phi1, phi2 must be " + std::to_string(d.c) + "x" + std::to_string(d.c));
  Matrix<F> p1i = inverse_or_throw(phi1, ErrorKind::singular_group_element, "phi1");
  Matrix<F> p2i = inverse_or_throw(phi2, ErrorKind::singular_group_element, "phi2");
  HirzRank1<F> out{d.n, d.c, phi2 * d.A1 * p1i, phi2 * d.A2 * p1i, {}, d.e * p1i};
  for (const auto& Cq : d.C) out.C.push_back(phi1 * Cq * p2i);
  return out;
}

// Chart where det A2 != 0: B1 = (A2^-1 A1)^T, B2 = (C1 A2)^T, i = e^T, j = 0.
// (P1) makes [B1, B2] vanish, so this is a rank-one P^2 ADHM datum.
template <Field F>
AdhmP2<F> chart_to_p2(const HirzRank1<F>& d) {
  d.validate();
  auto A2i = d.A2.inverse();
  if (!A2i) fail(ErrorKind::not_in_chart, "A2 is singular");
  const F& K = d.field();
  return AdhmP2<F>{1, d.c, (*A2i * d.A1).transpose(), (d.C[0] * d.A2).transpose(), d.e.transpose(), Matrix<F>(K, 1, d.c)};
}

}  // namespace quivkit
