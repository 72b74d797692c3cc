#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "quivkit/minimal.hpp"
#include "quivkit/quiver.hpp"
#include "quivkit/representation.hpp"
#include "quivkit/stability.hpp"

namespace quivkit {

inline std::string flag_i(std::size_t q) { return "i_" + std::to_string(q); }
inline std::string flag_a(std::size_t p) { return "a_" + std::to_string(p); }
inline std::string flag_b(std::size_t p, std::size_t q) { return "b_" + std::to_string(p) + "_" + std::to_string(q); }

// Q_{d,n}: vertices 0', 0..d-1; arrows j: 0 -> 0', i_q: 0' -> 0,
// a_p: p -> p-1, b_p_q: p-1 -> p.
inline std::pair<Quiver, RelationSet> build_flag_algebra(std::size_t d, std::size_t n) {
  require(d >= 1 && n >= 1, ErrorKind::shape, "d and n must be at least 1");
  Quiver Q;
  Q.add_vertex("0'");
  for (std::size_t p = 0; p < d; ++p) Q.add_vertex(std::to_string(p));
  Q.add_arrow("j", "0", "0'");
  for (std::size_t q = 1; q < n; ++q) Q.add_arrow(flag_i(q), "0'", "0");
  for (std::size_t p = 1; p < d; ++p) Q.add_arrow(flag_a(p), std::to_string(p), std::to_string(p - 1));
  for (std::size_t p = 1; p < d; ++p)
    for (std::size_t q = 1; q < n; ++q) Q.add_arrow(flag_b(p, q), std::to_string(p - 1), std::to_string(p));
  RelationSet rels;
  for (std::size_t q = 1; q < n; ++q) {
    if (d == 1) {
      rels.push_back(make_relation(Q, {{1, {flag_i(q), "j"}}}));
      continue;
    }
    rels.push_back(make_relation(Q, {{1, {flag_a(1), flag_b(1, q)}}, {1, {flag_i(q), "j"}}}));
    for (std::size_t p = 1; p + 1 < d; ++p)
      rels.push_back(make_relation(Q, {{1, {flag_a(p + 1), flag_b(p + 1, q)}}, {-1, {flag_b(p, q), flag_a(p)}}}));
    rels.push_back(make_relation(Q, {{1, {flag_b(d - 1, q), flag_a(d - 1)}}}));
  }
  return {Q, rels};
}

// Representation of F_{d,n} with V_0' = C^u and V_p = C^{v_p}.
template <Field F>
struct FlagRep {
  std::size_t d, n, u;
  std::vector<std::size_t> v;
  Matrix<F> e;                         // u x v0
  std::vector<Matrix<F>> f;            // f[q-1]: v0 x u
  std::vector<Matrix<F>> A;            // A[p-1]: v_{p-1} x v_p
  std::vector<std::vector<Matrix<F>>> B;  // B[p-1][q-1]: v_p x v_{p-1}

  const F& field() const { return e.field(); }

  void validate() const {
    require(d >= 1 && n >= 1 && u > 0, ErrorKind::shape, "need d, n >= 1 and u > 0");
    require(v.size() == d, ErrorKind::shape, "need d dimensions v_0..v_{d-1}");
    std::size_t prev = u;
    for (auto x : v) {
      require(x > 0 && x < prev, ErrorKind::shape, "dimensions must satisfy u > v_0 > ... > v_{d-1} > 0");
      prev = x;
    }
    auto chk = [&](const Matrix<F>& m, std::size_t rows, std::size_t cols, const std::string& name) {
      require(m.rows() == rows && m.cols() == cols, ErrorKind::shape,
              name + " has shape " + m.shape() + ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
      e.same_field(m);
    };
    chk(e, u, v[0], "e");
    require(f.size() == n - 1, ErrorKind::shape, "need n-1 maps f_q");
    for (std::size_t q = 1; q < n; ++q) chk(f[q - 1], v[0], u, "f_" + std::to_string(q));
    require(A.size() == d - 1 && B.size() == d - 1, ErrorKind::shape, "need d-1 maps A_p and d-1 rows of B");
    for (std::size_t p = 1; p < d; ++p) {
      chk(A[p - 1], v[p - 1], v[p], "A_" + std::to_string(p));
      require(B[p - 1].size() == n - 1, ErrorKind::shape, "need n-1 maps B_pq for each p");
      for (std::size_t q = 1; q < n; ++q) chk(B[p - 1][q - 1], v[p], v[p - 1], "B_" + std::to_string(p) + std::to_string(q));
    }
  }
  bool operator==(const FlagRep&) const = default;
};

template <Field F>
std::vector<Matrix<F>> check_flag_relations(const FlagRep<F>& r) {
  r.validate();
  std::vector<Matrix<F>> out;
  for (std::size_t q = 1; q < r.n; ++q) {
    Matrix<F> fe = r.f[q - 1] * r.e;
    if (r.d == 1) {
      out.push_back(fe);
      continue;
    }
    out.push_back(r.A[0] * r.B[0][q - 1] + fe);
    for (std::size_t p = 1; p + 1 < r.d; ++p) out.push_back(r.A[p] * r.B[p][q - 1] - r.B[p - 1][q - 1] * r.A[p - 1]);
    out.push_back(r.B[r.d - 2][q - 1] * r.A[r.d - 2]);
  }
  return out;
}

template <Field F>
Representation<F> to_representation(const FlagRep<F>& r) {
  r.validate();
  auto [Q, rels] = build_flag_algebra(r.d, r.n);
  std::vector<std::size_t> dims{r.u};
  dims.insert(dims.end(), r.v.begin(), r.v.end());
  std::vector<Matrix<F>> maps{r.e};
  for (const auto& m : r.f) maps.push_back(m);
  for (const auto& m : r.A) maps.push_back(m);
  for (const auto& row : r.B)
    for (const auto& m : row) maps.push_back(m);
  return Representation<F>(Q, r.field(), dims, maps);
}

// Inverse of to_representation; the quiver is matched against Q_{d,n} for
// the d, n read off its vertices and arrows.
template <Field F>
FlagRep<F> flag_from_representation(const Representation<F>& rep) {
  const Quiver& Q = rep.quiver();
  require(Q.num_vertices() >= 2, ErrorKind::shape, "not a flag quiver");
  const std::size_t d = Q.num_vertices() - 1;
  std::size_t n = 1;
  while (Q.find_arrow(flag_i(n)) != Quiver::npos) ++n;
  require(Q == build_flag_algebra(d, n).first, ErrorKind::shape, "representation is not on Q_{d,n}");
  FlagRep<F> r{d, n, rep.dim("0'"), {}, rep.map("j"), {}, {}, {}};
  for (std::size_t p = 0; p < d; ++p) r.v.push_back(rep.dim(std::to_string(p)));
  for (std::size_t q = 1; q < n; ++q) r.f.push_back(rep.map(flag_i(q)));
  for (std::size_t p = 1; p < d; ++p) {
    r.A.push_back(rep.map(flag_a(p)));
    r.B.emplace_back();
    for (std::size_t q = 1; q < n; ++q) r.B.back().push_back(rep.map(flag_b(p, q)));
  }
  r.validate();
  return r;
}

// The n = 2 slice carrying f_q and B_{.q}.
template <Field F>
FlagRep<F> flag_slice(const FlagRep<F>& r, std::size_t q) {
  r.validate();
  require(q >= 1 && q < r.n, ErrorKind::shape, "slice index out of range");
  FlagRep<F> s{r.d, 2, r.u, r.v, r.e, {r.f[q - 1]}, r.A, {}};
  for (const auto& row : r.B) s.B.push_back({row[q - 1]});
  return s;
}

// S_p = ker(e A_1 ... A_p). Closed under all maps by the relations, killed by
// e, and nonzero exactly when e or some A_p fails to be injective.
template <Field F>
std::vector<Matrix<F>> flag_kernel_chain(const FlagRep<F>& r) {
  std::vector<Matrix<F>> out;
  Matrix<F> comp = r.e;
  out.push_back(comp.kernel());
  for (std::size_t p = 1; p < r.d; ++p) {
    comp = comp * r.A[p - 1];
    out.push_back(comp.kernel());
  }
  return out;
}

template <Field F>
bool stable_thetaplus(const FlagRep<F>& r) {
  if (!all_zero(check_flag_relations(r))) fail(ErrorKind::not_a_representation, "flag relations do not hold");
  if (r.e.rank() != r.v[0]) return false;
  for (std::size_t p = 1; p < r.d; ++p)
    if (r.A[p - 1].rank() != r.v[p]) return false;
  return true;
}

// E_0 = Im e and E_p = Im(e A_1 ... A_p), as canonical bases of C^u.
template <Field F>
std::vector<Matrix<F>> extract_flag(const FlagRep<F>& r, bool require_stable) {
  if (require_stable && !stable_thetaplus(r)) fail(ErrorKind::unstable, "representation is not theta+-stable");
  r.validate();
  std::vector<Matrix<F>> out;
  Matrix<F> comp = r.e;
  out.push_back(canonical_basis(comp));
  for (std::size_t p = 1; p < r.d; ++p) {
    comp = comp * r.A[p - 1];
    out.push_back(canonical_basis(comp));
  }
  return out;
}

template <Field F>
FlagRep<F> flag_gl_action(const std::vector<Matrix<F>>& g, const FlagRep<F>& r) {
  r.validate();
  require(g.size() == r.d, ErrorKind::group_shape, "need one group element per vertex 0..d-1");
  std::vector<Matrix<F>> gi;
  for (std::size_t p = 0; p < r.d; ++p) {
    require(g[p].rows() == r.v[p] && g[p].cols() == r.v[p], ErrorKind::group_shape, "g_p must be v_p square");
    gi.push_back(inverse_or_throw(g[p], ErrorKind::singular_group_element, "g_" + std::to_string(p)));
  }
  FlagRep<F> out{r.d, r.n, r.u, r.v, r.e * gi[0], {}, {}, {}};
  for (const auto& m : r.f) out.f.push_back(g[0] * m);
  for (std::size_t p = 1; p < r.d; ++p) {
    out.A.push_back(g[p - 1] * r.A[p - 1] * gi[p]);
    out.B.emplace_back();
    for (const auto& m : r.B[p - 1]) out.B.back().push_back(g[p] * m * gi[p - 1]);
  }
  return out;
}

// e = first a columns of theta, f_q = [0 | b_q] theta^-1.
template <Field F>
FlagRep<F> minimal_to_flagrep(const MinimalPoint<F>& pt) {
  pt.validate();
  if (pt.a == 0) fail(ErrorKind::empty_flag, "a = 0 gives an empty flag");
  const F& K = pt.field();
  Matrix<F> ti = *pt.theta.inverse();
  FlagRep<F> r{1, pt.n, pt.r, {pt.a}, pt.theta.block(0, 0, pt.r, pt.a), {}, {}, {}};
  for (const auto& bq : pt.b) r.f.push_back(hstack(Matrix<F>(K, pt.a, pt.a), bq) * ti);
  return r;
}

template <Field F>
struct FlagTangent {
  Matrix<F> de;  // u x v0
  Matrix<F> df;  // v0 x u
};

// omega = tr(df ^ de) at d = 1.
template <Field F>
typename F::value_type symplectic_eval(const FlagTangent<F>& t1, const FlagTangent<F>& t2) {
  auto ok = [](const FlagTangent<F>& t) { return t.df.rows() == t.de.cols() && t.df.cols() == t.de.rows(); };
  require(ok(t1) && ok(t2) && t1.de.rows() == t2.de.rows() && t1.de.cols() == t2.de.cols(), ErrorKind::shape,
          "tangent vectors must be (u x v0, v0 x u) of matching size");
  const F& K = t1.de.field();
  return K.sub((t1.df * t2.de).trace(), (t2.df * t1.de).trace());
}

// theta+ criterion: all entries of theta positive, framing {0'}.
template <Field F>
Criterion<F> flag_criterion() {
  return Criterion<F>{
      "flag-theta-plus", [](const Representation<F>& rep, const std::set<std::string>& framing,
                            const std::vector<mpq_class>& theta) -> std::optional<StabilityResult<F>> {
        if (framing != std::set<std::string>{"0'"} || rep.quiver().num_vertices() < 2 || theta.size() + 1 != rep.quiver().num_vertices())
          return std::nullopt;
        for (const auto& t : theta)
          if (t <= 0) return std::nullopt;
        std::optional<FlagRep<F>> parsed;
        try {
          parsed = flag_from_representation(rep);
        } catch (const Error&) {
          return std::nullopt;
        }
        const FlagRep<F>& r = *parsed;
        StabilityResult<F> res;
        if (stable_thetaplus(r)) {
          res.reason = "e and every A_p are injective";
          return res;
        }
        res.verdict = Verdict::unstable;
        res.reason = r.e.rank() != r.v[0] ? "e not injective" : "some A_p not injective";
        // witness on the translated quiver: vertices 0..d-1, then inf
        Subrep<F> w{flag_kernel_chain(r)};
        w.basis.push_back(Matrix<F>(rep.field(), 1, 0));
        res.witness = w;
        return res;
      }};
}

}  // namespace quivkit
