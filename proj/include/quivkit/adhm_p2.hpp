#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quivkit/matrix.hpp"
#include "quivkit/quiver.hpp"
#include "quivkit/representation.hpp"
#include "quivkit/stability.hpp"

namespace quivkit {

// (B1, B2, i, j) with B1, B2 in End(C^c), i: C^r -> C^c, j: C^c -> C^r.
template <Field F>
struct AdhmP2 {
  std::size_t r;
  std::size_t c;
  Matrix<F> B1, B2, i, j;

  void validate() const {
    require(r > 0, ErrorKind::shape, "rank r must be positive");
    auto chk = [](const Matrix<F>& m, std::size_t rows, std::size_t cols, const char* name) {
      require(m.rows() == rows && m.cols() == cols, ErrorKind::shape,
              std::string(name) + " has shape " + m.shape() + ", expected " + std::to_string(rows) + "x" + std::to_string(cols));
    };
    chk(B1, c, c, "B1");
    chk(B2, c, c, "B2");
    chk(i, c, r, "i");
    chk(j, r, c, "j");
    B1.same_field(B2);
    B1.same_field(i);
    B1.same_field(j);
  }
  const F& field() const { return B1.field(); }
};

template <Field F>
Matrix<F> moment_residual(const AdhmP2<F>& d) {
  d.validate();
  return commutator(d.B1, d.B2) + d.i * d.j;
}

template <Field F>
struct ClosureResult {
  std::size_t closure_dim;
  bool stable;
  Matrix<F> closure;  // basis of the smallest B-stable subspace containing Im i
};

template <Field F>
ClosureResult<F> stability_closure(const AdhmP2<F>& d) {
  d.validate();
  Matrix<F> S = invariant_closure<F>({d.B1, d.B2}, d.i);
  return ClosureResult<F>{S.cols(), S.cols() == d.c, S};
}

// Dual test used for theta > 0: no nonzero B-stable subspace inside ker j.
template <Field F>
ClosureResult<F> costability_closure(const AdhmP2<F>& d) {
  d.validate();
  Matrix<F> S = invariant_closure<F>({d.B1.transpose(), d.B2.transpose()}, d.j.transpose());
  return ClosureResult<F>{S.cols(), S.cols() == d.c, S};
}

template <Field F>
AdhmP2<F> gl_action(const Matrix<F>& g, const AdhmP2<F>& d) {
  d.validate();
  require(g.is_square() && g.rows() == d.c, ErrorKind::singular_group_element, "g must be " + std::to_string(d.c) + "x" + std::to_string(d.c));
  Matrix<F> gi = inverse_or_throw(g, ErrorKind::singular_group_element, "g");
  return AdhmP2<F>{d.r, d.c, g * d.B1 * gi, g * d.B2 * gi, g * d.i, d.j * gi};
}

// Rank one: stability and the moment equation force j = 0 and [B1, B2] = 0.
template <Field F>
bool rank1_hilbert_check(const AdhmP2<F>& d) {
  d.validate();
  if (d.r != 1) fail(ErrorKind::not_in_variety, "rank1_hilbert_check needs r = 1");
  if (!moment_residual(d).is_zero()) fail(ErrorKind::not_in_variety, "moment residual is nonzero");
  if (!stability_closure(d).stable) fail(ErrorKind::not_in_variety, "datum is not stable");
  return d.j.is_zero() && commutator(d.B1, d.B2).is_zero();
}

namespace detail {

template <Field F>
Matrix<F> unit(const F& K, std::size_t rows, std::size_t cols, std::size_t a, std::size_t b) {
  Matrix<F> m(K, rows, cols);
  m.set(a, b, K.one());
  return m;
}

template <Field F>
void put_flat(Matrix<F>& target, std::size_t col, std::size_t offset, const Matrix<F>& m) {
  for (std::size_t a = 0; a < m.rows(); ++a)
    for (std::size_t b = 0; b < m.cols(); ++b) target.set(offset + a * m.cols() + b, col, m.at(a, b));
}

}  // namespace detail

struct TangentInfo {
  std::size_t ambient;       // 2c^2 + 2rc
  std::size_t moment_rank;   // rank of the linearized moment map
  std::size_t orbit_rank;    // rank of the infinitesimal GL(c) action
  long long dimension;       // dim ker(d mu) - orbit_rank
};

// Tangent space of the quotient at d: ker(d mu) modulo gl(c)-orbit directions.
template <Field F>
TangentInfo tangent_dimension(const AdhmP2<F>& d) {
  d.validate();
  const F& K = d.field();
  const std::size_t c = d.c, r = d.r;
  const std::size_t N = 2 * c * c + 2 * r * c;
  Matrix<F> dmu(K, c * c, N);
  std::size_t col = 0;
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b, ++col) detail::put_flat(dmu, col, 0, commutator(detail::unit(K, c, c, a, b), d.B2));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b, ++col) detail::put_flat(dmu, col, 0, commutator(d.B1, detail::unit(K, c, c, a, b)));
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < r; ++b, ++col) detail::put_flat(dmu, col, 0, detail::unit(K, c, r, a, b) * d.j);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < c; ++b, ++col) detail::put_flat(dmu, col, 0, d.i * detail::unit(K, r, c, a, b));

  // xi -> ([xi, B1], [xi, B2], xi i, -j xi), coordinates laid out as above
  Matrix<F> orbit(K, N, c * c);
  col = 0;
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b, ++col) {
      Matrix<F> xi = detail::unit(K, c, c, a, b);
      detail::put_flat(orbit, col, 0, commutator(xi, d.B1));
      detail::put_flat(orbit, col, c * c, commutator(xi, d.B2));
      detail::put_flat(orbit, col, 2 * c * c, xi * d.i);
      detail::put_flat(orbit, col, 2 * c * c + c * r, -(d.j * xi));
    }
  std::size_t mr = dmu.rank();
  std::size_t orank = orbit.rank();
  return TangentInfo{N, mr, orank, static_cast<long long>(N - mr) - static_cast<long long>(orank)};
}

// The framed double of the Jordan quiver: vertices 0, 0'; arrows B, d_0, B*, d_0*.
inline Quiver p2_quiver() { return framed_double(jordan_quiver()); }

template <Field F>
Representation<F> to_representation(const AdhmP2<F>& d) {
  d.validate();
  return Representation<F>(p2_quiver(), d.field(), {d.c, d.r}, {d.B1, d.j, d.B2, d.i});
}

template <Field F>
AdhmP2<F> p2_from_representation(const Representation<F>& rep) {
  require(rep.quiver() == p2_quiver(), ErrorKind::shape, "representation is not on the framed double Jordan quiver");
  AdhmP2<F> d{rep.dims()[1], rep.dims()[0], rep.map("B"), rep.map("B*"), rep.map("d_0*"), rep.map("d_0")};
  d.validate();
  return d;
}

// Closure criterion for theta != 0 on the framed double Jordan quiver.
template <Field F>
Criterion<F> p2_criterion() {
  return Criterion<F>{
      "p2-closure", [](const Representation<F>& rep, const std::set<std::string>& framing,
                       const std::vector<mpq_class>& theta) -> std::optional<StabilityResult<F>> {
        if (!(rep.quiver() == p2_quiver()) || framing != std::set<std::string>{"0'"} || theta.size() != 1 || theta[0] == 0)
          return std::nullopt;
        AdhmP2<F> d = p2_from_representation(rep);
        StabilityResult<F> res;
        const F& K = rep.field();
        if (theta[0] < 0) {
          auto cl = stability_closure(d);
          res.verdict = cl.stable ? Verdict::stable : Verdict::unstable;
          res.reason = cl.stable ? "Im i generates C^c" : "B-stable subspace containing Im i has dimension " + std::to_string(cl.closure_dim);
          if (!cl.stable) res.witness = Subrep<F>{{cl.closure, Matrix<F>::identity(K, 1)}};
        } else {
          auto cl = costability_closure(d);
          res.verdict = cl.stable ? Verdict::stable : Verdict::unstable;
          res.reason = cl.stable ? "no B-stable subspace inside ker j" : "nonzero B-stable subspace inside ker j";
          if (!cl.stable) {
            Matrix<F> S = cl.closure.transpose().kernel();  // annihilator of the dual closure
            res.witness = Subrep<F>{{S, Matrix<F>(K, 1, 0)}};
          }
        }
        return res;
      }};
}

}  // namespace quivkit
