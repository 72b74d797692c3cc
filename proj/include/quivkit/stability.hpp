#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "quivkit/representation.hpp"

namespace quivkit {

enum class Verdict { stable, semistable_only, unstable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::stable: return "stable";
    case Verdict::semistable_only: return "semistable_only";
    case Verdict::unstable: return "unstable";
  }
  return "unstable";
}

inline mpq_class slope(const std::vector<mpq_class>& theta, const std::vector<std::size_t>& dims) {
  require(theta.size() == dims.size(), ErrorKind::shape, "theta and dimension vector differ in length");
  mpq_class num = 0;
  unsigned long total = 0;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    num += theta[i] * static_cast<unsigned long>(dims[i]);
    total += dims[i];
  }
  if (total == 0) fail(ErrorKind::zero_dim, "slope of a zero-dimensional representation");
  return num / total;
}

// A graded subspace: one basis matrix (columns) per vertex.
template <Field F>
struct Subrep {
  std::vector<Matrix<F>> basis;

  std::vector<std::size_t> dims() const {
    std::vector<std::size_t> d;
    for (const auto& b : basis) d.push_back(b.cols());
    return d;
  }
};

template <Field F>
struct StabilityResult {
  Verdict verdict = Verdict::stable;
  std::optional<Subrep<F>> witness;  // destabilizing (or slope-equal, for semistable_only) subrepresentation
  std::string method;
  std::string reason;
};

// All subspaces of F_p^n as canonical RREF bases, ordered by dimension, then
// pivot set (lexicographic), then free entries (lexicographic).
struct EnumeratedSubspace {
  Matrix<PrimeField> basis;          // n x k, columns are the RREF rows
  std::vector<std::size_t> pivots;   // pivot coordinate of each basis vector
};

inline std::vector<EnumeratedSubspace> enumerate_subspaces(const PrimeField& K, std::size_t n) {
  std::vector<EnumeratedSubspace> out;
  const std::uint64_t p = K.modulus();
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> piv(k);
    for (std::size_t i = 0; i < k; ++i) piv[i] = i;
    while (true) {
      // free positions: (row r, column j) with j > piv[r], j not a pivot
      std::vector<std::pair<std::size_t, std::size_t>> free;
      std::vector<bool> is_piv(n, false);
      for (auto c : piv) is_piv[c] = true;
      for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = piv[r] + 1; j < n; ++j)
          if (!is_piv[j]) free.emplace_back(r, j);
      std::vector<std::uint64_t> digits(free.size(), 0);
      while (true) {
        Matrix<PrimeField> B(K, n, k);
        for (std::size_t r = 0; r < k; ++r) B.set(piv[r], r, 1);
        for (std::size_t t = 0; t < free.size(); ++t) B.set(free[t].second, free[t].first, digits[t]);
        out.push_back(EnumeratedSubspace{std::move(B), piv});
        std::size_t t = free.size();
        while (t > 0 && digits[t - 1] == p - 1) digits[--t] = 0;
        if (t == 0) break;
        ++digits[t - 1];
      }
      // next pivot combination
      std::size_t i = k;
      while (i > 0 && piv[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++piv[i - 1];
      for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
    }
  }
  return out;
}

inline mpz_class count_subspaces(std::uint64_t p, std::size_t n) {
  // sum over k of Gaussian binomials [n choose k]_p
  mpz_class total = 0;
  mpz_class P(std::to_string(p));
  for (std::size_t k = 0; k <= n; ++k) {
    mpz_class num = 1, den = 1;
    for (std::size_t i = 0; i < k; ++i) {
      mpz_class a, b;
      mpz_pow_ui(a.get_mpz_t(), P.get_mpz_t(), n - i);
      mpz_pow_ui(b.get_mpz_t(), P.get_mpz_t(), i + 1);
      num *= a - 1;
      den *= b - 1;
    }
    total += num / den;
  }
  return total;
}

inline constexpr unsigned long enumeration_budget = 10000000UL;

namespace detail {

// v in span of an RREF-shaped basis (unit entries at the pivots)?
inline bool in_rref_span(const EnumeratedSubspace& S, const Matrix<PrimeField>& v, std::size_t col) {
  const PrimeField& K = v.field();
  const std::size_t n = v.rows();
  std::vector<std::uint64_t> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = v.at(i, col);
  for (std::size_t b = 0; b < S.pivots.size(); ++b) {
    std::uint64_t c = r[S.pivots[b]];
    if (c == 0) continue;
    for (std::size_t i = 0; i < n; ++i) r[i] = K.sub(r[i], K.mul(c, S.basis.at(i, b)));
  }
  for (auto x : r)
    if (x != 0) return false;
  return true;
}

}  // namespace detail

// Exhaustive slope test over every graded subspace closed under all maps.
// Works over prime fields only.
inline StabilityResult<PrimeField> brute_force_semistable(const Representation<PrimeField>& rep, const std::vector<mpq_class>& theta) {
  const Quiver& Q = rep.quiver();
  const std::size_t nv = Q.num_vertices();
  require(theta.size() == nv, ErrorKind::shape, "theta must have one entry per vertex");
  StabilityResult<PrimeField> res;
  res.method = "enumeration";
  std::size_t total_dim = 0;
  for (auto d : rep.dims()) total_dim += d;
  if (total_dim == 0) {
    res.reason = "zero-dimensional representation";
    return res;
  }
  mpz_class count = 1;
  for (auto d : rep.dims()) {
    count *= count_subspaces(rep.field().modulus(), d);
    if (count > enumeration_budget) fail(ErrorKind::too_large, "subspace enumeration exceeds the budget of 10^7 graded subspaces");
  }
  std::vector<std::vector<EnumeratedSubspace>> spaces;
  for (auto d : rep.dims()) spaces.push_back(enumerate_subspaces(rep.field(), d));

  mpq_class theta_v = 0;
  for (std::size_t i = 0; i < nv; ++i) theta_v += theta[i] * static_cast<unsigned long>(rep.dims()[i]);

  // arrows checked once both endpoints are assigned
  std::vector<std::vector<std::size_t>> check_at(nv);
  for (std::size_t k = 0; k < Q.arrows().size(); ++k) {
    const Arrow& a = Q.arrows()[k];
    check_at[std::max(a.src, a.tgt)].push_back(k);
  }

  std::vector<std::size_t> choice(nv, 0);
  std::optional<Subrep<PrimeField>> equal_witness;
  bool done = false;
  auto closed = [&](std::size_t k) {
    const Arrow& a = Q.arrows()[k];
    const auto& S = spaces[a.src][choice[a.src]];
    const auto& T = spaces[a.tgt][choice[a.tgt]];
    if (S.basis.cols() == 0) return true;
    Matrix<PrimeField> img = rep.maps()[k] * S.basis;
    for (std::size_t c = 0; c < img.cols(); ++c)
      if (!detail::in_rref_span(T, img, c)) return false;
    return true;
  };
  auto make_sub = [&]() {
    Subrep<PrimeField> s;
    for (std::size_t i = 0; i < nv; ++i) s.basis.push_back(spaces[i][choice[i]].basis);
    return s;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t v) {
    if (done) return;
    if (v == nv) {
      std::size_t sdim = 0;
      mpq_class ts = 0;
      bool full = true;
      for (std::size_t i = 0; i < nv; ++i) {
        std::size_t si = spaces[i][choice[i]].basis.cols();
        sdim += si;
        ts += theta[i] * static_cast<unsigned long>(si);
        if (si != rep.dims()[i]) full = false;
      }
      if (sdim == 0 || full) return;
      // mu(S) vs mu(V): compare ts/sdim with theta_v/total_dim
      int cmp = sgn(ts * static_cast<unsigned long>(total_dim) - theta_v * static_cast<unsigned long>(sdim));
      if (cmp > 0) {
        res.verdict = Verdict::unstable;
        res.witness = make_sub();
        res.reason = "subrepresentation of larger slope";
        done = true;
      } else if (cmp == 0 && !equal_witness) {
        equal_witness = make_sub();
      }
      return;
    }
    for (std::size_t c = 0; c < spaces[v].size() && !done; ++c) {
      choice[v] = c;
      bool ok = true;
      for (auto k : check_at[v])
        if (!closed(k)) {
          ok = false;
          break;
        }
      if (ok) dfs(v + 1);
    }
  };
  dfs(0);
  if (!done && equal_witness) {
    res.verdict = Verdict::semistable_only;
    res.witness = equal_witness;
    res.reason = "subrepresentation of equal slope";
  }
  return res;
}

// Extended parameter (theta, -theta.v) on the Crawley-Boevey quiver.
template <Field F>
std::vector<mpq_class> extended_theta(const Representation<F>& cb, const std::vector<mpq_class>& theta) {
  std::vector<mpq_class> out;
  mpq_class tv = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < cb.quiver().num_vertices(); ++i) {
    if (cb.quiver().vertices()[i] == infinity_vertex()) {
      out.emplace_back(0);
      continue;
    }
    require(k < theta.size(), ErrorKind::shape, "theta has too few entries");
    out.push_back(theta[k]);
    tv += theta[k] * static_cast<unsigned long>(cb.dims()[i]);
    ++k;
  }
  require(k == theta.size(), ErrorKind::shape, "theta has too many entries");
  for (std::size_t i = 0; i < out.size(); ++i)
    if (cb.quiver().vertices()[i] == infinity_vertex()) out[i] = -tv;
  return out;
}

// A structural test for a family of framed representations: returns a
// verdict when the family and parameter are recognised, nothing otherwise.
template <Field F>
struct Criterion {
  std::string name;
  std::function<std::optional<StabilityResult<F>>(const Representation<F>&, const std::set<std::string>&, const std::vector<mpq_class>&)>
      test;
};

template <Field F>
using CriterionSet = std::vector<Criterion<F>>;

// Stability of a GF-quiver representation through its Crawley-Boevey image.
// theta is indexed by the non-framing vertices in quiver order. Witnesses
// live on the translated quiver (non-framing vertices, then inf).
template <Field F>
StabilityResult<F> is_semistable_framed(const Representation<F>& rep, const std::set<std::string>& framing,
                                        const std::vector<mpq_class>& theta, const CriterionSet<F>& criteria) {
  for (const auto& c : criteria) {
    auto r = c.test(rep, framing, theta);
    if (r) {
      r->method = "criterion:" + c.name;
      return *r;
    }
  }
  if constexpr (std::is_same_v<F, PrimeField>) {
    auto cb = translate_cb(rep, framing);
    return brute_force_semistable(cb, extended_theta(cb, theta));
  } else {
    fail(ErrorKind::needs_finite_field, "no structural criterion applies and enumeration needs a prime field");
  }
}

// Enumeration on the GF side directly: graded subspaces of V together with a
// framing part equal to 0 or to all of W, slope computed with the framing
// counted as a single vertex. Used to cross-check the translation.
inline StabilityResult<PrimeField> brute_force_gf_side(const Representation<PrimeField>& rep, const std::set<std::string>& framing,
                                                       const std::vector<mpq_class>& theta) {
  const Quiver& Q = rep.quiver();
  const std::size_t nv = Q.num_vertices();
  std::vector<bool> is_fr(nv);
  for (std::size_t i = 0; i < nv; ++i) is_fr[i] = framing.count(Q.vertices()[i]) > 0;
  std::vector<std::vector<EnumeratedSubspace>> spaces(nv);
  mpz_class count = 2;
  for (std::size_t i = 0; i < nv; ++i) {
    if (is_fr[i]) continue;
    count *= count_subspaces(rep.field().modulus(), rep.dims()[i]);
    if (count > enumeration_budget) fail(ErrorKind::too_large, "subspace enumeration exceeds the budget of 10^7 graded subspaces");
    spaces[i] = enumerate_subspaces(rep.field(), rep.dims()[i]);
  }
  std::vector<mpq_class> th(nv, 0);
  mpq_class tv = 0;
  std::size_t total = 1, k = 0;
  for (std::size_t i = 0; i < nv; ++i) {
    if (is_fr[i]) continue;
    th[i] = theta.at(k++);
    tv += th[i] * static_cast<unsigned long>(rep.dims()[i]);
    total += rep.dims()[i];
  }
  // mu(V) = (tv - tv) / total = 0
  StabilityResult<PrimeField> res;
  res.method = "gf-enumeration";
  std::vector<std::size_t> choice(nv, 0);
  std::optional<Subrep<PrimeField>> equal_witness;
  bool done = false;
  auto sub_of = [&](int sw) {
    Subrep<PrimeField> s;
    for (std::size_t i = 0; i < nv; ++i) {
      if (is_fr[i]) s.basis.push_back(sw ? Matrix<PrimeField>::identity(rep.field(), rep.dims()[i]) : Matrix<PrimeField>(rep.field(), rep.dims()[i], 0));
      else s.basis.push_back(spaces[i][choice[i]].basis);
    }
    return s;
  };
  for (int sw = 0; sw <= 1 && !done; ++sw) {
    auto framing_basis = [&](std::size_t i) {
      return sw ? Matrix<PrimeField>::identity(rep.field(), rep.dims()[i]) : Matrix<PrimeField>(rep.field(), rep.dims()[i], 0);
    };
    auto is_closed = [&]() {
      for (std::size_t a = 0; a < Q.arrows().size(); ++a) {
        const Arrow& ar = Q.arrows()[a];
        Matrix<PrimeField> src = is_fr[ar.src] ? framing_basis(ar.src) : spaces[ar.src][choice[ar.src]].basis;
        if (src.cols() == 0) continue;
        Matrix<PrimeField> img = rep.maps()[a] * src;
        if (is_fr[ar.tgt]) {
          if (!sw && !img.is_zero()) return false;
          continue;
        }
        for (std::size_t c = 0; c < img.cols(); ++c)
          if (!detail::in_rref_span(spaces[ar.tgt][choice[ar.tgt]], img, c)) return false;
      }
      return true;
    };
    auto leaf = [&]() {
      std::size_t sdim = static_cast<std::size_t>(sw);
      mpq_class ts = -tv * sw;
      bool full = sw == 1;
      for (std::size_t i = 0; i < nv; ++i) {
        if (is_fr[i]) continue;
        std::size_t si = spaces[i][choice[i]].basis.cols();
        sdim += si;
        ts += th[i] * static_cast<unsigned long>(si);
        if (si != rep.dims()[i]) full = false;
      }
      if (sdim == 0 || full || !is_closed()) return;
      int cmp = sgn(ts);
      if (cmp > 0) {
        res.verdict = Verdict::unstable;
        res.witness = sub_of(sw);
        done = true;
      } else if (cmp == 0 && !equal_witness) {
        equal_witness = sub_of(sw);
      }
    };
    std::function<void(std::size_t)> walk = [&](std::size_t v) {
      if (done) return;
      if (v == nv) {
        leaf();
        return;
      }
      if (is_fr[v]) {
        walk(v + 1);
        return;
      }
      for (std::size_t c = 0; c < spaces[v].size() && !done; ++c) {
        choice[v] = c;
        walk(v + 1);
      }
    };
    walk(0);
  }
  if (!done && equal_witness) {
    res.verdict = Verdict::semistable_only;
    res.witness = equal_witness;
  }
  return res;
}

}  // namespace quivkit
