#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "quivkit/extension.hpp"
#include "quivkit/poly.hpp"
#include "quivkit/random.hpp"

namespace quivkit {

namespace detail {

// Cantor-Zassenhaus equal-degree splitting of a squarefree monic g whose
// irreducible factors all have degree d.
inline void equal_degree_split(const Poly<PrimeField>& g, int d, Rng& rng, std::vector<Poly<PrimeField>>& out) {
  const PrimeField& K = g.field();
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const std::uint64_t p = K.modulus();
  while (true) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(g.degree()));
    for (auto& v : c) v = rng.below(p);
    Poly<PrimeField> a(K, c);
    if (a.degree() < 1) continue;
    Poly<PrimeField> h(K);
    if (p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      Poly<PrimeField> t = a;
      h = a;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % g;
        h = h + t;
      }
    } else {
      // a^((p^d - 1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2)
      Poly<PrimeField> t = a;
      Poly<PrimeField> s = a;
      for (int i = 1; i < d; ++i) {
        t = powmod(t, p, g);
        s = (s * t) % g;
      }
      h = powmod(s, (p - 1) / 2, g) - Poly<PrimeField>::constant(K, K.one());
    }
    Poly<PrimeField> f = gcd(g, h);
    if (f.degree() > 0 && f.degree() < g.degree()) {
      equal_degree_split(f, d, rng, out);
      equal_degree_split(g / f, d, rng, out);
      return;
    }
  }
}

}  // namespace detail

// Distinct monic irreducible factors of f over F_p (multiplicities dropped),
// sorted by degree and then coefficients.
inline std::vector<Poly<PrimeField>> irreducible_factors(const Poly<PrimeField>& f) {
  const PrimeField& K = f.field();
  std::vector<Poly<PrimeField>> out;
  if (f.degree() < 1) return out;
  Poly<PrimeField> rem = f.monic();
  Poly<PrimeField> X = Poly<PrimeField>::x(K);
  Poly<PrimeField> h = X % rem;
  Rng rng(0x9e3779b97f4a7c15ULL ^ static_cast<std::uint64_t>(f.degree()));
  for (int d = 1; rem.degree() >= 2 * d; ++d) {
    h = powmod(h, K.modulus(), rem);
    Poly<PrimeField> g = gcd(rem, h - X);
    if (g.degree() > 0) {
      detail::equal_degree_split(g, d, rng, out);
      while (true) {
        Poly<PrimeField> c = gcd(rem, g);
        if (c.degree() < 1) break;
        rem = rem / c;
      }
      h = h % rem;
    }
  }
  if (rem.degree() >= 1) out.push_back(rem.monic());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return out;
}

namespace detail {

using ZPoly = std::vector<mpz_class>;  // low degree first

inline void ztrim(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline ZPoly primitive_integer(const Poly<RationalField>& f) {
  mpz_class den = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  ZPoly z;
  for (const auto& c : f.coeffs()) {
    mpq_class s = c * den;
    z.push_back(s.get_num());
  }
  mpz_class g = 0;
  for (const auto& c : z) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0)
    for (auto& c : z) c /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

// Exact division over Z; returns false when b does not divide a.
inline bool zdivide(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  ZPoly r = a;
  int da = static_cast<int>(a.size()) - 1, db = static_cast<int>(b.size()) - 1;
  if (da < db) return false;
  q.assign(static_cast<std::size_t>(da - db) + 1, 0);
  for (int k = da; k >= db; --k) {
    const mpz_class& top = r[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return false;
    mpz_class t = top / b.back();
    q[static_cast<std::size_t>(k - db)] = t;
    for (int i = 0; i <= db; ++i) r[static_cast<std::size_t>(k - db + i)] -= t * b[static_cast<std::size_t>(i)];
  }
  for (const auto& c : r)
    if (c != 0) return false;
  return true;
}

inline Poly<PrimeField> zreduce(const ZPoly& z, const PrimeField& K) {
  std::vector<std::uint64_t> c;
  for (const auto& v : z) c.push_back(mpz_fdiv_ui(v.get_mpz_t(), K.modulus()));
  return Poly<PrimeField>(K, c);
}

inline std::vector<std::vector<int>> subsets_of_size(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace detail

// Distinct monic irreducible factors of f over Q, by a single large prime
// (no Hensel lifting) and subset recombination. Intended for the small
// degrees met in pencil determinants; throws TooLarge when the coefficient
// bound exceeds the machine prime range.
inline std::vector<Poly<RationalField>> irreducible_factors(const Poly<RationalField>& f) {
  using detail::ZPoly;
  const RationalField Q;
  std::vector<Poly<RationalField>> out;
  if (f.degree() < 1) return out;
  Poly<RationalField> sq = f / gcd(f, f.derivative());
  ZPoly F = detail::primitive_integer(sq);
  const int n = static_cast<int>(F.size()) - 1;
  if (n == 1) {
    out.push_back(sq.monic());
    return out;
  }

  mpz_class norm2 = 0;
  for (const auto& c : F) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class lc = abs(F.back());
  mpz_class bound = 2 * lc * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(n));
  mpz_class pz = bound + 1;
  std::uint64_t P = 0;
  while (true) {
    if (pz >= mpz_class(std::to_string(PrimeField::max_modulus)))
      fail(ErrorKind::too_large, "coefficient bound of " + sq.to_string() + " exceeds the supported prime range");
    mpz_nextprime(pz.get_mpz_t(), pz.get_mpz_t());
    if (pz >= mpz_class(std::to_string(PrimeField::max_modulus))) continue;
    std::uint64_t cand = std::stoull(pz.get_str());
    PrimeField K(cand);
    Poly<PrimeField> fp = detail::zreduce(F, K);
    if (fp.degree() != n) continue;
    if (gcd(fp, fp.derivative()).degree() != 0) continue;
    P = cand;
    break;
  }
  PrimeField K(P);
  std::vector<Poly<PrimeField>> local = irreducible_factors(detail::zreduce(F, K));

  auto lift_symmetric = [&](const Poly<PrimeField>& g) {
    ZPoly z;
    for (int k = 0; k <= g.degree(); ++k) {
      std::uint64_t v = g.coeff(k);
      mpz_class c(std::to_string(v));
      if (v > P / 2) c -= mpz_class(std::to_string(P));
      z.push_back(c);
    }
    detail::ztrim(z);
    return z;
  };

  std::vector<ZPoly> found;
  for (int k = 1; 2 * k <= static_cast<int>(local.size()); ++k) {
    bool restart = true;
    while (restart) {
      restart = false;
      if (2 * k > static_cast<int>(local.size())) break;
      for (const auto& S : detail::subsets_of_size(static_cast<int>(local.size()), k)) {
        Poly<PrimeField> g = Poly<PrimeField>::constant(K, K.from_rational(mpq_class(F.back())));
        for (int idx : S) g = g * local[static_cast<std::size_t>(idx)];
        ZPoly G = lift_symmetric(g);
        mpz_class cont = 0;
        for (const auto& c : G) mpz_gcd(cont.get_mpz_t(), cont.get_mpz_t(), c.get_mpz_t());
        for (auto& c : G) c /= cont;
        ZPoly q;
        if (!detail::zdivide(F, G, q)) continue;
        found.push_back(G);
        F = q;
        std::vector<Poly<PrimeField>> rest;
        for (int i = 0; i < static_cast<int>(local.size()); ++i)
          if (std::find(S.begin(), S.end(), i) == S.end()) rest.push_back(local[static_cast<std::size_t>(i)]);
        local = std::move(rest);
        restart = true;
        break;
      }
    }
  }
  if (F.size() > 1) found.push_back(F);
  for (const auto& z : found) {
    std::vector<mpq_class> c;
    for (const auto& v : z) c.emplace_back(v);
    out.push_back(Poly<RationalField>(Q, c).monic());
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int k = a.degree(); k >= 0; --k)
      if (a.coeff(k) != b.coeff(k)) return a.coeff(k) < b.coeff(k);
    return false;
  });
  return out;
}

template <Field F>
bool is_irreducible(const Poly<F>& f) {
  if (f.degree() < 1) return false;
  if (gcd(f, f.derivative()).degree() > 0) return false;
  return irreducible_factors(f).size() == 1;
}

// Q[x]/(f) after checking that f is irreducible over Q.
inline ExtensionField<RationalField> make_number_field(const Poly<RationalField>& f) {
  if (f.degree() < 2 || !is_irreducible(f))
    fail(ErrorKind::parse, "extension modulus " + f.to_string() + " is not irreducible of degree >= 2");
  return ExtensionField<RationalField>(f);
}

}  // namespace quivkit
