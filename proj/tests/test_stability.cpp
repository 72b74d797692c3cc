#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace qt;

namespace {

// q-binomial sum by the recurrence [n,k] = [n-1,k-1] + q^k [n-1,k].
std::uint64_t gaussian_total(std::uint64_t q, std::size_t n) {
  std::vector<std::vector<std::uint64_t>> G(n + 1, std::vector<std::uint64_t>(n + 1, 0));
  for (std::size_t m = 0; m <= n; ++m) {
    G[m][0] = 1;
    for (std::size_t k = 1; k <= m; ++k) {
      std::uint64_t qk = 1;
      for (std::size_t t = 0; t < k; ++t) qk *= q;
      G[m][k] = G[m - 1][k - 1] + qk * (k <= m - 1 ? G[m - 1][k] : 0);
    }
  }
  std::uint64_t s = 0;
  for (std::size_t k = 0; k <= n; ++k) s += G[n][k];
  return s;
}

const std::set<std::string> kFrame{"0'"};

Representation<PrimeField> f12(const PrimeField& K, std::vector<long long> e, std::vector<long long> f) {
  FlagRep<PrimeField> r{1, 2, 2, {1}, Matrix<PrimeField>::from_ints(K, 2, 1, e), {Matrix<PrimeField>::from_ints(K, 1, 2, f)}, {}, {}};
  return to_representation(r);
}

}  // namespace

TEST(Subspaces, CountMatchesGaussianBinomials) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL})
    for (std::size_t n = 0; n <= 4; ++n) {
      if (p == 5 && n == 4) continue;
      PrimeField K(p);
      auto all = enumerate_subspaces(K, n);
      EXPECT_EQ(all.size(), gaussian_total(p, n));
      EXPECT_EQ(count_subspaces(p, n), mpz_class(std::to_string(gaussian_total(p, n))));
      // canonical representatives are pairwise distinct subspaces
      std::set<std::vector<std::uint64_t>> seen;
      for (const auto& s : all) {
        EXPECT_EQ(s.basis.rank(), s.basis.cols());
        seen.insert(s.basis.transpose().rref().R.entries());
      }
      EXPECT_EQ(seen.size(), all.size());
    }
}

TEST(Slope, Examples) {
  EXPECT_EQ(slope({1, 1}, {2, 3}), 1);
  EXPECT_EQ(slope({1, 0}, {1, 1}), mpq_class(1, 2));
  EXPECT_EQ(slope({-1}, {4}), -1);
  try {
    slope({1, 2}, {0, 0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::zero_dim);
  }
}

TEST(Slope, ScalingInvariant) {
  for (unsigned k = 1; k <= 5; ++k) EXPECT_EQ(slope({3, -2, 1}, {1, 2, 3}), slope({3, -2, 1}, {k, 2 * k, 3 * k}));
}

TEST(CheckRelations, Examples) {
  PrimeField K(7);
  auto rep = f12(K, {1, 0}, {0, 5});
  auto [Q, rels] = build_flag_algebra(1, 2);
  auto res = check_relations(rep, rels);
  ASSERT_EQ(res.size(), 1U);
  EXPECT_TRUE(res[0].is_zero());
  EXPECT_FALSE(all_zero(check_relations(f12(K, {1, 0}, {5, 0}), rels)));

  auto zero = Representation<RationalField>::zero(p2_quiver(), QQ, {2, 1});
  EXPECT_TRUE(all_zero(check_relations(zero, moment_relations(jordan_quiver()))));

  AdhmP2<RationalField> d{1, 2, M(QQ, {{0, 1}, {0, 0}}), Matrix<RationalField>(QQ, 2, 2), Matrix<RationalField>(QQ, 2, 1),
                          Matrix<RationalField>(QQ, 1, 2)};
  EXPECT_TRUE(all_zero(check_relations(to_representation(d), moment_relations(jordan_quiver()))));
}

TEST(TranslateCb, RowsAndColumns) {
  PrimeField K(5);
  Rng rng(9);
  auto e = random_matrix(K, 3, 2, rng);
  FlagRep<PrimeField> r{1, 1, 3, {2}, e, {}, {}, {}};
  auto rep = to_representation(r);
  auto cb = translate_cb(rep, kFrame);
  EXPECT_EQ(cb.quiver().vertices(), (std::vector<std::string>{"0", "inf"}));
  for (std::size_t l = 0; l < 3; ++l) EXPECT_EQ(cb.map("j#" + std::to_string(l + 1)), e.row(l));
  auto back = reassemble_cb(cb, rep.quiver(), kFrame, {{"0'", 3}});
  EXPECT_EQ(back, rep);
}

TEST(TranslateCb, ColumnsOfF) {
  PrimeField K(3);
  auto rep = f12(K, {1, 2}, {1, 1});
  auto cb = translate_cb(rep, kFrame);
  EXPECT_EQ(cb.map("i_1#1"), Matrix<PrimeField>::from_ints(K, 1, 1, {1}));
  EXPECT_EQ(cb.map("i_1#2"), Matrix<PrimeField>::from_ints(K, 1, 1, {1}));
  EXPECT_EQ(cb.map("j#2"), Matrix<PrimeField>::from_ints(K, 1, 1, {2}));
}

TEST(TranslateCb, RankOneFramingIsRelabeling) {
  PrimeField K(5);
  AdhmP2<PrimeField> d{1, 1, Matrix<PrimeField>::from_ints(K, 1, 1, {2}), Matrix<PrimeField>::from_ints(K, 1, 1, {3}),
                       Matrix<PrimeField>::from_ints(K, 1, 1, {1}), Matrix<PrimeField>::from_ints(K, 1, 1, {0})};
  auto rep = to_representation(d);
  auto cb = translate_cb(rep, kFrame);
  EXPECT_EQ(cb.dims(), rep.dims());
  for (const auto& a : rep.quiver().arrows()) {
    bool framed = a.label == "d_0" || a.label == "d_0*";
    EXPECT_EQ(cb.map(framed ? a.label + "#1" : a.label), rep.map(a.label));
  }
}

TEST(Framed, F12StableAndUnstable) {
  PrimeField K(3);
  auto crit = standard_criteria<PrimeField>();
  auto stable = f12(K, {1, 0}, {0, 2});
  auto r1 = is_semistable_framed(stable, kFrame, {1}, crit);
  EXPECT_EQ(r1.verdict, Verdict::stable);
  EXPECT_EQ(r1.method, "criterion:flag-theta-plus");
  auto cb = translate_cb(stable, kFrame);
  EXPECT_EQ(brute_force_semistable(cb, extended_theta(cb, {1})).verdict, Verdict::stable);

  auto bad = f12(K, {0, 0}, {1, 2});
  auto r2 = is_semistable_framed(bad, kFrame, {1}, crit);
  EXPECT_EQ(r2.verdict, Verdict::unstable);
  ASSERT_TRUE(r2.witness.has_value());
  EXPECT_EQ(r2.witness->dims(), (std::vector<std::size_t>{1, 0}));
  auto cbad = translate_cb(bad, kFrame);
  auto brute = brute_force_semistable(cbad, extended_theta(cbad, {1}));
  EXPECT_EQ(brute.verdict, Verdict::unstable);
  EXPECT_EQ(brute.witness->dims(), (std::vector<std::size_t>{1, 0}));
}

TEST(Framed, ZeroDimensionalIsStable) {
  PrimeField K(2);
  auto rep = Representation<PrimeField>::zero(a_n_quiver(1), K, {0});
  EXPECT_EQ(brute_force_semistable(rep, {1}).verdict, Verdict::stable);
}

TEST(Framed, RationalWithoutCriterionNeedsFiniteField) {
  auto rep = Representation<RationalField>::zero(framed_quiver(a_n_quiver(2)), QQ, {1, 1, 1, 1});
  try {
    is_semistable_framed(rep, {"0'", "1'"}, {1, 1}, standard_criteria<RationalField>());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::needs_finite_field);
  }
}

TEST(Brute, SingleVertexNoArrows) {
  PrimeField K(3);
  auto rep = Representation<PrimeField>::zero(a_n_quiver(1), K, {1});
  EXPECT_NE(brute_force_semistable(rep, {1}).verdict, Verdict::unstable);
}

TEST(Brute, JordanFramedDoubleWitnessIsClosure) {
  PrimeField K(2);
  // B1 = B2 = 0, i = e1: closure of Im i is span(e1)
  AdhmP2<PrimeField> d{1, 2, Matrix<PrimeField>(K, 2, 2), Matrix<PrimeField>(K, 2, 2), Matrix<PrimeField>::from_ints(K, 2, 1, {1, 0}),
                       Matrix<PrimeField>(K, 1, 2)};
  auto cb = translate_cb(to_representation(d), kFrame);
  auto res = brute_force_semistable(cb, extended_theta(cb, {-1}));
  EXPECT_EQ(res.verdict, Verdict::unstable);
  ASSERT_TRUE(res.witness.has_value());
  EXPECT_EQ(res.witness->basis[0], stability_closure(d).closure);
  EXPECT_EQ(res.witness->dims(), (std::vector<std::size_t>{1, 1}));
}

TEST(Brute, TooLarge) {
  PrimeField K(3);
  auto rep = Representation<PrimeField>::zero(a_n_quiver(2), K, {8, 8});
  try {
    brute_force_semistable(rep, {1, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::too_large);
  }
}

// Criterion against enumeration on random P^2 data over small fields, for
// both signs of theta.
TEST(OracleEquivalence, P2Closure) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    PrimeField K(p);
    Rng rng(p * 101);
    auto crit = standard_criteria<PrimeField>();
    for (int t = 0; t < 500; ++t) {
      std::size_t c = 1 + rng.below(2), r = 1 + rng.below(2);
      AdhmP2<PrimeField> d{r, c, random_matrix(K, c, c, rng), random_matrix(K, c, c, rng), random_matrix(K, c, r, rng),
                           random_matrix(K, r, c, rng)};
      if (rng.coin()) d.i = Matrix<PrimeField>(K, c, r);
      auto rep = to_representation(d);
      mpq_class th = rng.coin() ? -1 : 1;
      auto fast = is_semistable_framed(rep, kFrame, {th}, crit);
      auto cb = translate_cb(rep, kFrame);
      auto slow = brute_force_semistable(cb, extended_theta(cb, {th}));
      ASSERT_EQ(fast.verdict, slow.verdict) << "p=" << p << " t=" << t;
      EXPECT_EQ(slow.verdict, brute_force_gf_side(rep, kFrame, {th}).verdict);
    }
  }
}

TEST(OracleEquivalence, FlagThetaPlus) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL}) {
    PrimeField K(p);
    Rng rng(p * 7);
    auto crit = standard_criteria<PrimeField>();
    for (int t = 0; t < 500; ++t) {
      std::size_t d = 1 + rng.below(2), u = d + 1 + rng.below(2);
      std::vector<std::size_t> v{u - 1};
      if (d == 2) v.push_back(1);
      FlagRep<PrimeField> r = sample_flag(K, d, 1 + rng.below(2), u, v, rng);
      // degrade half of the samples so unstable cases occur
      if (rng.coin()) r.e = r.e * Matrix<PrimeField>::scalar(K, v[0], 0);
      if (d == 2 && rng.coin()) {
        r.A[0] = Matrix<PrimeField>(K, v[0], v[1]);
        for (auto& b : r.B[0]) b = random_matrix(K, v[1], v[0], rng);
        for (auto& f : r.f) f = f * Matrix<PrimeField>::scalar(K, u, 0);
      }
      if (!all_zero(check_flag_relations(r))) continue;
      auto rep = to_representation(r);
      std::vector<mpq_class> theta(d);
      for (auto& x : theta) x = 1 + static_cast<long>(rng.below(3));
      auto fast = is_semistable_framed(rep, kFrame, theta, crit);
      EXPECT_EQ(fast.method, "criterion:flag-theta-plus");
      auto cb = translate_cb(rep, kFrame);
      auto slow = brute_force_semistable(cb, extended_theta(cb, theta));
      ASSERT_EQ(fast.verdict, slow.verdict) << "p=" << p << " t=" << t;
    }
  }
}

TEST(Invariance, ThetaShiftKeepsVerdict) {
  PrimeField K(2);
  Rng rng(77);
  for (int t = 0; t < 200; ++t) {
    Quiver Q = a_n_quiver(2);
    std::vector<std::size_t> dims{1 + rng.below(2), 1 + rng.below(2)};
    Representation<PrimeField> rep(Q, K, dims, {random_matrix(K, dims[1], dims[0], rng)});
    std::vector<mpq_class> th{mpq_class(long(rng.range(-2, 2))), mpq_class(long(rng.range(-2, 2)))};
    mpq_class s(long(rng.range(-3, 3)));
    EXPECT_EQ(brute_force_semistable(rep, th).verdict, brute_force_semistable(rep, {th[0] + s, th[1] + s}).verdict);
  }
}

TEST(Invariance, TranslationPreservesVerdict) {
  PrimeField K(2);
  Rng rng(5);
  for (int t = 0; t < 200; ++t) {
    std::size_t c = 1 + rng.below(2), r = 1 + rng.below(2);
    AdhmP2<PrimeField> d{r, c, random_matrix(K, c, c, rng), random_matrix(K, c, c, rng), random_matrix(K, c, r, rng),
                         random_matrix(K, r, c, rng)};
    auto rep = to_representation(d);
    std::vector<mpq_class> th{rng.coin() ? mpq_class(-1) : mpq_class(2)};
    auto cb = translate_cb(rep, kFrame);
    EXPECT_EQ(brute_force_semistable(cb, extended_theta(cb, th)).verdict, brute_force_gf_side(rep, kFrame, th).verdict);
  }
}
