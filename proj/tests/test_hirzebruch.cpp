#include <gtest/gtest.h>

#include "support.hpp"

using namespace qt;

namespace {

using Mq = Matrix<RationalField>;

HirzRank1<RationalField> scalars(std::size_t n, long long a1, long long a2, std::vector<long long> cs, long long e) {
  HirzRank1<RationalField> d{n, 1, M(QQ, {{a1}}), M(QQ, {{a2}}), {}, M(QQ, {{e}})};
  for (auto c : cs) d.C.push_back(M(QQ, {{c}}));
  return d;
}

// Search over P^1(F_p) and all nonzero v in F_p^c for a rational violation
// of (P3).
bool rational_violation(const HirzRank1<PrimeField>& d) {
  const PrimeField& K = d.field();
  const std::uint64_t p = K.modulus();
  std::vector<std::pair<std::uint64_t, std::uint64_t>> pts{{0, 1}};
  for (std::uint64_t t = 0; t < p; ++t) pts.emplace_back(1, t);
  auto X = d.C[0] * d.A2, Y = d.C[d.n - 1] * d.A1;
  for (const auto& v : all_matrices(K, d.c, 1)) {
    if (v.is_zero() || !(d.e * v).is_zero()) continue;
    // eigenvalues, if v is an eigenvector
    auto Xv = X * v, Yv = Y * v;
    std::size_t k = 0;
    while (v.at(k, 0) == 0) ++k;
    auto alpha = K.mul(Xv.at(k, 0), K.inv(v.at(k, 0))), beta = K.mul(Yv.at(k, 0), K.inv(v.at(k, 0)));
    if (!(Xv == v.scale(alpha)) || !(Yv == v.scale(beta))) continue;
    for (auto [n1, n2] : pts) {
      if (!((d.A1.scale(n1) + d.A2.scale(n2)) * v).is_zero()) continue;
      auto l1 = n2, l2 = n1;
      auto s = pow(K, l2, d.n);
      if (d.n % 2 == 1) s = K.neg(s);
      if (K.equal(K.mul(s, beta), K.mul(pow(K, l1, d.n), alpha))) return true;
    }
  }
  return false;
}

}  // namespace

TEST(P1, Examples) {
  EXPECT_TRUE(P1_holds(scalars(1, 2, 3, {5}, 1)));
  HirzRank1<RationalField> eq{2, 2, Mq::identity(QQ, 2), Mq::identity(QQ, 2), {M(QQ, {{1, 2}, {3, 4}}), M(QQ, {{1, 2}, {3, 4}})},
                              M(QQ, {{1, 0}})};
  EXPECT_TRUE(P1_holds(eq));
  HirzRank1<RationalField> bad{2, 2, Mq::identity(QQ, 2), Mq(QQ, 2, 2), {Mq::identity(QQ, 2), M(QQ, {{7, 1}, {0, 2}})}, M(QQ, {{1, 0}})};
  auto res = check_P1(bad);
  EXPECT_FALSE(P1_holds(bad));
  EXPECT_EQ(res[0].value, Mq::identity(QQ, 2));
}

TEST(P2, Examples) {
  EXPECT_TRUE(check_P2(scalars(1, 1, 0, {1}, 1)));
  EXPECT_FALSE(check_P2(scalars(1, 0, 0, {1}, 1)));
  HirzRank1<RationalField> diag{1, 2, M(QQ, {{1, 0}, {0, 0}}), M(QQ, {{0, 0}, {0, 1}}), {Mq(QQ, 2, 2)}, M(QQ, {{1, 1}})};
  EXPECT_TRUE(check_P2(diag));
}

TEST(P3, Examples) {
  EXPECT_TRUE(check_P3(scalars(1, 1, -1, {5}, 1)).holds);
  auto fails = check_P3(scalars(1, 1, -1, {5}, 0));
  EXPECT_FALSE(fails.holds);
  EXPECT_EQ(fails.root, "[1:1]");
  HirzRank1<RationalField> two{1, 2, Mq::identity(QQ, 2), M(QQ, {{-1, 0}, {0, -2}}), {Mq::identity(QQ, 2)}, M(QQ, {{1, 1}})};
  EXPECT_TRUE(check_P3(two).holds);
  try {
    check_P3(scalars(1, 0, 0, {1}, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::irregular_pencil);
  }
}

TEST(P3, ScalarCaseMatchesHandSolution) {
  // c = 1, e = 0: the only zero is [nu1:nu2] = [-A2:A1], and v = 1 is always
  // a common eigenvector; (P3) fails iff s C_n A1 = t C_1 A2.
  for (std::size_t n = 1; n <= 3; ++n)
    for (long long a1 = -2; a1 <= 2; ++a1)
      for (long long a2 = -2; a2 <= 2; ++a2) {
        if (a1 == 0 && a2 == 0) continue;
        for (long long c1 = -2; c1 <= 2; ++c1) {
          std::vector<long long> cs(n, 1);
          cs[0] = c1;
          auto d = scalars(n, a1, a2, cs, 0);
          mpq_class l2(static_cast<long>(-a2)), l1(static_cast<long>(a1));  // lambda2 = nu1, lambda1 = nu2
          mpq_class s = 1, t = 1;
          for (std::size_t k = 0; k < n; ++k) {
            s *= l2;
            t *= l1;
          }
          if (n % 2 == 1) s = -s;
          bool violated = s * static_cast<long>(cs[n - 1] * a1) == t * static_cast<long>(c1 * a2);
          EXPECT_EQ(check_P3(d).holds, !violated) << n << " " << a1 << " " << a2 << " " << c1;
        }
      }
}

TEST(P3, RationalViolationsAreDetected) {
  PrimeField K(3);
  Rng rng(19);
  std::size_t seen = 0;
  for (int t = 0; t < 400; ++t) {
    std::size_t n = 1 + rng.below(2), c = 1 + rng.below(2);
    HirzRank1<PrimeField> d{n, c, random_matrix(K, c, c, rng), random_matrix(K, c, c, rng), {}, random_matrix(K, 1, c, rng)};
    for (std::size_t q = 0; q < n; ++q) d.C.push_back(random_matrix(K, c, c, rng));
    if (rng.coin()) d.e = Matrix<PrimeField>(K, 1, c);
    if (!check_P2(d)) continue;
    if (rational_violation(d)) {
      ++seen;
      EXPECT_FALSE(check_P3(d).holds);
    }
    if (c == 1) {
      EXPECT_EQ(check_P3(d).holds, !rational_violation(d));
    }
  }
  EXPECT_GT(seen, 0U);
}

TEST(HirzAction, Examples) {
  auto d = scalars(1, 2, 4, {3}, 6);
  auto same = hirz_action(Mq::identity(QQ, 1), Mq::identity(QQ, 1), d);
  EXPECT_EQ(same.A1, d.A1);
  EXPECT_EQ(same.C[0], d.C[0]);
  auto s = hirz_action(M(QQ, {{2}}), Mq::identity(QQ, 1), d);
  EXPECT_EQ(s.A1, M(QQ, {{1}}));
  EXPECT_EQ(s.A2, M(QQ, {{2}}));
  EXPECT_EQ(s.C[0], M(QQ, {{6}}));
  EXPECT_EQ(s.e, M(QQ, {{3}}));
  try {
    hirz_action(M(QQ, {{0}}), Mq::identity(QQ, 1), d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::singular_group_element);
  }
}

TEST(HirzAction, VerdictsInvariant) {
  PrimeField K(5);
  Rng rng(41);
  for (int t = 0; t < 120; ++t) {
    std::size_t n = 1 + rng.below(3), c = 1 + rng.below(3);
    auto d = rng.coin() ? sample_hirz1(K, n, c, rng)
                        : HirzRank1<PrimeField>{n, c, random_matrix(K, c, c, rng), random_matrix(K, c, c, rng),
                                                std::vector<Matrix<PrimeField>>(n, random_matrix(K, c, c, rng)), random_matrix(K, 1, c, rng)};
    auto g = hirz_action(random_invertible(K, c, rng), random_invertible(K, c, rng), d);
    EXPECT_EQ(P1_holds(g), P1_holds(d));
    EXPECT_EQ(check_P2(g), check_P2(d));
    if (check_P2(d)) {
      EXPECT_EQ(check_P3(g).holds, check_P3(d).holds);
    }
  }
}

TEST(Sample, HirzSatisfiesConditions) {
  Rng rng(6);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t c = 1; c <= 3; ++c) {
      auto d = sample_hirz1(QQ, n, c, rng);
      EXPECT_TRUE(P1_holds(d));
      EXPECT_TRUE(check_P2(d));
      EXPECT_TRUE(check_P3(d).holds);
    }
}

TEST(Chart, LandsInRankOneP2) {
  Rng rng(13);
  std::size_t hits = 0;
  for (int t = 0; t < 40; ++t) {
    auto d = sample_hirz1(QQ, 1 + rng.below(3), 1 + rng.below(3), rng);
    if (!d.A2.is_invertible()) {
      EXPECT_THROW(chart_to_p2(d), Error);
      continue;
    }
    ++hits;
    auto p = chart_to_p2(d);
    EXPECT_TRUE(moment_residual(p).is_zero());
    EXPECT_TRUE(stability_closure(p).stable);
  }
  EXPECT_GT(hits, 0U);
}
