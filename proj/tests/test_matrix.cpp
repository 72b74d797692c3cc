#include <gtest/gtest.h>

#include "support.hpp"

using namespace qt;

namespace {

// Rank by plain elimination on a copy of the entries, without the library's
// RREF or pivot bookkeeping.
std::size_t naive_rank(const PrimeField& K, std::vector<std::vector<std::uint64_t>> a) {
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows == 0 ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t p = rank;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t i = rank + 1; i < rows; ++i) {
      auto factor = K.mul(a[i][c], K.inv(a[rank][c]));
      for (std::size_t j = c; j < cols; ++j) a[i][j] = K.sub(a[i][j], K.mul(factor, a[rank][j]));
    }
    ++rank;
  }
  return rank;
}

Matrix<PrimeField> random_fp(const PrimeField& K, std::size_t r, std::size_t c, Rng& rng) {
  Matrix<PrimeField> m(K, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rng.coin() ? 0 : rng.below(K.modulus()));
  return m;
}

}  // namespace

TEST(Rref, ZeroMatrix) {
  auto res = Matrix<RationalField>(QQ, 3, 3).rref();
  EXPECT_EQ(res.rank, 0U);
  EXPECT_EQ(res.kernel.cols(), 3U);
}

TEST(Rref, Identity) {
  auto res = Matrix<RationalField>::identity(QQ, 3).rref();
  EXPECT_EQ(res.rank, 3U);
  EXPECT_EQ(res.kernel.cols(), 0U);
  EXPECT_EQ(res.pivots, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(Rref, RankOneKernel) {
  auto res = M(QQ, {{1, 2}, {2, 4}}).rref();
  EXPECT_EQ(res.rank, 1U);
  ASSERT_EQ(res.kernel.cols(), 1U);
  // spanned by (-2, 1)
  EXPECT_EQ(res.kernel.at(0, 0) * 1, res.kernel.at(1, 0) * -2);
  EXPECT_EQ(res.R, M(QQ, {{1, 2}, {0, 0}}));
}

TEST(Rref, FieldMismatch) {
  PrimeField K(5), L(7);
  EXPECT_THROW(Matrix<PrimeField>::identity(K, 2) * Matrix<PrimeField>::identity(L, 2), Error);
  try {
    (void)(Matrix<PrimeField>::identity(K, 2) + Matrix<PrimeField>::identity(L, 2));
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::field_mismatch);
  }
}

TEST(Matrix, ShapeErrors) {
  EXPECT_THROW(M(QQ, {{1, 2}}) * M(QQ, {{1, 2}}), Error);
  EXPECT_THROW(Matrix<RationalField>(QQ, 2, 2, {1, 2, 3}), Error);
}

TEST(Matrix, DeterminantMatchesLeibniz) {
  Rng rng(11);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 20; ++t) {
      auto m = random_matrix(QQ, n, n, rng, 4);
      EXPECT_EQ(m.det(), leibniz_det(m));
    }
}

TEST(Matrix, InverseAndSolve) {
  Rng rng(3);
  for (int t = 0; t < 30; ++t) {
    auto m = random_invertible(QQ, 4, rng);
    auto inv = m.inverse();
    ASSERT_TRUE(inv.has_value());
    EXPECT_EQ(m * *inv, Matrix<RationalField>::identity(QQ, 4));
    auto b = random_matrix(QQ, 4, 2, rng);
    auto x = m.solve(b);
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(m * *x, b);
  }
  EXPECT_FALSE(M(QQ, {{1, 2}, {2, 4}}).inverse().has_value());
  EXPECT_FALSE(M(QQ, {{1, 2}, {2, 4}}).solve(M(QQ, {{1}, {0}})).has_value());
}

TEST(Matrix, RankTransposeAndKernelProperty) {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    std::size_t r = 1 + rng.below(5), c = 1 + rng.below(5);
    auto m = random_matrix(QQ, r, c, rng, 2);
    if (rng.coin()) m.set_block(0, 0, m.row(r - 1));  // force some dependence
    auto res = m.rref();
    EXPECT_EQ(res.rank, m.transpose().rank());
    EXPECT_EQ(res.rank + res.kernel.cols(), c);
    EXPECT_TRUE((m * res.kernel).is_zero());
  }
}

TEST(Matrix, PrimeFieldRankMatchesNaiveElimination) {
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 101ULL}) {
    PrimeField K(p);
    Rng rng(p);
    for (int t = 0; t < 60; ++t) {
      std::size_t r = 1 + rng.below(8), c = 1 + rng.below(8);
      auto m = random_fp(K, r, c, rng);
      std::vector<std::vector<std::uint64_t>> raw(r, std::vector<std::uint64_t>(c));
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) raw[i][j] = m.at(i, j);
      auto res = m.rref();
      EXPECT_EQ(res.rank, naive_rank(K, raw));
      EXPECT_TRUE((m * res.kernel).is_zero());
      // the RREF has the same row space: stacking does not raise the rank
      EXPECT_EQ(vstack(m, res.R).rank(), res.rank);
    }
  }
}

TEST(Matrix, SubspaceHelpers) {
  auto U = M(QQ, {{1, 0}, {0, 1}, {0, 0}});
  auto V = M(QQ, {{1}, {1}, {1}});
  auto W = M(QQ, {{1}, {1}, {0}});
  EXPECT_EQ(intersect(U, V).cols(), 0U);
  EXPECT_EQ(intersect(U, W).cols(), 1U);
  EXPECT_TRUE(in_span(U, W));
  EXPECT_FALSE(in_span(U, V));
  auto X = M(QQ, {{0, 1, 0}, {0, 0, 0}, {0, 0, 0}});
  // closure of e2 under the shift hits e1
  EXPECT_EQ(invariant_closure<RationalField>({X}, M(QQ, {{0}, {1}, {0}})).cols(), 2U);
  auto L = left_kernel(M(QQ, {{1}, {2}}));
  EXPECT_TRUE((L * M(QQ, {{1}, {2}})).is_zero());
  EXPECT_EQ(L.rows(), 1U);
}

TEST(Matrix, ExtensionFieldRank) {
  auto L = make_number_field(Poly<RationalField>::parse(QQ, "x^2 + 1"));
  Matrix<ExtensionField<RationalField>> m(L, 2, 2);
  auto i = L.generator();
  // [[1, i], [i, -1]] has rank 1 over Q(i)
  m.set(0, 0, L.one());
  m.set(0, 1, i);
  m.set(1, 0, i);
  m.set(1, 1, L.from_int(-1));
  EXPECT_EQ(m.rank(), 1U);
  EXPECT_TRUE((m * m.kernel()).is_zero());
}
