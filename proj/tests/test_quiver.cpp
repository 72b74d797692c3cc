#include <gtest/gtest.h>

#include "support.hpp"

using namespace qt;

namespace {

std::vector<std::string> arrow_labels(const Quiver& Q) {
  std::vector<std::string> out;
  for (const auto& a : Q.arrows()) out.push_back(a.label);
  return out;
}

Quiver random_quiver(Rng& rng, std::size_t nv, std::size_t na) {
  Quiver Q = a_n_quiver(nv);
  Quiver R(Q.vertices());
  for (std::size_t k = 0; k < na; ++k) R.add_arrow("z" + std::to_string(k), rng.below(nv), rng.below(nv));
  return R;
}

}  // namespace

TEST(Derive, JordanFramed) {
  Quiver F = framed_quiver(jordan_quiver());
  EXPECT_EQ(F.num_vertices(), 2U);
  EXPECT_EQ(arrow_labels(F), (std::vector<std::string>{"B", "d_0"}));
}

TEST(Derive, DoubleOfA1IsA1) {
  Quiver A1 = a_n_quiver(1);
  EXPECT_EQ(double_quiver(A1), A1);
}

TEST(Derive, FramedDoubleOfA1) {
  Quiver Q = framed_double(a_n_quiver(1));
  EXPECT_EQ(Q.num_vertices(), 2U);
  EXPECT_EQ(arrow_labels(Q), (std::vector<std::string>{"d_0", "d_0*"}));
}

TEST(Derive, GfLabelsAndCounts) {
  Quiver G = gf_quiver(a_n_quiver(2), {{"0", 2}}, {{"0", 1}});
  EXPECT_EQ(arrow_labels(G), (std::vector<std::string>{"x0", "a_1@0", "a_2@0", "b_1@0"}));
  EXPECT_THROW(gf_quiver(a_n_quiver(2), {{"7", 1}}, {}), Error);
  EXPECT_THROW(gf_quiver(a_n_quiver(2), {{"0", 0}}, {}), Error);
}

TEST(Derive, CbArrowCounts) {
  Quiver Q = a_n_quiver(2);
  std::map<std::string, std::size_t> w{{"0", 3}, {"1", 2}};
  std::map<std::string, int> p{{"0", 2}, {"1", 1}}, q{{"0", 1}, {"1", 2}};
  Quiver C = cb_quiver(Q, w, p, q);
  EXPECT_EQ(C.vertices().back(), "inf");
  std::size_t inf = C.vertex_index("inf");
  for (std::size_t i = 0; i < 2; ++i) {
    std::size_t to = 0, from = 0;
    for (const auto& a : C.arrows()) {
      to += (a.src == i && a.tgt == inf) ? 1 : 0;
      from += (a.src == inf && a.tgt == i) ? 1 : 0;
    }
    const std::string v = std::to_string(i);
    EXPECT_EQ(to, w[v] * static_cast<std::size_t>(p[v]));
    EXPECT_EQ(from, w[v] * static_cast<std::size_t>(q[v]));
  }
  EXPECT_THROW(cb_quiver(Q, {{"9", 1}}, {}, {}), Error);
}

TEST(Cartan, Examples) {
  EXPECT_EQ(cartan_matrix(jordan_quiver()), M(QQ, {{0}}));
  EXPECT_EQ(cartan_matrix(a_n_quiver(1)), M(QQ, {{2}}));
  EXPECT_EQ(cartan_matrix(a_n_quiver(2)), M(QQ, {{2, -1}, {-1, 2}}));
}

TEST(Cartan, SymmetricWithLoopDiagonal) {
  Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    Quiver Q = random_quiver(rng, 1 + rng.below(4), rng.below(6));
    auto C = cartan_matrix(Q);
    EXPECT_EQ(C, C.transpose());
    for (std::size_t i = 0; i < Q.num_vertices(); ++i) {
      long loops = 0;
      for (const auto& a : Q.arrows()) loops += (a.src == i && a.tgt == i) ? 1 : 0;
      EXPECT_EQ(C.at(i, i), mpq_class(2 - 2 * loops));
    }
    EXPECT_EQ(double_quiver(Q).arrows().size(), 2 * Q.arrows().size());
  }
}

TEST(Roots, A1Box) {
  auto res = roots_and_regularity(a_n_quiver(1), {3}, {{0, 0}}, {1});
  EXPECT_EQ(res.roots, (std::vector<std::vector<long long>>{{1}}));
  EXPECT_TRUE(res.regular);
}

TEST(Roots, JordanIsIrregularAtZero) {
  auto res = roots_and_regularity(jordan_quiver(), {2}, {{0, 0}}, {0});
  EXPECT_EQ(res.roots.size(), 2U);
  EXPECT_FALSE(res.regular);
  EXPECT_TRUE(roots_and_regularity(jordan_quiver(), {2}, {{0, 1}}, {0}).regular);
}

TEST(Roots, BoxEnumerationMatchesBruteForce) {
  Quiver Q = a_n_quiver(3);
  auto res = roots_and_regularity(Q, {2, 2, 2}, {{0, 0}, {0, 0}, {0, 0}}, {1, 1, 1});
  std::size_t count = 0;
  for (long long a = 0; a <= 2; ++a)
    for (long long b = 0; b <= 2; ++b)
      for (long long c = 0; c <= 2; ++c) {
        if (a + b + c == 0) continue;
        long long q = 2 * (a * a + b * b + c * c) - 2 * (a * b + b * c);
        count += q <= 2 ? 1 : 0;
      }
  EXPECT_EQ(res.roots.size(), count);
  EXPECT_TRUE(res.regular);
}

TEST(NakajimaDim, Formulas) {
  for (long long c = 0; c <= 6; ++c)
    for (long long r = 1; r <= 6; ++r) {
      EXPECT_EQ(nakajima_dim(jordan_quiver(), {c}, {r}), 2 * r * c);
      EXPECT_EQ(nakajima_dim(a_n_quiver(1), {c}, {r}), 2 * c * (r - c));
    }
  EXPECT_EQ(nakajima_dim(a_n_quiver(3), {0, 0, 0}, {1, 0, 2}), 0);
  try {
    nakajima_dim(jordan_quiver(), {1}, {0});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::w_zero);
  }
}

TEST(NakajimaDim, PermutationInvariant) {
  Rng rng(4);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 3;
    Quiver Q = random_quiver(rng, n, rng.below(5));
    std::vector<std::size_t> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), std::mt19937_64(t));
    Quiver P(Q.vertices());
    for (const auto& a : Q.arrows()) P.add_arrow(a.label, perm[a.src], perm[a.tgt]);
    std::vector<long long> v(n), w(n), pv(n), pw(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = rng.range(0, 3);
      w[i] = rng.range(1, 3);
      pv[perm[i]] = v[i];
      pw[perm[i]] = w[i];
    }
    EXPECT_EQ(nakajima_dim(Q, v, w), nakajima_dim(P, pv, pw));
  }
}

TEST(MomentRelations, A1) {
  auto rels = moment_relations(a_n_quiver(1));
  ASSERT_EQ(rels.size(), 1U);
  ASSERT_EQ(rels[0].terms.size(), 1U);
  EXPECT_EQ(rels[0].terms[0].path, (std::vector<std::string>{"d_0*", "d_0"}));
}

TEST(MomentRelations, Jordan) {
  auto rels = moment_relations(jordan_quiver());
  ASSERT_EQ(rels.size(), 1U);
  ASSERT_EQ(rels[0].terms.size(), 3U);
  EXPECT_EQ(rels[0].terms[0].coeff, 1);
  EXPECT_EQ(rels[0].terms[0].path, (std::vector<std::string>{"B", "B*"}));
  EXPECT_EQ(rels[0].terms[1].coeff, -1);
  EXPECT_EQ(rels[0].terms[1].path, (std::vector<std::string>{"B*", "B"}));
}

TEST(MomentRelations, A2WithLambda) {
  auto rels = moment_relations(a_n_quiver(2), {mpq_class(1, 2), mpq_class(-3)});
  ASSERT_EQ(rels.size(), 2U);
  for (std::size_t k = 0; k < 2; ++k) {
    EXPECT_EQ(rels[k].src, k);
    EXPECT_EQ(rels[k].tgt, k);
    EXPECT_TRUE(rels[k].terms.back().path.empty());
  }
  EXPECT_EQ(rels[0].terms.back().coeff, mpq_class(-1, 2));
  EXPECT_EQ(rels[1].terms.back().coeff, mpq_class(3));
}

TEST(Relations, PathErrors) {
  Quiver Q = a_n_quiver(3);
  EXPECT_THROW(make_relation(Q, {{1, {"x0", "x1"}}}), Error);  // x1 ends at 2, x0 starts at 0
  EXPECT_THROW(make_relation(Q, {{1, {"nope"}}}), Error);
  EXPECT_NO_THROW(make_relation(Q, {{1, {"x1", "x0"}}}));
}
