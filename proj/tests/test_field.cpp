#include <gtest/gtest.h>

#include "support.hpp"

using namespace qt;

TEST(Rational, ParseCanonicalizes) {
  EXPECT_EQ(parse_rational("4/6"), mpq_class(2, 3));
  EXPECT_EQ(parse_rational(" -3 "), mpq_class(-3));
  EXPECT_EQ(rational_to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

TEST(PrimeField, RejectsComposites) {
  EXPECT_THROW(PrimeField(1), Error);
  EXPECT_THROW(PrimeField(91), Error);
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(1000000007));
}

TEST(PrimeField, InverseTable) {
  PrimeField K(13);
  for (std::uint64_t a = 1; a < 13; ++a) EXPECT_EQ(K.mul(a, K.inv(a)), 1U);
  EXPECT_EQ(K.from_int(-1), 12U);
  EXPECT_EQ(K.from_rational(mpq_class(1, 2)), 7U);
  EXPECT_THROW(K.from_rational(mpq_class(1, 13)), Error);
}

TEST(PrimeField, IsPrimeMatchesTrialDivision) {
  for (std::uint64_t n = 0; n < 2000; ++n) {
    bool oracle = n >= 2;
    for (std::uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) oracle = false;
    EXPECT_EQ(is_prime(n), oracle) << n;
  }
}

TEST(Poly, DivmodIdentity) {
  auto f = Poly<RationalField>::parse(QQ, "x^4 - 3x^2 + 2x - 7");
  auto g = Poly<RationalField>::parse(QQ, "2x^2 + 1");
  auto [q, r] = f.divmod(g);
  EXPECT_EQ(q * g + r, f);
  EXPECT_LT(r.degree(), g.degree());
}

TEST(Poly, GcdOfProducts) {
  auto a = Poly<RationalField>::parse(QQ, "x - 1");
  auto b = Poly<RationalField>::parse(QQ, "x + 2");
  auto c = Poly<RationalField>::parse(QQ, "x^2 + 1");
  EXPECT_EQ(gcd(a * c, b * c).monic(), c);
}

TEST(Extension, GaussianIntegers) {
  auto L = make_number_field(Poly<RationalField>::parse(QQ, "x^2 + 1"));
  auto i = L.generator();
  EXPECT_TRUE(L.equal(L.mul(i, i), L.from_int(-1)));
  auto z = L.add(L.from_int(3), i);
  EXPECT_TRUE(L.equal(L.mul(z, L.inv(z)), L.one()));
}

TEST(Extension, RejectsReducibleModulus) {
  EXPECT_THROW(make_number_field(Poly<RationalField>::parse(QQ, "x^2 - 1")), Error);
  EXPECT_THROW(make_number_field(Poly<RationalField>::parse(QQ, "x - 1")), Error);
}

namespace {

template <Field F>
Poly<F> product(const std::vector<Poly<F>>& fs, const F& K) {
  Poly<F> p = Poly<F>::constant(K, K.one());
  for (const auto& f : fs) p = p * f;
  return p;
}

}  // namespace

TEST(Factor, RationalFactorsMultiplyBack) {
  for (const char* s : {"x^4 - 1", "x^6 - 1", "x^3 - 2", "x^4 + 4", "6x^3 + 11x^2 + 6x + 1", "x^5 - x^4 - x + 1"}) {
    auto f = Poly<RationalField>::parse(QQ, s);
    auto fs = irreducible_factors(f);
    auto squarefree = (f / gcd(f, f.derivative())).monic();
    EXPECT_EQ(product(fs, QQ), squarefree) << s;
    for (const auto& g : fs) EXPECT_EQ(irreducible_factors(g).size(), 1U) << s;
  }
}

TEST(Factor, KnownSplittings) {
  EXPECT_EQ(irreducible_factors(Poly<RationalField>::parse(QQ, "x^4 + 4")).size(), 2U);  // Sophie Germain
  EXPECT_EQ(irreducible_factors(Poly<RationalField>::parse(QQ, "x^4 + 1")).size(), 1U);
  EXPECT_EQ(irreducible_factors(Poly<RationalField>::parse(QQ, "x^6 - 1")).size(), 4U);
  EXPECT_TRUE(is_irreducible(Poly<RationalField>::parse(QQ, "x^3 - 2")));
}

TEST(Factor, PrimeFieldAgreesWithRootCount) {
  PrimeField K(7);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    std::vector<std::uint64_t> c(6);
    for (auto& x : c) x = rng.below(7);
    c.back() = 1;
    Poly<PrimeField> f(K, c);
    if (gcd(f, f.derivative()).degree() > 0) continue;
    auto fs = irreducible_factors(f);
    EXPECT_EQ(product(fs, K), f);
    std::size_t linear = 0, roots = 0;
    for (const auto& g : fs) linear += g.degree() == 1 ? 1 : 0;
    for (std::uint64_t x = 0; x < 7; ++x) roots += K.is_zero(f.eval(x)) ? 1 : 0;
    EXPECT_EQ(linear, roots);
  }
}

TEST(Rng, DeterministicAndInRange) {
  Rng a(42), b(42);
  for (int k = 0; k < 100; ++k) {
    auto x = a.range(-3, 3);
    EXPECT_EQ(x, b.range(-3, 3));
    EXPECT_GE(x, -3);
    EXPECT_LE(x, 3);
  }
}
