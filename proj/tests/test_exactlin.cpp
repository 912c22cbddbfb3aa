#include <gtest/gtest.h>

#include "support.hpp"

using namespace noriq;
using support::rat;

TEST(Rref, IdentityIsFixed) {
  RrefResult r = rref(RatMatrix::identity(2));
  EXPECT_EQ(r.rref, RatMatrix::identity(2));
  EXPECT_EQ(r.rank, 2u);
}

TEST(Rref, DependentRows) {
  RrefResult r = rref(rat({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.rref, rat({{1, 2}, {0, 0}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivot_cols, std::vector<std::size_t>{0});
}

TEST(Rref, EmptyMatrix) {
  RrefResult r = rref(RatMatrix(0, 0));
  EXPECT_EQ(r.rank, 0u);
  EXPECT_EQ(r.rref.rows(), 0u);
}

TEST(Rref, IdempotentAndMatchesOracle) {
  support::Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + gen::below(rng, 5), c = 1 + gen::below(rng, 5);
    RatMatrix m = support::random_matrix(rng, r, c);
    RrefResult a = rref(m);
    EXPECT_EQ(rref(a.rref).rref, a.rref);
    oracle::Mat o = oracle::from(m);
    oracle::reduce_rows(o, c);
    EXPECT_EQ(a.rref, oracle::to(o, c));
  }
}

TEST(Kernel, Examples) {
  EXPECT_EQ(kernel_basis(RatMatrix::identity(3)).dim(), 0u);
  Subspace k = kernel_basis(rat({{1, 1}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.contains({Rational(1), Rational(-1)}));
  EXPECT_EQ(kernel_basis(RatMatrix(3, 3)), Subspace::full(3));
}

TEST(Kernel, RankNullity) {
  support::Rng rng(12);
  for (int t = 0; t < 60; ++t) {
    std::size_t r = 1 + gen::below(rng, 5), c = 1 + gen::below(rng, 5);
    RatMatrix m = support::random_matrix(rng, r, c);
    Subspace k = kernel_basis(m);
    EXPECT_EQ(k.dim() + rank(m), c);
    EXPECT_TRUE((m * k.basis()).is_zero());
    EXPECT_EQ(rank(m), oracle::rank(oracle::from(m), c));
  }
}

TEST(Image, Examples) {
  EXPECT_EQ(image_basis(RatMatrix::identity(2)), Subspace::full(2));
  Subspace im = image_basis(rat({{1}, {2}}));
  ASSERT_EQ(im.dim(), 1u);
  EXPECT_TRUE(im.contains({Rational(1), Rational(2)}));
  EXPECT_EQ(image_basis(RatMatrix(2, 3)), Subspace::zero(2));
}

TEST(Image, CanonicalFormMatchesOracle) {
  support::Rng rng(13);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + gen::below(rng, 5), c = 1 + gen::below(rng, 4);
    RatMatrix m = support::random_matrix(rng, r, c);
    Subspace im = image_basis(m);
    oracle::Mat want = oracle::canonical_span(oracle::columns_of(m), r);
    oracle::Mat got = oracle::canonical_span(oracle::columns_of(im.basis()), r);
    EXPECT_EQ(got, want);
    EXPECT_EQ(oracle::columns_of(im.basis()), want) << "basis is already canonical";
  }
}

TEST(Intersect, Examples) {
  Subspace full = Subspace::full(3);
  EXPECT_EQ(intersect({full, full}, 3), full);
  Subspace a = image_basis(rat({{1, 0}, {0, 1}, {0, 0}}));
  Subspace b = image_basis(rat({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(intersect({a, b}, 3), image_basis(rat({{0}, {1}, {0}})));
  EXPECT_EQ(intersect({}, 2), Subspace::full(2));
}

TEST(Intersect, CommutativeAndAssociative) {
  support::Rng rng(14);
  for (int t = 0; t < 40; ++t) {
    std::size_t n = 2 + gen::below(rng, 3);
    std::vector<Subspace> s;
    for (int k = 0; k < 3; ++k) s.push_back(image_basis(support::random_matrix(rng, n, 1 + gen::below(rng, n), 1)));
    EXPECT_EQ(intersect({s[0], s[1]}, n), intersect({s[1], s[0]}, n));
    EXPECT_EQ(intersect({intersect({s[0], s[1]}, n), s[2]}, n), intersect({s[0], intersect({s[1], s[2]}, n)}, n));
  }
}

TEST(Kron, Examples) {
  EXPECT_EQ(kron(RatMatrix::identity(2), RatMatrix::identity(3)), RatMatrix::identity(6));
  RatMatrix b = rat({{1, 2}, {3, 4}});
  EXPECT_EQ(kron(rat({{2}}), b), b.scaled(2));
  RatMatrix n = kron(rat({{0, 1}, {0, 0}}), RatMatrix::identity(2));
  EXPECT_EQ(rank(n), 2u);
  EXPECT_TRUE((n * n).is_zero());
}

TEST(Kron, MixedProduct) {
  support::Rng rng(15);
  for (int t = 0; t < 30; ++t) {
    std::size_t p = 1 + gen::below(rng, 3), q = 1 + gen::below(rng, 3), r = 1 + gen::below(rng, 3);
    std::size_t s = 1 + gen::below(rng, 3), u = 1 + gen::below(rng, 3), v = 1 + gen::below(rng, 3);
    RatMatrix a = support::random_matrix(rng, p, q), c = support::random_matrix(rng, q, r);
    RatMatrix b = support::random_matrix(rng, s, u), d = support::random_matrix(rng, u, v);
    EXPECT_EQ(kron(a, b) * kron(c, d), kron(a * c, b * d));
  }
}

TEST(Smith, Examples) {
  SmithForm s = smith_normal_form(IntMatrix{{2, 0}, {0, 3}});
  EXPECT_EQ(s.D, (IntMatrix{{1, 0}, {0, 6}}));
  EXPECT_EQ(smith_normal_form(IntMatrix::identity(3)).D, IntMatrix::identity(3));
  EXPECT_EQ(smith_normal_form(IntMatrix(2, 3)).D, IntMatrix(2, 3));
}

TEST(Smith, DeterminantalDivisors) {
  support::Rng rng(16);
  for (int t = 0; t < 40; ++t) {
    std::size_t r = 1 + gen::below(rng, 4), c = 1 + gen::below(rng, 4);
    IntMatrix m = gen::random_int_matrix(rng, r, c, 4);
    SmithForm s = smith_normal_form(m);
    EXPECT_EQ(s.U * m * s.V, s.D);
    EXPECT_EQ(abs(oracle::det(oracle::from(s.U))), 1);
    EXPECT_EQ(abs(oracle::det(oracle::from(s.V))), 1);
    oracle::Mat om = oracle::from(m);
    oracle::Z prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prod *= oracle::Z(s.D(k - 1, k - 1).get_str());
      EXPECT_EQ(abs(prod), oracle::minor_gcd(om, k)) << m.str() << " k=" << k;
    }
  }
}

TEST(SolveLinearSystem, Examples) {
  EXPECT_EQ(solve_linear_system({2}, {}).size(), 4u);
  RatMatrix n = rat({{0, 1}, {0, 0}});
  EXPECT_EQ(solve_linear_system({2}, {{n, n}}).size(), 2u);
  // Blocks (x, y) with y = x through the identity: A = [[0,0],[I,0]] reads x's image in y's rows.
  RatMatrix link(4, 4);
  link.set_block(2, 0, RatMatrix::identity(2));
  EXPECT_EQ(solve_linear_system({2, 2}, {{link, link}}).size(), 4u);
}

TEST(Inverse, RoundTrip) {
  support::Rng rng(17);
  int tested = 0;
  while (tested < 30) {
    std::size_t n = 1 + gen::below(rng, 4);
    RatMatrix m = support::random_matrix(rng, n, n);
    if (!is_invertible(m)) continue;
    ++tested;
    EXPECT_EQ(m * inverse(m), RatMatrix::identity(n));
    RatMatrix b = support::random_matrix(rng, n, 2);
    EXPECT_EQ(m * solve_exact(m, b), b);
  }
}

TEST(Rational, TextRoundTrip) {
  EXPECT_EQ(to_string(parse_rational("-6/4")), "-3/2");
  EXPECT_EQ(to_string(parse_rational("5")), "5");
  EXPECT_THROW(parse_rational("1/0"), std::exception);
}
