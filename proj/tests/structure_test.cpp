#include <gtest/gtest.h>

#include "leibniz/constructions.hpp"
#include "leibniz/structure.hpp"
#include "support.hpp"

using namespace leibniz;
using namespace leibniz::testing;

TEST(LeibnizKernel, Cases) {
  EXPECT_TRUE(leibniz_kernel(simple_algebra("sl2")).is_zero());
  EXPECT_EQ(leibniz_kernel(square_algebra()), span(2, {{0, 1}}));
  const auto b = counterexample("sl2");
  EXPECT_EQ(leibniz_kernel(b.algebra), b.kernel);
  EXPECT_EQ(b.kernel.dim(), 3u);
}

TEST(DerivedSeriesTest, Cases) {
  const DerivedSeries ab = derived_series(abelian(2), Subspace::full(2));
  ASSERT_EQ(ab.terms.size(), 2u);
  EXPECT_TRUE(ab.terms[1].is_zero());

  const DerivedSeries sl2 = derived_series(simple_algebra("sl2"), Subspace::full(3));
  ASSERT_EQ(sl2.terms.size(), 2u);
  EXPECT_TRUE(sl2.terms[1].is_full());
  EXPECT_FALSE(sl2.reaches_zero());

  const DerivedSeries sq = derived_series(square_algebra(), Subspace::full(2));
  ASSERT_EQ(sq.terms.size(), 3u);
  EXPECT_EQ(sq.terms[1], span(2, {{0, 1}}));
  EXPECT_TRUE(sq.terms[2].is_zero());

  try {
    derived_series(simple_algebra("sl2"), span(3, {{1, 0, 0}, {0, 0, 1}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotASubalgebra);
  }
}

TEST(Solubility, Cases) {
  EXPECT_TRUE(is_soluble(abelian(3), Subspace::full(3)));
  EXPECT_FALSE(is_soluble(simple_algebra("sl2"), Subspace::full(3)));
  const auto b = counterexample("sl2");
  EXPECT_TRUE(is_soluble(b.algebra, b.kernel));
  EXPECT_THROW(is_soluble(simple_algebra("sl2"), span(3, {{1, 0, 0}, {0, 0, 1}})), Error);
}

TEST(KillingForm, Sl2MatchesBruteForceTrace) {
  const BilinearForm k = killing_form(simple_algebra("sl2"));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(k.gram(i, j), sl2_killing_oracle(i, j)) << i << "," << j;
  EXPECT_EQ(k.gram(0, 2), 4);
  EXPECT_EQ(k.gram(1, 1), 8);
  EXPECT_EQ(k.determinant(), -128);
}

TEST(KillingForm, SmallCases) {
  EXPECT_TRUE(killing_form(abelian(3)).gram.is_zero());
  // [x, y] = y: ad x = diag(0, 1), ad y maps x to -y; only tr(ad x ad x) = 1.
  const BilinearForm k = killing_form(two_dim_nonabelian());
  EXPECT_EQ(k.gram, mat({{1, 0}, {0, 0}}));
  // so3: ad x ad x has trace -2.
  EXPECT_EQ(killing_form(simple_algebra("so3")).gram, Scalar(-2) * Matrix::identity(3));
  try {
    killing_form(square_algebra());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotLie);
  }
}

TEST(Radical, Cases) {
  EXPECT_TRUE(soluble_radical(square_algebra()).is_full());
  EXPECT_TRUE(soluble_radical(two_dim_nonabelian()).is_full());
  EXPECT_TRUE(soluble_radical(simple_algebra("sl2")).is_zero());
  const auto b = counterexample("sl2");
  EXPECT_EQ(soluble_radical(b.algebra), b.kernel);
  EXPECT_EQ(soluble_radical(gl2_like()), span(4, {{0, 0, 0, 1}}));
  EXPECT_EQ(soluble_radical(sl2_heisenberg(simple_algebra("sl2"))),
            span(6, {{0, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 0, 1}}));
}

TEST(Semisimple, Cases) {
  EXPECT_TRUE(is_semisimple(simple_algebra("sl2")));
  EXPECT_TRUE(is_semisimple(simple_algebra("sl3")));
  EXPECT_FALSE(is_semisimple(abelian(2)));
  EXPECT_FALSE(is_semisimple(counterexample("sl2").algebra));
  EXPECT_TRUE(is_semisimple(abelian(0)));
}

namespace {

std::vector<LeibnizAlgebra> sample_algebras() {
  const auto sl2 = simple_algebra("sl2");
  return {counterexample("sl2").algebra,
          counterexample("so3").algebra,
          square_algebra(),
          gl2_like(),
          sl2_heisenberg(sl2),
          lie_semidirect(sl2, sl2_natural()),
          split_extension_zero_right(sl2, sl2_natural()),
          two_dim_nonabelian()};
}

}  // namespace

TEST(StructureProperties, KernelIsAbelianAnnihilatingIdeal) {
  for (const auto& alg : sample_algebras()) {
    const Subspace k = leibniz_kernel(alg);
    const Subspace all = Subspace::full(alg.dim());
    EXPECT_TRUE(is_ideal(alg, k));
    EXPECT_TRUE(subspace_product(alg, k, all).is_zero());
    EXPECT_TRUE(subspace_product(alg, k, k).is_zero());
  }
}

TEST(StructureProperties, RandomSquaresLieInKernel) {
  Rng rng(31);
  for (const auto& alg : sample_algebras()) {
    const Subspace k = leibniz_kernel(alg);
    for (int t = 0; t < 100; ++t) {
      const Vector x = rng.vector(alg.dim());
      EXPECT_TRUE(k.contains(product(alg, x, x)));
    }
  }
  const auto b = counterexample("sl2");
  std::vector<Vector> squares;
  for (int t = 0; t < 18; ++t) {
    const Vector x = rng.vector(6);
    squares.push_back(product(b.algebra, x, x));
  }
  EXPECT_EQ(Subspace::span(6, squares), b.kernel);
}

TEST(StructureProperties, RadicalIsMaximalSolubleIdeal) {
  for (const auto& alg : sample_algebras()) {
    const Subspace r = soluble_radical(alg);
    EXPECT_TRUE(r.contains(leibniz_kernel(alg)));
    EXPECT_TRUE(is_ideal(alg, r));
    EXPECT_TRUE(is_soluble(alg, r));
    const Quotient q = quotient(alg, r);
    EXPECT_TRUE(soluble_radical(q.algebra).is_zero());
    if (q.algebra.dim() > 0) EXPECT_TRUE(is_semisimple(q.algebra));
  }
}
