#include <gtest/gtest.h>

#include "leibniz/algebra.hpp"
#include "leibniz/constructions.hpp"
#include "leibniz/structure.hpp"
#include "support.hpp"

using namespace leibniz;
using namespace leibniz::testing;

namespace {

const Vector E = vec({1, 0, 0}), H = vec({0, 1, 0}), F = vec({0, 0, 1});

}  // namespace

TEST(Product, Basics) {
  const LeibnizAlgebra ab = abelian(3);
  EXPECT_TRUE(is_zero(product(ab, vec({1, 2, 3}), vec({-1, 5, 2}))));

  const LeibnizAlgebra sl2 = simple_algebra("sl2");
  EXPECT_EQ(product(sl2, H, E), vec({2, 0, 0}));
  EXPECT_EQ(product(sl2, E, F), H);

  EXPECT_EQ(product(square_algebra(), vec({1, 0}), vec({1, 0})), vec({0, 1}));
  EXPECT_THROW(product(sl2, vec({1, 0}), E), Error);
}

TEST(LeibnizIdentity, LieAndExample) {
  EXPECT_TRUE(check_left_leibniz(simple_algebra("sl2")).ok());
  EXPECT_TRUE(check_left_leibniz(simple_algebra("sl3")).ok());
  EXPECT_TRUE(check_left_leibniz(counterexample("sl2").algebra).ok());
}

TEST(LeibnizIdentity, MutatedSl2IsRejected) {
  StructureTable t = simple_algebra("sl2").table();
  t(1, 0, 0) = 3;  // [h, e] = 3e, but [e, h] still -2e
  // Oracle: evaluate both sides of h(ef) = (he)f + e(hf) by hand.
  // h(ef) = [h, h] = 0; (he)f = 3[e, f] = 3h; e(hf) = -2[e, f] = -2h.
  const auto lhs = Vector(3);
  const auto rhs = vec({0, 1, 0});
  const ViolationReport report = check_left_leibniz(t);
  ASSERT_FALSE(report.ok());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.a == 1 && v.b == 0 && v.c == 2) {
      found = true;
      EXPECT_EQ(v.lhs, lhs);
      EXPECT_EQ(v.rhs, rhs);
    }
  EXPECT_TRUE(found);
  try {
    LeibnizAlgebra({"e", "h", "f"}, t);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LeibnizViolation);
  }
  EXPECT_NO_THROW(LeibnizAlgebra::unchecked({"e", "h", "f"}, t));
}

TEST(IsLie, Cases) {
  EXPECT_TRUE(is_lie(simple_algebra("sl2")));
  EXPECT_FALSE(is_lie(square_algebra()));
  EXPECT_FALSE(is_lie(counterexample("sl2").algebra));
}

TEST(LeftMultiplication, Cases) {
  const LeibnizAlgebra sl2 = simple_algebra("sl2");
  EXPECT_TRUE(left_multiplication(sl2, Vector(3)).is_zero());
  Matrix diag(3, 3);
  diag(0, 0) = 2;
  diag(2, 2) = -2;
  EXPECT_EQ(left_multiplication(sl2, H).matrix(), diag);

  const auto bundle = counterexample("sl2");
  for (const auto& k : bundle.kernel.basis_vectors())
    EXPECT_TRUE(left_multiplication(bundle.algebra, k).is_zero());
}

TEST(SubspaceProduct, Cases) {
  EXPECT_TRUE(subspace_product(abelian(2), Subspace::full(2), Subspace::full(2)).is_zero());
  const LeibnizAlgebra sl2 = simple_algebra("sl2");
  EXPECT_TRUE(subspace_product(sl2, Subspace::full(3), Subspace::full(3)).is_full());
  const auto b = counterexample("sl2");
  EXPECT_TRUE(subspace_product(b.algebra, b.kernel, Subspace::full(6)).is_zero());
}

TEST(Ideals, Cases) {
  const auto b = counterexample("sl2");
  const Subspace zero(6);
  EXPECT_TRUE(is_subalgebra(b.algebra, zero));
  EXPECT_TRUE(is_left_ideal(b.algebra, zero));
  EXPECT_TRUE(is_ideal(b.algebra, zero));
  EXPECT_TRUE(is_subalgebra(b.algebra, b.first_block));
  EXPECT_FALSE(is_ideal(b.algebra, b.first_block));
  EXPECT_TRUE(is_ideal(b.algebra, b.kernel));

  // span{e} is a subalgebra of sl2 but not a left ideal.
  const LeibnizAlgebra sl2 = simple_algebra("sl2");
  EXPECT_TRUE(is_subalgebra(sl2, span(3, {{1, 0, 0}})));
  EXPECT_FALSE(is_left_ideal(sl2, span(3, {{1, 0, 0}})));
  // span{e, h} is a subalgebra, not an ideal.
  EXPECT_TRUE(is_subalgebra(sl2, span(3, {{1, 0, 0}, {0, 1, 0}})));
  EXPECT_FALSE(is_ideal(sl2, span(3, {{1, 0, 0}, {0, 1, 0}})));
}

TEST(QuotientTest, Cases) {
  const LeibnizAlgebra sl2 = simple_algebra("sl2");
  const Quotient same = quotient(sl2, Subspace(3));
  EXPECT_EQ(same.algebra.table(), sl2.table());
  EXPECT_EQ(same.projection * same.section, Matrix::identity(3));

  const auto b = counterexample("sl2");
  const Quotient q = quotient(b.algebra, b.kernel);
  EXPECT_EQ(q.algebra.dim(), 3u);
  EXPECT_TRUE(is_lie(q.algebra));
  EXPECT_EQ(q.algebra.table(), sl2.table());
  EXPECT_EQ(q.projection * q.section, Matrix::identity(3));

  const Quotient small = quotient(square_algebra(), span(2, {{0, 1}}));
  EXPECT_EQ(small.algebra.dim(), 1u);
  EXPECT_TRUE(is_zero(small.algebra.basis_product(0, 0)));

  try {
    quotient(sl2, span(3, {{1, 0, 0}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotAnIdeal);
  }
}

TEST(QuotientTest, NonCoordinateIdeal) {
  // gl2-like in the basis (e, h, f + z, f): the centre is span{v2 - v3}.
  const Matrix p = mat({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 1, 0}});
  const LeibnizAlgebra rotated = change_basis(gl2_like(), p);
  EXPECT_TRUE(check_left_leibniz(rotated).ok());
  EXPECT_TRUE(is_lie(rotated));
  const Subspace centre = span(4, {{0, 0, 1, -1}});
  ASSERT_TRUE(is_ideal(rotated, centre));
  const Quotient q = quotient(rotated, centre);
  EXPECT_EQ(q.algebra.dim(), 3u);
  EXPECT_TRUE(is_semisimple(q.algebra));
  EXPECT_EQ(q.projection * q.section, Matrix::identity(3));
  for (const auto& c : centre.basis_vectors()) EXPECT_TRUE(is_zero(q.projection.apply(c)));
}

TEST(ChangeBasis, SingularRejected) {
  Matrix p(3, 3);
  try {
    change_basis(simple_algebra("sl2"), p);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::Precondition);
  }
}

TEST(Restriction, CoordinatesOfSubalgebra) {
  const LeibnizAlgebra sl2 = simple_algebra("sl2");
  const Restriction r = restrict_to(sl2, span(3, {{1, 0, 0}, {0, 1, 0}}));
  // Basis (e, h): e h = -2e.
  EXPECT_EQ(r.algebra.basis_product(0, 1), vec({-2, 0}));
  EXPECT_THROW(restrict_to(sl2, span(3, {{1, 0, 0}, {0, 0, 1}})), Error);
}

// Properties

TEST(AlgebraProperties, LeftMultiplicationIsDerivation) {
  Rng rng(21);
  for (const auto& alg : {counterexample("sl2").algebra, square_algebra(), sl2_heisenberg(simple_algebra("sl2"))}) {
    const std::size_t n = alg.dim();
    for (int trial = 0; trial < 20; ++trial) {
      const Vector a = rng.vector(n), x = rng.vector(n), y = rng.vector(n);
      const LinearMap d = left_multiplication(alg, a);
      EXPECT_EQ(d(product(alg, x, y)), product(alg, d(x), y) + product(alg, x, d(y)));
    }
  }
}

TEST(AlgebraProperties, MutationSensitivity) {
  Rng rng(22);
  const LeibnizAlgebra sl2 = simple_algebra("sl2");
  int flagged = 0;
  for (int trial = 0; trial < 50; ++trial) {
    StructureTable t = sl2.table();
    const auto i = static_cast<std::size_t>(rng.small_int(0, 2));
    const auto j = static_cast<std::size_t>(rng.small_int(0, 2));
    const auto k = static_cast<std::size_t>(rng.small_int(0, 2));
    t(i, j, k) += rng.small_int(1, 3);
    if (!check_left_leibniz(t).ok()) ++flagged;
  }
  EXPECT_GE(flagged, 1);
}

TEST(AlgebraProperties, QuotientByKernelIsLie) {
  for (const auto& alg : {counterexample("sl2").algebra, counterexample("so3").algebra, square_algebra(),
                          simple_algebra("sl2")}) {
    EXPECT_TRUE(is_lie(quotient(alg, leibniz_kernel(alg)).algebra));
  }
}

TEST(AlgebraProperties, ProductMonotone) {
  Rng rng(23);
  const auto alg = counterexample("sl2").algebra;
  for (int trial = 0; trial < 20; ++trial) {
    const Vector a = rng.vector(6), b = rng.vector(6), c = rng.vector(6);
    const Subspace u = Subspace::span(6, std::vector<Vector>{a});
    const Subspace bigger = Subspace::span(6, std::vector<Vector>{a, b});
    const Subspace v = Subspace::span(6, std::vector<Vector>{c, b});
    EXPECT_TRUE(subspace_product(alg, bigger, v).contains(subspace_product(alg, u, v)));
  }
}

TEST(Digest, StableAndSensitive) {
  const auto a = simple_algebra("sl2");
  EXPECT_EQ(digest(a), digest(simple_algebra("sl2")));
  EXPECT_NE(digest(a), digest(simple_algebra("so3")));
  EXPECT_EQ(digest(a).size(), 16u);
}
