#include <gtest/gtest.h>

#include <random>

#include "polyunion/brute_force.hpp"
#include "polyunion/errors.hpp"
#include "polyunion/lp.hpp"
#include "polyunion/matrix.hpp"
#include "polyunion/rational.hpp"
#include "support.hpp"

using namespace polyunion;
using polyunion::testing::q;

TEST(Rational, ParsesCanonicalLiterals) {
  EXPECT_EQ(*parse_rat("3/4"), Rat(3, 4));
  EXPECT_EQ(*parse_rat("-7"), Rat(-7));
  EXPECT_EQ(*parse_rat("0"), Rat(0));
  EXPECT_FALSE(parse_rat("2/4"));
  EXPECT_FALSE(parse_rat("1/-2"));
  EXPECT_FALSE(parse_rat("3/1"));
  EXPECT_FALSE(parse_rat("+1"));
  EXPECT_FALSE(parse_rat("1.5"));
  EXPECT_FALSE(parse_rat(""));
  EXPECT_THROW(parse_rat_or_throw("x"), InputError);
}

TEST(Rational, PrintsCanonicalForm) {
  EXPECT_EQ(to_string(make_rat(6, 4)), "3/2");
  EXPECT_EQ(to_string(make_rat(-4, 2)), "-2");
  for (const char* s : {"0", "-1/3", "12345678901234567890123456789/64"})
    EXPECT_EQ(to_string(parse_rat_or_throw(s)), s);
}

TEST(Rational, FieldAxiomsOnRandomTriples) {
  std::mt19937_64 rng(11);
  auto draw = [&] { return make_rat(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1); };
  for (int i = 0; i < 500; ++i) {
    const Rat a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a + b) - b, a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    if (sgn(a) != 0) EXPECT_EQ(a * (1 / a), Rat(1));
  }
}

TEST(Rational, PrimitiveIntegerScaling) {
  const IVec p = primitive_integer(QVec{Rat(1, 2), Rat(-3, 4), Rat(0)});
  EXPECT_EQ(p, (IVec{2, -3, 0}));
  EXPECT_EQ(primitive_integer(QVec{Rat(6), Rat(9)}), (IVec{2, 3}));
}

TEST(Matrix, KernelBasisExamples) {
  EXPECT_TRUE(kernel_basis(QMat::identity(3)).empty());
  EXPECT_EQ(kernel_basis(QMat(2, 3)).size(), 3u);
  const auto k = kernel_basis(QMat::from_rows({q({1, 1})}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0][0], -k[0][1]);
  EXPECT_NE(k[0][0], 0);
}

TEST(Matrix, RankExamples) {
  EXPECT_EQ(rank(QMat::identity(4)), 4u);
  EXPECT_EQ(rank(QMat::from_rows({q({1, 2}), q({1, 2})})), 1u);
  // Vandermonde rows (t, t^2, t^3), t = 1, 2, 3: determinant 12.
  const QMat v = QMat::from_rows({q({1, 1, 1}), q({2, 4, 8}), q({3, 9, 27})});
  EXPECT_EQ(rank(v), 3u);
}

TEST(Matrix, RankPlusNullityIsColumnCount) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 5;
    QMat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = Rat(static_cast<long>(rng() % 5) - 2);
    const auto ker = kernel_basis(m);
    EXPECT_EQ(rank(m) + ker.size(), c);
    for (const QVec& z : ker) EXPECT_TRUE(is_zero(multiply(m, z)));
  }
}

TEST(Matrix, SolveSquareAndAffineDimension) {
  const QMat m = QMat::from_rows({q({2, 1}), q({1, 3})});
  const auto x = solve_square(m, q({3, 5}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, (QVec{Rat(4, 5), Rat(7, 5)}));
  EXPECT_FALSE(solve_square(QMat::from_rows({q({1, 2}), q({2, 4})}), q({1, 1})));
  EXPECT_EQ(affine_dimension({q({1, 1})}), 0);
  EXPECT_EQ(affine_dimension({q({0, 0}), q({1, 1}), q({2, 2})}), 1);
  EXPECT_EQ(affine_dimension({}), -1);
}

TEST(Lp, CrossPolytopeMaximum) {
  // Q_3: the eight sign inequalities.
  QMat A(0, 3);
  QVec b;
  for (int s = 0; s < 8; ++s) {
    A.append_row(QVec{Rat(s & 1 ? -1 : 1), Rat(s & 2 ? -1 : 1), Rat(s & 4 ? -1 : 1)});
    b.push_back(1);
  }
  const LpResult r = lp_solve(A, b, q({1, 1, 1}));
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(*r.value, 1);
  const QVec& x = *r.point;
  const bool unit = x == q({1, 0, 0}) || x == q({0, 1, 0}) || x == q({0, 0, 1});
  EXPECT_TRUE(unit);
  EXPECT_TRUE(verify_dual_certificate(A, b, q({1, 1, 1}), r.dual, *r.value));
  EXPECT_EQ(lp_solve(A, b, q({1, 1, 1})).point, r.point);
}

TEST(Lp, ZeroObjectiveAndInfeasible) {
  const QMat A = QMat::from_rows({q({1}), q({-1})});
  const LpResult z = lp_solve(A, q({1, 0}), q({0}));
  ASSERT_EQ(z.status, LpStatus::Optimal);
  EXPECT_EQ(*z.value, 0);
  EXPECT_EQ(lp_solve(A, q({1, -2}), q({1})).status, LpStatus::Infeasible);
}

TEST(Lp, Unbounded) {
  const QMat A = QMat::from_rows({q({-1, 0}), q({0, -1})});
  EXPECT_EQ(lp_solve(A, q({0, 0}), q({1, 1})).status, LpStatus::Unbounded);
  EXPECT_EQ(lp_solve(A, q({0, 0}), q({1, 1}), Sense::Minimize).status, LpStatus::Optimal);
}

TEST(Lp, DimensionMismatchIsInputError) {
  EXPECT_THROW(lp_solve(QMat::identity(2), q({1}), q({1, 1})), InputError);
  EXPECT_THROW(lp_solve(QMat::identity(2), q({1, 1}), q({1})), InputError);
}

TEST(Lp, AgreesWithVertexMaximumOnRandomPolytopes) {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    const std::size_t d = 2 + t % 2;
    HRep h = polyunion::testing::box(d, -4, 4);
    for (int extra = 0; extra < 4; ++extra) {
      QVec a = polyunion::testing::random_vec(d, rng);
      if (is_zero(a)) continue;
      h.add_inequality(a, Rat(static_cast<long>(rng() % 6) + 1));
    }
    const VRep v = oracle::vertex_enumeration(h);
    for (int k = 0; k < 5; ++k) {
      const QVec c = polyunion::testing::random_vec(d, rng);
      Rat best = dot(c, v.points.at(0));
      for (const QVec& x : v.points) best = std::max(best, dot(c, x));
      const LpResult r = lp_solve(h.A, h.b, c);
      ASSERT_EQ(r.status, LpStatus::Optimal);
      EXPECT_EQ(*r.value, best);
      EXPECT_TRUE(h.contains(*r.point));
      EXPECT_EQ(dot(c, *r.point), best);
      EXPECT_TRUE(verify_dual_certificate(h.A, h.b, c, r.dual, *r.value));
      ++checked;
    }
  }
  EXPECT_EQ(checked, 200);
}

TEST(Lp, ConvexHullMembership) {
  const std::vector<QVec> tri = {q({0, 0}), q({2, 0}), q({0, 2})};
  EXPECT_TRUE(in_convex_hull(tri, q({1, 1})));
  EXPECT_TRUE(in_convex_hull(tri, q({0, 0})));
  EXPECT_FALSE(in_convex_hull(tri, q({2, 1})));
}
