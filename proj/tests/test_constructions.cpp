#include <gtest/gtest.h>

#include <set>

#include "polyunion/constructions.hpp"
#include "polyunion/double_description.hpp"
#include "polyunion/errors.hpp"
#include "polyunion/verify.hpp"
#include "support.hpp"

using namespace polyunion;
using polyunion::testing::box;
using polyunion::testing::points;
using polyunion::testing::q;

namespace {

Integer choose(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

}  // namespace

TEST(MomentCurve, Points) {
  EXPECT_EQ(moment_curve_point(Rat(0), 3), q({0, 0, 0}));
  EXPECT_EQ(moment_curve_point(Rat(2), 3), q({2, 4, 8}));
  EXPECT_EQ(moment_curve_point(Rat(-1), 4), q({-1, 1, -1, 1}));
}

TEST(Cyclic, SmallCases) {
  EXPECT_EQ(cyclic_polytope(2, 4).num_facets(), 4u);
  const Polytope c48 = cyclic_polytope(4, 8);
  EXPECT_EQ(c48.num_facets(), 20u);
  EXPECT_TRUE(is_simplicial(c48));
  EXPECT_THROW(cyclic_polytope(2, 3, std::vector<Rat>{Rat(1), Rat(1), Rat(2)}), InputError);
}

TEST(Cyclic, NeighborlyFaceCounts) {
  // h-faces for h <= d/2 - 1 number C(k, h+1).
  for (auto [d, k] : {std::pair<std::size_t, std::size_t>{4, 7}, {4, 9}, {6, 9}}) {
    const auto f = f_vector(cyclic_polytope(d, k));
    for (std::size_t h = 0; h + 1 <= d / 2; ++h) EXPECT_EQ(Integer(static_cast<unsigned long>(f[h])), choose(k, h + 1));
  }
}

TEST(Polar, DiamondFromSquare) {
  const Polytope sq = make_polytope(points(2, {{-1, -1}, {-1, 1}, {1, -1}, {1, 1}}));
  const Polytope dia = centered_polar(sq);
  EXPECT_EQ(dia.v.points, (std::vector<QVec>{q({-1, 0}), q({0, -1}), q({0, 1}), q({1, 0})}));
  EXPECT_THROW(centered_polar(make_polytope(points(2, {{0, 0}, {1, 1}}))), InputError);
}

TEST(Polar, CyclicPolarsAreSimpleWithRightCounts) {
  const Polytope d24 = polar_cyclic(2, 4);
  EXPECT_EQ(d24.num_facets(), 4u);
  const Polytope d416 = polar_cyclic(4, 16);
  EXPECT_EQ(d416.num_facets(), 16u);
  EXPECT_TRUE(is_simple(d416));
  const auto f = f_vector(d416);
  // (d-h)-faces number C(k, h) for h <= d/2.
  EXPECT_EQ(f[3], 16u);
  EXPECT_EQ(f[2], 120u);
  EXPECT_EQ(f[0], 104u);
}

TEST(Coloring, ClassSizes) {
  const ColoredHRep c2 = color_facets(polar_cyclic(2, 4).h);
  EXPECT_EQ(c2.num_classes(), 1u);
  EXPECT_EQ(c2.rows_of(1).size(), 4u);
  const ColoredHRep c4 = color_facets(polar_cyclic(4, 16).h);
  EXPECT_EQ(c4.num_classes(), 2u);
  EXPECT_EQ(c4.rows_of(2), (std::vector<std::size_t>{8, 9, 10, 11, 12, 13, 14, 15}));
  HRep h36 = polyunion::testing::empty_hrep(6);
  for (int i = 0; i < 36; ++i) h36.add_inequality(moment_curve_point(Rat(i + 1), 6), Rat(1));
  const ColoredHRep c6 = color_facets(h36);
  EXPECT_EQ(c6.num_classes(), 3u);
  EXPECT_EQ(c6.rows_of(3).size(), 12u);
  EXPECT_THROW(color_facets(polar_cyclic(2, 5).h), InputError);
  EXPECT_THROW(color_facets(box(3, 0, 1)), InputError);
}

TEST(AvoidingSubspace, UnitSquareEdges) {
  const Polytope sq = make_polytope(box(2, 0, 1));
  const auto v = lemma4_subspace(sq, 1);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0], q({1, 1}));
  EXPECT_TRUE(lemma4_condition_holds(sq, 1, v));
  EXPECT_FALSE(lemma4_condition_holds(sq, 1, {q({1, 0})}));
  EXPECT_TRUE(lemma4_subspace(sq, 0).empty());
}

TEST(AvoidingSubspace, PolarCyclicD4) {
  const Polytope d = polar_cyclic(4, 16);
  const auto v = lemma4_subspace(d, 2);
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(rank_of_vectors(v, 4), 2u);
  EXPECT_TRUE(lemma4_condition_holds(d, 2, v));
}

TEST(Perturbation, CenteredSimplex) {
  const auto p2 = centered_simplex_in_subspace({q({1, 0}), q({0, 1})});
  EXPECT_EQ(p2.u[0], (QVec{Rat(1, 2), Rat(-1, 2)}));
  EXPECT_EQ(p2.u[1], (QVec{Rat(-1, 2), Rat(1, 2)}));
  const auto p3 = centered_simplex_in_subspace({q({1, 0, 0}), q({0, 1, 0}), q({0, 0, 1})});
  QVec sum = zeros(3);
  for (const QVec& u : p3.u) sum = add(sum, u);
  EXPECT_TRUE(is_zero(sum));
  EXPECT_EQ(p3.u[0], (QVec{Rat(2, 3), Rat(-1, 3), Rat(-1, 3)}));
  EXPECT_EQ(rank_of_vectors({sub(p3.u[1], p3.u[0]), sub(p3.u[2], p3.u[0])}, 3), 2u);
  EXPECT_EQ(p3.nu, (QVec{Rat(1, 3), Rat(1, 3), Rat(1, 3)}));
  EXPECT_THROW(centered_simplex_in_subspace({q({1, 1}), q({2, 2})}), InputError);
}

TEST(Perturbation, ZeroForDimensionTwo) {
  const Polytope d = polar_cyclic(2, 4);
  const ColoredHRep c = color_facets(d.h);
  const PerturbedPolar pq = perturbed_polar(d, c, centered_simplex_in_subspace(lemma4_subspace(d, 1)));
  EXPECT_EQ(pq.Q.v.points, d.v.points);
  EXPECT_EQ(pq.pert.scale_exponent, 0);
}

TEST(Perturbation, DimensionFourKeepsCombinatorics) {
  const Polytope d = polar_cyclic(4, 16);
  const ColoredHRep c = color_facets(d.h);
  const PerturbedPolar pq = perturbed_polar(d, c, centered_simplex_in_subspace(lemma4_subspace(d, 2)));
  std::vector<std::size_t> id(16);
  for (std::size_t i = 0; i < 16; ++i) id[i] = i;
  EXPECT_TRUE(combinatorial_equal(d, pq.Q, id));
  EXPECT_GE(pq.pert.scale_exponent, 0);
}

TEST(Cayley, SmallEmbeddings) {
  const Polytope seg = cayley_embedding(points(1, {{0}}), points(1, {{1}}));
  EXPECT_EQ(seg.v.points, (std::vector<QVec>{q({0, 0}), q({1, 1})}));
  const Polytope quad = cayley_embedding(points(1, {{0}, {1}}), points(1, {{2}, {3}}));
  EXPECT_EQ(quad.num_facets(), 4u);
  EXPECT_EQ(quad.v.points, (std::vector<QVec>{q({0, 0}), q({1, 0}), q({2, 1}), q({3, 1})}));
  EXPECT_THROW(cayley_points(points(1, {{0}}), points(2, {{0, 0}})), InputError);
}

TEST(Cayley, HalfSliceIsMinkowskiMean) {
  const VRep a = points(2, {{0, 0}, {2, 0}, {0, 2}});
  const VRep b = points(2, {{1, 1}, {3, 1}, {3, 3}, {1, 3}});
  const Polytope c = cayley_embedding(a, b);
  const Polytope slice = make_polytope(height_slice(c, Rat(1, 2)));
  EXPECT_TRUE(same_set(slice, minkowski_combination(a, b, Rat(1, 2))));
  EXPECT_TRUE(same_set(make_polytope(height_slice(c, Rat(0))), make_polytope(a)));
}

TEST(Cayley, ConvUnionAgreesWithEmbedding) {
  const Polytope d = polar_cyclic(2, 4);
  VRep lifted0 = d.v;
  VRep lifted1 = d.v;
  for (auto& x : lifted0.points) x.push_back(0);
  for (auto& x : lifted1.points) x.push_back(1);
  lifted0.dim = lifted1.dim = 3;
  EXPECT_EQ(canonical_facets(conv_union(lifted0, lifted1).h), canonical_facets(cayley_embedding(d.v, d.v).h));
}

TEST(Colorful, TupleCounts) {
  EXPECT_EQ(colorful_faces(color_facets(polar_cyclic(2, 4).h)).size(), 4u);
  EXPECT_EQ(colorful_faces(color_facets(polar_cyclic(4, 16).h)).size(), 64u);
  HRep h36 = polyunion::testing::empty_hrep(6);
  for (int i = 0; i < 36; ++i) h36.add_inequality(moment_curve_point(Rat(i + 1), 6), Rat(1));
  const auto t6 = colorful_faces(color_facets(h36));
  EXPECT_EQ(t6.size(), 1728u);
  EXPECT_TRUE(std::is_sorted(t6.begin(), t6.end()));
}

TEST(Certificates, DimensionFourAreDistinctFacets) {
  const Polytope d = polar_cyclic(4, 16);
  const ColoredHRep c = color_facets(d.h);
  const PerturbedPolar pq = perturbed_polar(d, c, centered_simplex_in_subspace(lemma4_subspace(d, 2)));
  const auto certs = certify_all(d, pq.Q, c, pq.pert);
  ASSERT_EQ(certs.size(), 64u);
  std::set<std::pair<IndexSet, IndexSet>> tight;
  std::set<QVec, LexLess> rows;
  for (const CayleyCertificate& cert : certs) {
    tight.emplace(cert.face0, cert.face1);
    auto [r, rhs] = certificate_row(cert);
    r.push_back(rhs);
    rows.insert(to_rational(primitive_integer(r)));
    EXPECT_EQ(face_dimension(d, cert.colorful_indices), 2);
  }
  EXPECT_EQ(tight.size(), 64u);
  EXPECT_EQ(rows.size(), 64u);
}

TEST(Certificates, NonColorfulTupleFails) {
  const Polytope d = polar_cyclic(4, 16);
  const ColoredHRep c = color_facets(d.h);
  const PerturbedPolar pq = perturbed_polar(d, c, centered_simplex_in_subspace(lemma4_subspace(d, 2)));
  EXPECT_THROW(colorful_facet_certificate(d, pq.Q, c, pq.pert, {0, 1}), ConstructionError);
}

TEST(CrossPolytope, Family) {
  const CrossPolytopeFamily f1 = cross_polytope_family(1);
  EXPECT_EQ(f1.Q.v.points, (std::vector<QVec>{q({-1}), q({1})}));
  EXPECT_EQ(f1.P1.v.points, std::vector<QVec>{q({1})});
  EXPECT_EQ(f1.Pm1.v.points, std::vector<QVec>{q({-1})});
  const CrossPolytopeFamily f3 = cross_polytope_family(3);
  EXPECT_EQ(f3.Q.num_facets(), 8u);
  EXPECT_EQ(f3.Q.num_vertices(), 6u);
  EXPECT_EQ(f3.P1_h.A.rows(), 5u);
  EXPECT_EQ(dim(f3.P1_h), 2);
  EXPECT_EQ(canonical_facets(conv_union(f3.P1.v, f3.Pm1.v).h), canonical_facets(f3.Q.h));
  // The closed form agrees with a hull computation.
  EXPECT_EQ(canonical_facets(facet_enumeration(f3.Q.v)), canonical_facets(f3.Q.h));
}

TEST(CrossPolytope, PointFamily) {
  EXPECT_EQ(point_family_S(1, Rat(1)), (std::vector<QVec>{q({2}), q({-2})}));
  const auto s3 = point_family_S(3, Rat(1, 2));
  EXPECT_EQ(s3.size(), 8u);
  for (const QVec& x : s3)
    for (const Rat& v : x) EXPECT_EQ(abs(v), Rat(1, 2));
  EXPECT_EQ(point_family_S(12, Rat(1, 2)).size(), 4096u);
  EXPECT_THROW(point_family_S(21, Rat(1)), InputError);
}

TEST(Homogenization, SegmentAndSquare) {
  const HRep seg = homogenization(points(2, {{0, 1}, {1, 1}}), {Rat(1, 2), Rat(0)});
  EXPECT_EQ(seg.A.rows(), 2u);
  EXPECT_TRUE(seg.contains(q({0, 2})));
  EXPECT_FALSE(seg.contains(q({2, 1})));
  const HRep sq = homogenization(points(3, {{0, 0, 1}, {1, 0, 1}, {0, 1, 1}, {1, 1, 1}}), {Rat(1, 2), Rat(1, 2), Rat(0)});
  EXPECT_EQ(sq.A.rows(), 4u);
  EXPECT_EQ(sq.E.rows(), 0u);
  EXPECT_THROW(homogenization(points(2, {{0, 1}, {1, 1}}), {Rat(5), Rat(1)}), InputError);
  const Polytope t = truncate(sq, q({0, 0, 1}), Rat(0), Rat(2));
  EXPECT_EQ(t.num_vertices(), 5u);
}

TEST(LiftProject, DimensionThree) {
  const LiftProjectInstance inst = lift_project_instance(3);
  EXPECT_EQ(inst.P.num_facets(), 10u);
  EXPECT_TRUE(inst.trichotomy);
  for (const QVec& x : inst.P.v.points)
    for (const Rat& v : x) EXPECT_TRUE(sgn(v) >= 0 && v <= 1);
  const auto [f0, f1] = lift_project_faces(inst);
  EXPECT_TRUE(combinatorial_equal(f0, polar_cyclic(2, 4)));
  EXPECT_TRUE(combinatorial_equal(f1, inst.Q));
  EXPECT_THROW(lift_project_instance(4), InputError);
}

TEST(LiftProject, DimensionFiveFaces) {
  const LiftProjectInstance inst = lift_project_instance(5);
  EXPECT_EQ(inst.P.num_facets(), 34u);
  const auto [f0, f1] = lift_project_faces(inst);
  EXPECT_EQ(f0.num_facets(), 16u);
  EXPECT_EQ(f1.num_facets(), 16u);
}
