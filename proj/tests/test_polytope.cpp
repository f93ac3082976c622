#include <gtest/gtest.h>

#include <random>

#include "polyunion/brute_force.hpp"
#include "polyunion/constructions.hpp"
#include "polyunion/double_description.hpp"
#include "polyunion/errors.hpp"
#include "polyunion/faces.hpp"
#include "polyunion/projection.hpp"
#include "support.hpp"

using namespace polyunion;
using polyunion::testing::box;
using polyunion::testing::empty_hrep;
using polyunion::testing::points;
using polyunion::testing::q;

namespace {

HRep cross_h(std::size_t d) {
  HRep h = empty_hrep(d);
  for (std::size_t s = 0; s < (std::size_t{1} << d); ++s) {
    QVec a(d);
    for (std::size_t i = 0; i < d; ++i) a[i] = (s >> i) & 1 ? -1 : 1;
    h.add_inequality(a, Rat(1));
  }
  return h;
}

}  // namespace

TEST(Conversion, UnitSquareVertices) {
  const VRep v = vertex_enumeration(box(2, 0, 1));
  EXPECT_EQ(v.points, (std::vector<QVec>{q({0, 0}), q({0, 1}), q({1, 0}), q({1, 1})}));
}

TEST(Conversion, CrossPolytopeBothWays) {
  const VRep v = vertex_enumeration(cross_h(3));
  EXPECT_EQ(v.points.size(), 6u);
  for (const QVec& x : v.points) EXPECT_EQ(dot(x, x), 1);
  const HRep h = facet_enumeration(v);
  EXPECT_EQ(h.A.rows(), 8u);
  EXPECT_EQ(h.E.rows(), 0u);
}

TEST(Conversion, PolarQuadrilateralVertices) {
  // Frozen from an exact 2-subset brute force over the four polar rows.
  const Polytope d = polar_cyclic(2, 4);
  EXPECT_EQ(d.v.points, (std::vector<QVec>{q({-5, 1}), {Rat(3, 2), Rat(-1, 2)}, {Rat(7, 2), Rat(-1, 2)}, q({5, -1})}));
}

TEST(Conversion, SinglePointHasOnlyEquations) {
  const HRep h = facet_enumeration(points(3, {{1, 2, 3}}));
  EXPECT_EQ(h.A.rows(), 0u);
  EXPECT_EQ(h.E.rows(), 3u);
  EXPECT_TRUE(h.contains(q({1, 2, 3})));
  EXPECT_FALSE(h.contains(q({1, 2, 4})));
}

TEST(Conversion, CyclicC48HasTwentyFacets) {
  const VRep pts = cyclic_points(4, 8);
  EXPECT_EQ(facet_enumeration(pts).A.rows(), 20u);
  EXPECT_EQ(oracle::facet_enumeration(pts).A.rows(), 20u);
}

TEST(Conversion, ErrorsOnUnboundedAndEmpty) {
  HRep orthant = empty_hrep(2);
  orthant.add_inequality(q({-1, 0}), Rat(0));
  orthant.add_inequality(q({0, -1}), Rat(0));
  EXPECT_THROW(vertex_enumeration(orthant), InputError);
  HRep empty = polyunion::testing::interval(2, 1);
  EXPECT_THROW(vertex_enumeration(empty), InputError);
}

TEST(Conversion, DoubleDescriptionMatchesBruteForce) {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 25; ++t) {
    const std::size_t d = 2 + t % 3;
    VRep v;
    v.dim = d;
    for (std::size_t i = 0; i < d + 4; ++i) v.points.push_back(polyunion::testing::random_vec(d, rng, 6));
    if (affine_dimension(v.points) != static_cast<int>(d)) continue;
    const HRep dd = facet_enumeration(v);
    const HRep bf = oracle::facet_enumeration(v);
    EXPECT_EQ(canonical_facets(dd), canonical_facets(bf));
    EXPECT_EQ(vertex_enumeration(dd).points, oracle::vertex_enumeration(bf).points);
  }
}

TEST(Redundancy, DropsImpliedRowsAndFindsEquations) {
  HRep h = box(2, 0, 1);
  h.add_inequality(q({1, 1}), Rat(5));
  h.add_inequality(q({1, 0}), Rat(1));
  std::vector<std::size_t> kept;
  const HRep r = remove_redundancy(h, &kept);
  EXPECT_EQ(r.A.rows(), 4u);
  EXPECT_EQ(kept.size(), 4u);

  HRep flat = box(2, 0, 1);
  flat.add_inequality(q({0, 1}), Rat(0));
  const HRep f = remove_redundancy(flat);
  EXPECT_EQ(f.E.rows(), 1u);
  EXPECT_EQ(f.A.rows(), 2u);
}

TEST(Polytope, DimensionExamples) {
  EXPECT_EQ(dim(points(2, {{4, 4}})), 0);
  HRep simplex = box(3, 0, 1);
  simplex.add_equation(q({1, 1, 1}), Rat(1));
  EXPECT_EQ(dim(simplex), 2);
  EXPECT_EQ(dim(box(4, 0, 1)), 4);
  EXPECT_EQ(dim(polyunion::testing::interval(1, 0)), -1);
}

TEST(Polytope, IncidenceConsistency) {
  const Polytope p = make_polytope(box(3, 0, 1));
  EXPECT_EQ(p.num_facets(), 6u);
  EXPECT_EQ(p.num_vertices(), 8u);
  for (std::size_t f = 0; f < p.num_facets(); ++f) EXPECT_EQ(p.incidence[f].count(), 4u);
  for (std::size_t v = 0; v < p.num_vertices(); ++v) EXPECT_EQ(p.vertex_facets(v).count(), 3u);
}

TEST(Polytope, CombinatorialEquality) {
  const Polytope sq = make_polytope(box(2, 0, 1));
  EXPECT_TRUE(combinatorial_equal(sq, sq));
  std::vector<std::size_t> id(sq.num_facets());
  for (std::size_t i = 0; i < id.size(); ++i) id[i] = i;
  EXPECT_TRUE(combinatorial_equal(sq, sq, id));
  EXPECT_THROW(combinatorial_equal(sq, sq, std::vector<std::size_t>{0, 0, 1, 2}), InputError);

  // A tilted row cutting one corner gives a pentagon.
  HRep cut = box(2, 0, 1);
  cut.add_inequality(q({1, 1}), Rat(3, 2));
  const Polytope pent = make_polytope(cut);
  EXPECT_EQ(pent.num_facets(), 5u);
  EXPECT_FALSE(combinatorial_equal(sq, pent));
}

TEST(Faces, CubeEdgesAndFVector) {
  const Polytope cube = make_polytope(box(3, 0, 1));
  EXPECT_EQ(faces_of_dim(cube, 1).size(), 12u);
  EXPECT_EQ(f_vector(cube), (std::vector<std::size_t>{8, 12, 6}));
  EXPECT_THROW(faces_of_dim(cube, 4), InputError);
  EXPECT_THROW(faces_of_dim(cube, -2), InputError);
  for (const Face& f : face_lattice(cube)) {
    if (f.dim < 0) continue;
    std::vector<QVec> pts;
    for (std::size_t v = 0; v < cube.num_vertices(); ++v)
      if (f.incident_vertices.test(v)) pts.push_back(cube.v.points[v]);
    EXPECT_EQ(affine_dimension(pts), f.dim);
  }
}

TEST(Faces, CyclicAndPolarCounts) {
  EXPECT_EQ(faces_of_dim(cyclic_polytope(4, 8), 1).size(), 28u);
  EXPECT_EQ(faces_of_dim(polar_cyclic(4, 16), 2).size(), 120u);
}

TEST(Faces, OptimalityCones) {
  const Polytope sq = make_polytope(box(2, 0, 1));
  const Face whole = face_closure(sq, IndexSet(sq.num_vertices()).set());
  EXPECT_EQ(whole.dim, 2);
  EXPECT_EQ(optimality_cone(sq, whole).dim(), 0u);

  const Face right = face_maximizing(sq, q({1, 0}));
  EXPECT_EQ(right.dim, 1);
  const Cone c = optimality_cone_closed(sq, right);
  ASSERT_EQ(c.generators.size(), 1u);
  EXPECT_EQ(c.generators[0], q({1, 0}));

  const Face corner = face_maximizing(sq, q({1, 1}));
  EXPECT_EQ(corner.dim, 0);
  EXPECT_TRUE(in_optimality_cone(sq, corner, q({1, 2})));
  EXPECT_FALSE(in_optimality_cone(sq, corner, q({1, 0})));
  EXPECT_EQ(optimality_cone_closed(sq, corner).dim(), 2u);

  Face none;
  none.incident_vertices = IndexSet(sq.num_vertices());
  none.tight_facets = IndexSet(sq.num_facets()).set();
  EXPECT_THROW(optimality_cone(sq, none), InputError);
}

TEST(Projection, CubeToSquare) {
  const HRep sq = fm_project(box(3, 0, 1), {0, 1});
  EXPECT_EQ(canonical_facets(sq), canonical_facets(box(2, 0, 1)));
}

TEST(Projection, RoutesAgreeOnRandomSystems) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 12; ++t) {
    HRep h = box(4, -3, 3);
    for (int k = 0; k < 4; ++k) h.add_inequality(polyunion::testing::random_vec(4, rng), Rat(2));
    if (is_empty(h) || dim(h) < 4) continue;
    const HRep fm = fm_project(h, {0, 2}, ProjectionRoute::FourierMotzkin);
    const HRep vh = fm_project(h, {0, 2}, ProjectionRoute::VertexHull);
    EXPECT_EQ(canonical_facets(fm), canonical_facets(vh));
    EXPECT_TRUE(fm.irredundant);
  }
}

TEST(Projection, EmptyInputProjectsToEmptySystem) {
  const HRep e = fm_project(polyunion::testing::interval(3, 1), {});
  EXPECT_TRUE(is_empty(e));
  EXPECT_THROW(fm_project(box(2, 0, 1), {2}), InputError);
  EXPECT_THROW(fm_project(box(2, 0, 1), {0, 0}), InputError);
}

TEST(Projection, SingleEliminationStep) {
  // {x <= y, y <= 2, 0 <= x}: eliminating y leaves 0 <= x <= 2.
  HRep h = empty_hrep(2);
  h.add_inequality(q({1, -1}), Rat(0));
  h.add_inequality(q({0, 1}), Rat(2));
  h.add_inequality(q({-1, 0}), Rat(0));
  const HRep e = fm_eliminate(h, 1);
  EXPECT_EQ(e.A.rows(), 2u);
  EXPECT_TRUE(e.contains(q({2, 100})));
  EXPECT_FALSE(e.contains(q({3, 0})));
}
