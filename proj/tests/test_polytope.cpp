#include "fanoweb/links.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fanoweb;

namespace {

// Brute-force point-in-polygon by sign of every edge cross product; vertices in CCW order.
bool in_ccw_polygon(const std::vector<LatticeVector>& vs, const LatticeVector& p) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& a = vs[i];
    const auto& b = vs[(i + 1) % vs.size()];
    if (((b[0] - a[0]) * (p[1] - a[1]) - (b[1] - a[1]) * (p[0] - a[0])).sign() < 0) return false;
  }
  return true;
}

std::vector<LatticeVector> random_points(std::mt19937_64& rng, std::size_t d, std::size_t n, int lim) {
  std::uniform_int_distribution<int> u(-lim, lim);
  std::vector<LatticeVector> pts;
  for (std::size_t i = 0; i < n; ++i) {
    LatticeVector p(d);
    for (std::size_t k = 0; k < d; ++k) p[k] = u(rng);
    pts.push_back(p);
  }
  return pts;
}

Polytope P(std::initializer_list<LatticeVector> pts) { return hull(std::vector<LatticeVector>(pts)); }

}  // namespace

TEST(Hull, InteriorPointIsDropped) {
  Polytope T = P({{1, 0}, {0, 1}, {-1, 0}, {-2, -1}});
  EXPECT_EQ(T.vertices().size(), 3u);
  EXPECT_FALSE(T.has_vertex(LatticeVector{-1, 0}));
  EXPECT_TRUE(T.contains(LatticeVector{-1, 0}));
}

TEST(Hull, DegenerateInputReportsAffineDimension) {
  try {
    P({{0, 0}, {1, 1}, {2, 2}});
    FAIL();
  } catch (const degenerate_hull& e) {
    EXPECT_EQ(e.affine_dimension, 1);
  }
}

TEST(Hull, TwoDimensionalMatchesEdgeSignOracle) {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 200; ++t) {
    auto pts = random_points(rng, 2, 3 + rng() % 8, 4);
    if (affine_dimension(pts) != 2) continue;
    Polytope H = hull(pts);
    for (const auto& p : pts) EXPECT_TRUE(in_ccw_polygon(H.vertices(), p));
    for (const auto& q : lattice_points(hull(pts))) EXPECT_TRUE(in_ccw_polygon(H.vertices(), q));
    // every vertex is an input point and not a convex combination of the others
    for (const auto& v : H.vertices()) {
      EXPECT_NE(std::find(pts.begin(), pts.end(), v), pts.end());
      std::vector<LatticeVector> rest;
      for (const auto& p : pts)
        if (!(p == v)) rest.push_back(p);
      if (affine_dimension(rest) == 2) {
        EXPECT_FALSE(hull(rest).contains(v));
      }
    }
  }
}

TEST(Hull, ThreeDimensionalFacetsSupportAllPoints) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    auto pts = random_points(rng, 3, 4 + rng() % 8, 3);
    if (affine_dimension(pts) != 3) continue;
    Polytope H = hull(pts);
    for (const auto& f : H.facets()) {
      std::size_t tight = 0;
      for (const auto& p : pts) {
        EXPECT_GE(f.slack(p).sign(), 0);
        tight += f.slack(p).is_zero();
      }
      EXPECT_GE(tight, 3u);
    }
    for (const auto& v : H.vertices()) {
      std::vector<LatticeVector> rest;
      for (const auto& p : pts)
        if (!(p == v)) rest.push_back(p);
      if (affine_dimension(rest) == 3) {
        EXPECT_FALSE(hull(rest).contains(v));
      }
    }
  }
}

// (-1,0,0) is the midpoint of the edge from (0,0,1) to (-2,0,-1).
TEST(Hull, ExampleFiveVertexPolytopeContainsV4OnAnEdge) {
  Polytope H = P({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {0, 0, 1}, {-2, 0, -1}});
  EXPECT_EQ(H.vertices().size(), 5u);
  EXPECT_TRUE(H.contains(LatticeVector{-1, 0, 0}));
  EXPECT_FALSE(H.contains_strictly(LatticeVector{-1, 0, 0}));
  std::size_t tight = 0;
  for (const auto& f : H.facets()) tight += f.slack(LatticeVector{-1, 0, 0}).is_zero();
  EXPECT_EQ(tight, 2u);
  EXPECT_FALSE(H.contains(LatticeVector{-1, 0, -1}));
}

TEST(Dual, TriangleDual) {
  Polytope T = P({{1, 0}, {0, 1}, {-1, -1}});
  RationalPolytope D = polar_dual(T);
  ASSERT_TRUE(D.is_lattice());
  EXPECT_EQ(D.as_lattice(), P({{-1, -1}, {2, -1}, {-1, 2}}));
}

TEST(Dual, NonReflexiveDualIsRational) {
  Polytope T = P({{1, 0}, {0, 1}, {-3, -1}});  // facet (0,1)-(-3,-1) has level 3
  RationalPolytope D = polar_dual(T);
  EXPECT_FALSE(D.is_lattice());
  EXPECT_EQ(D.denominator(), Integer(3));
}

TEST(Dual, OriginOnBoundaryThrows) {
  EXPECT_THROW(polar_dual(P({{0, 0}, {1, 0}, {0, 1}})), origin_not_interior);
}

TEST(Classify, StandardForms) {
  auto f = classify(nabla(2));
  EXPECT_TRUE(f.fano);
  EXPECT_TRUE(f.canonical);
  EXPECT_FALSE(f.terminal);
  EXPECT_TRUE(f.reflexive);
  EXPECT_TRUE(f.pseudoreflexive);
  EXPECT_TRUE(f.almost_pseudoreflexive);
  for (int m : {0, 1}) EXPECT_TRUE(classify(nabla(m)).terminal);
  EXPECT_TRUE(classify(nabla_inf()).terminal);
  EXPECT_FALSE(classify(nabla(3)).canonical);
}

TEST(Classify, NonFanoHasNoFlags) {
  auto f = classify(P({{2, 0}, {0, 1}, {-1, -1}}));
  EXPECT_FALSE(f.fano);
  EXPECT_FALSE(f.canonical);
  EXPECT_FALSE(f.reflexive);
}

TEST(LatticePoints, BoxOracle) {
  Polytope H = nabla(2);
  auto pts = lattice_points(H);
  std::size_t n = 0;
  for (int x = -3; x <= 3; ++x)
    for (int y = -3; y <= 3; ++y) n += in_ccw_polygon(H.vertices(), LatticeVector{x, y});
  EXPECT_EQ(pts.size(), n);
  EXPECT_EQ(interior_lattice_points(H), std::vector<LatticeVector>{LatticeVector({0, 0})});
  EXPECT_EQ(primitive_points(H).size(), n - 1);
}

TEST(Mavlyutov, FullDimensionalForReflexive) {
  auto m = mavlyutov_dual(nabla(1));
  EXPECT_EQ(m.dimension, 2);
  ASSERT_TRUE(m.polytope.has_value());
  EXPECT_EQ(*m.polytope, polar_dual(nabla(1)).as_lattice());
}

TEST(NormalForm, StandardFormsAreDistinct) {
  std::vector<Polytope> nfs = {normal_form(nabla_inf()), normal_form(nabla(0)), normal_form(nabla(1)),
                               normal_form(nabla(2))};
  for (std::size_t i = 0; i < nfs.size(); ++i)
    for (std::size_t j = i + 1; j < nfs.size(); ++j) EXPECT_FALSE(nfs[i] == nfs[j]);
}

TEST(NormalForm, InvariantUnderRandomUnimodularMaps) {
  std::mt19937_64 rng(12);
  std::vector<Polytope> fixtures = {nabla_inf(), nabla(0), nabla(1), nabla(2), nabla(3),
                                    P({{1, 0, 0}, {0, 1, 0}, {-1, -1, 0}, {-1, 0, 0}, {0, 0, 1}, {-2, 0, -1}})};
  for (const auto& F : fixtures) {
    Polytope nf = normal_form(F);
    for (int t = 0; t < 20; ++t) EXPECT_EQ(normal_form(transform(random_unimodular(F.dim(), rng), F)), nf);
  }
}

TEST(Classes, ParseRoundTrip) {
  for (auto c : {PolytopeClass::none, PolytopeClass::canonical, PolytopeClass::terminal, PolytopeClass::reflexive})
    EXPECT_EQ(parse_class(to_string(c)), c);
  EXPECT_THROW(parse_class("smooth"), std::invalid_argument);
}
