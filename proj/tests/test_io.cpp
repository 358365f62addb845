#include "fanoweb/io.hpp"
#include "fanoweb/bundles.hpp"

#include <gtest/gtest.h>

using namespace fanoweb;

namespace {

template <class T, class F>
T round_trip(const T& x, F from) {
  return from(json::parse(to_json(x).dump()));
}

}  // namespace

TEST(Json, IntegersSwitchToStringsPastSixtyFourBits) {
  Integer big = Integer("123456789012345678901234567890");
  EXPECT_TRUE(to_json(big).is_string());
  EXPECT_TRUE(to_json(Integer(-5)).is_number_integer());
  EXPECT_EQ(round_trip(big, integer_from_json), big);
  EXPECT_EQ(integer_from_json(json("-17")), Integer(-17));
  EXPECT_THROW(integer_from_json(json(1.5)), format_error);
  EXPECT_THROW(integer_from_json(json(true)), format_error);
}

TEST(Json, Vectors) {
  std::vector<LatticeVector> vs = {{1, 0, -3}, {Integer("99999999999999999999"), 2, 1}};
  EXPECT_EQ(round_trip(vs, vectors_from_json), vs);
  EXPECT_THROW(vector_from_json(json("x")), format_error);
}

TEST(Json, Polytopes) {
  for (const auto& P : {nabla_inf(), nabla(2), bundles::polytope("1234567")})
    EXPECT_EQ(round_trip(P, polytope_from_json), P);
  EXPECT_EQ(polytope_from_json(json::parse("[[1,0],[0,1],[-1,-1]]")), nabla_inf());
  EXPECT_EQ(polytope_from_json(json::parse(R"({"dim":2,"points":[[1,0],[0,1],[-1,-1],[0,0]]})")), nabla_inf());
  EXPECT_THROW(polytope_from_json(json::parse(R"({"dim":3,"points":[[1,0]]})")), format_error);
  EXPECT_THROW(polytope_from_json(json::parse(R"({"dim":2})")), format_error);
  EXPECT_THROW(polytope_from_json(json::parse("[]")), format_error);
}

TEST(Json, RationalPolytopesAndDuals) {
  RationalPolytope D = polar_dual(hull({{1, 0}, {0, 1}, {-1, -2}}));
  EXPECT_EQ(round_trip(D, rational_polytope_from_json).vertices(), D.vertices());
  MavlyutovDual m = mavlyutov_dual(nabla(1));
  MavlyutovDual back = round_trip(m, mavlyutov_from_json);
  EXPECT_EQ(back.dimension, m.dimension);
  EXPECT_EQ(back.lattice_points, m.lattice_points);
  EXPECT_EQ(back.polytope.has_value(), m.polytope.has_value());
}

TEST(Json, ClassFlags) {
  ClassFlags c = classify(nabla(2));
  ClassFlags back = round_trip(c, flags_from_json);
  EXPECT_EQ(back.canonical, c.canonical);
  EXPECT_EQ(back.terminal, c.terminal);
  EXPECT_EQ(back.reflexive, c.reflexive);
  EXPECT_EQ(back.almost_pseudoreflexive, c.almost_pseudoreflexive);
}

TEST(Json, PrimGenSetsAreValidated) {
  PrimGenSet A = primitive_set(nabla(1));
  EXPECT_EQ(round_trip(A, pgs_from_json), A);
  EXPECT_THROW(pgs_from_json(json::parse("[[1,0],[0,1]]")), std::exception);
  EXPECT_THROW(pgs_from_json(json::parse(R"({"as":"polytope","dim":2,"points":[[1,0]]})")), format_error);
}

TEST(Json, FiberStructures) {
  for (const auto& f : fiber_structures(bundles::set("1234567"))) {
    FiberStructure back = round_trip(f, fiber_structure_from_json);
    EXPECT_EQ(back.fiber, f.fiber);
    EXPECT_EQ(back.mori, f.mori);
    EXPECT_EQ(back.base, f.base);
  }
  json j = to_json(mori_fiber_structures(nabla(0)).front());
  j["mori"] = false;
  EXPECT_THROW(fiber_structure_from_json(j), format_error);
}

TEST(Json, LinksAndSequences) {
  for (const auto& l : {make_ell_m(1, 1), make_ell_inf(-1), make_ell(1)}) EXPECT_EQ(round_trip(l, link_from_json), l);
  LinkSequence s = bundles::impure_sequence();
  LinkSequence back = round_trip(s, sequence_from_json);
  EXPECT_EQ(back, s);
  EXPECT_TRUE(validate_sequence(back).ok());
  EXPECT_THROW(link_from_json(json::parse(R"({"kind":"II_x","left":{"set":[[1]],"fiber":[]},"right":{"set":[[1]],"fiber":[]}})")),
               std::exception);
}

TEST(Json, FiberedSetRejectsMixedDimensions) {
  EXPECT_THROW(fibered_from_json(json::parse(R"({"set":[[1,0],[1]],"fiber":[]})")), format_error);
}
