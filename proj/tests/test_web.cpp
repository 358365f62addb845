#include "fanoweb/web.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

using namespace fanoweb;

namespace {

Polytope hexagon() { return hull({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}}); }

// Independent equivalence test for polygons: a unimodular g sending P to Q
// sends some pair of adjacent vertices of P to a pair of adjacent vertices
// of Q, and two such vectors determine g.
std::vector<LatticeVector> ccw(const Polytope& P) {
  std::vector<LatticeVector> vs = P.vertices();
  std::sort(vs.begin(), vs.end(), [](const LatticeVector& a, const LatticeVector& b) {
    return std::atan2(double(a[1].small_value()), double(a[0].small_value())) < std::atan2(double(b[1].small_value()), double(b[0].small_value()));
  });
  return vs;
}

bool equivalent_oracle(const Polytope& P, const Polytope& Q) {
  auto p = ccw(P), q = ccw(Q);
  if (p.size() != q.size()) return false;
  const std::size_t n = p.size();
  std::set<LatticeVector> target(q.begin(), q.end());
  const Integer a = p[0][0], b = p[1][0], c = p[0][1], d = p[1][1];
  const Integer det = a * d - b * c;
  for (std::size_t j = 0; j < n; ++j)
    for (int dir : {1, -1}) {
      const LatticeVector& w0 = q[j];
      const LatticeVector& w1 = q[(j + n + dir) % n];
      // g [p0 p1] = [w0 w1]  =>  g = [w0 w1] adj([p0 p1]) / det
      Integer g00 = w0[0] * d - w1[0] * c, g01 = -w0[0] * b + w1[0] * a;
      Integer g10 = w0[1] * d - w1[1] * c, g11 = -w0[1] * b + w1[1] * a;
      if (!(g00 % det).is_zero() || !(g01 % det).is_zero() || !(g10 % det).is_zero() || !(g11 % det).is_zero())
        continue;
      g00 = g00 / det, g01 = g01 / det, g10 = g10 / det, g11 = g11 / det;
      Integer dg = g00 * g11 - g01 * g10;
      if (dg != 1 && dg != -1) continue;
      std::set<LatticeVector> image;
      for (const auto& v : p) image.insert(LatticeVector{g00 * v[0] + g01 * v[1], g10 * v[0] + g11 * v[1]});
      if (image == target) return true;
    }
  return false;
}

std::size_t oracle_class_count(const std::vector<Polytope>& ps) {
  std::vector<Polytope> reps;
  for (const auto& P : ps) {
    bool found = false;
    for (const auto& R : reps)
      if (equivalent_oracle(P, R)) {
        found = true;
        break;
      }
    if (!found) reps.push_back(P);
  }
  return reps.size();
}

}  // namespace

TEST(Mmp, StandardPolygonsAreAlreadyMori) {
  for (int i : {-1, 0, 1, 2}) {
    MmpResult r = mmp_reduce(standard_polygon(i), PolytopeClass::canonical);
    EXPECT_EQ(r.chain.size(), 1u);
    EXPECT_TRUE(r.removed.empty());
  }
}

TEST(Mmp, HexagonShrinksToAMoriPolygon) {
  MmpResult r = mmp_reduce(hexagon(), PolytopeClass::terminal);
  ASSERT_GE(r.chain.size(), 2u);
  EXPECT_EQ(r.chain.size(), r.removed.size() + 1);
  EXPECT_TRUE(has_mori_fiber_structure(r.mfp()));
  EXPECT_EQ(r.mfp(), hull({{-1, 0}, {0, -1}, {1, 0}, {1, 1}}));
}

TEST(Mmp, EachStepDropsOnePrimitivePoint) {
  for (const auto& P : enumerate_polygons(2, PolytopeClass::canonical)) {
    MmpResult r = mmp_reduce(P, PolytopeClass::canonical);
    for (std::size_t i = 0; i + 1 < r.chain.size(); ++i) {
      auto a = primitive_points(r.chain[i]), b = primitive_points(r.chain[i + 1]);
      ASSERT_EQ(a.size(), b.size() + 1) << P.str();
      EXPECT_TRUE(std::includes(a.begin(), a.end(), b.begin(), b.end()));
      EXPECT_TRUE(satisfies(r.chain[i + 1], PolytopeClass::canonical));
      EXPECT_FALSE(std::binary_search(b.begin(), b.end(), r.removed[i]));
    }
    FiberedSet end = FiberedSet::of(r.mfp(), r.fiber);
    FiberCheck fc = end.structure();
    ASSERT_TRUE(fc);
    EXPECT_TRUE(fc.structure->mori);
  }
}

TEST(Mmp, RejectsWrongClass) {
  EXPECT_THROW(mmp_reduce(nabla(2), PolytopeClass::terminal), std::invalid_argument);
}

TEST(Words, FactorReproducesTheMap) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    UnimodularMap h = random_unimodular(2, rng);
    EXPECT_EQ(word_map(factor(h)), h) << h.matrix().str();
  }
  EXPECT_TRUE(factor(UnimodularMap::identity(2)).empty());
  EXPECT_EQ(to_string(factor(UnimodularMap(IntMatrix{{2, 3}, {1, 2}}))), "T T S T T");
  EXPECT_EQ(word_map({Generator::S, Generator::S, Generator::S, Generator::S}), UnimodularMap::identity(2));
  EXPECT_EQ(word_map({Generator::U, Generator::U}), UnimodularMap::identity(2));
}

TEST(StandardForms, ImagesOfStandardPolygons) {
  std::mt19937_64 rng(11);
  for (int i : {-1, 0, 1, 2})
    for (int t = 0; t < 5; ++t) {
      UnimodularMap g = random_unimodular(2, rng);
      FiberedSet F = conjugate(g, standard_fibered(i));
      StandardForm sf = to_standard_form(F.polytope(), F.fiber, PolytopeClass::canonical);
      EXPECT_EQ(sf.index, i);
      EXPECT_EQ(conjugate(sf.h, standard_fibered(i)), F);
      EXPECT_EQ(word_map(sf.word), sf.h);
      SequenceReport r = validate_sequence(sf.sequence);
      EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
      if (!sf.sequence.steps.empty()) {
        EXPECT_EQ(sf.sequence.steps.front().left, F);
        EXPECT_EQ(sf.sequence.steps.back().right, standard_fibered(i));
      }
    }
}

TEST(StandardForms, IdentityNeedsNoLinks) {
  StandardForm sf = to_standard_form(nabla(0), pm_e1(), PolytopeClass::terminal);
  EXPECT_EQ(sf.index, 0);
  EXPECT_TRUE(sf.word.empty());
  EXPECT_TRUE(sf.sequence.steps.empty());
}

TEST(StandardForms, RejectsNonMoriAndWrongClass) {
  EXPECT_THROW(to_standard_form(hexagon(), pm_e1(), PolytopeClass::terminal), not_standard);
  EXPECT_THROW(to_standard_form(nabla(2), pm_e1(), PolytopeClass::terminal), not_standard);
}

TEST(BaseSequences, FrozenTableValidates) {
  for (int i : {-1, 0, 1, 2})
    for (Generator X : {Generator::S, Generator::S_inv, Generator::T, Generator::T_inv, Generator::U}) {
      if (i >= 0 && (X == Generator::S || X == Generator::S_inv) && i != 0) continue;
      const LinkSequence& s = base_sequence(X, i);
      EXPECT_TRUE(validate_sequence(s).ok()) << to_string(X) << " " << i;
      FiberedSet from = standard_fibered(i), to = conjugate(generator_map(X), standard_fibered(i));
      if (s.steps.empty()) {
        EXPECT_EQ(from, to);
      } else {
        EXPECT_EQ(s.steps.front().left, from);
        EXPECT_EQ(s.steps.back().right, to);
      }
      for (const auto& l : s.steps)
        for (const FiberedSet* f : l.constituents()) EXPECT_TRUE(satisfies(f->polytope(), standard_class(i)));
    }
}

TEST(Ladder, SequencesArePure) {
  for (int a : {-1, 0, 1, 2})
    for (int b : {-1, 0, 1, 2}) {
      LinkSequence s = ladder(a, b, PolytopeClass::canonical);
      EXPECT_TRUE(validate_sequence(s).ok());
      EXPECT_TRUE(fano_purity_report(s).empty());
      if (a == b) {
        EXPECT_TRUE(s.steps.empty());
      }
    }
  EXPECT_TRUE(validate_sequence(ladder(-1, 0, PolytopeClass::terminal)).ok());
}

TEST(Connect, NablaZeroToNablaTwo) {
  ConnectCertificate c = connect(nabla(0), nabla(2), PolytopeClass::canonical);
  EXPECT_EQ(c.sequence.steps.size(), 2u);
  EXPECT_EQ(c.chain.front(), nabla(0));
  EXPECT_EQ(c.chain.back(), nabla(2));
  CertificateReport r = verify_certificate(c);
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
}

TEST(Connect, TrivialCertificate) {
  ConnectCertificate c = connect(hexagon(), hexagon(), PolytopeClass::terminal);
  EXPECT_EQ(c.chain.size(), 1u);
  EXPECT_TRUE(c.relations.empty());
  EXPECT_TRUE(verify_certificate(c).ok());
}

TEST(Connect, TamperedCertificatesFail) {
  ConnectCertificate c = connect(hexagon(), nabla_inf(), PolytopeClass::terminal);
  ASSERT_TRUE(verify_certificate(c).ok());
  ASSERT_GE(c.chain.size(), 3u);

  ConnectCertificate bad = c;
  bad.chain[1] = nabla(1);
  EXPECT_FALSE(verify_certificate(bad).ok());

  bad = c;
  bad.cls = PolytopeClass::reflexive;
  bad.chain.back() = hull({{2, -1}, {-1, 2}, {-1, -1}});
  EXPECT_FALSE(verify_certificate(bad).ok());

  bad = c;
  bad.relations.pop_back();
  EXPECT_FALSE(verify_certificate(bad).ok());

  bad = c;
  for (auto& r : bad.relations)
    if (r.kind == RelationKind::inclusion) {
      r.kind = RelationKind::reverse_inclusion;
      break;
    }
  EXPECT_FALSE(verify_certificate(bad).ok());
}

TEST(Connect, RandomPairsVerify) {
  auto polys = enumerate_polygons(2, PolytopeClass::canonical);
  std::mt19937_64 rng(5);
  ConnectCache cc;
  VerifyCache vc;
  for (int t = 0; t < 60; ++t) {
    const Polytope& P = polys[rng() % polys.size()];
    const Polytope& Q = polys[rng() % polys.size()];
    ConnectCertificate c = connect(P, Q, PolytopeClass::canonical, &cc);
    EXPECT_EQ(c.chain.front(), P);
    EXPECT_EQ(c.chain.back(), Q);
    EXPECT_TRUE(verify_certificate(c, &vc).ok()) << P.str() << " -> " << Q.str();
    EXPECT_TRUE(verify_certificate(c).ok());
  }
}

TEST(Connect, RejectsClassViolations) {
  EXPECT_THROW(connect(nabla(2), nabla(0), PolytopeClass::terminal), std::invalid_argument);
}

TEST(Bfs, NablaZeroToNablaOne) {
  auto c = bfs_connect(nabla(0), nabla(1), PolytopeClass::canonical, 2);
  ASSERT_TRUE(c);
  EXPECT_EQ(c->sequence.steps.size(), 1u);
  EXPECT_TRUE(verify_certificate(*c).ok());
}

TEST(Bfs, CremonaImageInABox) {
  Polytope S_inf = transform(generator_map(Generator::S), nabla_inf());
  auto c = bfs_connect(nabla_inf(), S_inf, PolytopeClass::terminal, 2);
  ASSERT_TRUE(c);
  EXPECT_LE(c->sequence.steps.size(), 4u);
  EXPECT_TRUE(verify_certificate(*c).ok());
}

TEST(Bfs, NotFoundInATinyBox) {
  EXPECT_FALSE(bfs_connect(nabla(0), nabla(2), PolytopeClass::canonical, 1).has_value());
}

TEST(Enumerate, CountsAgreeWithAnIndependentEquivalenceTest) {
  for (auto cls : {PolytopeClass::terminal, PolytopeClass::reflexive}) {
    auto polys = enumerate_polygons(2, cls);
    FanoEnumeration e = enumerate_fano(2, cls, false);
    EXPECT_EQ(e.polygons, polys.size());
    EXPECT_EQ(e.classes.size(), oracle_class_count(polys)) << to_string(cls);
    std::size_t total = 0;
    for (const auto& k : e.classes) total += k.count;
    EXPECT_EQ(total, e.polygons);
  }
}

TEST(Enumerate, PolygonsAreDistinctAndInTheBox) {
  auto polys = enumerate_polygons(2, PolytopeClass::none);
  std::set<std::vector<LatticeVector>> seen;
  for (const auto& P : polys) {
    EXPECT_TRUE(seen.insert(P.vertices()).second) << P.str();
    EXPECT_TRUE(is_fano(P));
    for (const auto& v : P.vertices()) {
      EXPECT_LE(abs(v[0]), Integer(2));
      EXPECT_LE(abs(v[1]), Integer(2));
    }
  }
}

TEST(Enumerate, TerminalClassesAreTheFiveSmoothOnes) {
  FanoEnumeration e = enumerate_fano(2, PolytopeClass::terminal, false);
  EXPECT_EQ(e.classes.size(), 5u);
}

TEST(Enumerate, ClassChainIsNested) {
  auto t = enumerate_polygons(2, PolytopeClass::terminal);
  auto c = enumerate_polygons(2, PolytopeClass::canonical);
  auto all = enumerate_polygons(2, PolytopeClass::none);
  EXPECT_LE(t.size(), c.size());
  EXPECT_LE(c.size(), all.size());
  for (const auto& P : t) EXPECT_NE(std::find(c.begin(), c.end(), P), c.end());
}

TEST(Purity, CertificateSequencesInTheBoxArePure) {
  auto polys = enumerate_polygons(2, PolytopeClass::terminal);
  for (const auto& P : polys) {
    ConnectCertificate c = connect(P, nabla(0), PolytopeClass::terminal);
    EXPECT_TRUE(fano_purity_report(c.sequence).empty()) << P.str();
  }
}

TEST(Json, CertificateRoundTrip) {
  ConnectCertificate c = connect(hexagon(), nabla_inf(), PolytopeClass::terminal);
  ConnectCertificate back = certificate_from_json(json::parse(to_json(c).dump()));
  EXPECT_EQ(back, c);
  EXPECT_TRUE(verify_certificate(back).ok());
}
