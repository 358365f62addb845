#include "fanoweb/zlattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace fanoweb;

namespace {

// Cofactor expansion in int64; independent of the Bareiss code.
std::int64_t cofactor_det(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  if (n == 1) return m[0][0];
  std::int64_t s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<std::int64_t>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(row);
    }
    s += (j % 2 ? -1 : 1) * m[0][j] * cofactor_det(minor);
  }
  return s;
}

// Rank as the size of the largest nonvanishing minor.
std::size_t minor_rank(const std::vector<std::vector<std::int64_t>>& m) {
  const std::size_t r = m.size(), c = m.empty() ? 0 : m[0].size();
  std::size_t best = 0;
  for (std::uint32_t rows = 1; rows < (1u << r); ++rows)
    for (std::uint32_t cols = 1; cols < (1u << c); ++cols) {
      std::size_t nr = __builtin_popcount(rows), nc = __builtin_popcount(cols);
      if (nr != nc || nr <= best) continue;
      std::vector<std::vector<std::int64_t>> sub;
      for (std::size_t i = 0; i < r; ++i) {
        if (!(rows >> i & 1)) continue;
        std::vector<std::int64_t> row;
        for (std::size_t j = 0; j < c; ++j)
          if (cols >> j & 1) row.push_back(m[i][j]);
        sub.push_back(row);
      }
      if (cofactor_det(sub) != 0) best = nr;
    }
  return best;
}

IntMatrix to_matrix(const std::vector<std::vector<std::int64_t>>& m) {
  IntMatrix a(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) a(i, j) = m[i][j];
  return a;
}

std::vector<std::vector<std::int64_t>> random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lim) {
  std::uniform_int_distribution<int> d(-lim, lim);
  std::vector<std::vector<std::int64_t>> m(r, std::vector<std::int64_t>(c));
  for (auto& row : m)
    for (auto& x : row) x = d(rng);
  return m;
}

bool is_unimodular(const IntMatrix& u) {
  Integer d = determinant(u);
  return d == 1 || d == -1;
}

}  // namespace

TEST(Vector, ContentAndPrimitivize) {
  EXPECT_EQ(content(LatticeVector{4, -6, 10}), Integer(2));
  auto p = primitivize(LatticeVector{-2, 0, -2});
  EXPECT_EQ(p.w, (LatticeVector{-1, 0, -1}));
  EXPECT_EQ(p.k, Integer(2));
  auto q = primitivize(LatticeVector{-2, 0, -1});
  EXPECT_EQ(q.k, Integer(1));
  EXPECT_THROW(primitivize(LatticeVector::zero(3)), lattice_error);
  EXPECT_TRUE(is_primitive(LatticeVector{3, 5}));
  EXPECT_FALSE(is_primitive(LatticeVector{3, 6}));
}

TEST(Vector, StrAndOrder) {
  EXPECT_EQ((LatticeVector{1, -2}).str(), "(1,-2)");
  EXPECT_LT((LatticeVector{-1, 5}), (LatticeVector{0, -5}));
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937_64 rng(1);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 40; ++t) {
      auto m = random_matrix(rng, n, n, 6);
      EXPECT_EQ(determinant(to_matrix(m)), Integer(cofactor_det(m)));
    }
}

TEST(Hermite, TransformReproducesFormAndFormIsEchelon) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    auto m = random_matrix(rng, r, c, 5);
    if (t % 5 == 0) m.push_back(m[0]);  // force dependence
    IntMatrix a = to_matrix(m);
    HermiteForm h = hermite_normal_form(a);
    EXPECT_EQ(h.transform * a, h.form);
    EXPECT_TRUE(is_unimodular(h.transform));
    EXPECT_EQ(h.rank, minor_rank(m));
    EXPECT_EQ(rank(a), minor_rank(m));
    // echelon with positive pivots and reduced entries above them
    std::size_t last = 0;
    for (std::size_t i = 0; i < h.rank; ++i) {
      std::size_t p = 0;
      while (h.form(i, p).is_zero()) ++p;
      if (i) {
        EXPECT_GT(p, last);
      }
      last = p;
      EXPECT_GT(h.form(i, p).sign(), 0);
      for (std::size_t k = 0; k < i; ++k) {
        EXPECT_GE(h.form(k, p).sign(), 0);
        EXPECT_LT(h.form(k, p), h.form(i, p));
      }
    }
    for (std::size_t i = h.rank; i < h.form.rows(); ++i) EXPECT_TRUE(h.form.row(i).is_zero());
  }
}

TEST(Smith, DiagonalDividesAndTransformsAreUnimodular) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 200; ++t) {
    std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    auto m = random_matrix(rng, r, c, 6);
    IntMatrix a = to_matrix(m);
    SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.left * a * s.right, s.diagonal);
    EXPECT_TRUE(is_unimodular(s.left));
    EXPECT_TRUE(is_unimodular(s.right));
    EXPECT_EQ(s.rank, minor_rank(m));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) {
          EXPECT_TRUE(s.diagonal(i, j).is_zero());
        }
    for (std::size_t i = 0; i + 1 < s.rank; ++i)
      EXPECT_TRUE((s.diagonal(i + 1, i + 1) % s.diagonal(i, i)).is_zero());
  }
}

TEST(Saturation, SpanOfTwoE1IsE1) {
  auto b = saturate_span({LatticeVector{2, 0}});
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0], (LatticeVector{1, 0}));
  EXPECT_THROW(saturate_span({}), lattice_error);
  EXPECT_THROW(saturate_span({LatticeVector{0, 0}}), lattice_error);
}

TEST(Saturation, ContainsEveryIntegerPointOfTheRationalSpan) {
  auto b = saturate_span({LatticeVector{2, 2, 0}, LatticeVector{0, 3, 3}});
  ASSERT_EQ(b.size(), 2u);
  // (1,1,0), (0,1,1) generate the saturation; check both are integer combinations of b
  auto q = quotient_projection(b, 3);
  EXPECT_NO_THROW(q.fiber_coordinates(LatticeVector{1, 1, 0}));
  EXPECT_NO_THROW(q.fiber_coordinates(LatticeVector{0, 1, 1}));
  EXPECT_THROW(q.fiber_coordinates(LatticeVector{1, 0, 0}), lattice_error);
}

TEST(Quotient, ProjectionAlongDiagonal) {
  auto q = quotient_projection({LatticeVector{1, 1}}, 2);
  EXPECT_EQ(q.matrix, (IntMatrix{{1, -1}}));
  EXPECT_TRUE(q.apply(LatticeVector{3, 3}).is_zero());
}

TEST(Quotient, ProjectionAlongE1InThreeSpace) {
  auto q = quotient_projection({LatticeVector{1, 0, 0}}, 3);
  EXPECT_EQ(q.matrix, (IntMatrix{{0, 1, 0}, {0, 0, 1}}));
  EXPECT_EQ(pibar(q, LatticeVector{-1, 0, -1}), (LatticeVector{0, -1}));
  EXPECT_EQ(pibar(q, LatticeVector{-2, 0, -1}), (LatticeVector{0, -1}));
  EXPECT_THROW(pibar(q, LatticeVector{-1, 0, 0}), lattice_error);
}

TEST(Quotient, RejectsNonSaturatedOrDependentFibers) {
  EXPECT_THROW(quotient_projection({LatticeVector{2, 0}}, 2), lattice_error);
  EXPECT_THROW(quotient_projection({LatticeVector{1, 0}, LatticeVector{2, 0}}, 2), lattice_error);
}

// Random saturated sublattices: kernel is the fiber, the map is onto, the section splits it.
TEST(Quotient, SurjectiveWithSectionAndExactKernel) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 100; ++t) {
    std::size_t d = 2 + rng() % 3, k = 1 + rng() % (d - 1);
    UnimodularMap g = random_unimodular(d, rng);
    std::vector<LatticeVector> fiber;
    for (std::size_t i = 0; i < k; ++i) fiber.push_back(g.apply(LatticeVector::unit(d, i)));
    auto q = quotient_projection(fiber, d);
    EXPECT_EQ(q.target_dim(), d - k);
    EXPECT_EQ(q.matrix * q.section, IntMatrix::identity(d - k));
    for (const auto& f : fiber) EXPECT_TRUE(q.apply(f).is_zero());
    for (std::size_t i = k; i < d; ++i) EXPECT_FALSE(q.apply(g.apply(LatticeVector::unit(d, i))).is_zero());
    LatticeVector c(k);
    for (std::size_t i = 0; i < k; ++i) c[i] = static_cast<int>(rng() % 7) - 3;
    EXPECT_EQ(q.fiber_coordinates(q.from_fiber_coordinates(c)), c);
  }
}

TEST(Unimodular, InverseAndComposition) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    std::size_t d = 1 + rng() % 4;
    UnimodularMap g = random_unimodular(d, rng), h = random_unimodular(d, rng);
    EXPECT_TRUE((g * g.inverse()).is_identity());
    EXPECT_EQ((g * h).inverse(), h.inverse() * g.inverse());
    EXPECT_EQ(abs(g.det()), Integer(1));
  }
  EXPECT_THROW(UnimodularMap(IntMatrix{{2, 0}, {0, 1}}), lattice_error);
}
