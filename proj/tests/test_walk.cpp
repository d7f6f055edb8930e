#include <gtest/gtest.h>

#include <stdexcept>

#include "qwalk/exact.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/walk.hpp"

using namespace qwalk;

namespace {

// Independent construction: e, Qe, Q^2 e, ... from explicit matrix powers.
IntMatrix walk_by_powers(const IntMatrix& m) {
  const std::size_t n = m.rows();
  IntMatrix w(n, n);
  IntMatrix power = IntMatrix::identity(n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = power * IntMatrix::ones(n);
    for (std::size_t i = 0; i < n; ++i) w(i, j) = col(i, 0);
    power = power * m;
  }
  return w;
}

const IntMatrix kFixtureWq10 = IntMatrix::from_rows({
    {1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620},
    {1, 4, 14, 50, 182, 672, 2508, 9438, 35750, 136134},
    {1, 4, 16, 62, 238, 912, 3498, 13442, 51764, 199746},
    {1, 4, 16, 64, 254, 1002, 3938, 15442, 60468, 236568},
    {1, 4, 16, 64, 256, 1002, 4068, 16142, 63868, 252072},
    {1, 4, 16, 64, 256, 1002, 4068, 16142, 63868, 252072},
    {1, 4, 16, 64, 254, 1002, 3938, 15442, 60468, 236568},
    {1, 4, 16, 62, 238, 912, 3498, 13442, 51764, 199746},
    {1, 4, 14, 50, 182, 672, 2508, 9438, 35750, 136134},
    {1, 2, 6, 20, 70, 252, 924, 3432, 12870, 48620},
});

}  // namespace

TEST(WalkMatrix, QWalkA3) {
  const auto w = q_walk_matrix(dynkin_a(3));
  EXPECT_EQ(w.matrix, IntMatrix::from_rows({{1, 2, 6}, {1, 4, 12}, {1, 2, 6}}));
  EXPECT_EQ(w.base, signless_laplacian(dynkin_a(3)));
  EXPECT_EQ(w.columns(), 3u);
  EXPECT_EQ(reduced_q_walk_matrix(3), IntMatrix::from_rows({{1, 2}, {1, 4}}));
}

TEST(WalkMatrix, AWalkA3) {
  EXPECT_EQ(a_walk_matrix(dynkin_a(3)).matrix,
            IntMatrix::from_rows({{1, 1, 2}, {1, 2, 2}, {1, 1, 2}}));
}

TEST(WalkMatrix, QWalkA10MatchesPowerOracle) {
  const auto w = q_walk_matrix(dynkin_a(10)).matrix;
  EXPECT_EQ(w, walk_by_powers(signless_laplacian(dynkin_a(10))));
  // Column 6 of the middle rows: the 3- and 4-step walk counts give 1022.
  EXPECT_EQ(w(4, 5), 1022);
  EXPECT_EQ(w(5, 5), 1022);
}

TEST(WalkMatrix, QWalkA10AgreesWithFixtureOffTheTwoMisprints) {
  const auto w = q_walk_matrix(dynkin_a(10)).matrix;
  std::size_t agree = 0;
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 10; ++j) {
      if ((i == 4 || i == 5) && j == 5) {
        EXPECT_EQ(kFixtureWq10(i, j), 1002);
        continue;
      }
      EXPECT_EQ(w(i, j), kFixtureWq10(i, j)) << "entry (" << i + 1 << "," << j + 1 << ")";
      agree += w(i, j) == kFixtureWq10(i, j);
    }
  EXPECT_EQ(agree, 98u);
}

TEST(WalkMatrix, ReducedA10) {
  EXPECT_EQ(reduced_q_walk_matrix(10), IntMatrix::from_rows({{1, 2, 6, 20, 70},
                                                             {1, 4, 14, 50, 182},
                                                             {1, 4, 16, 62, 238},
                                                             {1, 4, 16, 64, 254},
                                                             {1, 4, 16, 64, 256}}));
}

TEST(WalkMatrix, RejectsBadInput) {
  EXPECT_THROW(walk_matrix(IntMatrix(2, 3)), std::invalid_argument);
  EXPECT_THROW(walk_matrix(IntMatrix()), std::invalid_argument);
  EXPECT_THROW(reduced_q_walk_matrix(0), std::invalid_argument);
}

TEST(WalkMatrix, ZeroGeneratorGivesOnesThenZeros) {
  const auto w = walk_matrix(IntMatrix::zero(3, 3)).matrix;
  EXPECT_EQ(w, IntMatrix::from_rows({{1, 0, 0}, {1, 0, 0}, {1, 0, 0}}));
}

TEST(WalkMatrix, ReducedGeneratorSmallCases) {
  EXPECT_EQ(reduced_generator(1), IntMatrix::zero(1, 1));
  EXPECT_EQ(reduced_generator(3), IntMatrix::from_rows({{1, 1}, {2, 2}}));
  EXPECT_EQ(reduced_generator(4), IntMatrix::from_rows({{1, 1}, {1, 3}}));
}

TEST(WalkProperties, IteratedProductsMatchPowers) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto q = signless_laplacian(dynkin_a(n));
    EXPECT_EQ(walk_matrix(q).matrix, walk_by_powers(q)) << n;
  }
}

TEST(WalkProperties, MirrorSymmetry) {
  for (std::size_t n = 2; n <= 60; ++n) {
    const auto w = q_walk_matrix(dynkin_a(n)).matrix;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) ASSERT_EQ(w(i, j), w(n - 1 - i, j)) << n;
  }
}

TEST(WalkProperties, ReducedEqualsQuotientWalk) {
  for (std::size_t n = 1; n <= 60; ++n)
    EXPECT_EQ(reduced_q_walk_matrix(n), walk_matrix(reduced_generator(n)).matrix) << n;
}

TEST(WalkProperties, RankBoundedByCellCount) {
  for (std::size_t n = 1; n <= 30; ++n)
    EXPECT_LE(rank_exact(q_walk_matrix(dynkin_a(n)).matrix), partition_pi(n).size()) << n;
}

TEST(WalkProperties, FirstColumnIsOnesAndSecondIsDegreeSums) {
  for (std::size_t n = 2; n <= 20; ++n) {
    const auto g = dynkin_a(n);
    const auto w = q_walk_matrix(g).matrix;
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(w(i, 0), 1);
      EXPECT_EQ(w(i, 1), 2 * g.degree(i + 1));
    }
  }
}
