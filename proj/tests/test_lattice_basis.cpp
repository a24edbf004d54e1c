#include <arithlat/lattice_basis.hpp>

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace arithlat;

namespace {

IntMatrix random_rows(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long spread) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = static_cast<long>(rng() % static_cast<std::uint64_t>(2 * spread + 1)) - spread;
  return m;
}

oracle::IntRows as_rows(const IntMatrix& m) {
  oracle::IntRows out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m(i, j));
  return out;
}

}  // namespace

TEST(Hnf, ShapeInvariants) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 40; ++t) {
    const IntMatrix m = random_rows(rng, 5, 3, 6);
    if (oracle::minor_gcd(as_rows(m)) == 0) continue;
    const LatticeBasis l = hnf(m);
    const IntMatrix& h = l.hnf();
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_GT(h(i, i), 0);
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(h(i, j), 0);
      for (std::size_t r = 0; r < i; ++r) {
        EXPECT_GE(h(r, i), 0);
        EXPECT_LT(h(r, i), h(i, i));
      }
    }
    // Index in Z^3 equals the product of pivots.
    EXPECT_EQ(h(0, 0) * h(1, 1) * h(2, 2), oracle::minor_gcd(as_rows(m)));
  }
}

TEST(Hnf, RankDeficientThrows) {
  try {
    hnf(IntMatrix{{1, 2}, {2, 4}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::RankDeficient);
  }
}

TEST(Hnf, CanonicalUnderRowOperations) {
  const IntMatrix m{{2, 4, 1}, {0, 3, 5}, {1, 1, 1}};
  const IntMatrix shuffled{{1, 1, 1}, {2 + 1, 4 + 1, 1 + 1}, {0, 3, 5}};
  EXPECT_EQ(hnf(m), hnf(shuffled));
}

TEST(LatticeBasis, MembershipMatchesMinorOracle) {
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 60) {
    const IntMatrix m = random_rows(rng, 4, 3, 5);
    const auto rows = as_rows(m);
    if (oracle::minor_gcd(rows) == 0) continue;
    ++tested;
    const LatticeBasis l = hnf(m);
    for (int k = 0; k < 5; ++k) {
      const IntMatrix v = random_rows(rng, 1, 3, 8);
      RatVector rv;
      std::vector<mpz_class> iv;
      for (std::size_t j = 0; j < 3; ++j) {
        rv.emplace_back(v(0, j));
        iv.push_back(v(0, j));
      }
      EXPECT_EQ(l.contains(rv), oracle::in_row_lattice(rows, iv));
    }
  }
}

TEST(LatticeBasis, RationalLatticesAndScaling) {
  const LatticeBasis l = LatticeBasis::from_rows(RatMatrix{{1, 0}, {0, Rational(1, 2)}});
  EXPECT_EQ(l.denominator(), 2);
  EXPECT_TRUE(l.contains(RatVector{0, Rational(1, 2)}));
  EXPECT_FALSE(l.contains(RatVector{Rational(1, 2), 0}));
  EXPECT_TRUE(l.contains(LatticeBasis::standard(2)));
  EXPECT_EQ(l.scaled(2), LatticeBasis::from_rows(RatMatrix{{2, 0}, {0, 1}}));
}

TEST(LatticeBasis, SumIsSmallestContainingBoth) {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    const IntMatrix a = random_rows(rng, 3, 3, 4);
    const IntMatrix b = random_rows(rng, 3, 3, 4);
    if (oracle::minor_gcd(as_rows(a)) == 0 || oracle::minor_gcd(as_rows(b)) == 0) continue;
    const LatticeBasis s = lattice_sum(hnf(a), hnf(b));
    EXPECT_TRUE(s.contains(hnf(a)));
    EXPECT_TRUE(s.contains(hnf(b)));
    oracle::IntRows both = as_rows(a);
    for (const auto& r : as_rows(b)) both.push_back(r);
    const IntMatrix& h = s.hnf();
    EXPECT_EQ(h(0, 0) * h(1, 1) * h(2, 2), oracle::minor_gcd(both));
  }
}

TEST(LatticeBasis, ImageAndInvariance) {
  const LatticeBasis z2 = LatticeBasis::standard(2);
  const RatMatrix shear{{1, 1}, {0, 1}};
  EXPECT_TRUE(z2.maps_into_self(shear));
  EXPECT_EQ(z2.image(shear), z2);
  const RatMatrix half{{1, Rational(1, 2)}, {0, 1}};
  EXPECT_FALSE(z2.maps_into_self(half));
}
