#include "zxlat/errors.hpp"
#include "zxlat/gf2.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace zxlat;
using gf2::BitMatrix;
using gf2::BitVector;

namespace {

BitMatrix randomMatrix(std::size_t r, std::size_t c, double density,
                       std::mt19937_64& rng) {
  std::bernoulli_distribution coin(density);
  BitMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      m.set(i, j, coin(rng));
    }
  }
  return m;
}

// Brute-force kernel over all 2^cols vectors.
std::set<std::string> bruteKernel(const BitMatrix& a) {
  std::set<std::string> out;
  for (std::uint64_t x = 0; x < (std::uint64_t{1} << a.cols()); ++x) {
    BitVector v(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) {
      v.set(j, ((x >> j) & 1U) != 0);
    }
    if (gf2::matvec(a, v).isZero()) {
      out.insert(v.toString());
    }
  }
  return out;
}

} // namespace

TEST(BitVector, StringRoundTrip) {
  const auto v = BitVector::fromString("0110010");
  EXPECT_EQ(v.toString(), "0110010");
  EXPECT_EQ(v.popcount(), 3U);
  EXPECT_TRUE(v.get(1));
  EXPECT_FALSE(v.get(0));
}

TEST(BitVector, XorAndAcrossWordBoundary) {
  BitVector a(130);
  BitVector b(130);
  a.set(3);
  a.set(64);
  a.set(129);
  b.set(64);
  b.set(100);
  const auto x = a ^ b;
  EXPECT_EQ(x.ones(), (std::vector<std::size_t>{3, 100, 129}));
  EXPECT_EQ((a & b).ones(), (std::vector<std::size_t>{64}));
  EXPECT_TRUE((a ^ a).isZero());
}

TEST(BitVector, IndexMaskPutsEntryZeroOnTop) {
  const auto v = BitVector::fromString("1001");
  EXPECT_EQ(v.toIndexMask(), 0b1001U);
  EXPECT_EQ(BitVector::fromString("1000").toIndexMask(), 8U);
}

TEST(BitVector, OrderingIsStrictWeak) {
  const auto a = BitVector::fromString("0011");
  const auto b = BitVector::fromString("0101");
  EXPECT_NE(a < b, b < a);
  EXPECT_FALSE(a < a);
}

TEST(BitMatrix, TransposeAndColumns) {
  const auto m = BitMatrix::fromRows({"110", "011"}, 3);
  const auto t = m.transpose();
  EXPECT_EQ(t.rows(), 3U);
  EXPECT_EQ(t.row(1).toString(), "11");
  EXPECT_EQ(m.column(2).toString(), "01");
  EXPECT_EQ(m.countOnes(), 4U);
  EXPECT_EQ(t.transpose(), m);
}

TEST(BitMatrix, MultiplyMatchesMatvec) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = randomMatrix(5, 7, 0.4, rng);
    const auto b = randomMatrix(7, 4, 0.4, rng);
    const auto ab = gf2::multiply(a, b);
    for (std::size_t c = 0; c < 4; ++c) {
      EXPECT_EQ(ab.column(c), gf2::matvec(a, b.column(c)));
    }
  }
}

TEST(Gf2, RankOfIdentityAndZero) {
  EXPECT_EQ(gf2::rank(BitMatrix::identity(9)), 9U);
  EXPECT_EQ(gf2::rank(BitMatrix(4, 6)), 0U);
}

TEST(Gf2, RankNullityProperty) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = 1 + rng() % 9;
    const std::size_t c = 1 + rng() % 10;
    const auto a = randomMatrix(r, c, 0.1 + 0.8 * (rng() % 100) / 100.0, rng);
    const auto ker = gf2::kernelBasis(a);
    EXPECT_EQ(gf2::rank(a) + ker.size(), c);
    for (const auto& k : ker) {
      EXPECT_TRUE(gf2::matvec(a, k).isZero());
    }
    EXPECT_EQ(gf2::reduceToEchelon(ker).size(), ker.size());
  }
}

TEST(Gf2, KernelMatchesBruteForce) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const auto a = randomMatrix(1 + rng() % 6, 1 + rng() % 10, 0.5, rng);
    std::set<std::string> enumerated;
    for (const auto& v : gf2::collectKernel(a, 1U << 12)) {
      enumerated.insert(v.toString());
    }
    EXPECT_EQ(enumerated, bruteKernel(a));
  }
}

TEST(Gf2, IsingRingKernelIsAllOnes) {
  // rows (i, i+1) on a ring of 5
  BitMatrix a(5, 5);
  for (std::size_t i = 0; i < 5; ++i) {
    a.set(i, i);
    a.set(i, (i + 1) % 5);
  }
  const auto ker = gf2::kernelBasis(a);
  ASSERT_EQ(ker.size(), 1U);
  EXPECT_EQ(ker[0].toString(), "11111");
}

TEST(Gf2, KernelBasisHasUnitFreeColumns) {
  const auto a = BitMatrix::fromRows({"1100", "0011"}, 4);
  const auto ker = gf2::kernelBasis(a);
  ASSERT_EQ(ker.size(), 2U);
  EXPECT_EQ(ker[0].toString(), "1100");
  EXPECT_EQ(ker[1].toString(), "0011");
}

TEST(Gf2, SpanMembership) {
  const std::vector<BitVector> basis{BitVector::fromString("1100"),
                                     BitVector::fromString("0110")};
  EXPECT_TRUE(gf2::inSpan(basis, BitVector::fromString("1010")));
  EXPECT_FALSE(gf2::inSpan(basis, BitVector::fromString("0001")));
  EXPECT_TRUE(gf2::inSpan(basis, BitVector(4)));
}

TEST(Gf2, EnumeratorVisitsEachElementOnce) {
  const std::vector<BitVector> basis{BitVector::fromString("10010"),
                                     BitVector::fromString("01010"),
                                     BitVector::fromString("00111")};
  gf2::KernelEnumerator e(basis, 5);
  EXPECT_EQ(e.count(), 8U);
  std::set<std::string> seen;
  BitVector v;
  while (e.next(v)) {
    EXPECT_TRUE(gf2::inSpan(basis, v));
    seen.insert(v.toString());
  }
  EXPECT_EQ(seen.size(), 8U);
  EXPECT_TRUE(seen.count("00000") == 1);
}

TEST(Gf2, EnumerationCap) {
  const BitMatrix zero(1, 20);
  EXPECT_THROW(gf2::enumerateKernel(zero, 1U << 10), KernelTooLarge);
  EXPECT_NO_THROW(gf2::enumerateKernel(zero, 1U << 20));
}
