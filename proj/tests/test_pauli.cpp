#include "zxlat/errors.hpp"
#include "zxlat/pauli.hpp"
#include "zxlat/verify/random.hpp"

#include <gtest/gtest.h>

using namespace zxlat;
using pauli::OperatorSum;
using pauli::PauliString;

namespace {

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      for (std::size_t j = 0; j < b.cols(); ++j) {
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  }
  return c;
}

PauliString randomString(std::size_t n, verify::Rng& rng) {
  std::string s(n, 'I');
  for (auto& c : s) {
    c = "IXYZ"[rng() % 4];
  }
  auto p = PauliString::fromString(s);
  p.setPhase(static_cast<int>(rng() % 4));
  return p;
}

} // namespace

TEST(PauliString, ParseAndPrint) {
  const auto p = PauliString::fromString("-iXYZI");
  EXPECT_EQ(p.qubits(), 4U);
  EXPECT_EQ(p.toString(), "-iXYZI");
  EXPECT_EQ(PauliString::fromString(p.toString()), p);
  EXPECT_THROW(PauliString::fromString("XQ"), ParseError);
}

TEST(PauliString, YIsHermitianWithPhaseOne) {
  const auto y = PauliString::fromString("Y");
  EXPECT_TRUE(y.isHermitian());
  EXPECT_EQ(y.hermitianPhase(), 1);
  const auto m = toDense(y);
  EXPECT_EQ(m(0, 1), Complex(0.0, -1.0));
  EXPECT_EQ(m(1, 0), Complex(0.0, 1.0));
}

TEST(PauliString, XTimesZIsMinusIY) {
  const auto xz = PauliString::fromString("X") * PauliString::fromString("Z");
  EXPECT_EQ(xz, PauliString::fromString("-iY"));
  EXPECT_EQ(PauliString::fromString("Z") * PauliString::fromString("X"),
            PauliString::fromString("iY"));
}

TEST(PauliString, MultiplyMatchesDense) {
  verify::Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const auto a = randomString(3, rng);
    const auto b = randomString(3, rng);
    EXPECT_LT(maxAbsDiff(toDense(a * b), matmul(toDense(a), toDense(b))), 1e-15);
  }
}

TEST(PauliString, CommutesMatchesDense) {
  verify::Rng rng(2);
  for (int t = 0; t < 50; ++t) {
    const auto a = randomString(3, rng);
    const auto b = randomString(3, rng);
    const bool dense =
        maxAbsDiff(matmul(toDense(a), toDense(b)), matmul(toDense(b), toDense(a))) < 1e-12;
    EXPECT_EQ(pauli::commutes(a, b), dense);
  }
}

TEST(PauliString, ApplyMatchesDense) {
  verify::Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    const auto p = randomString(4, rng);
    const auto psi = verify::randomState(4, rng);
    EXPECT_LT(distance(pauli::apply(p, psi), toDense(p).apply(psi)), 1e-14);
  }
}

TEST(PauliString, AdjointSquaresToIdentity) {
  verify::Rng rng(4);
  for (int t = 0; t < 20; ++t) {
    const auto p = randomString(5, rng);
    EXPECT_TRUE((p * p.adjoint()).isIdentityUpToPhase());
    EXPECT_EQ((p * p.adjoint()).phase(), 0);
  }
}

TEST(PauliString, SizeMismatchThrows) {
  EXPECT_THROW(PauliString::fromString("XX") * PauliString::fromString("X"),
               DimensionMismatch);
  EXPECT_THROW(pauli::opsumApply(OperatorSum::identity(2), StateVector(3)), DimensionMismatch);
}

TEST(PauliString, GlobalFlipSquaresToOne) {
  const auto eta = PauliString::fromString("XXX");
  EXPECT_EQ(eta * eta, PauliString::identity(3));
}

TEST(OperatorSum, ApplyMatchesDense) {
  verify::Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto h = verify::randomOperatorSum(4, 6, rng);
    const auto psi = verify::randomState(4, rng);
    EXPECT_LT(distance(pauli::opsumApply(h, psi), toDense(h).apply(psi)), 1e-13);
  }
}

TEST(OperatorSum, CombineMergesAndDrops) {
  OperatorSum h(2);
  h.add(1.0, PauliString::fromString("XZ"));
  h.add(2.0, PauliString::fromString("XZ"));
  h.add(1.0, PauliString::fromString("ZZ"));
  h.add(-1.0, PauliString::fromString("ZZ"));
  h.combine();
  ASSERT_EQ(h.size(), 1U);
  EXPECT_EQ(h.terms()[0].coeff, Complex(3.0));
}

TEST(OperatorSum, CombineKeepsTheOperator) {
  verify::Rng rng(6);
  const auto h = verify::randomOperatorSum(3, 20, rng);
  EXPECT_LT(maxAbsDiff(toDense(h), toDense(h.combined())), 1e-13);
}

TEST(OperatorSum, ProductMatchesDense) {
  verify::Rng rng(7);
  const auto a = verify::randomOperatorSum(3, 4, rng);
  const auto b = verify::randomOperatorSum(3, 5, rng);
  EXPECT_LT(maxAbsDiff(toDense(a * b), matmul(toDense(a), toDense(b))), 1e-12);
}

TEST(OperatorSum, HermitianAndAdjoint) {
  OperatorSum h(2);
  h.add(1.0, PauliString::fromString("YY"));
  h.add(0.5, PauliString::fromString("XZ"));
  EXPECT_TRUE(h.isHermitian());
  h.add(Complex(0.0, 1.0), PauliString::fromString("ZI"));
  EXPECT_FALSE(h.isHermitian());
  verify::Rng rng(8);
  const auto g = verify::randomOperatorSum(3, 6, rng);
  const auto dg = toDense(g);
  const auto da = toDense(g.adjoint());
  for (std::size_t r = 0; r < 8; ++r) {
    for (std::size_t c = 0; c < 8; ++c) {
      EXPECT_NEAR(std::abs(da(r, c) - std::conj(dg(c, r))), 0.0, 1e-13);
    }
  }
}

TEST(OperatorSum, CommutatorOfCommutingStringsVanishes) {
  const auto a = OperatorSum::fromPauli(PauliString::fromString("XX"));
  const auto b = OperatorSum::fromPauli(PauliString::fromString("ZZ"));
  EXPECT_EQ(pauli::commutator(a, b).combined().size(), 0U);
  const auto c = OperatorSum::fromPauli(PauliString::fromString("ZI"));
  EXPECT_EQ(pauli::commutator(a, c).combined().size(), 1U);
}

TEST(OperatorSum, Expectation) {
  OperatorSum h(2);
  h.add(1.0, PauliString::fromString("XX"));
  EXPECT_NEAR(pauli::expectation(h, StateVector::plus(2)).real(), 1.0, 1e-15);
  EXPECT_NEAR(pauli::expectation(h, StateVector::basis(2, 0)).real(), 0.0, 1e-15);
}
