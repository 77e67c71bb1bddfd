#include "zxlat/errors.hpp"
#include "zxlat/eval/contract.hpp"
#include "zxlat/eval/structured.hpp"
#include "zxlat/models/diagrams.hpp"
#include "zxlat/verify/random.hpp"
#include "zxlat/zx/diagram.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>

using namespace zxlat;
using zx::NodeKind;
using zx::Phase;
using zx::ZxDiagram;

namespace {

// Dense matrix of the KW operator, sum_m |(-)^{m_{i-1}+m_i}><m|.
DenseMatrix kwMatrix(std::size_t L) {
  const std::size_t dim = std::size_t{1} << L;
  DenseMatrix out(dim, dim);
  auto bit = [L](std::size_t x, std::size_t q) { return (x >> (L - 1 - q)) & 1U; };
  for (std::size_t col = 0; col < dim; ++col) {
    for (std::size_t row = 0; row < dim; ++row) {
      double a = std::pow(2.0, -0.5 * static_cast<double>(L));
      for (std::size_t i = 0; i < L; ++i) {
        if (((bit(col, (i + L - 1) % L) ^ bit(col, i)) & bit(row, i)) != 0) {
          a = -a;
        }
      }
      out(row, col) = a;
    }
  }
  return out;
}

} // namespace

TEST(Contract, GhzState) {
  const auto m = eval::contract(zx::zSpider(0, 3));
  for (std::size_t r = 0; r < 8; ++r) {
    EXPECT_NEAR(std::abs(m(r, 0) - ((r == 0 || r == 7) ? 1.0 : 0.0)), 0.0, 1e-15);
  }
}

TEST(Contract, ControlledZ) {
  // Z spiders on each wire joined by a Hadamard edge, scalar sqrt 2
  ZxDiagram d;
  const int i0 = d.addInput();
  const int i1 = d.addInput();
  const int o0 = d.addOutput();
  const int o1 = d.addOutput();
  const int a = d.addSpider(NodeKind::Z);
  const int b = d.addSpider(NodeKind::Z);
  d.addWire(i0, a);
  d.addWire(a, o0);
  d.addWire(i1, b);
  d.addWire(b, o1);
  d.addWire(a, b, true);
  d.setScalar(zx::Scalar::sqrt2Power(1));
  const auto m = eval::contract(d);
  for (std::size_t r = 0; r < 4; ++r) {
    for (std::size_t c = 0; c < 4; ++c) {
      const double want = r != c ? 0.0 : (r == 3 ? -1.0 : 1.0);
      EXPECT_NEAR(std::abs(m(r, c) - want), 0.0, 1e-14);
    }
  }
}

TEST(Contract, EmptyDiagramWithScalar) {
  ZxDiagram d;
  d.setScalar(zx::Scalar::sqrt2Power(2));
  const auto m = eval::contract(d);
  ASSERT_EQ(m.rows(), 1U);
  EXPECT_NEAR(std::abs(m(0, 0) - 2.0), 0.0, 1e-15);
}

TEST(Contract, DenseCapThrows) {
  eval::ContractOptions o;
  o.denseCap = 4;
  EXPECT_THROW(eval::contract(zx::zSpider(3, 3), o), TooLarge);
}

TEST(Contract, OrderIndependence) {
  verify::Rng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = verify::randomDiagram(rng, 6 + rng() % 4, 5, 4);
    const auto greedy = eval::contract(d);
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      eval::ContractOptions o;
      o.randomOrderSeed = seed + 100 * trial;
      EXPECT_LT(maxAbsDiff(eval::contract(d, o), greedy), 1e-12);
    }
  }
}

TEST(ApplyDiagram, ColumnsMatchContract) {
  verify::Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto d = verify::randomDiagram(rng, 5, 5, 3);
    const auto m = eval::contract(d);
    const std::size_t n = d.inputs().size();
    for (std::size_t k = 0; k < (std::size_t{1} << n); ++k) {
      const auto col = eval::applyDiagram(d, StateVector::basis(n, k));
      EXPECT_LT(maxAbsDiff(col, m.column(k)), 1e-12);
    }
  }
}

TEST(ApplyDiagram, IdentityLeavesStateAlone) {
  verify::Rng rng(1);
  const auto psi = verify::randomState(3, rng);
  EXPECT_LT(distance(eval::applyDiagram(zx::identityWires(3), psi), psi), 1e-15);
}

TEST(ApplyDiagram, KwOnZeroGivesPlus) {
  const auto out = eval::applyDiagram(models::kwDiagram(3), StateVector::basis(3, 0));
  EXPECT_LT(distance(out, StateVector::plus(3)), 1e-14);
}

TEST(ApplyDiagram, KwOnRandomStateMatchesDense) {
  verify::Rng rng(2);
  const auto psi = verify::randomState(4, rng);
  const auto d = models::kwDiagram(4);
  EXPECT_LT(distance(eval::applyDiagram(d, psi), eval::contract(d).apply(psi)), 1e-13);
}

TEST(Replicate, KwCellThreeCopiesIsTheKwMatrix) {
  EXPECT_LT(maxAbsDiff(eval::contract(models::kwDiagram(3)), kwMatrix(3)), 1e-14);
}

TEST(Structured, HadamardLayerIsInvolution) {
  verify::Rng rng(3);
  const auto psi = verify::randomState(6, rng);
  const auto h = eval::makeHLayerAll(6);
  EXPECT_LT(distance(eval::applyStructured(h, eval::applyStructured(h, psi)), psi), 1e-14);
  const auto part = eval::makeHLayer(6, {1, 4});
  EXPECT_LT(distance(eval::applyStructured(part, eval::applyStructured(part, psi)), psi), 1e-14);
}

TEST(Structured, IdentityBasisMap) {
  verify::Rng rng(4);
  const auto psi = verify::randomState(5, rng);
  EXPECT_EQ(eval::applyStructured(eval::makeBasisMap(gf2::BitMatrix::identity(5)), psi)
                .amplitudes(),
            psi.amplitudes());
}

TEST(Structured, BasisMapScatterAddsOnCollisions) {
  // A = [1 1]: |m0 m1> -> |m0 + m1>
  const auto a = gf2::BitMatrix::fromRows({"11"}, 2);
  StateVector psi(2, {1.0, 2.0, 3.0, 4.0});
  const auto out = eval::applyStructured(eval::makeBasisMap(a), psi);
  ASSERT_EQ(out.qubits(), 1U);
  EXPECT_EQ(out[0], Complex(5.0));
  EXPECT_EQ(out[1], Complex(5.0));
}

TEST(Structured, BasisMapPreservesAmplitudeSum) {
  verify::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    gf2::BitMatrix a(4, 6);
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t c = 0; c < 6; ++c) {
        a.set(r, c, rng() % 2 == 0);
      }
    }
    const auto psi = verify::randomState(6, rng);
    const auto out = eval::applyStructured(eval::makeBasisMap(a), psi);
    Complex sIn = 0.0;
    Complex sOut = 0.0;
    for (std::size_t i = 0; i < psi.size(); ++i) {
      sIn += psi[i];
    }
    for (std::size_t i = 0; i < out.size(); ++i) {
      sOut += out[i];
    }
    EXPECT_NEAR(std::abs(sIn - sOut), 0.0, 1e-12);
  }
}

TEST(Structured, PermutePreservesNorm) {
  verify::Rng rng(6);
  const auto psi = verify::randomState(7, rng);
  const auto out = eval::applyStructured(eval::makePermute({3, 0, 6, 1, 2, 5, 4}), psi);
  EXPECT_EQ(out.norm(), psi.norm());
}

TEST(Structured, PermuteMovesQubits) {
  // qubit 0 -> position 1: |10> -> |01>
  const auto out =
      eval::applyStructured(eval::makePermute({1, 0}), StateVector::basis(2, 0b10));
  EXPECT_EQ(out[0b01], Complex(1.0));
  const auto perm = std::vector<std::size_t>{2, 0, 1};
  const auto psi = StateVector::basis(3, 0b100);
  EXPECT_EQ(eval::applyStructured(eval::makePermute(perm), psi)[0b001], Complex(1.0));
  EXPECT_EQ(eval::inversePermutation(perm), (std::vector<std::size_t>{1, 2, 0}));
}

TEST(Structured, PermuteMatchesDiagram) {
  const std::vector<std::size_t> perm{2, 0, 3, 1};
  EXPECT_LT(maxAbsDiff(eval::structuredToDense(eval::makePermute(perm)),
                       eval::contract(zx::permutationDiagram(perm))),
            1e-15);
}

TEST(Structured, ScaleIdentity) {
  const auto m = eval::structuredToDense(eval::makeScale(1, 2.0));
  EXPECT_LT(maxAbsDiff(m, 2.0 * DenseMatrix::identity(2)), 1e-15);
}

TEST(Structured, SumOfIdentityAndEta) {
  const auto eta = pauli::PauliString::fromString("XX");
  const auto op = eval::makeSum({1.0, 1.0}, {eval::makeIdentity(2), eval::makePauli(eta)});
  DenseMatrix want = DenseMatrix::identity(4);
  for (std::size_t r = 0; r < 4; ++r) {
    want(r, 3 - r) += 1.0;
  }
  EXPECT_LT(maxAbsDiff(eval::structuredToDense(op), want), 1e-15);
}

TEST(Structured, ComposeAppliesFirstElementFirst) {
  const auto x = eval::makePauli(pauli::PauliString::fromString("X"));
  const auto z = eval::makePauli(pauli::PauliString::fromString("Z"));
  // Z X |0> = Z|1> = -|1>
  const auto out = eval::applyStructured(eval::makeCompose({x, z}), StateVector::basis(1, 0));
  EXPECT_EQ(out[1], Complex(-1.0));
  const auto viaProduct = eval::applyStructured(eval::product(z, x), StateVector::basis(1, 0));
  EXPECT_EQ(viaProduct[1], Complex(-1.0));
}

TEST(Structured, ArityMismatchThrows) {
  EXPECT_THROW(eval::makeCompose({eval::makeIdentity(2), eval::makeIdentity(3)}),
               ArityMismatch);
  EXPECT_THROW(eval::applyStructured(eval::makeIdentity(2), StateVector(3)), ArityMismatch);
}

TEST(Structured, DenseCap) {
  EXPECT_THROW(eval::structuredToDense(eval::makeIdentity(13)), TooLarge);
}

TEST(State, DumpRoundTrip) {
  verify::Rng rng(8);
  const auto psi = verify::randomState(4, rng);
  const std::string path = ::testing::TempDir() + "state.bin";
  writeStateDump(path, psi);
  const auto back = readStateDump(path);
  EXPECT_EQ(back.qubits(), 4U);
  EXPECT_EQ(back.amplitudes(), psi.amplitudes());
  std::remove(path.c_str());
}

TEST(State, InnerAndNorm) {
  const auto plus = StateVector::plus(3);
  EXPECT_NEAR(plus.norm(), 1.0, 1e-15);
  EXPECT_NEAR(std::abs(inner(plus, StateVector::basis(3, 5)) - std::sqrt(0.125)), 0.0, 1e-15);
  EXPECT_EQ(StateVector::fromBits({1, 0, 1})[5], Complex(1.0));
}
