#include "zxlat/errors.hpp"
#include "zxlat/models/bipartite.hpp"
#include "zxlat/models/builders.hpp"
#include "zxlat/models/eigensolve.hpp"
#include "zxlat/models/hamiltonians.hpp"
#include "zxlat/models/lattice_ops.hpp"
#include "zxlat/verify/random.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <set>

using namespace zxlat;
using models::Lattice3;
using pauli::OperatorSum;
using pauli::PauliString;

namespace {

// Free-fermion ground energy of the periodic chain -J sum ZZ - h sum X,
// even sector with antiperiodic momenta.
double isingChainGroundEnergy(std::size_t L, double j, double h) {
  double e = 0.0;
  for (std::size_t n = 0; n < L; ++n) {
    const double k = std::numbers::pi * static_cast<double>(2 * n + 1) / static_cast<double>(L);
    e -= std::sqrt(j * j + h * h - 2.0 * j * h * std::cos(k));
  }
  return e;
}

models::LinearMap mapOf(const OperatorSum& h) {
  return [h](const StateVector& v) { return pauli::opsumApply(h, v); };
}

} // namespace

TEST(DenseSpectrum, IsingChainMatchesFreeFermions) {
  for (std::size_t L : {4U, 6U, 8U}) {
    for (double h : {0.5, 1.0, 1.7}) {
      const auto spec = models::denseSpectrum(models::hamiltonian(models::isingChain(L), 1.0, h));
      EXPECT_NEAR(spec.front(), isingChainGroundEnergy(L, 1.0, h), 1e-10) << L << " " << h;
    }
  }
}

TEST(DenseSpectrum, SortedAndCapped) {
  const auto spec = models::denseSpectrum(models::deformed1d(5, 1.0, 0.3));
  EXPECT_EQ(spec.size(), 32U);
  EXPECT_TRUE(std::is_sorted(spec.begin(), spec.end()));
  EXPECT_THROW(models::denseSpectrum(OperatorSum::identity(13)), TooLarge);
}

TEST(Lanczos, MatchesDenseOnRandomSums) {
  verify::Rng rng(9);
  for (int t = 0; t < 5; ++t) {
    auto h = verify::randomOperatorSum(6, 12, rng);
    h = 0.5 * (h + h.adjoint());
    const auto spec = models::denseSpectrum(h);
    models::LanczosOptions o;
    o.seed = static_cast<std::uint64_t>(t);
    const auto r = models::lanczosLowest(mapOf(h), 6, o);
    EXPECT_TRUE(r.converged);
    EXPECT_NEAR(r.lowest, spec.front(), 1e-8);
    EXPECT_LT(r.residual, 1e-6);
  }
}

TEST(Lanczos, IsingChainBeyondDenseRange) {
  const std::size_t L = 14;
  const auto r = models::lanczosLowest(mapOf(models::hamiltonian(models::isingChain(L), 1.0, 1.0)), L);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.lowest, isingChainGroundEnergy(L, 1.0, 1.0), 1e-8);
}

TEST(Lanczos, DeformedChainAtOne) {
  for (std::size_t L : {4U, 6U, 8U}) {
    const auto h = models::deformed1d(L, 1.0, 1.0);
    const auto spec = models::denseSpectrum(h);
    // three exact ground states, then a gap
    EXPECT_NEAR(spec[0], spec[2], 1e-10);
    EXPECT_GT(spec[3] - spec[0], 1e-3);
    const auto r = models::lanczosLowest(mapOf(h), L);
    EXPECT_NEAR(r.lowest, spec.front(), 1e-8);
    const auto zero = pauli::opsumApply(h, StateVector::basis(L, 0));
    EXPECT_LT(distance(zero, spec[0] * StateVector::basis(L, 0)), 1e-10);
  }
}

TEST(GaugeFixing, TreeAndKeptLinksPartitionTheLattice) {
  const Lattice3 l(2, 2, 2);
  const models::GaugeFixing gf(l);
  EXPECT_EQ(gf.treeLinks().size(), l.sites() - 1);
  EXPECT_EQ(gf.reducedQubits(), l.links() - l.sites() + 1);
  std::set<std::size_t> all(gf.treeLinks().begin(), gf.treeLinks().end());
  all.insert(gf.keptLinks().begin(), gf.keptLinks().end());
  EXPECT_EQ(all.size(), l.links());
}

TEST(GaugeFixing, GaussOperatorsReduceToIdentity) {
  const Lattice3 l(2, 2, 2);
  const models::GaugeFixing gf(l);
  for (std::size_t s = 0; s < l.sites(); ++s) {
    const auto r = gf.reduce(models::gaussOp(l, s));
    EXPECT_TRUE(r.isIdentityUpToPhase());
    EXPECT_EQ(r.phase(), 0);
  }
  EXPECT_THROW((void)gf.reduce(PauliString::single(l.links(), 0, 'Z')), NotASymmetry);
}

TEST(GaugeFixing, ReductionPreservesTheAlgebra) {
  const Lattice3 l(2, 2, 2);
  const models::GaugeFixing gf(l);
  verify::Rng rng(10);
  std::vector<PauliString> ops;
  for (std::size_t p = 0; p < l.plaquettes(); p += 4) {
    ops.push_back(models::plaquetteTerm(l, p));
  }
  for (std::size_t e = 0; e < l.links(); e += 5) {
    ops.push_back(PauliString::single(l.links(), e, 'X'));
  }
  for (const auto& a : ops) {
    for (const auto& b : ops) {
      EXPECT_EQ(pauli::commutes(gf.reduce(a), gf.reduce(b)), pauli::commutes(a, b));
      EXPECT_EQ(gf.reduce(a * b), gf.reduce(a) * gf.reduce(b));
    }
  }
}

TEST(GaugeFixing, LiftIntertwinesTheHamiltonian) {
  const Lattice3 l(2, 2, 2);
  const models::GaugeFixing gf(l);
  verify::Rng rng(11);
  const auto h = models::deformed3d(l, 1.0, 0.6);
  const auto hr = gf.reduce(h);
  const auto psi = verify::randomState(gf.reducedQubits(), rng);
  const auto lifted = gf.lift(psi);
  EXPECT_NEAR(lifted.norm(), 1.0, 1e-12);
  EXPECT_LT(distance(pauli::apply(models::gaussOp(l, 5), lifted), lifted), 1e-12);
  EXPECT_LT(distance(gf.lift(pauli::opsumApply(hr, psi)), pauli::opsumApply(h, lifted)), 1e-10);
}
