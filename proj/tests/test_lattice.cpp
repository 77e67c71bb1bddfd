#include "zxlat/errors.hpp"
#include "zxlat/eval/structured.hpp"
#include "zxlat/models/bipartite.hpp"
#include "zxlat/models/builders.hpp"
#include "zxlat/models/hamiltonians.hpp"
#include "zxlat/models/lattice3.hpp"
#include "zxlat/models/lattice_ops.hpp"
#include "zxlat/verify/random.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using namespace zxlat;
using models::CellKind;
using models::Lattice3;
using models::Plane;
using pauli::OperatorSum;
using pauli::PauliString;

namespace {

// Periodic L1 distance between doubled coordinates.
long doubledDistance(const Lattice3& lat, const models::Doubled& a, const models::Doubled& b) {
  const std::array<long, 3> period{2 * static_cast<long>(lat.lx()), 2 * static_cast<long>(lat.ly()),
                                   2 * static_cast<long>(lat.lz())};
  long d = 0;
  for (int k = 0; k < 3; ++k) {
    const long diff = ((a[k] - b[k]) % period[k] + period[k]) % period[k];
    d += std::min(diff, period[k] - diff);
  }
  return d;
}

template <std::size_t N>
std::set<std::size_t> asSet(const std::array<std::size_t, N>& a) {
  return {a.begin(), a.end()};
}

std::set<std::size_t> neighbours(const Lattice3& lat, CellKind from, std::size_t i, CellKind to) {
  std::set<std::size_t> out;
  for (std::size_t j = 0; j < lat.count(to); ++j) {
    if (doubledDistance(lat, lat.doubled(from, i), lat.doubled(to, j)) == 1) {
      out.insert(j);
    }
  }
  return out;
}

bool isPermutation(std::vector<std::size_t> p) {
  std::sort(p.begin(), p.end());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != i) {
      return false;
    }
  }
  return true;
}

class Boxes : public ::testing::TestWithParam<std::array<std::size_t, 3>> {
protected:
  Lattice3 lat() const { return {GetParam()[0], GetParam()[1], GetParam()[2]}; }
};

} // namespace

TEST_P(Boxes, IncidencesMatchDoubledGeometry) {
  const auto l = lat();
  for (std::size_t p = 0; p < l.plaquettes(); ++p) {
    EXPECT_EQ(asSet(l.linksOfPlaquette(p)), neighbours(l, CellKind::Plaquette, p, CellKind::Link));
  }
  for (std::size_t s = 0; s < l.sites(); ++s) {
    EXPECT_EQ(asSet(l.linksOfSite(s)), neighbours(l, CellKind::Site, s, CellKind::Link));
  }
  for (std::size_t e = 0; e < l.links(); ++e) {
    EXPECT_EQ(asSet(l.sitesOfLink(e)), neighbours(l, CellKind::Link, e, CellKind::Site));
    EXPECT_EQ(asSet(l.plaquettesOfLink(e)), neighbours(l, CellKind::Link, e, CellKind::Plaquette));
  }
  for (std::size_t c = 0; c < l.cubes(); ++c) {
    EXPECT_EQ(asSet(l.plaquettesOfCube(c)), neighbours(l, CellKind::Cube, c, CellKind::Plaquette));
    EXPECT_EQ(l.linksOfCube(c).size(), asSet(l.linksOfCube(c)).size());
  }
}

TEST_P(Boxes, DoubledCoordinatesRoundTrip) {
  const auto l = lat();
  for (auto k : {CellKind::Site, CellKind::Link, CellKind::Plaquette, CellKind::Cube}) {
    for (std::size_t i = 0; i < l.count(k); ++i) {
      const auto [kind, idx] = l.cellAt(l.doubled(k, i));
      EXPECT_EQ(kind, k);
      EXPECT_EQ(idx, i);
    }
  }
}

TEST_P(Boxes, LatticeMapsArePermutations) {
  const auto l = lat();
  for (auto k : {CellKind::Site, CellKind::Link, CellKind::Plaquette, CellKind::Cube}) {
    EXPECT_TRUE(isPermutation(l.halfTranslation(k)));
    EXPECT_TRUE(isPermutation(l.parity(k)));
    EXPECT_TRUE(isPermutation(l.translation(k, 1, -1, 2)));
  }
}

TEST_P(Boxes, BoundaryOfOneLinkHitsFourPlaquettes) {
  const auto l = lat();
  const auto m = models::gauge3d(l);
  for (std::size_t e = 0; e < l.links(); e += 5) {
    const auto d = gf2::matvec(m.sigma, gf2::BitVector::fromIndices(l.links(), {e}));
    EXPECT_EQ(d.popcount(), 4U);
    for (auto p : d.ones()) {
      EXPECT_TRUE(asSet(l.linksOfPlaquette(p)).count(e));
    }
  }
}

TEST_P(Boxes, KernelDimensionIsSitesPlusTwo) {
  const auto l = lat();
  EXPECT_EQ(models::kernelDimension(models::gauge3d(l)), l.sites() + 2);
}

TEST_P(Boxes, PlaneSurfacesAreClosedAndNonTrivial) {
  const auto l = lat();
  const auto m = models::gauge3d(l);
  std::vector<gf2::BitVector> gauss;
  for (std::size_t s = 0; s < l.sites(); ++s) {
    gauss.push_back(models::gaussOp(l, s).x());
  }
  for (auto p : models::kPlanes) {
    const auto surf = models::planeSurface(l, p);
    EXPECT_TRUE(models::isClosedSurface(l, surf));
    EXPECT_FALSE(gf2::inSpan(gauss, surf));
    for (auto e : surf.ones()) {
      EXPECT_EQ(l.direction(e), models::normalOf(p));
    }
  }
  for (std::size_t s = 0; s < l.sites(); ++s) {
    EXPECT_TRUE(models::isClosedSurface(l, models::gaussOp(l, s).x()));
  }
}

TEST_P(Boxes, CurvesAndCrossings) {
  const auto l = lat();
  for (std::size_t p = 0; p < l.plaquettes(); p += 3) {
    const auto c = models::plaquetteBoundary(l, p);
    EXPECT_TRUE(models::isClosedCurve(l, c));
    for (auto pl : models::kPlanes) {
      EXPECT_FALSE(models::crossingParity(l, c, pl));
    }
  }
  for (int k = 0; k < 3; ++k) {
    const auto loop = models::straightLoop(l, k);
    EXPECT_TRUE(models::isClosedCurve(l, loop));
    for (auto pl : models::kPlanes) {
      EXPECT_EQ(models::crossingParity(l, loop, pl), models::normalOf(pl) == k);
    }
  }
  const auto open = gf2::BitVector::fromIndices(l.links(), {0});
  EXPECT_FALSE(models::isClosedCurve(l, open));
  EXPECT_EQ(models::curveBoundary(l, open).popcount(), 2U);
}

TEST_P(Boxes, DeformedHamiltonianTermCount) {
  const auto l = lat();
  EXPECT_EQ(models::orthogonalPairs(l).size(), 8 * l.links());
  const auto h = models::deformed3d(l, 1.0, 0.5).combined();
  EXPECT_EQ(h.size(), l.plaquettes() + l.links() + 8 * l.links());
  EXPECT_TRUE(h.isHermitian());
}

INSTANTIATE_TEST_SUITE_P(Lattice, Boxes,
                         ::testing::Values(std::array<std::size_t, 3>{2, 2, 2},
                                           std::array<std::size_t, 3>{3, 2, 4},
                                           std::array<std::size_t, 3>{3, 3, 3}));

TEST(Lattice, Indexing) {
  const Lattice3 l(2, 3, 4);
  EXPECT_EQ(l.site(1, 2, 3), (1 * 3 + 2) * 4 + 3U);
  EXPECT_EQ(l.site(-1, -1, -1), l.site(1, 2, 3));
  EXPECT_EQ(l.link(1, 2, 3, 2), 3 * l.site(1, 2, 3) + 2);
  EXPECT_EQ(l.siteCoords(l.site(1, 2, 3)), (std::array<long, 3>{1, 2, 3}));
  EXPECT_THROW(Lattice3(1, 2, 2), BadSize);
}

TEST(Lattice, RotationNeedsCubicBox) {
  EXPECT_TRUE(isPermutation(Lattice3(2, 2, 2).rotation111(CellKind::Link)));
  EXPECT_THROW((void)Lattice3(2, 2, 3).rotation111(CellKind::Link), BadSize);
}

TEST(Operators, EtaPlaneIsFourX) {
  const Lattice3 l(2, 2, 2);
  const auto eta = models::etaPlane(l, Plane::XY);
  EXPECT_EQ(eta.x().popcount(), 4U);
  EXPECT_TRUE(eta.z().isZero());
  for (auto e : eta.x().ones()) {
    EXPECT_EQ(l.direction(e), 2);
    EXPECT_EQ(l.siteCoords(l.sitesOfLink(e)[0])[2], 0);
  }
}

TEST(Operators, GaussHasSixLinksAndCommutesWithPlaquettes) {
  const Lattice3 l(2, 2, 3);
  for (std::size_t s = 0; s < l.sites(); ++s) {
    const auto g = models::gaussOp(l, s);
    EXPECT_EQ(g.x().popcount(), 6U);
    for (std::size_t p = 0; p < l.plaquettes(); ++p) {
      EXPECT_TRUE(pauli::commutes(g, models::plaquetteTerm(l, p)));
    }
  }
}

TEST(Operators, WilsonLoopsChargedUnderPlanes) {
  const Lattice3 l(2, 2, 2);
  for (int k = 0; k < 3; ++k) {
    const auto w = models::wilson(l, models::straightLoop(l, k));
    for (auto p : models::kPlanes) {
      EXPECT_EQ(pauli::commutes(w, models::etaPlane(l, p)), models::normalOf(p) != k);
    }
  }
  EXPECT_THROW(models::wilson(l, gf2::BitVector(5)), BadCurve);
  EXPECT_THROW(models::etaSurface(l, gf2::BitVector(5)), BadSurface);
}

TEST(Operators, SurfaceDeformationByGaussLaw) {
  // Multiplying eta by a Gauss operator moves the surface without changing its class.
  const Lattice3 l(2, 2, 2);
  const auto moved = models::etaPlane(l, Plane::YZ) * models::gaussOp(l, 3);
  EXPECT_TRUE(models::isClosedSurface(l, moved.x()));
  for (std::size_t p = 0; p < l.plaquettes(); ++p) {
    EXPECT_TRUE(pauli::commutes(moved, models::plaquetteTerm(l, p)));
  }
}

TEST(Operators, LatticeMapsPreserveHamiltonian) {
  const Lattice3 l(2, 3, 3);
  const auto h = models::gauge3dWithGauss(l, 1.0, 0.3, 0.2).combined();
  const std::vector<std::vector<std::size_t>> maps{
      l.translation(CellKind::Link, 0, 1, 1), l.translation(CellKind::Link, 1, 2, 0),
      l.parity(CellKind::Link)};
  for (const auto& perm : maps) {
    OperatorSum moved(l.links());
    for (const auto& t : h.terms()) {
      gf2::BitVector x(l.links());
      gf2::BitVector z(l.links());
      for (auto q : t.op.x().ones()) {
        x.set(perm[q], true);
      }
      for (auto q : t.op.z().ones()) {
        z.set(perm[q], true);
      }
      moved.add(t.coeff, PauliString(x, z, t.op.phase()));
    }
    EXPECT_LT(moved.distance(h), 1e-15);
  }
}

TEST(Operators, PermuteOpMatchesLinkMap) {
  const Lattice3 l(2, 2, 2);
  const auto perm = l.translation(CellKind::Link, 1, 0, 1);
  const auto psi = StateVector::basis(l.links(), std::size_t{1} << (l.links() - 1 - 5));
  const auto out = eval::applyStructured(models::latticeTranslation(l, 1, 0, 1), psi);
  EXPECT_EQ(out[std::size_t{1} << (l.links() - 1 - perm[5])], Complex(1.0));
}

TEST(Operators, ProjectorIsIdempotent) {
  const auto p = models::projector(PauliString::fromString("XZ"));
  EXPECT_LT((p * p).distance(p), 1e-15);
  const auto n = models::projector(PauliString::fromString("XZ"), true);
  EXPECT_EQ((p * n).combined(1e-15).size(), 0U);
}

TEST(Operators, CondensationSquaresToAbsorptionMultiple) {
  const Lattice3 l(2, 2, 2);
  const auto c = models::condensationFactored(l).expand();
  const double coeff = models::absorptionCoefficient(models::gauge3d(l));
  EXPECT_DOUBLE_EQ(coeff, 4.0);
  EXPECT_LT((c * c).distance(coeff * c), 1e-12);
}

TEST(Operators, HigherCondensationContractibleCurveIsCondensation) {
  const Lattice3 l(2, 2, 2);
  const auto c = models::condensationFactored(l).expand();
  for (std::size_t p = 0; p < l.plaquettes(); ++p) {
    EXPECT_LT(models::higherCondensation(l, models::plaquetteBoundary(l, p)).expand().distance(c),
              1e-12);
  }
}

TEST(Operators, CondensationCommutesWithWilsonUpToTwist) {
  // C W(gamma) = W(gamma) C(gamma) as Pauli sums
  verify::Rng rng(5);
  const Lattice3 l(2, 2, 2);
  const auto c = models::condensationFactored(l).expand();
  for (bool closed : {false, true}) {
    for (int k = 0; k < 3; ++k) {
      const auto curve = verify::randomCurve(l, closed, rng);
      const auto w = OperatorSum::fromPauli(models::wilson(l, curve));
      const auto twisted = models::higherCondensation(l, curve).expand();
      EXPECT_LT((c * w).distance(w * twisted), 1e-12);
    }
  }
}

TEST(Hamiltonians, Deformed1dAtZeroIsIsing) {
  for (std::size_t L = 3; L <= 6; ++L) {
    EXPECT_LT(models::deformed1d(L, 0.8, 0.0).distance(models::hamiltonian(models::isingChain(L), 0.8, 0.8)),
              1e-15);
  }
  EXPECT_THROW(models::deformed1d(2, 1.0, 1.0), BadSize);
}

TEST(Hamiltonians, Deformed1dTermsAndSymmetry) {
  const auto h = models::deformed1d(5, 1.0, 0.7).combined();
  EXPECT_EQ(h.size(), 4 * 5U);
  EXPECT_TRUE(h.isHermitian());
  EXPECT_EQ(pauli::commutator(h, OperatorSum::fromPauli(PauliString::fromString("XXXXX")))
                .combined(1e-14)
                .size(),
            0U);
}

TEST(Hamiltonians, GaugeWithGaussIncludesGaussTerms) {
  const Lattice3 l(2, 2, 2);
  EXPECT_EQ(models::gauge3dWithGauss(l, 1.0, 1.0, 0.0).combined().size(), 48U);
  EXPECT_EQ(models::gauge3dWithGauss(l, 1.0, 1.0, 0.5).combined().size(), 56U);
  EXPECT_LT(models::gauge3dWithGauss(l, 1.0, 0.4, 0.0)
                .distance(models::hamiltonian(models::gauge3d(l), 1.0, 0.4)),
            1e-15);
}

TEST(Hamiltonians, DefectMovesByConjugation) {
  // Flipping the plaquettes around one link is undone by X on that link.
  const Lattice3 l(2, 2, 2);
  for (std::size_t e = 0; e < l.links(); e += 7) {
    gf2::BitVector dual(l.plaquettes());
    for (auto p : l.plaquettesOfLink(e)) {
      dual.flip(p);
    }
    const auto hd = models::defect(l, 1.0, 0.6, 0.2, dual);
    const auto x = OperatorSum::fromPauli(PauliString::single(l.links(), e, 'X'));
    EXPECT_LT((x * hd * x).distance(models::gauge3dWithGauss(l, 1.0, 0.6, 0.2)), 1e-14);
  }
  EXPECT_THROW(models::defect(l, 1.0, 1.0, 0.0, gf2::BitVector(3)), BadSurface);
}

TEST(States, ToricStatesAreNormalizedAndOrthogonal) {
  const Lattice3 l(2, 2, 2);
  std::vector<StateVector> states;
  for (int b = 0; b < 8; ++b) {
    states.push_back(models::toricState(l, {(b & 1) != 0, (b & 2) != 0, (b & 4) != 0}));
    EXPECT_NEAR(states.back().norm(), 1.0, 1e-12);
  }
  for (int a = 0; a < 8; ++a) {
    for (int b = a + 1; b < 8; ++b) {
      EXPECT_LT(std::abs(inner(states[a], states[b])), 1e-12);
    }
  }
}
