#include "zxlat/models/lattice_ops.hpp"

#include "zxlat/errors.hpp"
#include "zxlat/models/hamiltonians.hpp"

#include <cmath>

namespace zxlat::models {

using pauli::OperatorSum;
using pauli::PauliString;

int normalOf(Plane p) {
  switch (p) {
  case Plane::XY:
    return 2;
  case Plane::YZ:
    return 0;
  case Plane::ZX:
    return 1;
  }
  return 2;
}

PauliString gaussOp(const Lattice3& lat, std::size_t s) {
  gf2::BitVector x(lat.links());
  for (std::size_t l : lat.linksOfSite(s)) {
    x.flip(l);
  }
  return PauliString::xType(x);
}

gf2::BitVector planeSurface(const Lattice3& lat, Plane p) {
  const int k = normalOf(p);
  gf2::BitVector out(lat.links());
  for (std::size_t l = 0; l < lat.links(); ++l) {
    if (lat.direction(l) == k && lat.siteCoords(l / 3)[k] == 0) {
      out.set(l, true);
    }
  }
  return out;
}

PauliString etaSurface(const Lattice3& lat, const gf2::BitVector& surface) {
  if (surface.size() != lat.links()) {
    throw BadSurface("surface indicator must have one entry per link");
  }
  return PauliString::xType(surface);
}

PauliString etaPlane(const Lattice3& lat, Plane p) {
  return etaSurface(lat, planeSurface(lat, p));
}

gf2::BitVector surfaceBoundary(const Lattice3& lat,
                               const gf2::BitVector& surface) {
  if (surface.size() != lat.links()) {
    throw BadSurface("surface indicator must have one entry per link");
  }
  gf2::BitVector out(lat.plaquettes());
  for (std::size_t p = 0; p < lat.plaquettes(); ++p) {
    bool odd = false;
    for (std::size_t l : lat.linksOfPlaquette(p)) {
      odd ^= surface.get(l);
    }
    out.set(p, odd);
  }
  return out;
}

bool isClosedSurface(const Lattice3& lat, const gf2::BitVector& surface) {
  return surfaceBoundary(lat, surface).isZero();
}

PauliString wilson(const Lattice3& lat, const gf2::BitVector& curve) {
  if (curve.size() != lat.links()) {
    throw BadCurve("curve indicator must have one entry per link");
  }
  return PauliString::zType(curve);
}

gf2::BitVector curveBoundary(const Lattice3& lat, const gf2::BitVector& curve) {
  if (curve.size() != lat.links()) {
    throw BadCurve("curve indicator must have one entry per link");
  }
  gf2::BitVector out(lat.sites());
  for (std::size_t l = 0; l < lat.links(); ++l) {
    if (curve.get(l)) {
      for (std::size_t s : lat.sitesOfLink(l)) {
        out.flip(s);
      }
    }
  }
  return out;
}

bool isClosedCurve(const Lattice3& lat, const gf2::BitVector& curve) {
  return curveBoundary(lat, curve).isZero();
}

gf2::BitVector plaquetteBoundary(const Lattice3& lat, std::size_t p) {
  gf2::BitVector out(lat.links());
  for (std::size_t l : lat.linksOfPlaquette(p)) {
    out.flip(l);
  }
  return out;
}

gf2::BitVector straightLoop(const Lattice3& lat, int k) {
  gf2::BitVector out(lat.links());
  const std::size_t len = k == 0 ? lat.lx() : (k == 1 ? lat.ly() : lat.lz());
  for (std::size_t t = 0; t < len; ++t) {
    std::array<long, 3> c{0, 0, 0};
    c[k] = static_cast<long>(t);
    out.set(lat.link(c[0], c[1], c[2], k), true);
  }
  return out;
}

bool crossingParity(const Lattice3& lat, const gf2::BitVector& curve, Plane p) {
  if (curve.size() != lat.links()) {
    throw BadCurve("curve indicator must have one entry per link");
  }
  return (curve & planeSurface(lat, p)).parity();
}

eval::StructuredOp latticeTranslation(const Lattice3& lat, long ax, long ay,
                                      long az) {
  return eval::makePermute(lat.translation(CellKind::Link, ax, ay, az));
}

eval::StructuredOp latticeParity(const Lattice3& lat) {
  return eval::makePermute(lat.parity(CellKind::Link));
}

eval::StructuredOp latticeRotation(const Lattice3& lat) {
  return eval::makePermute(lat.rotation111(CellKind::Link));
}

eval::StructuredOp FactoredOp::op() const {
  std::vector<eval::StructuredOp> ops;
  for (const auto& f : factors) {
    ops.push_back(eval::makePauliSum(f));
  }
  ops.push_back(eval::makeScale(n, scale));
  return eval::makeCompose(std::move(ops));
}

StateVector FactoredOp::apply(const StateVector& psi) const {
  StateVector out = psi;
  for (const auto& f : factors) {
    out = pauli::opsumApply(f, out);
  }
  out *= scale;
  return out;
}

OperatorSum FactoredOp::expand() const {
  OperatorSum out(n);
  out.add(scale, PauliString(n));
  for (const auto& f : factors) {
    out = f * out;
    out.combine();
  }
  return out;
}

OperatorSum projector(const PauliString& p, bool negative) {
  OperatorSum out(p.qubits());
  out.add(0.5, PauliString(p.qubits()));
  out.add(negative ? -0.5 : 0.5, p);
  return out;
}

FactoredOp higherCondensation(const Lattice3& lat, const gf2::BitVector& curve) {
  const auto ends = curveBoundary(lat, curve);
  FactoredOp out{lat.links(), 4.0, {}};
  // (1 + s eta) = 2 * projector, so 1/2 * 2^3 = 4 in front
  for (Plane p : kPlanes) {
    out.factors.push_back(projector(etaPlane(lat, p), crossingParity(lat, curve, p)));
  }
  for (std::size_t s = 0; s < lat.sites(); ++s) {
    out.factors.push_back(projector(gaussOp(lat, s), ends.get(s)));
  }
  return out;
}

FactoredOp condensationFactored(const Lattice3& lat) {
  return higherCondensation(lat, gf2::BitVector(lat.links()));
}

FactoredOp twoFormCondensation(const Lattice3& lat) {
  FactoredOp out{lat.links(), 2.0, {}};
  for (int k = 0; k < 3; ++k) {
    out.factors.push_back(projector(wilson(lat, straightLoop(lat, k))));
  }
  for (std::size_t p = 0; p < lat.plaquettes(); ++p) {
    out.factors.push_back(projector(plaquetteTerm(lat, p)));
  }
  return out;
}

namespace {

StateVector gaussProjected(const Lattice3& lat) {
  StateVector psi = StateVector::basis(lat.links(), 0);
  for (std::size_t s = 0; s < lat.sites(); ++s) {
    psi = pauli::opsumApply(projector(gaussOp(lat, s)), psi);
  }
  return psi;
}

} // namespace

StateVector toricVacuum(const Lattice3& lat) {
  StateVector psi = gaussProjected(lat);
  psi *= std::pow(2.0, (static_cast<double>(lat.sites()) - 1.0) / 2.0);
  return psi;
}

StateVector withFlux(const Lattice3& lat, const PlaneBits& xi, StateVector psi) {
  for (std::size_t i = 0; i < 3; ++i) {
    if (xi[i]) {
      pauli::applyInPlace(etaPlane(lat, kPlanes[i]), psi);
    }
  }
  return psi;
}

StateVector toricState(const Lattice3& lat, const PlaneBits& xi) {
  return withFlux(lat, xi, toricVacuum(lat));
}

StateVector zetaState(const Lattice3& lat, const PlaneBits& zeta) {
  const StateVector vacuum = toricVacuum(lat);
  StateVector out(lat.links());
  for (unsigned mask = 0; mask < 8; ++mask) {
    PlaneBits xi{(mask & 4) != 0, (mask & 2) != 0, (mask & 1) != 0};
    bool odd = false;
    for (std::size_t i = 0; i < 3; ++i) {
      odd ^= xi[i] && zeta[i];
    }
    out.axpy(odd ? -1.0 : 1.0, withFlux(lat, xi, vacuum));
  }
  out *= 1.0 / (2.0 * std::sqrt(2.0));
  return out;
}

StateVector membraneGasState(const Lattice3& lat, const PlaneBits& zeta) {
  StateVector psi = gaussProjected(lat);
  for (std::size_t i = 0; i < 3; ++i) {
    psi = pauli::opsumApply(projector(etaPlane(lat, kPlanes[i]), zeta[i]), psi);
  }
  psi *= 2.0 * std::pow(2.0, static_cast<double>(lat.sites()) / 2.0);
  return psi;
}

StateVector loopGasState(const Lattice3& lat, const PlaneBits& zeta) {
  StateVector psi = StateVector::plus(lat.links());
  for (std::size_t p = 0; p < lat.plaquettes(); ++p) {
    psi = pauli::opsumApply(projector(plaquetteTerm(lat, p)), psi);
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (zeta[i]) {
      pauli::applyInPlace(wilson(lat, straightLoop(lat, normalOf(kPlanes[i]))), psi);
    }
  }
  psi *= std::pow(2.0, static_cast<double>(lat.sites()) - 1.0);
  return psi;
}

} // namespace zxlat::models
