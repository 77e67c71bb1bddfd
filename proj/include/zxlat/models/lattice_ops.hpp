#pragma once

#include "zxlat/eval/state.hpp"
#include "zxlat/eval/structured.hpp"
#include "zxlat/gf2.hpp"
#include "zxlat/models/lattice3.hpp"
#include "zxlat/pauli.hpp"

#include <array>

namespace zxlat::models {

/// Coordinate planes; the surface for plane (i,j) is made of the links in the
/// third direction k at k = 0 (seen from the dual lattice).
enum class Plane { XY = 0, YZ = 1, ZX = 2 };

inline constexpr std::array<Plane, 3> kPlanes{Plane::XY, Plane::YZ, Plane::ZX};

/// Direction orthogonal to the plane.
int normalOf(Plane p);

/// G_s: X on the six links at site s.
pauli::PauliString gaussOp(const Lattice3& lat, std::size_t s);

/// Links crossed by the dual plane.
gf2::BitVector planeSurface(const Lattice3& lat, Plane p);
/// X on every link of a dual surface (indicator over links).
pauli::PauliString etaSurface(const Lattice3& lat, const gf2::BitVector& surface);
pauli::PauliString etaPlane(const Lattice3& lat, Plane p);
/// Boundary of a dual surface as an indicator over plaquettes.
gf2::BitVector surfaceBoundary(const Lattice3& lat, const gf2::BitVector& surface);
bool isClosedSurface(const Lattice3& lat, const gf2::BitVector& surface);

/// Z on every link of a curve (indicator over links).
pauli::PauliString wilson(const Lattice3& lat, const gf2::BitVector& curve);
/// End points of a curve as an indicator over sites.
gf2::BitVector curveBoundary(const Lattice3& lat, const gf2::BitVector& curve);
bool isClosedCurve(const Lattice3& lat, const gf2::BitVector& curve);
/// Boundary of a plaquette as a curve.
gf2::BitVector plaquetteBoundary(const Lattice3& lat, std::size_t p);
/// Straight loop in direction k through the origin.
gf2::BitVector straightLoop(const Lattice3& lat, int k);
/// Parity of the crossings of a curve with the dual plane.
bool crossingParity(const Lattice3& lat, const gf2::BitVector& curve, Plane p);

/// Link permutations as qubit permutations.
eval::StructuredOp latticeTranslation(const Lattice3& lat, long ax, long ay,
                                      long az);
eval::StructuredOp latticeParity(const Lattice3& lat);
eval::StructuredOp latticeRotation(const Lattice3& lat);

/// scale * factors[n-1] * ... * factors[0], kept unexpanded.
struct FactoredOp {
  std::size_t n = 0;
  Complex scale = 1.0;
  std::vector<pauli::OperatorSum> factors;

  [[nodiscard]] eval::StructuredOp op() const;
  [[nodiscard]] StateVector apply(const StateVector& psi) const;
  /// Multiplies out, combining after every factor.
  [[nodiscard]] pauli::OperatorSum expand() const;
};

/// (1 + sign P) / 2
pauli::OperatorSum projector(const pauli::PauliString& p, bool negative = false);

/// 1/2 prod_planes (1 + eta) prod_s (1 + G_s)/2.
FactoredOp condensationFactored(const Lattice3& lat);
/// 1/2 prod_planes (1 + (-1)^{crossing} eta) prod_s (1 + (-1)^{endpoint} G_s)/2.
FactoredOp higherCondensation(const Lattice3& lat, const gf2::BitVector& curve);
/// 1/4 prod_k (1 + W_k) prod_p (1 + B_p)/2.
FactoredOp twoFormCondensation(const Lattice3& lat);

/// Flux label xi, one bit per plane in kPlanes order.
using PlaneBits = std::array<bool, 3>;

/// 2^{(V-1)/2} prod_s (1 + G_s)/2 |0...0>, the flux-free toric state.
StateVector toricVacuum(const Lattice3& lat);
/// prod eta^{xi} applied to a state.
StateVector withFlux(const Lattice3& lat, const PlaneBits& xi, StateVector psi);
/// 2^{(V-1)/2} prod eta^{xi} prod_s (1 + G_s)/2 |0...0>.
StateVector toricState(const Lattice3& lat, const PlaneBits& xi);
/// (1/(2 sqrt 2)) sum_xi (-1)^{zeta.xi} |xi>.
StateVector zetaState(const Lattice3& lat, const PlaneBits& zeta);
/// 2 * 2^{V/2} prod (1 + (-1)^{zeta} eta)/2 prod_s (1 + G_s)/2 |0...0>.
StateVector membraneGasState(const Lattice3& lat, const PlaneBits& zeta);
/// 2^{V-1} prod W_k^{zeta} prod_p (1 + B_p)/2 |+...+>, with the plane (i,j)
/// paired to the loop along the third direction.
StateVector loopGasState(const Lattice3& lat, const PlaneBits& zeta);

} // namespace zxlat::models
