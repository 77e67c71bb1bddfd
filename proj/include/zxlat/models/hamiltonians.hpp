#pragma once

#include "zxlat/gf2.hpp"
#include "zxlat/models/lattice3.hpp"
#include "zxlat/pauli.hpp"

namespace zxlat::models {

/// -J [ sum_i (Z_i Z_{i+1} + X_i)
///      - lambda/2 sum_i (X_{i-1} Z_i Z_{i+1} + Z_i Z_{i+1} X_{i+2}) ], L >= 3.
pauli::OperatorSum deformed1d(std::size_t L, double j, double lambda);

/// Plaquette flux term B_p = prod_{l in p} Z_l.
pauli::PauliString plaquetteTerm(const Lattice3& lat, std::size_t p);

/// -J sum_p B_p - h sum_l X_l - g sum_s G_s.
pauli::OperatorSum gauge3dWithGauss(const Lattice3& lat, double j, double h,
                                    double g);

/// Link-plaquette pairs (l, p) with p orthogonal to l and touching one of
/// its end points; 8 per link.
std::vector<std::pair<std::size_t, std::size_t>>
orthogonalPairs(const Lattice3& lat);

/// -J ( sum_p B_p + sum_l X_l - lambda/8 sum_{l perp p} X_l B_p ).
pauli::OperatorSum deformed3d(const Lattice3& lat, double j, double lambda);

/// Gauge Hamiltonian with the sign of B_p flipped on every plaquette p
/// pierced by the dual curve (an indicator over plaquettes).
pauli::OperatorSum defect(const Lattice3& lat, double j, double h, double g,
                          const gf2::BitVector& dualCurve);

} // namespace zxlat::models
