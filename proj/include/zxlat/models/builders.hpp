#pragma once

#include "zxlat/models/bipartite.hpp"
#include "zxlat/models/lattice3.hpp"

namespace zxlat::models {

/// Periodic chain: V = sites i, V-hat = links i+1/2 joining i and i+1.
/// kappa = L/2. Automorphisms "half_translation" (i -> i+1/2 -> i+1) and the
/// reflection involution "reflection" (i -> -i+1/2).
BipartiteModel isingChain(std::size_t L);

/// Links and plaquettes of the cubic lattice, kappa = 4 LxLyLz.
/// Automorphisms "half_translation" (shift by (1/2,1/2,1/2)) and the
/// involution "parity" (x -> -x + (1/2,1/2,1/2)).
BipartiteModel gauge3d(const Lattice3& lat);

/// V = V-hat = sites, sigma_ij = [j = i +- 1]; L even, L >= 4. kappa = L/2.
/// Involution "swap" (site i <-> term i).
BipartiteModel ashkinTeller(std::size_t L);

/// V = V-hat = sites, sigma_ij = [j in {i-1, i, i+1}]; L a multiple of 3.
/// kappa = L. Involution "swap".
BipartiteModel threeSpin(std::size_t L);

/// V = sites (i,j), V-hat = plaquettes (i+1/2, j+1/2), kappa = 3 LxLy/2.
/// Automorphisms "half_translation" and the pi-rotation involution
/// "rotation" (x -> -x + (1/2,1/2)).
BipartiteModel plaquetteIsing(std::size_t lx, std::size_t ly);

/// 2d transverse-field Ising model: V = sites, V-hat = links of the square
/// lattice, kappa = 3 LxLy/2 (so that its condensation operator is 1 + eta).
BipartiteModel ising2d(std::size_t lx, std::size_t ly);

/// base x K2 written as base + gauged(base): V = V0 + V-hat0 and
/// V-hat = V-hat0 + V0 with sigma = diag(sigma0, sigma0^T) and
/// kappa = |E0|/2. Involution "swap" exchanges the two copies.
BipartiteModel productWithDual(const BipartiteModel& base);

} // namespace zxlat::models
