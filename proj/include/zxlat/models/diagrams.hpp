#pragma once

#include "zxlat/gf2.hpp"
#include "zxlat/models/bipartite.hpp"
#include "zxlat/zx/diagram.hpp"

namespace zxlat::models {

/// Three equivalent drawings of the Kramers-Wannier cell, related by colour
/// change on one of the two spiders.
enum class KwForm {
  ZZ,          // two Z spiders, Hadamards on the vertical wires
  XTopPlainIn, // upper X spider, Hadamard on the output
  XBottomHIn,  // lower X spider, Hadamard on the input
};

/// One site of the Kramers-Wannier operator. Inputs: [site, west];
/// outputs: [site, east]. Carries sqrt 2 of the overall scalar.
zx::ZxDiagram kwCell(KwForm form = KwForm::ZZ);
/// Periodic chain of L cells: the L-qubit duality operator.
zx::ZxDiagram kwDiagram(std::size_t L, KwForm form = KwForm::ZZ);

/// Z spider per v (fed by input v), X spider per vhat with a Hadamard to
/// output vhat, plain wires along sigma, scalar 2^kappa. Needs an integer
/// or half-integer kappa.
zx::ZxDiagram dualityDiagram(const BipartiteModel& m);
/// dualityDiagram followed by the output relabelling of rho.
zx::ZxDiagram dualityDiagram(const BipartiteModel& m, const Automorphism& rho);

/// 2^{L/2} times a Z(n pi) spider joined to an X spider on every through
/// wire; equals 1 + (-1)^n eta.
zx::ZxDiagram chainCondensationDiagram(std::size_t L, int n);

/// Wires i -> -i mod L.
zx::ZxDiagram chainReflectionDiagram(std::size_t L);

/// <out| d |in> for computational basis states, by plugging the ports.
Complex basisElement(const zx::ZxDiagram& d, const gf2::BitVector& out,
                     const gf2::BitVector& in);

} // namespace zxlat::models
