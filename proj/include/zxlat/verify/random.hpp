#pragma once

#include "zxlat/eval/state.hpp"
#include "zxlat/models/lattice3.hpp"
#include "zxlat/pauli.hpp"
#include "zxlat/zx/diagram.hpp"

#include <random>

namespace zxlat::verify {

using Rng = std::mt19937_64;

/// Complex Gaussian amplitudes, normalized.
StateVector randomState(std::size_t n, Rng& rng);

/// Multiple of pi/4, or with probability `irrational` a random float phase.
zx::Phase randomPhase(Rng& rng, double irrational = 0.0);

/// Random open diagram with up to `legs` boundary ports.
zx::ZxDiagram randomDiagram(Rng& rng, std::size_t spiders, std::size_t legs,
                            std::size_t extraWires);

pauli::OperatorSum randomOperatorSum(std::size_t n, std::size_t terms, Rng& rng);

/// Non-empty curve as a link indicator. Open curves come from a short random
/// walk and always have end points; closed ones are sums of plaquette
/// boundaries, sometimes plus a straight non-contractible loop.
gf2::BitVector randomCurve(const models::Lattice3& lat, bool closed, Rng& rng);

} // namespace zxlat::verify
