#pragma once

#include "zxlat/models/bipartite.hpp"
#include "zxlat/verify/report.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace zxlat::verify {

struct SuiteOptions {
  std::uint64_t seed = 0;
  /// Random states per state-vector identity.
  std::size_t randomStates = 5;
  /// Largest register for state-vector checks.
  std::size_t stateCap = 26;
  /// Largest register for dense-matrix checks.
  std::size_t denseCap = 10;
  /// Where to write D|+...+>, if anywhere.
  std::optional<std::string> dumpState;
};

/// Rewrite soundness: every rule on randomized instances.
Report selftestRules(const SuiteOptions& opts, std::size_t instancesPerRule = 3);

/// Kramers-Wannier operator on the periodic chain of L sites, with the
/// deformed Hamiltonian at coupling lambda.
Report verify1d(std::size_t L, double lambda, const SuiteOptions& opts);

/// Wegner duality on the Lx x Ly x Lz torus. With eigensolve, also checks
/// that no eigenvalue of the deformed model lies below the nine exact states.
Report verify3d(std::size_t lx, std::size_t ly, std::size_t lz, double lambda,
                bool eigensolve, const SuiteOptions& opts);

/// Graph-framework identities for an arbitrary model. Uses the model's own
/// automorphisms when it has reversing ones, otherwise searches.
Report verifyGraph(const models::BipartiteModel& m, const SuiteOptions& opts);

} // namespace zxlat::verify
