#pragma once

#include "zxlat/eval/state.hpp"
#include "zxlat/models/lattice3.hpp"
#include "zxlat/pauli.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace zxlat::models {

struct LanczosOptions {
  std::size_t maxIterations = 300;
  /// Stop once both the step change of the lowest Ritz value and its
  /// residual estimate drop below this.
  double tolerance = 1e-9;
  std::uint64_t seed = 0;
};

struct LanczosResult {
  double lowest = 0.0;
  std::size_t iterations = 0;
  /// |H v - lowest v| for the Ritz vector.
  double residual = 0.0;
  bool converged = false;
};

using LinearMap = std::function<StateVector(const StateVector&)>;

/// Lowest eigenvalue of a Hermitian map on nQubits qubits; Lanczos with full
/// reorthogonalization from a random start.
LanczosResult lanczosLowest(const LinearMap& h, std::size_t nQubits,
                            const LanczosOptions& opts = {});

/// All eigenvalues of a small Hermitian sum, ascending.
std::vector<double> denseSpectrum(const pauli::OperatorSum& h,
                                  std::size_t cap = 12);

/// Gauge fixing of the Gauss-law sector (every G_s = +1) with a spanning
/// tree of sites: tree links are set to 0 in the Z basis, leaving one qubit
/// per non-tree link.
class GaugeFixing {
public:
  explicit GaugeFixing(const Lattice3& lat);

  [[nodiscard]] std::size_t reducedQubits() const { return kept_.size(); }
  [[nodiscard]] const std::vector<std::size_t>& keptLinks() const { return kept_; }
  [[nodiscard]] const std::vector<std::size_t>& treeLinks() const { return tree_; }

  /// Valid for gauge-invariant strings only; throws NotASymmetry otherwise.
  [[nodiscard]] pauli::PauliString reduce(const pauli::PauliString& p) const;
  [[nodiscard]] pauli::OperatorSum reduce(const pauli::OperatorSum& h) const;
  /// Gauge-invariant full state with the given reduced amplitudes; norm is
  /// preserved.
  [[nodiscard]] StateVector lift(const StateVector& reduced) const;

private:
  const Lattice3* lat_;
  std::vector<std::size_t> kept_;
  std::vector<std::size_t> tree_;
  std::vector<long> keptIndex_;
  // per tree link: the non-tree links across the cut it defines
  std::vector<gf2::BitVector> cut_;
  // per site except the root: gauge transformation mask on full links
  std::vector<gf2::BitVector> gauss_;
};

} // namespace zxlat::models
