#pragma once

#include "zxlat/eval/state.hpp"
#include "zxlat/zx/diagram.hpp"

#include <cstdint>
#include <optional>

namespace zxlat::eval {

struct ContractOptions {
  /// Maximum |inputs| + |outputs| for a dense result.
  std::size_t denseCap = 12;
  /// Largest intermediate factor (number of binary indices).
  std::size_t rankLimit = 24;
  /// When set, internal indices are eliminated in a random order drawn from
  /// this seed instead of the greedy minimum-rank order.
  std::optional<std::uint64_t> randomOrderSeed;
};

/// Dense matrix of a diagram: rows index outputs, columns index inputs.
DenseMatrix contract(const zx::ZxDiagram& d, const ContractOptions& opts = {});

/// Value of a diagram without boundary. Ignores the dense cap.
Complex contractScalar(const zx::ZxDiagram& d,
                       const ContractOptions& opts = {});

/// contract(d) * psi without building the matrix.
StateVector applyDiagram(const zx::ZxDiagram& d, const StateVector& psi,
                         const ContractOptions& opts = {});

/// Max-norm distance of the two dense maps.
double semanticDistance(const zx::ZxDiagram& a, const zx::ZxDiagram& b,
                        const ContractOptions& opts = {});
bool semanticEq(const zx::ZxDiagram& a, const zx::ZxDiagram& b, double tol,
                const ContractOptions& opts = {});

} // namespace zxlat::eval
