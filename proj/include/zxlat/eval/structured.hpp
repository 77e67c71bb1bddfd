#pragma once

#include "zxlat/eval/state.hpp"
#include "zxlat/gf2.hpp"
#include "zxlat/pauli.hpp"

#include <variant>
#include <vector>

namespace zxlat::eval {

struct StructuredOp;

/// |m> -> |A m>; amplitudes landing on the same image add up.
/// A has one row per output qubit and one column per input qubit.
struct Gf2BasisMap {
  gf2::BitMatrix a;
};

/// Hadamard on each listed qubit of an n-qubit register.
struct HLayer {
  std::size_t n = 0;
  std::vector<std::size_t> qubits;
};

struct PauliApply {
  pauli::PauliString p;
};

struct PauliSum {
  pauli::OperatorSum h;
};

/// Moves qubit q to position perm[q].
struct Permute {
  std::vector<std::size_t> perm;
};

struct Scale {
  std::size_t n = 0;
  Complex c = 1.0;
};

struct SumOf {
  std::vector<Complex> weights;
  std::vector<StructuredOp> ops;
};

/// ops[0] acts first.
struct ComposeOf {
  std::vector<StructuredOp> ops;
};

struct StructuredOp {
  std::variant<Gf2BasisMap, HLayer, PauliApply, PauliSum, Permute, Scale,
               SumOf, ComposeOf>
      node;
};

StructuredOp makeBasisMap(gf2::BitMatrix a);
StructuredOp makeHLayer(std::size_t n, std::vector<std::size_t> qubits);
StructuredOp makeHLayerAll(std::size_t n);
StructuredOp makePauli(pauli::PauliString p);
StructuredOp makePauliSum(pauli::OperatorSum h);
StructuredOp makePermute(std::vector<std::size_t> perm);
StructuredOp makeScale(std::size_t n, Complex c);
StructuredOp makeIdentity(std::size_t n);
StructuredOp makeSum(std::vector<Complex> weights,
                     std::vector<StructuredOp> ops);
/// Applies ops in the given order (first element first).
StructuredOp makeCompose(std::vector<StructuredOp> ops);
/// Matrix product order: product(A, B) applies B first.
StructuredOp product(const StructuredOp& after, const StructuredOp& before);
/// Inverse permutation.
std::vector<std::size_t> inversePermutation(const std::vector<std::size_t>& p);

[[nodiscard]] std::size_t inQubits(const StructuredOp& op);
[[nodiscard]] std::size_t outQubits(const StructuredOp& op);

StateVector applyStructured(const StructuredOp& op, const StateVector& psi);
/// Columns are applyStructured(op, e_k); throws TooLarge when n > cap.
DenseMatrix structuredToDense(const StructuredOp& op, std::size_t cap = 12);

// kernels, exposed for tests and benchmarks
StateVector basisMap(const gf2::BitMatrix& a, const StateVector& psi);
void hadamardLayerInPlace(StateVector& psi,
                          const std::vector<std::size_t>& qubits);
StateVector permuteQubits(const std::vector<std::size_t>& perm,
                          const StateVector& psi);

} // namespace zxlat::eval
