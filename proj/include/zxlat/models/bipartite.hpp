#pragma once

#include "zxlat/eval/structured.hpp"
#include "zxlat/gf2.hpp"
#include "zxlat/pauli.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace zxlat::models {

/// Reduced fraction with positive denominator.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  static Rational of(std::int64_t num, std::int64_t den = 1);
  /// "p/q" or "p".
  static Rational parse(const std::string& text);
  [[nodiscard]] double value() const {
    return static_cast<double>(num) / static_cast<double>(den);
  }
  [[nodiscard]] std::string toString() const;
  bool operator==(const Rational& other) const = default;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
};

/// Vertex map of the bipartite graph. For a preserving map, onV sends V to V
/// and onVHat sends V-hat to V-hat. For a reversing map, onV sends V into
/// V-hat and onVHat sends V-hat into V. Entries are indices into the target
/// list.
struct Automorphism {
  std::string name;
  bool reversing = false;
  std::vector<std::size_t> onV;
  std::vector<std::size_t> onVHat;

  [[nodiscard]] bool isInvolution() const;
  bool operator==(const Automorphism& other) const {
    return reversing == other.reversing && onV == other.onV &&
           onVHat == other.onVHat;
  }
};

/// Applies `second` after `first`: (second o first)(x) = second(first(x)).
Automorphism compose(const Automorphism& second, const Automorphism& first);
Automorphism identityAutomorphism(std::size_t nV, std::size_t nVHat);

/// Generalized transverse-field Ising model: one qubit per v in V, one Ising
/// term B_vhat = prod_v Z_v^sigma(vhat, v) per vhat.
struct BipartiteModel {
  std::string name;
  std::vector<std::string> vLabels;
  std::vector<std::string> vhatLabels;
  /// |V-hat| rows, |V| columns.
  gf2::BitMatrix sigma;
  Rational kappa;
  /// Known automorphisms, named after their lattice meaning.
  std::vector<Automorphism> automorphisms;

  [[nodiscard]] std::size_t nV() const { return sigma.cols(); }
  [[nodiscard]] std::size_t nVHat() const { return sigma.rows(); }
  [[nodiscard]] std::size_t edgeCount() const { return sigma.countOnes(); }
  /// (vhat, v) pairs with sigma = 1, row-major.
  [[nodiscard]] std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  /// Whether the graph on V + V-hat is connected.
  [[nodiscard]] bool isConnected() const;
  /// Canonical automorphism by name; throws std::out_of_range.
  [[nodiscard]] const Automorphism& automorphism(const std::string& name) const;

  bool operator==(const BipartiteModel& other) const;
};

bool isAutomorphism(const BipartiteModel& m, const Automorphism& a);

/// V and V-hat exchanged, sigma transposed, kappa -> |E|/2 - kappa.
BipartiteModel gauged(const BipartiteModel& m);

/// -J sum_vhat B_vhat - h sum_v X_v.
pauli::OperatorSum hamiltonian(const BipartiteModel& m, double j, double h);
pauli::PauliString isingTerm(const BipartiteModel& m, std::size_t vhat);

/// prod_v X_v^a_v; throws NotASymmetry unless sigma a = 0.
pauli::PauliString etaFor(const BipartiteModel& m, const gf2::BitVector& a);
/// eta_a for a kernel basis of sigma.
std::vector<pauli::PauliString> symmetryOps(const BipartiteModel& m);
std::size_t kernelDimension(const BipartiteModel& m);

/// Qubit permutation of a preserving automorphism: qubit v moves to pi(v).
eval::StructuredOp translationOp(const Automorphism& pi);

/// 2^(kappa - (|E| - |V-hat|)/2) * Permute(rho) * H^(all) * BasisMap(sigma).
eval::StructuredOp dualityOp(const BipartiteModel& m, const Automorphism& rho);

/// 2^(2 kappa - |E| + |V|) * sum over ker sigma of eta_a.
pauli::OperatorSum condensationOp(const BipartiteModel& m,
                                  std::uint64_t cap = std::uint64_t{1} << 20);
/// Coefficient c in D C = C D = c D: 2^(2 kappa + dim ker - |E| + |V|).
double absorptionCoefficient(const BipartiteModel& m);

/// Pads every string with identities: the result acts on qubits
/// [offset, offset + h.qubits()) of an n-qubit register.
pauli::OperatorSum embed(const pauli::OperatorSum& h, std::size_t n,
                         std::size_t offset);

} // namespace zxlat::models
