#pragma once

#include "zxlat/eval/state.hpp"
#include "zxlat/gf2.hpp"

#include <string>
#include <vector>

namespace zxlat::pauli {

/// i^phase * prod_q X_q^{x_q} Z_q^{z_q}, X to the left of Z on each qubit.
/// On a basis state: P|m> = i^phase (-1)^{z.m} |m + x>.
class PauliString {
public:
  PauliString() = default;
  explicit PauliString(std::size_t n);
  PauliString(gf2::BitVector x, gf2::BitVector z, int phase = 0);

  static PauliString identity(std::size_t n) { return PauliString(n); }
  /// Letters I, X, Y, Z; an optional leading sign "-", "i" or "-i".
  static PauliString fromString(const std::string& text);
  static PauliString single(std::size_t n, std::size_t qubit, char letter);
  static PauliString xType(const gf2::BitVector& support);
  static PauliString zType(const gf2::BitVector& support);

  [[nodiscard]] std::size_t qubits() const { return x_.size(); }
  [[nodiscard]] const gf2::BitVector& x() const { return x_; }
  [[nodiscard]] const gf2::BitVector& z() const { return z_; }
  [[nodiscard]] int phase() const { return phase_; }
  void setPhase(int p) { phase_ = ((p % 4) + 4) % 4; }

  /// The phase that makes this string Hermitian: |x & z| mod 4.
  [[nodiscard]] int hermitianPhase() const;
  [[nodiscard]] bool isHermitian() const;
  [[nodiscard]] bool isIdentityUpToPhase() const {
    return x_.isZero() && z_.isZero();
  }
  [[nodiscard]] PauliString adjoint() const;
  [[nodiscard]] std::string toString() const;

  bool operator==(const PauliString& other) const = default;

private:
  gf2::BitVector x_;
  gf2::BitVector z_;
  int phase_ = 0;
};

PauliString multiply(const PauliString& a, const PauliString& b);
inline PauliString operator*(const PauliString& a, const PauliString& b) {
  return multiply(a, b);
}
bool commutes(const PauliString& a, const PauliString& b);

/// psi <- P psi.
void applyInPlace(const PauliString& p, StateVector& psi);
StateVector apply(const PauliString& p, const StateVector& psi);

struct Term {
  Complex coeff;
  PauliString op;
};

/// Weighted sum of Pauli strings. Terms may be appended freely; combine()
/// brings the sum to canonical form: every string carries its Hermitian
/// phase, terms are sorted by (x, z) and zero coefficients are dropped.
class OperatorSum {
public:
  OperatorSum() = default;
  explicit OperatorSum(std::size_t n) : n_(n) {}

  static OperatorSum identity(std::size_t n, Complex c = 1.0);
  static OperatorSum fromPauli(const PauliString& p, Complex c = 1.0);

  [[nodiscard]] std::size_t qubits() const { return n_; }
  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  void add(Complex c, const PauliString& p);
  OperatorSum& operator+=(const OperatorSum& other);
  OperatorSum& operator-=(const OperatorSum& other);
  OperatorSum& operator*=(Complex c);
  friend OperatorSum operator+(OperatorSum a, const OperatorSum& b) {
    return a += b;
  }
  friend OperatorSum operator-(OperatorSum a, const OperatorSum& b) {
    return a -= b;
  }
  friend OperatorSum operator*(Complex c, OperatorSum a) { return a *= c; }

  OperatorSum& combine(double dropTol = 0.0);
  [[nodiscard]] OperatorSum combined(double dropTol = 0.0) const;
  [[nodiscard]] OperatorSum adjoint() const;
  /// Term-level check after combining: real coefficients within tol.
  [[nodiscard]] bool isHermitian(double tol = 1e-12) const;
  /// Largest coefficient magnitude of (this - other), both combined.
  [[nodiscard]] double distance(const OperatorSum& other) const;

private:
  std::size_t n_ = 0;
  std::vector<Term> terms_;
};

/// All pairwise products, combined.
OperatorSum product(const OperatorSum& a, const OperatorSum& b);
OperatorSum operator*(const OperatorSum& a, const OperatorSum& b);
OperatorSum commutator(const OperatorSum& a, const OperatorSum& b);

StateVector opsumApply(const OperatorSum& h, const StateVector& psi);
/// <psi|H|psi> / <psi|psi>.
Complex expectation(const OperatorSum& h, const StateVector& psi);
DenseMatrix toDense(const OperatorSum& h);
DenseMatrix toDense(const PauliString& p);

} // namespace zxlat::pauli
