#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zxlat {

using Complex = std::complex<double>;

/// 2^n amplitudes; qubit 0 is the most significant bit of the index.
class StateVector {
public:
  StateVector() = default;
  explicit StateVector(std::size_t nQubits);
  StateVector(std::size_t nQubits, std::vector<Complex> amplitudes);

  static StateVector basis(std::size_t nQubits, std::uint64_t index);
  static StateVector fromBits(const std::vector<int>& bits);
  /// |+...+> (normalized).
  static StateVector plus(std::size_t nQubits);

  [[nodiscard]] std::size_t qubits() const { return n_; }
  [[nodiscard]] std::size_t size() const { return amps_.size(); }
  Complex& operator[](std::size_t i) { return amps_[i]; }
  const Complex& operator[](std::size_t i) const { return amps_[i]; }
  [[nodiscard]] Complex* data() { return amps_.data(); }
  [[nodiscard]] const Complex* data() const { return amps_.data(); }
  [[nodiscard]] const std::vector<Complex>& amplitudes() const { return amps_; }

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(Complex c);
  friend StateVector operator+(StateVector a, const StateVector& b) {
    return a += b;
  }
  friend StateVector operator-(StateVector a, const StateVector& b) {
    return a -= b;
  }
  friend StateVector operator*(Complex c, StateVector a) { return a *= c; }
  /// this += c * other
  void axpy(Complex c, const StateVector& other);

  [[nodiscard]] double norm() const;

private:
  std::size_t n_ = 0;
  std::vector<Complex> amps_;
};

/// <a|b>, summed in fixed-size chunks so the result does not depend on how
/// the loop is scheduled.
Complex inner(const StateVector& a, const StateVector& b);
double maxAbsDiff(const StateVector& a, const StateVector& b);
/// ||a - b|| / ||b|| (absolute error when b vanishes).
double relativeError(const StateVector& a, const StateVector& b);
/// ||a - b|| without materializing the difference.
double distance(const StateVector& a, const StateVector& b);

/// Binary dump: u32 qubit count, then (re, im) doubles little-endian.
void writeStateDump(const std::string& path, const StateVector& psi);
StateVector readStateDump(const std::string& path);

class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);

  static DenseMatrix identity(std::size_t dim);
  static DenseMatrix fromRows(
      const std::vector<std::vector<Complex>>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  DenseMatrix& operator+=(const DenseMatrix& other);
  DenseMatrix& operator*=(Complex c);
  friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    return a += b;
  }
  friend DenseMatrix operator*(Complex c, DenseMatrix a) { return a *= c; }

  [[nodiscard]] DenseMatrix adjoint() const;
  [[nodiscard]] StateVector apply(const StateVector& psi) const;
  [[nodiscard]] StateVector column(std::size_t c) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);
double maxAbsDiff(const DenseMatrix& a, const DenseMatrix& b);

} // namespace zxlat
