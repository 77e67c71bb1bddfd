#include "zxlat/eval/state.hpp"

#include "zxlat/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>

namespace zxlat {

namespace {

constexpr std::size_t kChunk = 4096;

void requireSameShape(const StateVector& a, const StateVector& b) {
  if (a.qubits() != b.qubits()) {
    throw DimensionMismatch("states on " + std::to_string(a.qubits()) +
                            " and " + std::to_string(b.qubits()) + " qubits");
  }
}

} // namespace

StateVector::StateVector(std::size_t nQubits)
    : n_(nQubits), amps_(std::size_t{1} << nQubits) {}

StateVector::StateVector(std::size_t nQubits, std::vector<Complex> amplitudes)
    : n_(nQubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << nQubits)) {
    throw DimensionMismatch("amplitude count does not match 2^n");
  }
}

StateVector StateVector::basis(std::size_t nQubits, std::uint64_t index) {
  StateVector s(nQubits);
  s.amps_.at(index) = 1.0;
  return s;
}

StateVector StateVector::fromBits(const std::vector<int>& bits) {
  std::uint64_t index = 0;
  for (int b : bits) {
    index = (index << 1) | static_cast<std::uint64_t>(b & 1);
  }
  return basis(bits.size(), index);
}

StateVector StateVector::plus(std::size_t nQubits) {
  StateVector s(nQubits);
  const double amp = std::pow(2.0, -0.5 * static_cast<double>(nQubits));
  std::fill(s.amps_.begin(), s.amps_.end(), Complex(amp));
  return s;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  requireSameShape(*this, other);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    amps_[i] += other.amps_[i];
  }
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  requireSameShape(*this, other);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    amps_[i] -= other.amps_[i];
  }
  return *this;
}

StateVector& StateVector::operator*=(Complex c) {
  for (auto& a : amps_) {
    a *= c;
  }
  return *this;
}

void StateVector::axpy(Complex c, const StateVector& other) {
  requireSameShape(*this, other);
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    amps_[i] += c * other.amps_[i];
  }
}

double StateVector::norm() const { return std::sqrt(inner(*this, *this).real()); }

Complex inner(const StateVector& a, const StateVector& b) {
  requireSameShape(a, b);
  Complex total = 0.0;
  for (std::size_t start = 0; start < a.size(); start += kChunk) {
    const auto stop = std::min(a.size(), start + kChunk);
    Complex part = 0.0;
    for (std::size_t i = start; i < stop; ++i) {
      part += std::conj(a[i]) * b[i];
    }
    total += part;
  }
  return total;
}

double maxAbsDiff(const StateVector& a, const StateVector& b) {
  requireSameShape(a, b);
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    m = std::max(m, std::abs(a[i] - b[i]));
  }
  return m;
}

double distance(const StateVector& a, const StateVector& b) {
  requireSameShape(a, b);
  double total = 0.0;
  for (std::size_t start = 0; start < a.size(); start += kChunk) {
    const auto stop = std::min(a.size(), start + kChunk);
    double part = 0.0;
    for (std::size_t i = start; i < stop; ++i) {
      part += std::norm(a[i] - b[i]);
    }
    total += part;
  }
  return std::sqrt(total);
}

double relativeError(const StateVector& a, const StateVector& b) {
  const double d = distance(a, b);
  const double ref = b.norm();
  return ref > 1e-300 ? d / ref : d;
}

void writeStateDump(const std::string& path, const StateVector& psi) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  const auto n = static_cast<std::uint32_t>(psi.qubits());
  unsigned char header[4];
  for (int k = 0; k < 4; ++k) {
    header[k] = static_cast<unsigned char>((n >> (8 * k)) & 0xFFU);
  }
  out.write(reinterpret_cast<const char*>(header), 4);
  // doubles are written in host order; all supported targets are little-endian
  static_assert(std::endian::native == std::endian::little);
  out.write(reinterpret_cast<const char*>(psi.data()),
            static_cast<std::streamsize>(psi.size() * sizeof(Complex)));
}

StateVector readStateDump(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  unsigned char header[4];
  in.read(reinterpret_cast<char*>(header), 4);
  std::uint32_t n = 0;
  for (int k = 0; k < 4; ++k) {
    n |= static_cast<std::uint32_t>(header[k]) << (8 * k);
  }
  StateVector psi(n);
  in.read(reinterpret_cast<char*>(psi.data()),
          static_cast<std::streamsize>(psi.size() * sizeof(Complex)));
  if (!in) {
    throw ParseError("truncated state dump " + path);
  }
  return psi;
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
  DenseMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    m(i, i) = 1.0;
  }
  return m;
}

DenseMatrix DenseMatrix::fromRows(
    const std::vector<std::vector<Complex>>& rows) {
  DenseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < m.cols_; ++c) {
      m(r, c) = rows[r].at(c);
    }
  }
  return m;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) {
    throw DimensionMismatch("matrix sum shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) {
    data_[i] += other.data_[i];
  }
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex c) {
  for (auto& x : data_) {
    x *= c;
  }
  return *this;
}

DenseMatrix DenseMatrix::adjoint() const {
  DenseMatrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      out(c, r) = std::conj((*this)(r, c));
    }
  }
  return out;
}

StateVector DenseMatrix::apply(const StateVector& psi) const {
  if (psi.size() != cols_) {
    throw DimensionMismatch("matrix-vector shape mismatch");
  }
  std::size_t n = 0;
  while ((std::size_t{1} << n) < rows_) {
    ++n;
  }
  StateVector out(n);
  for (std::size_t r = 0; r < rows_; ++r) {
    Complex acc = 0.0;
    for (std::size_t c = 0; c < cols_; ++c) {
      acc += (*this)(r, c) * psi[c];
    }
    out[r] = acc;
  }
  return out;
}

StateVector DenseMatrix::column(std::size_t c) const {
  std::size_t n = 0;
  while ((std::size_t{1} << n) < rows_) {
    ++n;
  }
  StateVector out(n);
  for (std::size_t r = 0; r < rows_; ++r) {
    out[r] = (*this)(r, c);
  }
  return out;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("matrix product shape mismatch");
  }
  DenseMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto x = a(r, k);
      if (x == Complex(0.0)) {
        continue;
      }
      for (std::size_t c = 0; c < b.cols(); ++c) {
        out(r, c) += x * b(k, c);
      }
    }
  }
  return out;
}

DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
        }
      }
    }
  }
  return out;
}

double maxAbsDiff(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionMismatch("matrix comparison shape mismatch");
  }
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      m = std::max(m, std::abs(a(r, c) - b(r, c)));
    }
  }
  return m;
}

} // namespace zxlat
