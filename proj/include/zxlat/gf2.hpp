#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace zxlat::gf2 {

class BitVector {
public:
  BitVector() = default;
  explicit BitVector(std::size_t length);

  static BitVector fromString(const std::string& bits);
  static BitVector fromIndices(std::size_t length,
                               const std::vector<std::size_t>& ones);

  [[nodiscard]] std::size_t size() const { return length_; }
  [[nodiscard]] bool get(std::size_t i) const {
    return ((words_[i / 64] >> (i % 64)) & 1U) != 0;
  }
  void set(std::size_t i, bool value = true);
  void flip(std::size_t i) { words_[i / 64] ^= (std::uint64_t{1} << (i % 64)); }

  BitVector& operator^=(const BitVector& other);
  friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }
  BitVector& operator&=(const BitVector& other);
  friend BitVector operator&(BitVector a, const BitVector& b) { return a &= b; }
  bool operator==(const BitVector& other) const = default;
  bool operator<(const BitVector& other) const;

  [[nodiscard]] std::size_t popcount() const;
  [[nodiscard]] bool parity() const { return (popcount() & 1U) != 0; }
  [[nodiscard]] bool isZero() const;
  [[nodiscard]] std::vector<std::size_t> ones() const;
  [[nodiscard]] std::string toString() const;

  /// Basis-index mask for state vectors: bit i of the vector lands on bit
  /// (size-1-i) of the result, so entry 0 is the most significant qubit.
  [[nodiscard]] std::uint64_t toIndexMask() const;

  [[nodiscard]] const std::vector<std::uint64_t>& words() const {
    return words_;
  }
  std::vector<std::uint64_t>& words() { return words_; }

private:
  std::size_t length_ = 0;
  std::vector<std::uint64_t> words_;
};

class BitMatrix {
public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  static BitMatrix fromRows(const std::vector<std::string>& rows,
                            std::size_t cols);

  [[nodiscard]] std::size_t rows() const { return rows_; }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool get(std::size_t r, std::size_t c) const {
    return rowVecs_[r].get(c);
  }
  void set(std::size_t r, std::size_t c, bool value = true) {
    rowVecs_[r].set(c, value);
  }
  void flip(std::size_t r, std::size_t c) { rowVecs_[r].flip(c); }

  [[nodiscard]] const BitVector& row(std::size_t r) const {
    return rowVecs_[r];
  }
  BitVector& row(std::size_t r) { return rowVecs_[r]; }
  [[nodiscard]] BitVector column(std::size_t c) const;

  [[nodiscard]] BitMatrix transpose() const;
  [[nodiscard]] std::size_t countOnes() const;
  bool operator==(const BitMatrix& other) const = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BitVector> rowVecs_;
};

BitVector matvec(const BitMatrix& a, const BitVector& x);
BitMatrix multiply(const BitMatrix& a, const BitMatrix& b);

/// Rank by column elimination (works on the transpose, independent of the
/// kernel routine).
std::size_t rank(const BitMatrix& a);

/// Nullspace basis. One vector per free column in increasing order; each basis
/// vector has a 1 at its own free column and 0 at all other free columns.
std::vector<BitVector> kernelBasis(const BitMatrix& a);

/// Row-reduces a list of vectors; the result is a basis of their span in
/// reduced echelon form (pivot = lowest set index).
std::vector<BitVector> reduceToEchelon(std::vector<BitVector> vectors);
bool inSpan(const std::vector<BitVector>& basis, const BitVector& v);

/// Gray-code walk over span(basis): element k is the XOR of the basis vectors
/// selected by the bits of k ^ (k >> 1). Element 0 is the zero vector.
class KernelEnumerator {
public:
  KernelEnumerator(std::vector<BitVector> basis, std::size_t length);

  [[nodiscard]] std::uint64_t count() const {
    return std::uint64_t{1} << basis_.size();
  }
  /// Returns false once all elements were produced.
  bool next(BitVector& out);

private:
  std::vector<BitVector> basis_;
  BitVector current_;
  std::uint64_t step_ = 0;
};

/// Enumerator over ker(a). Throws KernelTooLarge if 2^dim exceeds cap.
KernelEnumerator enumerateKernel(const BitMatrix& a, std::uint64_t cap);

std::vector<BitVector> collectKernel(const BitMatrix& a, std::uint64_t cap);

} // namespace zxlat::gf2
