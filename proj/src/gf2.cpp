#include "zxlat/gf2.hpp"

#include "zxlat/errors.hpp"

#include <algorithm>
#include <bit>

namespace zxlat::gf2 {

namespace {
std::size_t wordCount(std::size_t bits) { return (bits + 63) / 64; }
} // namespace

BitVector::BitVector(std::size_t length)
    : length_(length), words_(wordCount(length), 0) {}

BitVector BitVector::fromString(const std::string& bits) {
  BitVector v(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      v.set(i);
    } else if (bits[i] != '0') {
      throw NonBinaryEntry("bit string contains '" + std::string(1, bits[i]) +
                           "'");
    }
  }
  return v;
}

BitVector BitVector::fromIndices(std::size_t length,
                                 const std::vector<std::size_t>& ones) {
  BitVector v(length);
  for (auto i : ones) {
    if (i >= length) {
      throw DimensionMismatch("index out of range in fromIndices");
    }
    v.flip(i);
  }
  return v;
}

void BitVector::set(std::size_t i, bool value) {
  const auto mask = std::uint64_t{1} << (i % 64);
  if (value) {
    words_[i / 64] |= mask;
  } else {
    words_[i / 64] &= ~mask;
  }
}

BitVector& BitVector::operator^=(const BitVector& other) {
  if (other.length_ != length_) {
    throw DimensionMismatch("xor of bit vectors with different lengths");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] ^= other.words_[w];
  }
  return *this;
}

BitVector& BitVector::operator&=(const BitVector& other) {
  if (other.length_ != length_) {
    throw DimensionMismatch("and of bit vectors with different lengths");
  }
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= other.words_[w];
  }
  return *this;
}

bool BitVector::operator<(const BitVector& other) const {
  if (length_ != other.length_) {
    return length_ < other.length_;
  }
  // lexicographic in index order
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != other.words_[w]) {
      const auto diff = words_[w] ^ other.words_[w];
      const auto low = diff & (~diff + 1);
      return (other.words_[w] & low) != 0;
    }
  }
  return false;
}

std::size_t BitVector::popcount() const {
  std::size_t total = 0;
  for (auto w : words_) {
    total += static_cast<std::size_t>(std::popcount(w));
  }
  return total;
}

bool BitVector::isZero() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t w = 0; w < words_.size(); ++w) {
    auto word = words_[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

std::string BitVector::toString() const {
  std::string s(length_, '0');
  for (auto i : ones()) {
    s[i] = '1';
  }
  return s;
}

std::uint64_t BitVector::toIndexMask() const {
  if (length_ > 64) {
    throw TooLarge("index mask needs at most 64 bits");
  }
  std::uint64_t mask = 0;
  for (auto i : ones()) {
    mask |= std::uint64_t{1} << (length_ - 1 - i);
  }
  return mask;
}

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), rowVecs_(rows, BitVector(cols)) {}

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.set(i, i);
  }
  return m;
}

BitMatrix BitMatrix::fromRows(const std::vector<std::string>& rows,
                              std::size_t cols) {
  BitMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw DimensionMismatch("row " + std::to_string(r) + " has length " +
                              std::to_string(rows[r].size()) + ", expected " +
                              std::to_string(cols));
    }
    m.rowVecs_[r] = BitVector::fromString(rows[r]);
  }
  return m;
}

BitVector BitMatrix::column(std::size_t c) const {
  BitVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    if (get(r, c)) {
      v.set(r);
    }
  }
  return v;
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (auto c : rowVecs_[r].ones()) {
      t.set(c, r);
    }
  }
  return t;
}

std::size_t BitMatrix::countOnes() const {
  std::size_t total = 0;
  for (const auto& r : rowVecs_) {
    total += r.popcount();
  }
  return total;
}

BitVector matvec(const BitMatrix& a, const BitVector& x) {
  if (a.cols() != x.size()) {
    throw DimensionMismatch("matvec: matrix has " + std::to_string(a.cols()) +
                            " columns, vector has length " +
                            std::to_string(x.size()));
  }
  BitVector y(a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if ((a.row(r) & x).parity()) {
      y.set(r);
    }
  }
  return y;
}

BitMatrix multiply(const BitMatrix& a, const BitMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionMismatch("multiply: inner dimensions differ");
  }
  BitMatrix out(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (auto k : a.row(r).ones()) {
      out.row(r) ^= b.row(k);
    }
  }
  return out;
}

std::size_t rank(const BitMatrix& a) {
  // eliminate over the columns of a, i.e. the rows of its transpose
  auto cols = a.transpose();
  std::size_t r = 0;
  for (std::size_t bit = 0; bit < a.rows() && r < cols.rows(); ++bit) {
    std::size_t pivot = r;
    while (pivot < cols.rows() && !cols.get(pivot, bit)) {
      ++pivot;
    }
    if (pivot == cols.rows()) {
      continue;
    }
    std::swap(cols.row(pivot), cols.row(r));
    for (std::size_t k = r + 1; k < cols.rows(); ++k) {
      if (cols.get(k, bit)) {
        cols.row(k) ^= cols.row(r);
      }
    }
    ++r;
  }
  return r;
}

std::vector<BitVector> kernelBasis(const BitMatrix& a) {
  BitMatrix m = a;
  std::vector<std::size_t> pivotCols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t pivot = r;
    while (pivot < a.rows() && !m.get(pivot, c)) {
      ++pivot;
    }
    if (pivot == a.rows()) {
      continue;
    }
    std::swap(m.row(pivot), m.row(r));
    for (std::size_t k = 0; k < a.rows(); ++k) {
      if (k != r && m.get(k, c)) {
        m.row(k) ^= m.row(r);
      }
    }
    pivotCols.push_back(c);
    ++r;
  }

  std::vector<bool> isPivot(a.cols(), false);
  for (auto c : pivotCols) {
    isPivot[c] = true;
  }
  std::vector<BitVector> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (isPivot[free]) {
      continue;
    }
    BitVector v(a.cols());
    v.set(free);
    for (std::size_t i = 0; i < pivotCols.size(); ++i) {
      if (m.get(i, free)) {
        v.set(pivotCols[i]);
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<BitVector> reduceToEchelon(std::vector<BitVector> vectors) {
  std::vector<BitVector> out;
  std::vector<std::size_t> pivots;
  for (auto& v : vectors) {
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (v.get(pivots[i])) {
        v ^= out[i];
      }
    }
    if (v.isZero()) {
      continue;
    }
    const auto p = v.ones().front();
    for (std::size_t i = 0; i < out.size(); ++i) {
      if (out[i].get(p)) {
        out[i] ^= v;
      }
    }
    out.push_back(v);
    pivots.push_back(p);
  }
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return pivots[x] < pivots[y]; });
  std::vector<BitVector> sorted;
  sorted.reserve(out.size());
  for (auto i : order) {
    sorted.push_back(out[i]);
  }
  return sorted;
}

bool inSpan(const std::vector<BitVector>& basis, const BitVector& v) {
  auto reduced = reduceToEchelon(basis);
  auto rest = v;
  for (const auto& b : reduced) {
    if (rest.get(b.ones().front())) {
      rest ^= b;
    }
  }
  return rest.isZero();
}

KernelEnumerator::KernelEnumerator(std::vector<BitVector> basis,
                                   std::size_t length)
    : basis_(std::move(basis)), current_(length) {}

bool KernelEnumerator::next(BitVector& out) {
  if (step_ >= count()) {
    return false;
  }
  if (step_ > 0) {
    current_ ^= basis_[static_cast<std::size_t>(std::countr_zero(step_))];
  }
  ++step_;
  out = current_;
  return true;
}

KernelEnumerator enumerateKernel(const BitMatrix& a, std::uint64_t cap) {
  auto basis = kernelBasis(a);
  if (basis.size() >= 63 || (std::uint64_t{1} << basis.size()) > cap) {
    throw KernelTooLarge("kernel has dimension " +
                         std::to_string(basis.size()) +
                         ", enumeration cap is " + std::to_string(cap));
  }
  return KernelEnumerator(std::move(basis), a.cols());
}

std::vector<BitVector> collectKernel(const BitMatrix& a, std::uint64_t cap) {
  auto e = enumerateKernel(a, cap);
  std::vector<BitVector> out;
  out.reserve(e.count());
  BitVector v;
  while (e.next(v)) {
    out.push_back(v);
  }
  return out;
}

} // namespace zxlat::gf2
