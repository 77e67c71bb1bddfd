#include "zxlat/pauli.hpp"

#include "zxlat/errors.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>

namespace zxlat::pauli {

namespace {

const Complex kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

Complex iPower(int p) { return kIPow[((p % 4) + 4) % 4]; }

void requireSameSize(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    throw DimensionMismatch(std::string(what) + ": " + std::to_string(a) +
                            " vs " + std::to_string(b) + " qubits");
  }
}

bool termLess(const Term& a, const Term& b) {
  if (a.op.x() == b.op.x()) {
    return a.op.z() < b.op.z();
  }
  return a.op.x() < b.op.x();
}

struct MaskedTerm {
  std::uint64_t z;
  Complex c;
};

// Sum over a subspace S of X-masks with one common weight:
// out[i] = c * sum_{s in S} in[i ^ s]. Each coset is summed once.
void cosetSum(const std::vector<std::uint64_t>& masks, Complex c,
              const StateVector& in, StateVector& out) {
  std::vector<std::uint64_t> basis;
  for (auto m : masks) {
    for (auto b : basis) {
      if ((m & std::bit_floor(b)) != 0) {
        m ^= b;
      }
    }
    if (m == 0) {
      continue;
    }
    const auto top = std::bit_floor(m);
    for (auto& b : basis) {
      if ((b & top) != 0) {
        b ^= m;
      }
    }
    basis.push_back(m);
  }
  std::uint64_t pivots = 0;
  for (auto b : basis) {
    pivots |= std::bit_floor(b);
  }
  const std::uint64_t all = in.size() - 1;
  const std::uint64_t free = all & ~pivots;
  const std::uint64_t cosetSize = std::uint64_t{1} << basis.size();
  std::uint64_t rep = 0;
  do {
    Complex sum = 0.0;
    std::uint64_t e = rep;
    sum += in[e];
    for (std::uint64_t k = 1; k < cosetSize; ++k) {
      e ^= basis[static_cast<std::size_t>(std::countr_zero(k))];
      sum += in[e];
    }
    sum *= c;
    e = rep;
    out[e] += sum;
    for (std::uint64_t k = 1; k < cosetSize; ++k) {
      e ^= basis[static_cast<std::size_t>(std::countr_zero(k))];
      out[e] += sum;
    }
    rep = (rep - free) & free;
  } while (rep != 0);
}

} // namespace

PauliString::PauliString(std::size_t n) : x_(n), z_(n) {}

PauliString::PauliString(gf2::BitVector x, gf2::BitVector z, int phase)
    : x_(std::move(x)), z_(std::move(z)) {
  requireSameSize(x_.size(), z_.size(), "PauliString");
  setPhase(phase);
}

PauliString PauliString::fromString(const std::string& text) {
  std::size_t pos = 0;
  int phase = 0;
  if (pos < text.size() && text[pos] == '-') {
    phase += 2;
    ++pos;
  } else if (pos < text.size() && text[pos] == '+') {
    ++pos;
  }
  if (pos < text.size() && text[pos] == 'i') {
    phase += 1;
    ++pos;
  }
  const std::string letters = text.substr(pos);
  PauliString p(letters.size());
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
    case 'I':
      break;
    case 'X':
      p.x_.set(q);
      break;
    case 'Z':
      p.z_.set(q);
      break;
    case 'Y':
      // Y = i X Z
      p.x_.set(q);
      p.z_.set(q);
      phase += 1;
      break;
    default:
      throw ParseError("bad Pauli letter '" + std::string(1, letters[q]) + "'");
    }
  }
  p.setPhase(phase);
  return p;
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, char letter) {
  std::string s(n, 'I');
  s.at(qubit) = letter;
  return fromString(s);
}

PauliString PauliString::xType(const gf2::BitVector& support) {
  return PauliString(support, gf2::BitVector(support.size()));
}

PauliString PauliString::zType(const gf2::BitVector& support) {
  return PauliString(gf2::BitVector(support.size()), support);
}

int PauliString::hermitianPhase() const {
  return static_cast<int>((x_ & z_).popcount() % 4);
}

bool PauliString::isHermitian() const {
  return (phase_ - hermitianPhase()) % 2 == 0;
}

PauliString PauliString::adjoint() const {
  PauliString out = *this;
  out.setPhase(-phase_ + 2 * hermitianPhase());
  return out;
}

std::string PauliString::toString() const {
  // letters with Y = i X Z absorbed
  const int rest = ((phase_ - hermitianPhase()) % 4 + 4) % 4;
  static const char* prefix[4] = {"+", "+i", "-", "-i"};
  std::string s = prefix[rest];
  for (std::size_t q = 0; q < qubits(); ++q) {
    const bool x = x_.get(q);
    const bool z = z_.get(q);
    s += x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return s;
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  requireSameSize(a.qubits(), b.qubits(), "multiply");
  // Z^{za} X^{xb} = (-1)^{za.xb} X^{xb} Z^{za}
  const int swapSign = static_cast<int>((a.z() & b.x()).popcount() % 2);
  return PauliString(a.x() ^ b.x(), a.z() ^ b.z(),
                     a.phase() + b.phase() + 2 * swapSign);
}

bool commutes(const PauliString& a, const PauliString& b) {
  requireSameSize(a.qubits(), b.qubits(), "commutes");
  const auto form = (a.x() & b.z()).popcount() + (a.z() & b.x()).popcount();
  return form % 2 == 0;
}

void applyInPlace(const PauliString& p, StateVector& psi) {
  requireSameSize(p.qubits(), psi.qubits(), "applyInPlace");
  const auto xm = p.x().toIndexMask();
  const auto zm = p.z().toIndexMask();
  const Complex c = iPower(p.phase());
  const std::uint64_t dim = psi.size();
  auto sign = [zm](std::uint64_t i) {
    return (std::popcount(zm & i) & 1) != 0 ? -1.0 : 1.0;
  };
  if (xm == 0) {
    for (std::uint64_t i = 0; i < dim; ++i) {
      psi[i] *= c * sign(i);
    }
    return;
  }
  const auto top = std::bit_floor(xm);
  for (std::uint64_t i = 0; i < dim; ++i) {
    if ((i & top) != 0) {
      continue;
    }
    const auto j = i ^ xm;
    const Complex a = psi[i];
    const Complex b = psi[j];
    psi[j] = c * sign(i) * a;
    psi[i] = c * sign(j) * b;
  }
}

StateVector apply(const PauliString& p, const StateVector& psi) {
  StateVector out = psi;
  applyInPlace(p, out);
  return out;
}

OperatorSum OperatorSum::identity(std::size_t n, Complex c) {
  OperatorSum s(n);
  s.add(c, PauliString(n));
  return s;
}

OperatorSum OperatorSum::fromPauli(const PauliString& p, Complex c) {
  OperatorSum s(p.qubits());
  s.add(c, p);
  return s;
}

void OperatorSum::add(Complex c, const PauliString& p) {
  requireSameSize(n_, p.qubits(), "OperatorSum::add");
  terms_.push_back({c, p});
}

OperatorSum& OperatorSum::operator+=(const OperatorSum& other) {
  requireSameSize(n_, other.n_, "OperatorSum +");
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

OperatorSum& OperatorSum::operator-=(const OperatorSum& other) {
  requireSameSize(n_, other.n_, "OperatorSum -");
  for (const auto& t : other.terms_) {
    terms_.push_back({-t.coeff, t.op});
  }
  return *this;
}

OperatorSum& OperatorSum::operator*=(Complex c) {
  for (auto& t : terms_) {
    t.coeff *= c;
  }
  return *this;
}

OperatorSum& OperatorSum::combine(double dropTol) {
  for (auto& t : terms_) {
    const int h = t.op.hermitianPhase();
    t.coeff *= iPower(t.op.phase() - h);
    t.op.setPhase(h);
  }
  std::stable_sort(terms_.begin(), terms_.end(), termLess);
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().op == t.op) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [dropTol](const Term& t) {
                                return std::abs(t.coeff) <= dropTol;
                              }),
               merged.end());
  terms_ = std::move(merged);
  return *this;
}

OperatorSum OperatorSum::combined(double dropTol) const {
  OperatorSum out = *this;
  out.combine(dropTol);
  return out;
}

OperatorSum OperatorSum::adjoint() const {
  OperatorSum out(n_);
  for (const auto& t : terms_) {
    out.add(std::conj(t.coeff), t.op.adjoint());
  }
  return out;
}

bool OperatorSum::isHermitian(double tol) const {
  const auto c = combined();
  return std::all_of(c.terms_.begin(), c.terms_.end(), [tol](const Term& t) {
    return std::abs(t.coeff.imag()) <= tol;
  });
}

double OperatorSum::distance(const OperatorSum& other) const {
  auto diff = (*this - other).combine();
  double m = 0.0;
  for (const auto& t : diff.terms_) {
    m = std::max(m, std::abs(t.coeff));
  }
  return m;
}

OperatorSum product(const OperatorSum& a, const OperatorSum& b) {
  requireSameSize(a.qubits(), b.qubits(), "product");
  OperatorSum out(a.qubits());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      out.add(ta.coeff * tb.coeff, multiply(ta.op, tb.op));
    }
  }
  out.combine();
  return out;
}

OperatorSum operator*(const OperatorSum& a, const OperatorSum& b) {
  return product(a, b);
}

OperatorSum commutator(const OperatorSum& a, const OperatorSum& b) {
  return (product(a, b) - product(b, a)).combine(1e-14);
}

StateVector opsumApply(const OperatorSum& h, const StateVector& psi) {
  requireSameSize(h.qubits(), psi.qubits(), "opsumApply");
  std::map<std::uint64_t, std::vector<MaskedTerm>> groups;
  for (const auto& t : h.terms()) {
    groups[t.op.x().toIndexMask()].push_back(
        {t.op.z().toIndexMask(), t.coeff * iPower(t.op.phase())});
  }
  StateVector out(psi.qubits());
  if (groups.empty()) {
    return out;
  }

  // One weight on every X-mask of a subspace: sum over cosets.
  bool xOnly = true;
  Complex common = 0.0;
  bool first = true;
  std::vector<std::uint64_t> masks;
  for (auto& [xm, ts] : groups) {
    Complex total = 0.0;
    for (const auto& t : ts) {
      xOnly = xOnly && t.z == 0;
      total += t.c;
    }
    if (first) {
      common = total;
      first = false;
    }
    xOnly = xOnly && total == common;
    masks.push_back(xm);
  }
  if (xOnly && groups.size() > 2) {
    std::vector<std::uint64_t> basis;
    for (auto m : masks) {
      for (auto b : basis) {
        if ((m & std::bit_floor(b)) != 0) {
          m ^= b;
        }
      }
      if (m != 0) {
        basis.push_back(m);
        std::sort(basis.begin(), basis.end(), std::greater<>());
      }
    }
    if ((std::uint64_t{1} << basis.size()) == groups.size()) {
      cosetSum(masks, common, psi, out);
      return out;
    }
  }

  const std::uint64_t dim = psi.size();
  for (const auto& [xm, ts] : groups) {
    bool diagOnly = true;
    Complex total = 0.0;
    for (const auto& t : ts) {
      diagOnly = diagOnly && t.z == 0;
      total += t.c;
    }
    if (diagOnly) {
      for (std::uint64_t i = 0; i < dim; ++i) {
        out[i ^ xm] += total * psi[i];
      }
      continue;
    }
    for (std::uint64_t i = 0; i < dim; ++i) {
      Complex w = 0.0;
      for (const auto& t : ts) {
        w += (std::popcount(t.z & i) & 1) != 0 ? -t.c : t.c;
      }
      out[i ^ xm] += w * psi[i];
    }
  }
  return out;
}

Complex expectation(const OperatorSum& h, const StateVector& psi) {
  const double norm2 = inner(psi, psi).real();
  if (norm2 == 0.0) {
    throw ZeroState("expectation value in the zero state");
  }
  return inner(psi, opsumApply(h, psi)) / norm2;
}

DenseMatrix toDense(const OperatorSum& h) {
  const std::size_t dim = std::size_t{1} << h.qubits();
  DenseMatrix m(dim, dim);
  for (std::size_t c = 0; c < dim; ++c) {
    const auto col = opsumApply(h, StateVector::basis(h.qubits(), c));
    for (std::size_t r = 0; r < dim; ++r) {
      m(r, c) = col[r];
    }
  }
  return m;
}

DenseMatrix toDense(const PauliString& p) {
  return toDense(OperatorSum::fromPauli(p));
}

} // namespace zxlat::pauli
