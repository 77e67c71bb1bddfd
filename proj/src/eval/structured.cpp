#include "zxlat/eval/structured.hpp"

#include "zxlat/errors.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <numbers>

namespace zxlat::eval {

namespace {

template <class... Ts> struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts> Overloaded(Ts...) -> Overloaded<Ts...>;

constexpr unsigned kLowBits = 8;

void requireQubits(std::size_t expected, const StateVector& psi,
                   const char* what) {
  if (psi.qubits() != expected) {
    throw ArityMismatch(std::string(what) + " expects " +
                        std::to_string(expected) + " qubits, got " +
                        std::to_string(psi.qubits()));
  }
}

} // namespace

StructuredOp makeBasisMap(gf2::BitMatrix a) {
  return {Gf2BasisMap{std::move(a)}};
}

StructuredOp makeHLayer(std::size_t n, std::vector<std::size_t> qubits) {
  for (auto q : qubits) {
    if (q >= n) {
      throw ArityMismatch("Hadamard layer qubit out of range");
    }
  }
  return {HLayer{n, std::move(qubits)}};
}

StructuredOp makeHLayerAll(std::size_t n) {
  std::vector<std::size_t> qs(n);
  for (std::size_t q = 0; q < n; ++q) {
    qs[q] = q;
  }
  return makeHLayer(n, std::move(qs));
}

StructuredOp makePauli(pauli::PauliString p) { return {PauliApply{std::move(p)}}; }

StructuredOp makePauliSum(pauli::OperatorSum h) {
  return {PauliSum{std::move(h)}};
}

StructuredOp makePermute(std::vector<std::size_t> perm) {
  std::vector<bool> seen(perm.size(), false);
  for (auto p : perm) {
    if (p >= perm.size() || seen[p]) {
      throw ArityMismatch("Permute needs a bijection on qubits");
    }
    seen[p] = true;
  }
  return {Permute{std::move(perm)}};
}

StructuredOp makeScale(std::size_t n, Complex c) { return {Scale{n, c}}; }

StructuredOp makeIdentity(std::size_t n) { return makeScale(n, 1.0); }

StructuredOp makeSum(std::vector<Complex> weights,
                     std::vector<StructuredOp> ops) {
  if (weights.size() != ops.size() || ops.empty()) {
    throw ArityMismatch("SumOf needs one weight per operator");
  }
  for (const auto& op : ops) {
    if (inQubits(op) != inQubits(ops.front()) ||
        outQubits(op) != outQubits(ops.front())) {
      throw ArityMismatch("SumOf terms have different arities");
    }
  }
  return {SumOf{std::move(weights), std::move(ops)}};
}

StructuredOp makeCompose(std::vector<StructuredOp> ops) {
  if (ops.empty()) {
    throw ArityMismatch("ComposeOf needs at least one operator");
  }
  for (std::size_t k = 1; k < ops.size(); ++k) {
    if (inQubits(ops[k]) != outQubits(ops[k - 1])) {
      throw ArityMismatch("ComposeOf arities do not chain at position " +
                          std::to_string(k));
    }
  }
  return {ComposeOf{std::move(ops)}};
}

StructuredOp product(const StructuredOp& after, const StructuredOp& before) {
  return makeCompose({before, after});
}

std::vector<std::size_t> inversePermutation(const std::vector<std::size_t>& p) {
  std::vector<std::size_t> inv(p.size());
  for (std::size_t q = 0; q < p.size(); ++q) {
    inv.at(p[q]) = q;
  }
  return inv;
}

std::size_t inQubits(const StructuredOp& op) {
  return std::visit(
      Overloaded{
          [](const Gf2BasisMap& m) { return m.a.cols(); },
          [](const HLayer& h) { return h.n; },
          [](const PauliApply& p) { return p.p.qubits(); },
          [](const PauliSum& p) { return p.h.qubits(); },
          [](const Permute& p) { return p.perm.size(); },
          [](const Scale& s) { return s.n; },
          [](const SumOf& s) { return inQubits(s.ops.front()); },
          [](const ComposeOf& c) { return inQubits(c.ops.front()); },
      },
      op.node);
}

std::size_t outQubits(const StructuredOp& op) {
  return std::visit(
      Overloaded{
          [](const Gf2BasisMap& m) { return m.a.rows(); },
          [](const HLayer& h) { return h.n; },
          [](const PauliApply& p) { return p.p.qubits(); },
          [](const PauliSum& p) { return p.h.qubits(); },
          [](const Permute& p) { return p.perm.size(); },
          [](const Scale& s) { return s.n; },
          [](const SumOf& s) { return outQubits(s.ops.front()); },
          [](const ComposeOf& c) { return outQubits(c.ops.back()); },
      },
      op.node);
}

StateVector basisMap(const gf2::BitMatrix& a, const StateVector& psi) {
  const std::size_t n = a.cols();
  const std::size_t k = a.rows();
  requireQubits(n, psi, "Gf2BasisMap");
  // image of each input index bit, counted from the least significant end
  std::vector<std::uint64_t> bitImage(n, 0);
  for (std::size_t q = 0; q < n; ++q) {
    std::uint64_t img = 0;
    for (std::size_t r = 0; r < k; ++r) {
      if (a.get(r, q)) {
        img |= std::uint64_t{1} << (k - 1 - r);
      }
    }
    bitImage[n - 1 - q] = img;
  }
  const unsigned lowBits = static_cast<unsigned>(std::min<std::size_t>(n, kLowBits));
  const std::uint64_t lowSize = std::uint64_t{1} << lowBits;
  std::vector<std::uint64_t> lowTable(lowSize, 0);
  for (std::uint64_t i = 1; i < lowSize; ++i) {
    const auto b = static_cast<std::size_t>(std::countr_zero(i));
    lowTable[i] = lowTable[i & (i - 1)] ^ bitImage[b];
  }
  StateVector out(k);
  const std::uint64_t blocks = psi.size() >> lowBits;
  std::uint64_t high = 0;
  for (std::uint64_t blk = 0; blk < blocks; ++blk) {
    if (blk > 0) {
      // Gray-code style update: bits that changed between blk-1 and blk
      auto changed = blk ^ (blk - 1);
      while (changed != 0) {
        const auto b = static_cast<std::size_t>(std::countr_zero(changed));
        high ^= bitImage[lowBits + b];
        changed &= changed - 1;
      }
    }
    const std::uint64_t base = blk << lowBits;
    for (std::uint64_t lo = 0; lo < lowSize; ++lo) {
      out[high ^ lowTable[lo]] += psi[base | lo];
    }
  }
  return out;
}

void hadamardLayerInPlace(StateVector& psi,
                          const std::vector<std::size_t>& qubits) {
  const std::size_t n = psi.qubits();
  const double s = 1.0 / std::numbers::sqrt2;
  const std::size_t dim = psi.size();
  Complex* amp = psi.data();
  for (auto q : qubits) {
    const std::size_t stride = std::size_t{1} << (n - 1 - q);
    for (std::size_t start = 0; start < dim; start += 2 * stride) {
      for (std::size_t i = start; i < start + stride; ++i) {
        const Complex a = amp[i];
        const Complex b = amp[i + stride];
        amp[i] = s * (a + b);
        amp[i + stride] = s * (a - b);
      }
    }
  }
}

StateVector permuteQubits(const std::vector<std::size_t>& perm,
                          const StateVector& psi) {
  const std::size_t n = perm.size();
  requireQubits(n, psi, "Permute");
  const std::size_t chunks = (n + 7) / 8;
  std::vector<std::array<std::uint64_t, 256>> table(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    for (unsigned v = 0; v < 256; ++v) {
      std::uint64_t img = 0;
      for (unsigned b = 0; b < 8; ++b) {
        const std::size_t bit = 8 * c + b;
        if (bit < n && ((v >> b) & 1U) != 0) {
          const std::size_t q = n - 1 - bit;
          img |= std::uint64_t{1} << (n - 1 - perm[q]);
        }
      }
      table[c][v] = img;
    }
  }
  StateVector out(n);
  for (std::uint64_t i = 0; i < psi.size(); ++i) {
    std::uint64_t img = 0;
    for (std::size_t c = 0; c < chunks; ++c) {
      img |= table[c][(i >> (8 * c)) & 0xFFU];
    }
    out[img] = psi[i];
  }
  return out;
}

StateVector applyStructured(const StructuredOp& op, const StateVector& psi) {
  return std::visit(
      Overloaded{
          [&](const Gf2BasisMap& m) { return basisMap(m.a, psi); },
          [&](const HLayer& h) {
            requireQubits(h.n, psi, "HLayer");
            StateVector out = psi;
            hadamardLayerInPlace(out, h.qubits);
            return out;
          },
          [&](const PauliApply& p) {
            requireQubits(p.p.qubits(), psi, "PauliApply");
            return pauli::apply(p.p, psi);
          },
          [&](const PauliSum& p) {
            requireQubits(p.h.qubits(), psi, "PauliSum");
            return pauli::opsumApply(p.h, psi);
          },
          [&](const Permute& p) { return permuteQubits(p.perm, psi); },
          [&](const Scale& s) {
            requireQubits(s.n, psi, "Scale");
            StateVector out = psi;
            out *= s.c;
            return out;
          },
          [&](const SumOf& s) {
            StateVector out(outQubits(s.ops.front()));
            for (std::size_t k = 0; k < s.ops.size(); ++k) {
              out.axpy(s.weights[k], applyStructured(s.ops[k], psi));
            }
            return out;
          },
          [&](const ComposeOf& c) {
            StateVector cur = applyStructured(c.ops.front(), psi);
            for (std::size_t k = 1; k < c.ops.size(); ++k) {
              cur = applyStructured(c.ops[k], cur);
            }
            return cur;
          },
      },
      op.node);
}

DenseMatrix structuredToDense(const StructuredOp& op, std::size_t cap) {
  const std::size_t n = inQubits(op);
  const std::size_t m = outQubits(op);
  if (n > cap || m > cap) {
    throw TooLarge("structuredToDense on " + std::to_string(n) + "->" +
                   std::to_string(m) + " qubits exceeds cap " +
                   std::to_string(cap));
  }
  DenseMatrix out(std::size_t{1} << m, std::size_t{1} << n);
  for (std::size_t c = 0; c < out.cols(); ++c) {
    const auto col = applyStructured(op, StateVector::basis(n, c));
    for (std::size_t r = 0; r < out.rows(); ++r) {
      out(r, c) = col[r];
    }
  }
  return out;
}

} // namespace zxlat::eval
