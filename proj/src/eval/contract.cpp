#include "zxlat/eval/contract.hpp"

#include "zxlat/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <random>
#include <set>

namespace zxlat::eval {

using zx::NodeKind;
using zx::ZxDiagram;

namespace {

using Mat2 = std::array<std::array<Complex, 2>, 2>;

const double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

Mat2 identity2() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
Mat2 hadamard2() { return {{{kInvSqrt2, kInvSqrt2}, {kInvSqrt2, -kInvSqrt2}}}; }

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 out{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    }
  }
  return out;
}

// Leg matrix from a spider's index to the value on one of its legs. A Z
// spider's legs all equal its index; an X spider's index picks |+> or |->.
Mat2 legMatrix(NodeKind k) {
  return k == NodeKind::X ? hadamard2() : identity2();
}

// Dense table over sorted binary indices; index variable k sits at bit k.
struct Factor {
  std::vector<int> vars;
  std::vector<Complex> table;
};

Factor product(const std::vector<const Factor*>& factors, int eliminate,
               std::size_t rankLimit) {
  std::vector<int> vars;
  for (const auto* f : factors) {
    vars.insert(vars.end(), f->vars.begin(), f->vars.end());
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  if (vars.size() > rankLimit) {
    throw TooLarge("intermediate factor of rank " + std::to_string(vars.size()) +
                   " exceeds limit " + std::to_string(rankLimit));
  }
  const std::size_t r = vars.size();
  std::vector<std::vector<unsigned>> positions;
  for (const auto* f : factors) {
    std::vector<unsigned> pos;
    for (int v : f->vars) {
      pos.push_back(static_cast<unsigned>(
          std::lower_bound(vars.begin(), vars.end(), v) - vars.begin()));
    }
    positions.push_back(std::move(pos));
  }
  int elimPos = -1;
  Factor out;
  for (std::size_t i = 0; i < r; ++i) {
    if (vars[i] == eliminate) {
      elimPos = static_cast<int>(i);
    } else {
      out.vars.push_back(vars[i]);
    }
  }
  out.table.assign(std::size_t{1} << out.vars.size(), 0.0);
  const std::uint64_t total = std::uint64_t{1} << r;
  for (std::uint64_t u = 0; u < total; ++u) {
    Complex prod = 1.0;
    for (std::size_t k = 0; k < factors.size() && prod != Complex(0.0); ++k) {
      std::size_t idx = 0;
      const auto& pos = positions[k];
      for (std::size_t b = 0; b < pos.size(); ++b) {
        idx |= static_cast<std::size_t>((u >> pos[b]) & 1U) << b;
      }
      prod *= factors[k]->table[idx];
    }
    std::uint64_t o = u;
    if (elimPos >= 0) {
      const std::uint64_t low = u & ((std::uint64_t{1} << elimPos) - 1);
      o = ((u >> (elimPos + 1)) << elimPos) | low;
    }
    out.table[o] += prod;
  }
  return out;
}

class Network {
public:
  Network(const ZxDiagram& d, const ContractOptions& opts) : opts_(opts) {
    for (const auto& [id, n] : d.nodes()) {
      if (n.kind == NodeKind::Boundary) {
        continue;
      }
      internal_.insert(id);
      // every spider gets its phase factor, so index sums are never skipped
      add(Factor{{id}, {1.0, std::polar(1.0, n.phase.toRadians())}});
    }
    for (const auto& [id, w] : d.wires()) {
      const auto ka = d.kind(w.a);
      const auto kb = d.kind(w.b);
      const Mat2 wm = w.hadamard ? hadamard2() : identity2();
      Mat2 f = mul(mul(legMatrix(ka), wm), transposed(legMatrix(kb)));
      if (w.a == w.b) {
        add(Factor{{w.a}, {f[0][0], f[1][1]}});
      } else if (w.a < w.b) {
        add(Factor{{w.a, w.b}, {f[0][0], f[1][0], f[0][1], f[1][1]}});
      } else {
        add(Factor{{w.b, w.a}, {f[0][0], f[0][1], f[1][0], f[1][1]}});
      }
    }
    scalar_ = d.scalar().value();
  }

  void addInternal(int v) { internal_.insert(v); }
  void add(Factor f) { factors_.push_back(std::move(f)); }

  /// Eliminates every internal index; returns the product of what remains.
  Factor run() {
    std::mt19937_64 rng(opts_.randomOrderSeed.value_or(0));
    while (!internal_.empty()) {
      const int v = opts_.randomOrderSeed ? randomPick(rng) : greedyPick();
      eliminate(v);
    }
    std::vector<const Factor*> rest;
    for (const auto& f : factors_) {
      rest.push_back(&f);
    }
    auto f = product(rest, -1, opts_.rankLimit + 8);
    for (auto& x : f.table) {
      x *= scalar_;
    }
    return f;
  }

private:
  ContractOptions opts_;
  std::vector<Factor> factors_;
  std::set<int> internal_;
  Complex scalar_ = 1.0;

  static Mat2 transposed(const Mat2& m) {
    return {{{m[0][0], m[1][0]}, {m[0][1], m[1][1]}}};
  }

  std::size_t costOf(int v) const {
    std::set<int> vars;
    for (const auto& f : factors_) {
      if (std::binary_search(f.vars.begin(), f.vars.end(), v)) {
        vars.insert(f.vars.begin(), f.vars.end());
      }
    }
    return vars.size();
  }

  int greedyPick() const {
    int best = -1;
    std::size_t bestCost = 0;
    for (int v : internal_) {
      const auto c = costOf(v);
      if (best < 0 || c < bestCost) {
        best = v;
        bestCost = c;
      }
    }
    return best;
  }

  int randomPick(std::mt19937_64& rng) const {
    std::uniform_int_distribution<std::size_t> pick(0, internal_.size() - 1);
    auto it = internal_.begin();
    std::advance(it, static_cast<std::ptrdiff_t>(pick(rng)));
    return *it;
  }

  void eliminate(int v) {
    std::vector<Factor> keep;
    std::vector<Factor> touching;
    for (auto& f : factors_) {
      if (std::binary_search(f.vars.begin(), f.vars.end(), v)) {
        touching.push_back(std::move(f));
      } else {
        keep.push_back(std::move(f));
      }
    }
    std::vector<const Factor*> ptrs;
    for (const auto& f : touching) {
      ptrs.push_back(&f);
    }
    if (ptrs.empty()) {
      // an index no factor depends on sums to 2
      scalar_ *= 2.0;
    } else {
      keep.push_back(product(ptrs, v, opts_.rankLimit));
    }
    factors_ = std::move(keep);
    internal_.erase(v);
  }
};

std::size_t bitAt(const std::vector<int>& vars, int v) {
  return static_cast<std::size_t>(
      std::lower_bound(vars.begin(), vars.end(), v) - vars.begin());
}

} // namespace

DenseMatrix contract(const ZxDiagram& d, const ContractOptions& opts) {
  const std::size_t nIn = d.inputs().size();
  const std::size_t nOut = d.outputs().size();
  if (nIn + nOut > opts.denseCap) {
    throw TooLarge("diagram has " + std::to_string(nIn + nOut) +
                   " boundary legs, dense cap is " +
                   std::to_string(opts.denseCap));
  }
  Network net(d, opts);
  const auto f = net.run();
  DenseMatrix m(std::size_t{1} << nOut, std::size_t{1} << nIn);
  std::vector<std::size_t> outBits;
  std::vector<std::size_t> inBits;
  for (int p : d.outputs()) {
    outBits.push_back(bitAt(f.vars, p));
  }
  for (int p : d.inputs()) {
    inBits.push_back(bitAt(f.vars, p));
  }
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::size_t base = 0;
    for (std::size_t q = 0; q < nOut; ++q) {
      base |= ((r >> (nOut - 1 - q)) & 1U) << outBits[q];
    }
    for (std::size_t c = 0; c < m.cols(); ++c) {
      std::size_t idx = base;
      for (std::size_t q = 0; q < nIn; ++q) {
        idx |= ((c >> (nIn - 1 - q)) & 1U) << inBits[q];
      }
      m(r, c) = f.table[idx];
    }
  }
  return m;
}

Complex contractScalar(const ZxDiagram& d, const ContractOptions& opts) {
  if (!d.inputs().empty() || !d.outputs().empty()) {
    throw ArityMismatch("contractScalar needs a diagram without boundary");
  }
  Network net(d, opts);
  return net.run().table.at(0);
}

StateVector applyDiagram(const ZxDiagram& d, const StateVector& psi,
                         const ContractOptions& opts) {
  const std::size_t nIn = d.inputs().size();
  const std::size_t nOut = d.outputs().size();
  if (psi.qubits() != nIn) {
    throw ArityMismatch("state has " + std::to_string(psi.qubits()) +
                        " qubits, diagram has " + std::to_string(nIn) +
                        " inputs");
  }
  if (nOut > opts.rankLimit || nIn > opts.rankLimit) {
    throw TooLarge("boundary exceeds the memory budget");
  }
  Network net(d, opts);
  Factor input;
  input.vars = d.inputs();
  std::sort(input.vars.begin(), input.vars.end());
  input.table.assign(psi.size(), 0.0);
  std::vector<std::size_t> inBits;
  for (int p : d.inputs()) {
    inBits.push_back(bitAt(input.vars, p));
    net.addInternal(p);
  }
  for (std::size_t c = 0; c < psi.size(); ++c) {
    std::size_t idx = 0;
    for (std::size_t q = 0; q < nIn; ++q) {
      idx |= ((c >> (nIn - 1 - q)) & 1U) << inBits[q];
    }
    input.table[idx] = psi[c];
  }
  net.add(std::move(input));
  const auto f = net.run();
  StateVector out(nOut);
  std::vector<std::size_t> outBits;
  for (int p : d.outputs()) {
    outBits.push_back(bitAt(f.vars, p));
  }
  for (std::size_t r = 0; r < out.size(); ++r) {
    std::size_t idx = 0;
    for (std::size_t q = 0; q < nOut; ++q) {
      idx |= ((r >> (nOut - 1 - q)) & 1U) << outBits[q];
    }
    out[r] = f.table[idx];
  }
  return out;
}

double semanticDistance(const ZxDiagram& a, const ZxDiagram& b,
                        const ContractOptions& opts) {
  if (a.inputs().size() != b.inputs().size() ||
      a.outputs().size() != b.outputs().size()) {
    throw ArityMismatch("semantic comparison of diagrams with different arity");
  }
  return maxAbsDiff(contract(a, opts), contract(b, opts));
}

bool semanticEq(const ZxDiagram& a, const ZxDiagram& b, double tol,
                const ContractOptions& opts) {
  return semanticDistance(a, b, opts) <= tol;
}

} // namespace zxlat::eval
