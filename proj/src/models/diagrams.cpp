#include "zxlat/models/diagrams.hpp"

#include "zxlat/errors.hpp"
#include "zxlat/eval/contract.hpp"

namespace zxlat::models {

using zx::NodeKind;
using zx::Phase;
using zx::Scalar;
using zx::ZxDiagram;

zx::ZxDiagram kwCell(KwForm form) {
  ZxDiagram d;
  const int in = d.addInput();
  const int west = d.addInput();
  const int out = d.addOutput();
  const int east = d.addOutput();
  const bool upperX = form == KwForm::XTopPlainIn;
  const bool lowerX = form == KwForm::XBottomHIn;
  const int upper = d.addSpider(upperX ? NodeKind::X : NodeKind::Z);
  const int lower = d.addSpider(lowerX ? NodeKind::X : NodeKind::Z);
  switch (form) {
  case KwForm::ZZ:
    d.addWire(west, upper);
    d.addWire(upper, lower, true);
    d.addWire(lower, east, true);
    d.addWire(in, lower);
    d.addWire(upper, out);
    break;
  case KwForm::XTopPlainIn:
    d.addWire(west, upper);
    d.addWire(upper, lower);
    d.addWire(lower, east);
    d.addWire(in, lower);
    d.addWire(upper, out, true);
    break;
  case KwForm::XBottomHIn:
    d.addWire(west, upper);
    d.addWire(upper, lower);
    d.addWire(lower, east);
    d.addWire(in, lower, true);
    d.addWire(upper, out);
    break;
  }
  d.setScalar(Scalar::sqrt2Power(1));
  return d;
}

zx::ZxDiagram kwDiagram(std::size_t L, KwForm form) {
  zx::Gluing g;
  g.east = {{true, 1}};
  g.west = {{false, 1}};
  g.periodic = true;
  return zx::replicatePeriodic(kwCell(form), L, g);
}

zx::ZxDiagram dualityDiagram(const BipartiteModel& m) {
  if (m.kappa.den != 1 && m.kappa.den != 2) {
    throw ParseError("kappa must be a multiple of 1/2 for a diagram");
  }
  ZxDiagram d;
  std::vector<int> vs;
  std::vector<int> vhats;
  for (std::size_t v = 0; v < m.nV(); ++v) {
    const int port = d.addInput();
    vs.push_back(d.addSpider(NodeKind::Z));
    d.addWire(port, vs.back());
  }
  for (std::size_t w = 0; w < m.nVHat(); ++w) {
    const int port = d.addOutput();
    vhats.push_back(d.addSpider(NodeKind::X));
    d.addWire(vhats.back(), port, true);
  }
  for (const auto& [w, v] : m.edges()) {
    d.addWire(vs[v], vhats[w]);
  }
  // 2^kappa as a power of sqrt 2
  const std::int64_t halfPower = m.kappa.num * (2 / m.kappa.den);
  d.setScalar(Scalar::sqrt2Power(static_cast<int>(halfPower)));
  return d;
}

zx::ZxDiagram dualityDiagram(const BipartiteModel& m, const Automorphism& rho) {
  if (!rho.reversing) {
    throw NotReversing("duality diagram needs a reversing automorphism");
  }
  return zx::compose(zx::permutationDiagram(rho.onVHat), dualityDiagram(m));
}

zx::ZxDiagram chainCondensationDiagram(std::size_t L, int n) {
  ZxDiagram d;
  const int hub = d.addSpider(NodeKind::Z, Phase::exact(n, 0));
  std::vector<int> ins;
  std::vector<int> outs;
  for (std::size_t i = 0; i < L; ++i) {
    ins.push_back(d.addInput());
  }
  for (std::size_t i = 0; i < L; ++i) {
    outs.push_back(d.addOutput());
  }
  for (std::size_t i = 0; i < L; ++i) {
    const int x = d.addSpider(NodeKind::X);
    d.addWire(ins[i], x);
    d.addWire(x, outs[i]);
    d.addWire(x, hub);
  }
  d.setScalar(Scalar::sqrt2Power(static_cast<int>(L)));
  return d;
}

zx::ZxDiagram chainReflectionDiagram(std::size_t L) {
  std::vector<std::size_t> perm(L);
  for (std::size_t i = 0; i < L; ++i) {
    perm[i] = (L - i) % L;
  }
  return zx::permutationDiagram(perm);
}

namespace {

// |b> = X(b pi) state with scalar 1/sqrt 2.
ZxDiagram basisKet(bool b) {
  ZxDiagram d = zx::xSpider(0, 1, b ? Phase::pi() : Phase());
  d.multiplyScalar(Scalar::sqrt2Power(-1));
  return d;
}

ZxDiagram basisBra(bool b) {
  ZxDiagram d = zx::xSpider(1, 0, b ? Phase::pi() : Phase());
  d.multiplyScalar(Scalar::sqrt2Power(-1));
  return d;
}

} // namespace

Complex basisElement(const zx::ZxDiagram& d, const gf2::BitVector& out,
                     const gf2::BitVector& in) {
  if (out.size() != d.outputs().size() || in.size() != d.inputs().size()) {
    throw ArityMismatch("basis labels do not match the diagram ports");
  }
  ZxDiagram ket;
  for (std::size_t i = 0; i < in.size(); ++i) {
    ket = i == 0 ? basisKet(in.get(i)) : zx::tensor(ket, basisKet(in.get(i)));
  }
  ZxDiagram bra;
  for (std::size_t i = 0; i < out.size(); ++i) {
    bra = i == 0 ? basisBra(out.get(i)) : zx::tensor(bra, basisBra(out.get(i)));
  }
  ZxDiagram closed = d;
  if (in.size() != 0) {
    closed = zx::compose(closed, ket);
  }
  if (out.size() != 0) {
    closed = zx::compose(bra, closed);
  }
  return eval::contractScalar(closed);
}

} // namespace zxlat::models
