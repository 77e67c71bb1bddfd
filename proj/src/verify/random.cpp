#include "zxlat/verify/random.hpp"

#include "zxlat/models/lattice_ops.hpp"

#include <numbers>

namespace zxlat::verify {

using zx::NodeKind;
using zx::Phase;
using zx::ZxDiagram;

StateVector randomState(std::size_t n, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  StateVector psi(n);
  for (std::size_t i = 0; i < psi.size(); ++i) {
    const double re = g(rng);
    const double im = g(rng);
    psi[i] = {re, im};
  }
  psi *= 1.0 / psi.norm();
  return psi;
}

Phase randomPhase(Rng& rng, double irrational) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  if (u(rng) < irrational) {
    return Phase::radians(2.0 * std::numbers::pi * u(rng));
  }
  return Phase::quarters(static_cast<std::int64_t>(rng() % 8));
}

ZxDiagram randomDiagram(Rng& rng, std::size_t spiders, std::size_t legs,
                        std::size_t extraWires) {
  ZxDiagram d;
  std::vector<int> ids;
  for (std::size_t k = 0; k < spiders; ++k) {
    ids.push_back(d.addSpider(rng() % 2 == 0 ? NodeKind::Z : NodeKind::X,
                              randomPhase(rng, 0.2)));
  }
  // spanning tree keeps the diagram connected
  for (std::size_t k = 1; k < ids.size(); ++k) {
    d.addWire(ids[rng() % k], ids[k], rng() % 2 == 0);
  }
  for (std::size_t k = 0; k < extraWires && !ids.empty(); ++k) {
    d.addWire(ids[rng() % ids.size()], ids[rng() % ids.size()], rng() % 2 == 0);
  }
  for (std::size_t k = 0; k < legs && !ids.empty(); ++k) {
    const int port = rng() % 2 == 0 ? d.addInput() : d.addOutput();
    d.addWire(port, ids[rng() % ids.size()], rng() % 3 == 0);
  }
  return d;
}

pauli::OperatorSum randomOperatorSum(std::size_t n, std::size_t terms, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  pauli::OperatorSum h(n);
  static const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (std::size_t t = 0; t < terms; ++t) {
    std::string s(n, 'I');
    for (auto& c : s) {
      c = letters[rng() % 4];
    }
    h.add({g(rng), g(rng)}, pauli::PauliString::fromString(s));
  }
  return h;
}

gf2::BitVector randomCurve(const models::Lattice3& lat, bool closed, Rng& rng) {
  while (true) {
    gf2::BitVector c(lat.links());
    if (closed) {
      for (std::size_t k = 0, n = 1 + rng() % 3; k < n; ++k) {
        c ^= models::plaquetteBoundary(lat, rng() % lat.plaquettes());
      }
      if (rng() % 2 == 0) {
        c ^= models::straightLoop(lat, static_cast<int>(rng() % 3));
      }
    } else {
      std::size_t s = rng() % lat.sites();
      for (std::size_t k = 0, n = 1 + rng() % 5; k < n; ++k) {
        const auto ls = lat.linksOfSite(s);
        const std::size_t l = ls[rng() % ls.size()];
        c.flip(l);
        const auto ends = lat.sitesOfLink(l);
        s = ends[0] == s ? ends[1] : ends[0];
      }
      if (models::isClosedCurve(lat, c)) {
        continue;
      }
    }
    if (!c.isZero()) {
      return c;
    }
  }
}

} // namespace zxlat::verify
