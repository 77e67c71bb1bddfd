#include "zxlat/models/hamiltonians.hpp"

#include "zxlat/errors.hpp"
#include "zxlat/models/lattice_ops.hpp"

namespace zxlat::models {

namespace {

using pauli::PauliString;

PauliString letters(std::size_t n,
                    const std::vector<std::pair<std::size_t, char>>& ops) {
  PauliString p(n);
  for (const auto& [q, c] : ops) {
    p = p * PauliString::single(n, q, c);
  }
  return p;
}

} // namespace

pauli::OperatorSum deformed1d(std::size_t L, double j, double lambda) {
  if (L < 3) {
    throw BadSize("deformed_1d needs L >= 3");
  }
  auto at = [L](std::size_t i, long d) {
    const long m = static_cast<long>(L);
    return static_cast<std::size_t>(((static_cast<long>(i) + d) % m + m) % m);
  };
  pauli::OperatorSum h(L);
  for (std::size_t i = 0; i < L; ++i) {
    h.add(-j, letters(L, {{i, 'Z'}, {at(i, 1), 'Z'}}));
    h.add(-j, PauliString::single(L, i, 'X'));
    h.add(j * lambda / 2.0,
          letters(L, {{at(i, -1), 'X'}, {i, 'Z'}, {at(i, 1), 'Z'}}));
    h.add(j * lambda / 2.0,
          letters(L, {{i, 'Z'}, {at(i, 1), 'Z'}, {at(i, 2), 'X'}}));
  }
  return h;
}

pauli::PauliString plaquetteTerm(const Lattice3& lat, std::size_t p) {
  gf2::BitVector z(lat.links());
  for (std::size_t l : lat.linksOfPlaquette(p)) {
    z.flip(l);
  }
  return PauliString::zType(z);
}

pauli::OperatorSum gauge3dWithGauss(const Lattice3& lat, double j, double h,
                                    double g) {
  return defect(lat, j, h, g, gf2::BitVector(lat.plaquettes()));
}

std::vector<std::pair<std::size_t, std::size_t>>
orthogonalPairs(const Lattice3& lat) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t l = 0; l < lat.links(); ++l) {
    const int d = lat.direction(l);
    const int a = (d + 1) % 3;
    const int b = (d + 2) % 3;
    for (std::size_t s : lat.sitesOfLink(l)) {
      const auto c = lat.siteCoords(s);
      // plaquettes with normal d that have s as a corner
      for (long i = 0; i <= 1; ++i) {
        for (long k = 0; k <= 1; ++k) {
          auto corner = c;
          corner[a] -= i;
          corner[b] -= k;
          out.emplace_back(l, lat.plaquette(corner[0], corner[1], corner[2], d));
        }
      }
    }
  }
  return out;
}

pauli::OperatorSum deformed3d(const Lattice3& lat, double j, double lambda) {
  auto h = gauge3dWithGauss(lat, j, j, 0.0);
  const std::size_t n = lat.links();
  for (const auto& [l, p] : orthogonalPairs(lat)) {
    h.add(j * lambda / 8.0, PauliString::single(n, l, 'X') * plaquetteTerm(lat, p));
  }
  return h;
}

pauli::OperatorSum defect(const Lattice3& lat, double j, double h, double g,
                          const gf2::BitVector& dualCurve) {
  if (dualCurve.size() != lat.plaquettes()) {
    throw BadSurface("dual curve indicator must have one entry per plaquette");
  }
  const std::size_t n = lat.links();
  pauli::OperatorSum out(n);
  for (std::size_t p = 0; p < lat.plaquettes(); ++p) {
    out.add(dualCurve.get(p) ? j : -j, plaquetteTerm(lat, p));
  }
  for (std::size_t l = 0; l < n; ++l) {
    out.add(-h, PauliString::single(n, l, 'X'));
  }
  if (g != 0.0) {
    for (std::size_t s = 0; s < lat.sites(); ++s) {
      out.add(-g, gaussOp(lat, s));
    }
  }
  return out;
}

} // namespace zxlat::models
