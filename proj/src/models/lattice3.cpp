#include "zxlat/models/lattice3.hpp"

#include "zxlat/errors.hpp"

#include <string>

namespace zxlat::models {

Lattice3::Lattice3(std::size_t lx, std::size_t ly, std::size_t lz)
    : l_{lx, ly, lz} {
  if (lx < 2 || ly < 2 || lz < 2) {
    throw BadSize("lattice sides must be at least 2");
  }
}

std::size_t Lattice3::count(CellKind k) const {
  switch (k) {
  case CellKind::Site:
  case CellKind::Cube:
    return sites();
  case CellKind::Link:
  case CellKind::Plaquette:
    return 3 * sites();
  }
  return 0;
}

long Lattice3::wrap(long v, int axis) const {
  const long n = static_cast<long>(l_[axis]);
  return ((v % n) + n) % n;
}

std::size_t Lattice3::site(long x, long y, long z) const {
  return static_cast<std::size_t>((wrap(x, 0) * static_cast<long>(l_[1]) +
                                   wrap(y, 1)) *
                                      static_cast<long>(l_[2]) +
                                  wrap(z, 2));
}

std::size_t Lattice3::link(long x, long y, long z, int dir) const {
  return 3 * site(x, y, z) + static_cast<std::size_t>(dir);
}

std::size_t Lattice3::plaquette(long x, long y, long z, int n) const {
  return 3 * site(x, y, z) + static_cast<std::size_t>(n);
}

std::size_t Lattice3::cube(long x, long y, long z) const { return site(x, y, z); }

std::array<long, 3> Lattice3::siteCoords(std::size_t s) const {
  const auto z = static_cast<long>(s % l_[2]);
  s /= l_[2];
  const auto y = static_cast<long>(s % l_[1]);
  const auto x = static_cast<long>(s / l_[1]);
  return {x, y, z};
}

Doubled Lattice3::doubled(CellKind k, std::size_t index) const {
  const std::size_t s = (k == CellKind::Link || k == CellKind::Plaquette)
                            ? index / 3
                            : index;
  const auto c = siteCoords(s);
  Doubled q{2 * c[0], 2 * c[1], 2 * c[2]};
  const int d = static_cast<int>(index % 3);
  switch (k) {
  case CellKind::Site:
    break;
  case CellKind::Link:
    q[d] += 1;
    break;
  case CellKind::Plaquette:
    for (int a = 0; a < 3; ++a) {
      if (a != d) {
        q[a] += 1;
      }
    }
    break;
  case CellKind::Cube:
    q = {q[0] + 1, q[1] + 1, q[2] + 1};
    break;
  }
  return q;
}

std::pair<CellKind, std::size_t> Lattice3::cellAt(const Doubled& q) const {
  std::array<long, 3> base{};
  int odd = 0;
  int oddAxis = -1;
  int evenAxis = -1;
  for (int a = 0; a < 3; ++a) {
    const long m = ((q[a] % 2) + 2) % 2;
    base[a] = (q[a] - m) / 2;
    if (m == 1) {
      ++odd;
      oddAxis = a;
    } else {
      evenAxis = a;
    }
  }
  const auto s = site(base[0], base[1], base[2]);
  switch (odd) {
  case 0:
    return {CellKind::Site, s};
  case 1:
    return {CellKind::Link, 3 * s + static_cast<std::size_t>(oddAxis)};
  case 2:
    return {CellKind::Plaquette, 3 * s + static_cast<std::size_t>(evenAxis)};
  default:
    return {CellKind::Cube, s};
  }
}

std::array<std::size_t, 4> Lattice3::linksOfPlaquette(std::size_t p) const {
  const int n = normal(p);
  const int a = (n + 1) % 3;
  const int b = (n + 2) % 3;
  const auto c = siteCoords(p / 3);
  auto shifted = [&](int axis) {
    auto s = c;
    s[axis] += 1;
    return s;
  };
  const auto sa = shifted(a);
  const auto sb = shifted(b);
  return {link(c[0], c[1], c[2], a), link(c[0], c[1], c[2], b),
          link(sa[0], sa[1], sa[2], b), link(sb[0], sb[1], sb[2], a)};
}

std::array<std::size_t, 6> Lattice3::linksOfSite(std::size_t s) const {
  const auto c = siteCoords(s);
  std::array<std::size_t, 6> out{};
  for (int d = 0; d < 3; ++d) {
    auto back = c;
    back[d] -= 1;
    out[2 * d] = link(c[0], c[1], c[2], d);
    out[2 * d + 1] = link(back[0], back[1], back[2], d);
  }
  return out;
}

std::array<std::size_t, 2> Lattice3::sitesOfLink(std::size_t l) const {
  auto c = siteCoords(l / 3);
  const auto first = site(c[0], c[1], c[2]);
  c[direction(l)] += 1;
  return {first, site(c[0], c[1], c[2])};
}

std::array<std::size_t, 4> Lattice3::plaquettesOfLink(std::size_t l) const {
  const int d = direction(l);
  const auto c = siteCoords(l / 3);
  std::array<std::size_t, 4> out{};
  std::size_t k = 0;
  for (int n = 0; n < 3; ++n) {
    if (n == d) {
      continue;
    }
    // the plaquette with normal n spans d and the third axis e
    const int e = 3 - n - d;
    auto back = c;
    back[e] -= 1;
    out[k++] = plaquette(c[0], c[1], c[2], n);
    out[k++] = plaquette(back[0], back[1], back[2], n);
  }
  return out;
}

std::array<std::size_t, 6> Lattice3::plaquettesOfCube(std::size_t cb) const {
  const auto c = siteCoords(cb);
  std::array<std::size_t, 6> out{};
  for (int n = 0; n < 3; ++n) {
    auto up = c;
    up[n] += 1;
    out[2 * n] = plaquette(c[0], c[1], c[2], n);
    out[2 * n + 1] = plaquette(up[0], up[1], up[2], n);
  }
  return out;
}

std::array<std::size_t, 12> Lattice3::linksOfCube(std::size_t cb) const {
  const auto c = siteCoords(cb);
  std::array<std::size_t, 12> out{};
  std::size_t k = 0;
  for (int d = 0; d < 3; ++d) {
    const int a = (d + 1) % 3;
    const int b = (d + 2) % 3;
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        auto s = c;
        s[a] += i;
        s[b] += j;
        out[k++] = link(s[0], s[1], s[2], d);
      }
    }
  }
  return out;
}

std::vector<std::size_t> Lattice3::halfTranslation(CellKind k) const {
  return mapCells(k, [](Doubled q) {
    return Doubled{q[0] + 1, q[1] + 1, q[2] + 1};
  });
}

std::vector<std::size_t> Lattice3::parity(CellKind k) const {
  return mapCells(k, [](Doubled q) { return Doubled{-q[0], -q[1], -q[2]}; });
}

std::vector<std::size_t> Lattice3::translation(CellKind k, long ax, long ay,
                                               long az) const {
  return mapCells(k, [=](Doubled q) {
    return Doubled{q[0] + 2 * ax, q[1] + 2 * ay, q[2] + 2 * az};
  });
}

std::vector<std::size_t> Lattice3::rotation111(CellKind k) const {
  if (l_[0] != l_[1] || l_[1] != l_[2]) {
    throw BadSize("rotation about (1,1,1) needs Lx = Ly = Lz");
  }
  return mapCells(k, [](Doubled q) { return Doubled{q[2], q[0], q[1]}; });
}

} // namespace zxlat::models
