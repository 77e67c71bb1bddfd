#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace zxlat::models {

enum class CellKind { Site, Link, Plaquette, Cube };

/// Cell of the periodic cubic lattice in doubled coordinates: a site at
/// integer point s sits at 2s, a link (s, d) at 2s + e_d, a plaquette with
/// normal n at 2s + (1,1,1) - e_n and a cube at 2s + (1,1,1).
using Doubled = std::array<long, 3>;

/// Periodic Lx x Ly x Lz cubic lattice. Indexing:
///   site(x,y,z)      = (x*Ly + y)*Lz + z
///   link(s, d)       = 3*site + d          (from s to s + e_d)
///   plaquette(s, n)  = 3*site + n          (normal n, lowest corner s)
///   cube(s)          = site
class Lattice3 {
public:
  Lattice3(std::size_t lx, std::size_t ly, std::size_t lz);

  [[nodiscard]] std::size_t lx() const { return l_[0]; }
  [[nodiscard]] std::size_t ly() const { return l_[1]; }
  [[nodiscard]] std::size_t lz() const { return l_[2]; }
  [[nodiscard]] std::size_t sites() const { return l_[0] * l_[1] * l_[2]; }
  [[nodiscard]] std::size_t links() const { return 3 * sites(); }
  [[nodiscard]] std::size_t plaquettes() const { return 3 * sites(); }
  [[nodiscard]] std::size_t cubes() const { return sites(); }
  [[nodiscard]] std::size_t count(CellKind k) const;

  /// Coordinates wrap periodically (negative values allowed).
  [[nodiscard]] std::size_t site(long x, long y, long z) const;
  [[nodiscard]] std::size_t link(long x, long y, long z, int dir) const;
  [[nodiscard]] std::size_t plaquette(long x, long y, long z, int normal) const;
  [[nodiscard]] std::size_t cube(long x, long y, long z) const;
  [[nodiscard]] std::array<long, 3> siteCoords(std::size_t s) const;

  [[nodiscard]] Doubled doubled(CellKind k, std::size_t index) const;
  /// Inverse of doubled(); the parity pattern of the coordinates fixes the
  /// kind.
  [[nodiscard]] std::pair<CellKind, std::size_t> cellAt(const Doubled& q) const;

  [[nodiscard]] std::array<std::size_t, 4> linksOfPlaquette(std::size_t p) const;
  [[nodiscard]] std::array<std::size_t, 6> linksOfSite(std::size_t s) const;
  [[nodiscard]] std::array<std::size_t, 2> sitesOfLink(std::size_t l) const;
  [[nodiscard]] std::array<std::size_t, 4> plaquettesOfLink(std::size_t l) const;
  [[nodiscard]] std::array<std::size_t, 6> plaquettesOfCube(std::size_t c) const;
  [[nodiscard]] std::array<std::size_t, 12> linksOfCube(std::size_t c) const;
  [[nodiscard]] int direction(std::size_t link) const {
    return static_cast<int>(link % 3);
  }
  [[nodiscard]] int normal(std::size_t plaquette) const {
    return static_cast<int>(plaquette % 3);
  }

  /// Image of a cell under q -> f(q) in doubled coordinates.
  template <class F>
  [[nodiscard]] std::vector<std::size_t> mapCells(CellKind k, F f,
                                                  CellKind* target = nullptr) const {
    std::vector<std::size_t> out(count(k));
    for (std::size_t i = 0; i < out.size(); ++i) {
      const auto [kind, idx] = cellAt(f(doubled(k, i)));
      out[i] = idx;
      if (target != nullptr) {
        *target = kind;
      }
    }
    return out;
  }

  /// Shift by (1/2,1/2,1/2): links -> plaquettes, plaquettes -> links,
  /// sites <-> cubes.
  [[nodiscard]] std::vector<std::size_t> halfTranslation(CellKind k) const;
  /// x -> -x.
  [[nodiscard]] std::vector<std::size_t> parity(CellKind k) const;
  /// x -> x + a.
  [[nodiscard]] std::vector<std::size_t> translation(CellKind k, long ax,
                                                     long ay, long az) const;
  /// (x,y,z) -> (z,x,y), the 2pi/3 turn about (1,1,1). Needs a cubic box.
  [[nodiscard]] std::vector<std::size_t> rotation111(CellKind k) const;

private:
  std::array<std::size_t, 3> l_;

  [[nodiscard]] long wrap(long v, int axis) const;
};

} // namespace zxlat::models
