#include "zxlat/models/builders.hpp"

#include "zxlat/errors.hpp"

#include <string>

namespace zxlat::models {

namespace {

std::size_t mod(long v, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((v % m) + m) % m);
}

std::vector<std::string> numbered(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(prefix + std::to_string(i));
  }
  return out;
}

// V = V-hat = sites of a chain, sigma symmetric; term i <-> site i.
Automorphism swapInvolution(std::size_t n) {
  Automorphism a = identityAutomorphism(n, n);
  a.name = "swap";
  a.reversing = true;
  return a;
}

} // namespace

BipartiteModel isingChain(std::size_t L) {
  if (L < 2) {
    throw BadSize("ising_chain needs L >= 2");
  }
  BipartiteModel m;
  m.name = "ising_chain(" + std::to_string(L) + ")";
  m.vLabels = numbered("s", L);
  for (std::size_t j = 0; j < L; ++j) {
    m.vhatLabels.push_back("l" + std::to_string(j) + "+1/2");
  }
  m.sigma = gf2::BitMatrix(L, L);
  for (std::size_t j = 0; j < L; ++j) {
    m.sigma.flip(j, j);
    m.sigma.flip(j, (j + 1) % L);
  }
  m.kappa = Rational::of(static_cast<std::int64_t>(L), 2);

  // doubled coordinate: site i at 2i, link j+1/2 at 2j+1
  Automorphism half{"half_translation", true, {}, {}};
  Automorphism refl{"reflection", true, {}, {}};
  for (std::size_t i = 0; i < L; ++i) {
    half.onV.push_back(i);
    half.onVHat.push_back((i + 1) % L);
    refl.onV.push_back(mod(-static_cast<long>(i), L));
    refl.onVHat.push_back(mod(-static_cast<long>(i), L));
  }
  m.automorphisms = {half, refl};
  return m;
}

BipartiteModel gauge3d(const Lattice3& lat) {
  BipartiteModel m;
  m.name = "gauge3d(" + std::to_string(lat.lx()) + "," +
           std::to_string(lat.ly()) + "," + std::to_string(lat.lz()) + ")";
  m.vLabels = numbered("l", lat.links());
  m.vhatLabels = numbered("p", lat.plaquettes());
  m.sigma = gf2::BitMatrix(lat.plaquettes(), lat.links());
  for (std::size_t p = 0; p < lat.plaquettes(); ++p) {
    for (std::size_t l : lat.linksOfPlaquette(p)) {
      m.sigma.set(p, l);
    }
  }
  m.kappa = Rational::of(4 * static_cast<std::int64_t>(lat.sites()));

  Automorphism half{"half_translation", true,
                    lat.halfTranslation(CellKind::Link),
                    lat.halfTranslation(CellKind::Plaquette)};
  auto flip = [](Doubled q) { return Doubled{1 - q[0], 1 - q[1], 1 - q[2]}; };
  Automorphism par{"parity", true, lat.mapCells(CellKind::Link, flip),
                   lat.mapCells(CellKind::Plaquette, flip)};
  m.automorphisms = {half, par};
  return m;
}

BipartiteModel ashkinTeller(std::size_t L) {
  if (L < 4 || L % 2 != 0) {
    throw BadSize("ashkin_teller needs an even L >= 4");
  }
  BipartiteModel m;
  m.name = "ashkin_teller(" + std::to_string(L) + ")";
  m.vLabels = numbered("s", L);
  m.vhatLabels = numbered("t", L);
  m.sigma = gf2::BitMatrix(L, L);
  for (std::size_t i = 0; i < L; ++i) {
    m.sigma.set(i, (i + L - 1) % L);
    m.sigma.set(i, (i + 1) % L);
  }
  m.kappa = Rational::of(static_cast<std::int64_t>(L), 2);
  m.automorphisms = {swapInvolution(L)};
  return m;
}

BipartiteModel threeSpin(std::size_t L) {
  if (L < 3 || L % 3 != 0) {
    throw BadSize("three_spin needs L a positive multiple of 3");
  }
  BipartiteModel m;
  m.name = "three_spin(" + std::to_string(L) + ")";
  m.vLabels = numbered("s", L);
  m.vhatLabels = numbered("t", L);
  m.sigma = gf2::BitMatrix(L, L);
  for (std::size_t i = 0; i < L; ++i) {
    for (long d = -1; d <= 1; ++d) {
      m.sigma.set(i, mod(static_cast<long>(i) + d, L));
    }
  }
  m.kappa = Rational::of(static_cast<std::int64_t>(L));
  m.automorphisms = {swapInvolution(L)};
  return m;
}

BipartiteModel plaquetteIsing(std::size_t lx, std::size_t ly) {
  if (lx < 2 || ly < 2) {
    throw BadSize("plaquette_ising needs Lx, Ly >= 2");
  }
  const std::size_t a = lx * ly;
  auto idx = [&](long i, long j) { return mod(i, lx) * ly + mod(j, ly); };
  BipartiteModel m;
  m.name = "plaquette_ising(" + std::to_string(lx) + "," + std::to_string(ly) + ")";
  m.vLabels = numbered("s", a);
  m.vhatLabels = numbered("p", a);
  m.sigma = gf2::BitMatrix(a, a);
  for (std::size_t i = 0; i < lx; ++i) {
    for (std::size_t j = 0; j < ly; ++j) {
      const auto li = static_cast<long>(i);
      const auto lj = static_cast<long>(j);
      for (long di = 0; di <= 1; ++di) {
        for (long dj = 0; dj <= 1; ++dj) {
          m.sigma.set(idx(li, lj), idx(li + di, lj + dj));
        }
      }
    }
  }
  m.kappa = Rational::of(3 * static_cast<std::int64_t>(a), 2);

  Automorphism half{"half_translation", true, {}, {}};
  Automorphism rot{"rotation", true, {}, {}};
  for (std::size_t i = 0; i < lx; ++i) {
    for (std::size_t j = 0; j < ly; ++j) {
      const auto li = static_cast<long>(i);
      const auto lj = static_cast<long>(j);
      // site (i,j) -> plaquette (i+1/2, j+1/2) -> site (i+1, j+1)
      half.onV.push_back(idx(li, lj));
      half.onVHat.push_back(idx(li + 1, lj + 1));
      // site (i,j) -> plaquette (-i+1/2, -j+1/2); plaquette (i+1/2, j+1/2)
      // -> site (-i, -j)
      rot.onV.push_back(idx(-li, -lj));
      rot.onVHat.push_back(idx(-li, -lj));
    }
  }
  m.automorphisms = {half, rot};
  return m;
}

BipartiteModel ising2d(std::size_t lx, std::size_t ly) {
  if (lx < 2 || ly < 2) {
    throw BadSize("ising_2d needs Lx, Ly >= 2");
  }
  const std::size_t a = lx * ly;
  auto idx = [&](long i, long j) { return mod(i, lx) * ly + mod(j, ly); };
  BipartiteModel m;
  m.name = "ising_2d(" + std::to_string(lx) + "," + std::to_string(ly) + ")";
  m.vLabels = numbered("s", a);
  m.vhatLabels = numbered("l", 2 * a);
  m.sigma = gf2::BitMatrix(2 * a, a);
  for (std::size_t i = 0; i < lx; ++i) {
    for (std::size_t j = 0; j < ly; ++j) {
      const auto li = static_cast<long>(i);
      const auto lj = static_cast<long>(j);
      const std::size_t s = idx(li, lj);
      m.sigma.set(2 * s, s);
      m.sigma.set(2 * s, idx(li + 1, lj));
      m.sigma.set(2 * s + 1, s);
      m.sigma.set(2 * s + 1, idx(li, lj + 1));
    }
  }
  m.kappa = Rational::of(3 * static_cast<std::int64_t>(a), 2);
  return m;
}

BipartiteModel productWithDual(const BipartiteModel& base) {
  const std::size_t nv0 = base.nV();
  const std::size_t nh0 = base.nVHat();
  BipartiteModel m;
  m.name = "product_with_dual(" + base.name + ")";
  m.vLabels = base.vLabels;
  for (const auto& l : base.vhatLabels) {
    m.vLabels.push_back("dual:" + l);
  }
  m.vhatLabels = base.vhatLabels;
  for (const auto& l : base.vLabels) {
    m.vhatLabels.push_back("dual:" + l);
  }
  m.sigma = gf2::BitMatrix(nh0 + nv0, nv0 + nh0);
  for (const auto& [r, c] : base.edges()) {
    m.sigma.set(r, c);
    m.sigma.set(nh0 + c, nv0 + r);
  }
  m.kappa = Rational::of(static_cast<std::int64_t>(base.edgeCount()), 2);

  Automorphism swap{"swap", true, {}, {}};
  for (std::size_t c = 0; c < nv0; ++c) {
    swap.onV.push_back(nh0 + c);
  }
  for (std::size_t r = 0; r < nh0; ++r) {
    swap.onV.push_back(r);
  }
  for (std::size_t r = 0; r < nh0; ++r) {
    swap.onVHat.push_back(nv0 + r);
  }
  for (std::size_t c = 0; c < nv0; ++c) {
    swap.onVHat.push_back(c);
  }
  m.automorphisms = {swap};
  return m;
}

} // namespace zxlat::models
