#include "zxlat/models/bipartite.hpp"

#include "zxlat/errors.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace zxlat::models {

Rational Rational::of(std::int64_t num, std::int64_t den) {
  if (den == 0) {
    throw std::invalid_argument("zero denominator");
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num, den);
  return {num / g, den / g};
}

Rational Rational::parse(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      return of(std::stoll(text));
    }
    return of(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
  } catch (const std::logic_error&) {
    throw ParseError("bad rational '" + text + "'");
  }
}

std::string Rational::toString() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational::of(a.num * b.den + b.num * a.den, a.den * b.den);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational::of(a.num * b.den - b.num * a.den, a.den * b.den);
}

bool Automorphism::isInvolution() const {
  if (reversing) {
    for (std::size_t v = 0; v < onV.size(); ++v) {
      if (onVHat[onV[v]] != v) {
        return false;
      }
    }
    return true;
  }
  for (std::size_t v = 0; v < onV.size(); ++v) {
    if (onV[onV[v]] != v) {
      return false;
    }
  }
  for (std::size_t w = 0; w < onVHat.size(); ++w) {
    if (onVHat[onVHat[w]] != w) {
      return false;
    }
  }
  return true;
}

Automorphism compose(const Automorphism& second, const Automorphism& first) {
  Automorphism out;
  out.name = second.name + "*" + first.name;
  out.reversing = second.reversing != first.reversing;
  const auto& fromV = first.reversing ? second.onVHat : second.onV;
  const auto& fromVHat = first.reversing ? second.onV : second.onVHat;
  for (std::size_t x : first.onV) {
    out.onV.push_back(fromV.at(x));
  }
  for (std::size_t x : first.onVHat) {
    out.onVHat.push_back(fromVHat.at(x));
  }
  return out;
}

Automorphism identityAutomorphism(std::size_t nV, std::size_t nVHat) {
  Automorphism a;
  a.name = "identity";
  a.onV.resize(nV);
  a.onVHat.resize(nVHat);
  std::iota(a.onV.begin(), a.onV.end(), 0);
  std::iota(a.onVHat.begin(), a.onVHat.end(), 0);
  return a;
}

std::vector<std::pair<std::size_t, std::size_t>> BipartiteModel::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t r = 0; r < nVHat(); ++r) {
    for (std::size_t c : sigma.row(r).ones()) {
      out.emplace_back(r, c);
    }
  }
  return out;
}

bool BipartiteModel::isConnected() const {
  const std::size_t n = nV() + nVHat();
  if (n == 0) {
    return true;
  }
  // union-find over V (0..nV) and V-hat (nV..)
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  std::size_t components = n;
  for (const auto& [r, c] : edges()) {
    const auto a = find(c);
    const auto b = find(nV() + r);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

const Automorphism& BipartiteModel::automorphism(const std::string& key) const {
  for (const auto& a : automorphisms) {
    if (a.name == key) {
      return a;
    }
  }
  throw std::out_of_range("model " + name + " has no automorphism " + key);
}

bool BipartiteModel::operator==(const BipartiteModel& other) const {
  return vLabels == other.vLabels && vhatLabels == other.vhatLabels &&
         sigma == other.sigma && kappa == other.kappa;
}

bool isAutomorphism(const BipartiteModel& m, const Automorphism& a) {
  const std::size_t nv = m.nV();
  const std::size_t nh = m.nVHat();
  const std::size_t vTarget = a.reversing ? nh : nv;
  const std::size_t hTarget = a.reversing ? nv : nh;
  if (a.onV.size() != nv || a.onVHat.size() != nh || vTarget != nv) {
    return false;
  }
  auto isBijection = [](const std::vector<std::size_t>& map, std::size_t n) {
    std::vector<bool> seen(n, false);
    for (std::size_t x : map) {
      if (x >= n || seen[x]) {
        return false;
      }
      seen[x] = true;
    }
    return true;
  };
  if (!isBijection(a.onV, vTarget) || !isBijection(a.onVHat, hTarget)) {
    return false;
  }
  for (std::size_t r = 0; r < nh; ++r) {
    for (std::size_t c = 0; c < nv; ++c) {
      const bool image = a.reversing ? m.sigma.get(a.onV[c], a.onVHat[r])
                                     : m.sigma.get(a.onVHat[r], a.onV[c]);
      if (image != m.sigma.get(r, c)) {
        return false;
      }
    }
  }
  return true;
}

BipartiteModel gauged(const BipartiteModel& m) {
  BipartiteModel g;
  g.name = "gauged(" + m.name + ")";
  g.vLabels = m.vhatLabels;
  g.vhatLabels = m.vLabels;
  g.sigma = m.sigma.transpose();
  g.kappa = Rational::of(static_cast<std::int64_t>(m.edgeCount()), 2) - m.kappa;
  for (const auto& a : m.automorphisms) {
    Automorphism b = a;
    std::swap(b.onV, b.onVHat);
    g.automorphisms.push_back(std::move(b));
  }
  return g;
}

pauli::PauliString isingTerm(const BipartiteModel& m, std::size_t vhat) {
  return pauli::PauliString::zType(m.sigma.row(vhat));
}

pauli::OperatorSum hamiltonian(const BipartiteModel& m, double j, double h) {
  pauli::OperatorSum out(m.nV());
  for (std::size_t r = 0; r < m.nVHat(); ++r) {
    out.add(-j, isingTerm(m, r));
  }
  for (std::size_t v = 0; v < m.nV(); ++v) {
    out.add(-h, pauli::PauliString::single(m.nV(), v, 'X'));
  }
  return out;
}

pauli::PauliString etaFor(const BipartiteModel& m, const gf2::BitVector& a) {
  if (a.size() != m.nV() || !gf2::matvec(m.sigma, a).isZero()) {
    throw NotASymmetry("sigma a != 0 for a = " + a.toString());
  }
  return pauli::PauliString::xType(a);
}

std::vector<pauli::PauliString> symmetryOps(const BipartiteModel& m) {
  std::vector<pauli::PauliString> out;
  for (const auto& a : gf2::kernelBasis(m.sigma)) {
    out.push_back(pauli::PauliString::xType(a));
  }
  return out;
}

std::size_t kernelDimension(const BipartiteModel& m) {
  return m.nV() - gf2::rank(m.sigma);
}

eval::StructuredOp translationOp(const Automorphism& pi) {
  if (pi.reversing) {
    throw std::invalid_argument("translationOp needs a preserving map");
  }
  return eval::makePermute(pi.onV);
}

eval::StructuredOp dualityOp(const BipartiteModel& m, const Automorphism& rho) {
  if (!rho.reversing || !isAutomorphism(m, rho)) {
    throw NotReversing("'" + rho.name + "' is not a reversing automorphism of " +
                       m.name);
  }
  const double exponent =
      m.kappa.value() -
      (static_cast<double>(m.edgeCount()) - static_cast<double>(m.nVHat())) / 2.0;
  return eval::makeCompose({
      eval::makeBasisMap(m.sigma),
      eval::makeHLayerAll(m.nVHat()),
      eval::makePermute(rho.onVHat),
      eval::makeScale(m.nV(), std::exp2(exponent)),
  });
}

pauli::OperatorSum condensationOp(const BipartiteModel& m, std::uint64_t cap) {
  const double coeff = std::exp2(2.0 * m.kappa.value() -
                                 static_cast<double>(m.edgeCount()) +
                                 static_cast<double>(m.nV()));
  auto it = gf2::enumerateKernel(m.sigma, cap);
  pauli::OperatorSum out(m.nV());
  gf2::BitVector a;
  while (it.next(a)) {
    out.add(coeff, pauli::PauliString::xType(a));
  }
  return out;
}

double absorptionCoefficient(const BipartiteModel& m) {
  return std::exp2(2.0 * m.kappa.value() +
                   static_cast<double>(kernelDimension(m)) -
                   static_cast<double>(m.edgeCount()) +
                   static_cast<double>(m.nV()));
}

pauli::OperatorSum embed(const pauli::OperatorSum& h, std::size_t n,
                         std::size_t offset) {
  if (offset + h.qubits() > n) {
    throw DimensionMismatch("embedding does not fit the register");
  }
  pauli::OperatorSum out(n);
  for (const auto& t : h.terms()) {
    gf2::BitVector x(n);
    gf2::BitVector z(n);
    for (std::size_t q : t.op.x().ones()) {
      x.set(offset + q);
    }
    for (std::size_t q : t.op.z().ones()) {
      z.set(offset + q);
    }
    out.add(t.coeff, pauli::PauliString(x, z, t.op.phase()));
  }
  return out;
}

} // namespace zxlat::models
