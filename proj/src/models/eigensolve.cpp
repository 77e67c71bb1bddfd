#include "zxlat/models/eigensolve.hpp"

#include "zxlat/errors.hpp"
#include "zxlat/models/lattice_ops.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <deque>
#include <random>

namespace zxlat::models {

LanczosResult lanczosLowest(const LinearMap& h, std::size_t nQubits,
                            const LanczosOptions& opts) {
  std::mt19937_64 rng(opts.seed);
  std::normal_distribution<double> g(0.0, 1.0);
  StateVector v(nQubits);
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double re = g(rng);
    const double im = g(rng);
    v[i] = {re, im};
  }
  v *= 1.0 / v.norm();

  std::vector<StateVector> basis{v};
  std::vector<double> alpha;
  std::vector<double> beta;
  LanczosResult out;
  double previous = std::numeric_limits<double>::infinity();
  Eigen::VectorXd ritz;
  const std::size_t dim = v.size();

  for (std::size_t k = 0; k < opts.maxIterations && k < dim; ++k) {
    StateVector w = h(basis[k]);
    alpha.push_back(inner(basis[k], w).real());
    // full reorthogonalization, twice for stability
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        w.axpy(-inner(b, w), b);
      }
    }
    const double nb = w.norm();
    out.iterations = k + 1;

    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(k + 1, k + 1);
    for (std::size_t i = 0; i <= k; ++i) {
      t(i, i) = alpha[i];
      if (i < k) {
        t(i, i + 1) = t(i + 1, i) = beta[i];
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(t);
    const double lowest = es.eigenvalues()(0);
    ritz = es.eigenvectors().col(0);
    out.lowest = lowest;
    const double boundResidual = nb * std::abs(ritz(k));
    if (nb < 1e-12 || (std::abs(lowest - previous) < opts.tolerance &&
                       boundResidual < opts.tolerance)) {
      out.converged = true;
      break;
    }
    previous = lowest;
    beta.push_back(nb);
    w *= 1.0 / nb;
    basis.push_back(std::move(w));
  }

  StateVector y(nQubits);
  for (Eigen::Index i = 0; i < ritz.size(); ++i) {
    y.axpy(ritz(i), basis[static_cast<std::size_t>(i)]);
  }
  StateVector hy = h(y);
  hy.axpy(-out.lowest, y);
  out.residual = hy.norm() / y.norm();
  return out;
}

std::vector<double> denseSpectrum(const pauli::OperatorSum& h, std::size_t cap) {
  if (h.qubits() > cap) {
    throw TooLarge("dense spectrum above the qubit cap");
  }
  const DenseMatrix m = pauli::toDense(h);
  const auto n = static_cast<Eigen::Index>(m.rows());
  Eigen::MatrixXcd a(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index c = 0; c < n; ++c) {
      a(r, c) = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(a, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

GaugeFixing::GaugeFixing(const Lattice3& lat) : lat_(&lat) {
  const std::size_t nSites = lat.sites();
  const std::size_t nLinks = lat.links();
  std::vector<long> parentLink(nSites, -1);
  std::vector<std::size_t> parent(nSites, 0);
  std::vector<bool> seen(nSites, false);
  std::vector<bool> isTree(nLinks, false);
  std::vector<std::size_t> order;
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::size_t s = queue.front();
    queue.pop_front();
    order.push_back(s);
    for (std::size_t l : lat.linksOfSite(s)) {
      for (std::size_t t : lat.sitesOfLink(l)) {
        if (!seen[t]) {
          seen[t] = true;
          isTree[l] = true;
          parentLink[t] = static_cast<long>(l);
          parent[t] = s;
          queue.push_back(t);
        }
      }
    }
  }
  keptIndex_.assign(nLinks, -1);
  for (std::size_t l = 0; l < nLinks; ++l) {
    if (isTree[l]) {
      tree_.push_back(l);
    } else {
      keptIndex_[l] = static_cast<long>(kept_.size());
      kept_.push_back(l);
    }
  }

  // subtree membership: descendants of each site
  std::vector<std::vector<bool>> below(nSites, std::vector<bool>(nSites, false));
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    below[*it][*it] = true;
    if (*it != 0) {
      for (std::size_t u = 0; u < nSites; ++u) {
        if (below[*it][u]) {
          below[parent[*it]][u] = true;
        }
      }
    }
  }
  cut_.assign(nLinks, gf2::BitVector(kept_.size()));
  for (std::size_t t = 1; t < nSites; ++t) {
    const auto l = static_cast<std::size_t>(parentLink[t]);
    for (std::size_t k : kept_) {
      const auto ends = lat.sitesOfLink(k);
      if (below[t][ends[0]] != below[t][ends[1]]) {
        cut_[l].flip(static_cast<std::size_t>(keptIndex_[k]));
      }
    }
  }
  for (std::size_t s = 1; s < nSites; ++s) {
    gauss_.push_back(gaussOp(lat, s).x());
  }
}

pauli::PauliString GaugeFixing::reduce(const pauli::PauliString& p) const {
  const Lattice3& lat = *lat_;
  // gauge invariance: Z part must have no boundary at any site
  for (std::size_t s = 0; s < lat.sites(); ++s) {
    if ((p.z() & gaussOp(lat, s).x()).parity()) {
      throw NotASymmetry("string is not gauge invariant");
    }
  }
  gf2::BitVector x(kept_.size());
  gf2::BitVector z(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    x.set(i, p.x().get(kept_[i]));
    z.set(i, p.z().get(kept_[i]));
  }
  for (std::size_t l : tree_) {
    if (p.x().get(l)) {
      x ^= cut_[l];
    }
  }
  // tree Z letters read 0 on the representative
  pauli::PauliString out(x, z, 0);
  out.setPhase(p.phase());
  return out;
}

pauli::OperatorSum GaugeFixing::reduce(const pauli::OperatorSum& h) const {
  pauli::OperatorSum out(kept_.size());
  for (const auto& t : h.terms()) {
    out.add(t.coeff, reduce(t.op));
  }
  return out;
}

StateVector GaugeFixing::lift(const StateVector& reduced) const {
  const std::size_t nLinks = lat_->links();
  if (reduced.qubits() != kept_.size()) {
    throw DimensionMismatch("reduced state has the wrong qubit count");
  }
  std::vector<std::uint64_t> keptMask(kept_.size());
  for (std::size_t i = 0; i < kept_.size(); ++i) {
    keptMask[i] = std::uint64_t{1} << (nLinks - 1 - kept_[i]);
  }
  std::vector<std::uint64_t> orbit;
  const std::size_t g = gauss_.size();
  for (std::uint64_t lam = 0; lam < (std::uint64_t{1} << g); ++lam) {
    std::uint64_t m = 0;
    for (std::size_t k = 0; k < g; ++k) {
      if (((lam >> k) & 1U) != 0) {
        m ^= gauss_[k].toIndexMask();
      }
    }
    orbit.push_back(m);
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(orbit.size()));
  StateVector out(nLinks);
  const std::size_t nk = kept_.size();
  for (std::uint64_t r = 0; r < reduced.size(); ++r) {
    const Complex a = reduced[r] * norm;
    if (a == Complex(0.0)) {
      continue;
    }
    std::uint64_t base = 0;
    for (std::size_t i = 0; i < nk; ++i) {
      if (((r >> (nk - 1 - i)) & 1U) != 0) {
        base |= keptMask[i];
      }
    }
    for (std::uint64_t m : orbit) {
      out[base ^ m] += a;
    }
  }
  return out;
}

} // namespace zxlat::models
