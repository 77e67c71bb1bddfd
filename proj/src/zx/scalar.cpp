#include "zxlat/zx/scalar.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace zxlat::zx {

Scalar Scalar::zero() {
  Scalar s;
  s.zero_ = true;
  return s;
}

Scalar Scalar::sqrt2Power(int k) {
  Scalar s;
  s.halfPower_ = k;
  return s;
}

Scalar Scalar::omega(int m) {
  Scalar s;
  s.eighthRoot_ = ((m % 8) + 8) % 8;
  return s;
}

Scalar Scalar::fromPhase(const Phase& alpha) {
  if (alpha.isExact()) {
    return omega(alpha.quarterTurns());
  }
  Scalar s;
  s.residual_ = std::polar(1.0, alpha.toRadians());
  return s;
}

Scalar Scalar::fromComplex(Complex c) {
  constexpr double tol = 1e-12;
  const double mag = std::abs(c);
  if (mag < tol) {
    return zero();
  }
  const double k = std::round(2.0 * std::log2(mag));
  const double arg = std::arg(c) / (std::numbers::pi / 4.0);
  const double m = std::round(arg);
  const double expectMag = std::pow(2.0, k / 2.0);
  if (std::abs(mag - expectMag) < tol * expectMag && std::abs(arg - m) < tol) {
    return sqrt2Power(static_cast<int>(k)) * omega(static_cast<int>(m));
  }
  Scalar s;
  s.residual_ = c;
  return s;
}

Scalar Scalar::onePlusPhase(const Phase& alpha) {
  if (alpha.isExact()) {
    switch (alpha.quarterTurns()) {
    case 0:
      return sqrt2Power(2);
    case 2:
      return sqrt2Power(1) * omega(1);
    case 4:
      return zero();
    case 6:
      return sqrt2Power(1) * omega(-1);
    default:
      break;
    }
  }
  return fromComplex(1.0 + std::polar(1.0, alpha.toRadians()));
}

Scalar Scalar::fromParts(bool zero, int halfPower, int eighthRoot,
                         Complex residual) {
  if (zero) {
    return Scalar::zero();
  }
  Scalar s = sqrt2Power(halfPower) * omega(eighthRoot);
  s.residual_ = residual;
  return s;
}

Complex Scalar::value() const {
  if (zero_) {
    return {0.0, 0.0};
  }
  const double mag = std::pow(2.0, halfPower_ / 2.0);
  // exact values on the axes keep Clifford products free of rounding
  static const Complex roots[8] = {
      {1.0, 0.0},
      {std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2},
      {0.0, 1.0},
      {-std::numbers::sqrt2 / 2, std::numbers::sqrt2 / 2},
      {-1.0, 0.0},
      {-std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2},
      {0.0, -1.0},
      {std::numbers::sqrt2 / 2, -std::numbers::sqrt2 / 2}};
  return mag * roots[eighthRoot_] * residual_;
}

Scalar Scalar::conjugate() const {
  Scalar s = *this;
  s.eighthRoot_ = (8 - eighthRoot_) % 8;
  s.residual_ = std::conj(residual_);
  return s;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  if (zero_ || other.zero_) {
    *this = zero();
    return *this;
  }
  halfPower_ += other.halfPower_;
  eighthRoot_ = (eighthRoot_ + other.eighthRoot_) % 8;
  if (other.hasResidual()) {
    residual_ *= other.residual_;
  }
  return *this;
}

std::string Scalar::toString() const {
  if (zero_) {
    return "0";
  }
  std::ostringstream os;
  os << "2^(" << halfPower_ << "/2) e^(i pi " << eighthRoot_ << "/4)";
  if (hasResidual()) {
    os << " * " << residual_;
  }
  return os.str();
}

} // namespace zxlat::zx
