#pragma once

#include "zxlat/zx/phase.hpp"

#include <complex>
#include <string>

namespace zxlat::zx {

using Complex = std::complex<double>;

/// Diagram scalar 2^(k/2) * e^(i pi m/4) * residual, or exactly zero.
/// Clifford factors live in (k, m) so products of them stay exact; the
/// residual only picks up values with no such form.
class Scalar {
public:
  Scalar() = default;

  static Scalar one() { return {}; }
  static Scalar zero();
  static Scalar sqrt2Power(int k);
  static Scalar omega(int m);
  static Scalar fromPhase(const Phase& alpha);
  /// Snaps to an exact form when c is 0 or 2^(k/2) e^(i pi m/4) within 1e-12.
  static Scalar fromComplex(Complex c);
  /// 1 + e^(i alpha), the value of an isolated spider.
  static Scalar onePlusPhase(const Phase& alpha);

  [[nodiscard]] bool isZero() const { return zero_; }
  [[nodiscard]] int halfPower() const { return halfPower_; }
  [[nodiscard]] int eighthRoot() const { return eighthRoot_; }
  [[nodiscard]] Complex residual() const { return residual_; }
  [[nodiscard]] bool hasResidual() const { return residual_ != Complex(1.0); }

  static Scalar fromParts(bool zero, int halfPower, int eighthRoot,
                          Complex residual);

  [[nodiscard]] Complex value() const;
  [[nodiscard]] Scalar conjugate() const;

  Scalar& operator*=(const Scalar& other);
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  bool operator==(const Scalar& other) const = default;

  [[nodiscard]] std::string toString() const;

private:
  bool zero_ = false;
  int halfPower_ = 0;
  int eighthRoot_ = 0;
  Complex residual_{1.0, 0.0};
};

} // namespace zxlat::zx
