#pragma once

#include <cstdint>
#include <string>

namespace zxlat::zx {

/// Spider phase. Exact phases are multiples of pi/4 and stored reduced
/// (numerator * pi / 2^log2Denominator, 0 <= numerator < 2^(log2Den+1));
/// anything else is kept as a float in radians.
class Phase {
public:
  Phase() = default;

  static Phase exact(std::int64_t numerator, int log2Denominator = 0);
  static Phase quarters(std::int64_t q) { return exact(q, 2); }
  static Phase pi() { return exact(1, 0); }
  static Phase halfPi() { return exact(1, 1); }
  static Phase radians(double value);

  [[nodiscard]] bool isExact() const { return exact_; }
  [[nodiscard]] std::int64_t numerator() const;
  [[nodiscard]] int log2Denominator() const;
  /// Exact phase in units of pi/4, in [0, 8).
  [[nodiscard]] int quarterTurns() const { return quarters_; }
  [[nodiscard]] double toRadians() const;

  [[nodiscard]] bool isZero() const { return exact_ && quarters_ == 0; }
  [[nodiscard]] bool isPi() const { return exact_ && quarters_ == 4; }
  [[nodiscard]] bool isPauli() const { return exact_ && quarters_ % 4 == 0; }
  [[nodiscard]] bool isClifford() const { return exact_ && quarters_ % 2 == 0; }

  Phase operator-() const;
  Phase& operator+=(const Phase& other);
  friend Phase operator+(Phase a, const Phase& b) { return a += b; }
  friend Phase operator-(Phase a, const Phase& b) { return a += -b; }
  bool operator==(const Phase& other) const;

  [[nodiscard]] std::string toString() const;

private:
  bool exact_ = true;
  int quarters_ = 0;
  double radians_ = 0.0;
};

} // namespace zxlat::zx
