#include "zxlat/zx/phase.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace zxlat::zx {

namespace {
// Symmetric range [-pi, pi] so that negation is exact.
double wrapRadians(double x) {
  return std::remainder(x, 2.0 * std::numbers::pi);
}
} // namespace

Phase Phase::exact(std::int64_t numerator, int log2Denominator) {
  if (log2Denominator < 0 || log2Denominator > 2) {
    throw std::invalid_argument("exact phases need denominator 1, 2 or 4");
  }
  Phase p;
  auto q = numerator * (std::int64_t{1} << (2 - log2Denominator));
  q %= 8;
  if (q < 0) {
    q += 8;
  }
  p.quarters_ = static_cast<int>(q);
  return p;
}

Phase Phase::radians(double value) {
  Phase p;
  p.exact_ = false;
  p.radians_ = wrapRadians(value);
  return p;
}

std::int64_t Phase::numerator() const {
  auto num = static_cast<std::int64_t>(quarters_);
  int den = 2;
  while (den > 0 && num % 2 == 0) {
    num /= 2;
    --den;
  }
  return num;
}

int Phase::log2Denominator() const {
  int q = quarters_;
  int den = 2;
  while (den > 0 && q % 2 == 0) {
    q /= 2;
    --den;
  }
  return den;
}

double Phase::toRadians() const {
  if (exact_) {
    return static_cast<double>(quarters_) * std::numbers::pi / 4.0;
  }
  return radians_;
}

Phase Phase::operator-() const {
  if (exact_) {
    return quarters((8 - quarters_) % 8);
  }
  return radians(-radians_);
}

Phase& Phase::operator+=(const Phase& other) {
  if (exact_ && other.exact_) {
    quarters_ = (quarters_ + other.quarters_) % 8;
    return *this;
  }
  *this = radians(toRadians() + other.toRadians());
  return *this;
}

bool Phase::operator==(const Phase& other) const {
  if (exact_ != other.exact_) {
    return false;
  }
  return exact_ ? quarters_ == other.quarters_ : radians_ == other.radians_;
}

std::string Phase::toString() const {
  if (!exact_) {
    std::ostringstream os;
    os << radians_;
    return os.str();
  }
  if (quarters_ == 0) {
    return "0";
  }
  std::ostringstream os;
  os << numerator() << "pi";
  if (log2Denominator() > 0) {
    os << "/" << (1 << log2Denominator());
  }
  return os.str();
}

} // namespace zxlat::zx
