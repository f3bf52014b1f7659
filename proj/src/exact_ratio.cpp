#include "divgraph/exact_ratio.hpp"

#include <stdexcept>

namespace divgraph {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits_int64(__int128 v) {
  return v >= static_cast<__int128>(INT64_MIN) && v <= static_cast<__int128>(INT64_MAX);
}

}  // namespace

ExactRatio ExactRatio::reduce128(__int128 num, __int128 den) {
  if (den == 0) throw std::domain_error("ExactRatio denominator must be nonzero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num == 0) den = 1;
  __int128 g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits_int64(num) || !fits_int64(den)) {
    throw std::overflow_error("ExactRatio value exceeds 64-bit range after reduction");
  }
  ExactRatio r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

ExactRatio::ExactRatio(std::int64_t num, std::int64_t den) { *this = reduce128(num, den); }

std::string ExactRatio::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

ExactRatio ExactRatio::operator-() const {
  ExactRatio r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

ExactRatio ExactRatio::operator-(const ExactRatio& other) const {
  __int128 num = static_cast<__int128>(num_) * other.den_ -
                 static_cast<__int128>(other.num_) * den_;
  __int128 den = static_cast<__int128>(den_) * other.den_;
  return reduce128(num, den);
}

int ExactRatio::cmp(const ExactRatio& a, const ExactRatio& b) {
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return -1;
  if (lhs > rhs) return 1;
  return 0;
}

}  // namespace divgraph
