#pragma once

#include <cstdint>
#include <string>

namespace divgraph {

/// Exact fraction num/den in lowest terms with den >= 1; zero is 0/1.
/// Comparisons and subtraction cross-multiply in 128-bit width, so they are
/// exact for any pair of in-range values. Construction or arithmetic whose
/// reduced result does not fit in 64 bits throws std::overflow_error.
class ExactRatio {
public:
  ExactRatio() = default;
  ExactRatio(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  /// "p/q"; plain integer when den == 1 (so zero renders as "0").
  std::string str() const;

  ExactRatio operator-() const;
  ExactRatio operator-(const ExactRatio& other) const;

  friend bool operator==(const ExactRatio& a, const ExactRatio& b) {
    return cmp(a, b) == 0;
  }
  friend bool operator!=(const ExactRatio& a, const ExactRatio& b) { return !(a == b); }
  friend bool operator<(const ExactRatio& a, const ExactRatio& b) { return cmp(a, b) < 0; }
  friend bool operator>(const ExactRatio& a, const ExactRatio& b) { return cmp(a, b) > 0; }
  friend bool operator<=(const ExactRatio& a, const ExactRatio& b) { return cmp(a, b) <= 0; }
  friend bool operator>=(const ExactRatio& a, const ExactRatio& b) { return cmp(a, b) >= 0; }

private:
  static int cmp(const ExactRatio& a, const ExactRatio& b);
  static ExactRatio reduce128(__int128 num, __int128 den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace divgraph
