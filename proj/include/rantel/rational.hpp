/*
 * Copyright 2026 The rantel Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef RANTEL_RATIONAL_HPP
#define RANTEL_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>

namespace rantel {

/// Exact rational over int64. Intermediate values in the transport-block math
/// stay far below 2^63 after gcd reduction, so no wide arithmetic is needed.
class rational {
public:
  constexpr rational() = default;
  constexpr rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design
  constexpr rational(std::int64_t num, std::int64_t den) : num_(num), den_(den)
  {
    if (den_ == 0) {
      throw std::invalid_argument("rational: zero denominator");
    }
    normalize();
  }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }

  constexpr bool is_integer() const { return den_ == 1; }

  constexpr std::int64_t floor() const
  {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ < 0) {
      --q;
    }
    return q;
  }

  constexpr std::int64_t ceil() const
  {
    std::int64_t q = num_ / den_;
    if (num_ % den_ != 0 && num_ > 0) {
      ++q;
    }
    return q;
  }

  /// Round half up (toward +inf on ties).
  constexpr std::int64_t round_half_up() const { return (*this + rational(1, 2)).floor(); }

  constexpr double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend constexpr rational operator+(const rational& a, const rational& b)
  {
    return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr rational operator-(const rational& a, const rational& b)
  {
    return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend constexpr rational operator*(const rational& a, const rational& b)
  {
    // cross-reduce before multiplying to keep intermediates small
    const std::int64_t g1 = std::gcd(a.num_ < 0 ? -a.num_ : a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_ < 0 ? -b.num_ : b.num_, a.den_);
    return rational((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
  }
  friend constexpr rational operator/(const rational& a, const rational& b)
  {
    if (b.num_ == 0) {
      throw std::invalid_argument("rational: division by zero");
    }
    return a * rational(b.den_, b.num_);
  }

  friend constexpr bool operator==(const rational& a, const rational& b)
  {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend constexpr bool operator!=(const rational& a, const rational& b) { return !(a == b); }
  friend constexpr bool operator<(const rational& a, const rational& b)
  {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend constexpr bool operator<=(const rational& a, const rational& b) { return !(b < a); }
  friend constexpr bool operator>(const rational& a, const rational& b) { return b < a; }
  friend constexpr bool operator>=(const rational& a, const rational& b) { return !(a < b); }

private:
  constexpr void normalize()
  {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    const std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
  }

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// floor(log2(x)) for x > 0.
constexpr int floor_log2(const rational& x)
{
  if (x.num() <= 0) {
    throw std::invalid_argument("floor_log2: non-positive argument");
  }
  int k = 0;
  if (x >= rational(1)) {
    rational p(1);
    while (p * rational(2) <= x) {
      p = p * rational(2);
      ++k;
    }
    return k;
  }
  rational p(1);
  while (p > x) {
    p = p / rational(2);
    --k;
  }
  return k;
}

} // namespace rantel

#endif
