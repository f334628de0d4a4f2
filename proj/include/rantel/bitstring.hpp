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

#ifndef RANTEL_BITSTRING_HPP
#define RANTEL_BITSTRING_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rantel {

/// Fixed-order bit string, MSB-first within each byte. Trailing pad bits in
/// the last byte are always zero.
class bit_string {
public:
  bit_string() = default;
  explicit bit_string(std::size_t nbits) : nbits_(nbits), bytes_((nbits + 7) / 8, 0) {}

  std::size_t size_bits() const { return nbits_; }
  std::size_t size_bytes() const { return bytes_.size(); }
  const std::vector<std::uint8_t>& bytes() const { return bytes_; }

  bool bit(std::size_t i) const { return (bytes_[i / 8] >> (7 - i % 8)) & 1U; }

  void set_bit(std::size_t i, bool v)
  {
    const std::uint8_t mask = static_cast<std::uint8_t>(1U << (7 - i % 8));
    if (v) {
      bytes_[i / 8] |= mask;
    } else {
      bytes_[i / 8] &= static_cast<std::uint8_t>(~mask);
    }
  }

  void flip_bit(std::size_t i) { bytes_[i / 8] ^= static_cast<std::uint8_t>(1U << (7 - i % 8)); }

  /// Append the low `width` bits of `value`, most significant first.
  void append(std::uint32_t value, unsigned width)
  {
    for (unsigned b = width; b-- > 0;) {
      push_back((value >> b) & 1U);
    }
  }

  void push_back(bool v)
  {
    if (nbits_ % 8 == 0) {
      bytes_.push_back(0);
    }
    ++nbits_;
    set_bit(nbits_ - 1, v);
  }

  /// Read `width` bits starting at `pos`, most significant first.
  std::uint32_t extract(std::size_t pos, unsigned width) const
  {
    std::uint32_t v = 0;
    for (unsigned b = 0; b < width; ++b) {
      v = (v << 1) | static_cast<std::uint32_t>(bit(pos + b));
    }
    return v;
  }

  std::string to_hex() const;
  static bit_string from_hex(const std::string& hex, std::size_t nbits);

  /// "0"/"1" rendering, MSB first.
  std::string to_binary_string() const;

  friend bool operator==(const bit_string& a, const bit_string& b)
  {
    return a.nbits_ == b.nbits_ && a.bytes_ == b.bytes_;
  }
  friend bool operator!=(const bit_string& a, const bit_string& b) { return !(a == b); }

private:
  std::size_t nbits_ = 0;
  std::vector<std::uint8_t> bytes_;
};

} // namespace rantel

#endif
