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

#include "rantel/bitstring.hpp"

#include "rantel/errors.hpp"

namespace rantel {

namespace {

int hex_digit(char c)
{
  if (c >= '0' && c <= '9') {
    return c - '0';
  }
  if (c >= 'a' && c <= 'f') {
    return c - 'a' + 10;
  }
  if (c >= 'A' && c <= 'F') {
    return c - 'A' + 10;
  }
  return -1;
}

} // namespace

std::string bit_string::to_hex() const
{
  static const char* digits = "0123456789abcdef";
  std::string out;
  out.reserve(bytes_.size() * 2);
  for (std::uint8_t b : bytes_) {
    out.push_back(digits[b >> 4]);
    out.push_back(digits[b & 0xF]);
  }
  return out;
}

bit_string bit_string::from_hex(const std::string& hex, std::size_t nbits)
{
  if (hex.size() != ((nbits + 7) / 8) * 2) {
    fail(errc::bad_length, "hex length does not match declared bit count");
  }
  bit_string out(nbits);
  for (std::size_t i = 0; i < hex.size(); i += 2) {
    const int hi = hex_digit(hex[i]);
    const int lo = hex_digit(hex[i + 1]);
    if (hi < 0 || lo < 0) {
      fail(errc::malformed_document, "non-hex digit in bit string");
    }
    out.bytes_[i / 2] = static_cast<std::uint8_t>((hi << 4) | lo);
  }
  // pad bits must be zero
  for (std::size_t i = nbits; i < out.bytes_.size() * 8; ++i) {
    if (out.bit(i)) {
      fail(errc::malformed_document, "nonzero pad bits");
    }
  }
  return out;
}

std::string bit_string::to_binary_string() const
{
  std::string out;
  out.reserve(nbits_);
  for (std::size_t i = 0; i < nbits_; ++i) {
    out.push_back(bit(i) ? '1' : '0');
  }
  return out;
}

} // namespace rantel
