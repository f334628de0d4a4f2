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

#include "rantel/sample_codec.hpp"

#include "rantel/errors.hpp"

namespace rantel {

std::array<std::uint8_t, sample_datagram_size> encode_sample(const telemetry_sample& sample)
{
  std::array<std::uint8_t, sample_datagram_size> out{};
  for (int i = 0; i < 8; ++i) {
    out[static_cast<std::size_t>(i)] =
        static_cast<std::uint8_t>(sample.tti_index >> (8 * (7 - i)));
  }
  for (int i = 0; i < 4; ++i) {
    out[static_cast<std::size_t>(8 + i)] =
        static_cast<std::uint8_t>(sample.b_alloc >> (8 * (3 - i)));
  }
  for (int i = 0; i < 4; ++i) {
    out[static_cast<std::size_t>(12 + i)] =
        static_cast<std::uint8_t>(sample.b_spare >> (8 * (3 - i)));
  }
  return out;
}

telemetry_sample decode_sample(std::span<const std::uint8_t> bytes)
{
  if (bytes.size() != sample_datagram_size) {
    fail(errc::bad_length, "sample datagram must be 16 bytes");
  }
  telemetry_sample s;
  for (int i = 0; i < 8; ++i) {
    s.tti_index = (s.tti_index << 8) | bytes[static_cast<std::size_t>(i)];
  }
  for (int i = 8; i < 12; ++i) {
    s.b_alloc = (s.b_alloc << 8) | bytes[static_cast<std::size_t>(i)];
  }
  for (int i = 12; i < 16; ++i) {
    s.b_spare = (s.b_spare << 8) | bytes[static_cast<std::size_t>(i)];
  }
  return s;
}

} // namespace rantel
