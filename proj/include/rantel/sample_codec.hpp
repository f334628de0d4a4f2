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

#ifndef RANTEL_SAMPLE_CODEC_HPP
#define RANTEL_SAMPLE_CODEC_HPP

#include <array>
#include <cstdint>
#include <span>

#include "rantel/capacity_estimator.hpp"

namespace rantel {

inline constexpr std::size_t sample_datagram_size = 16;

/// Fixed 16-byte layout, network byte order:
/// tti_index (8 bytes) | b_alloc (4 bytes) | b_spare (4 bytes).
std::array<std::uint8_t, sample_datagram_size> encode_sample(const telemetry_sample& sample);

/// Inverse of encode_sample; any other length raises BadLength.
telemetry_sample decode_sample(std::span<const std::uint8_t> bytes);

} // namespace rantel

#endif
