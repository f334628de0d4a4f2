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

#ifndef RANTEL_TESTS_HELPERS_HPP
#define RANTEL_TESTS_HELPERS_HPP

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "rantel/dci_codec.hpp"

namespace rantel::testing {

inline std::string fixture_path(const std::string& name)
{
  return std::string(RANTEL_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

/// The downlink control record of the captured sample trace: format 1_1,
/// f_alloc 0x33, mcs 27 on the 256QAM table, harq process 11.
inline dci sample_trace_dci()
{
  dci d;
  d.format = dci_format::f1_1;
  d.freq_riv = 0x33;
  d.time_index = 0;
  d.mcs = 27;
  d.ndi = 0;
  d.rv = 0;
  d.harq_id = 11;
  d.dai = 2;
  d.tpc = 1;
  d.harq_feedback = 2;
  d.ports = 7;
  d.srs_request = 0;
  d.dmrs_id = 0;
  d.aggregation_level = 1;
  return d;
}

inline dci random_dci(std::mt19937& rng)
{
  auto draw = [&](unsigned width) {
    return static_cast<std::uint32_t>(rng() & ((1U << width) - 1));
  };
  dci d;
  d.format = static_cast<dci_format>(draw(2));
  d.freq_riv = static_cast<std::uint16_t>(draw(16));
  d.time_index = static_cast<std::uint8_t>(draw(4));
  d.mcs = static_cast<std::uint8_t>(draw(5));
  d.ndi = static_cast<std::uint8_t>(draw(1));
  d.rv = static_cast<std::uint8_t>(draw(2));
  d.harq_id = static_cast<std::uint8_t>(draw(4));
  d.dai = static_cast<std::uint8_t>(draw(2));
  d.tpc = static_cast<std::uint8_t>(draw(2));
  d.harq_feedback = static_cast<std::uint8_t>(draw(3));
  d.ports = static_cast<std::uint8_t>(draw(4));
  d.srs_request = static_cast<std::uint8_t>(draw(2));
  d.dmrs_id = static_cast<std::uint8_t>(draw(1));
  d.aggregation_level = 1;
  return d;
}

inline std::vector<int> to_bit_vector(const bit_string& bits)
{
  std::vector<int> out(bits.size_bits());
  for (std::size_t i = 0; i < bits.size_bits(); ++i) {
    out[i] = bits.bit(i) ? 1 : 0;
  }
  return out;
}

} // namespace rantel::testing

#endif
