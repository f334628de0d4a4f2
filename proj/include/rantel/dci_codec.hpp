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

#ifndef RANTEL_DCI_CODEC_HPP
#define RANTEL_DCI_CODEC_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "rantel/bitstring.hpp"
#include "rantel/mcs_tables.hpp"
#include "rantel/rational.hpp"
#include "rantel/rrc_config.hpp"

namespace rantel {

/// 16-bit radio network temporary identifier.
struct rnti_t {
  std::uint16_t value = 0;

  static constexpr std::uint16_t si_rnti = 0xFFFF; // broadcast, fixed by the standard

  bool in_unicast_range() const { return value >= 0x0001 && value <= 0xFFF2; }

  friend bool operator==(const rnti_t&, const rnti_t&) = default;
  friend auto operator<=>(const rnti_t&, const rnti_t&) = default;
};

enum class link_direction : std::uint8_t { downlink, uplink };

enum class dci_format : std::uint8_t { f0_0 = 0, f0_1 = 1, f1_0 = 2, f1_1 = 3 };

const char* dci_format_name(dci_format fmt);
link_direction format_direction(dci_format fmt);

/// One decoded control record. Field widths follow the canonical packing
/// below; aggregation_level is reception context (read from configuration,
/// never on the wire) and defaults to 1 after unpacking.
struct dci {
  dci_format format = dci_format::f1_1;
  std::uint16_t freq_riv = 0;      // f_alloc, 16 bits
  std::uint8_t time_index = 0;     // t_alloc, 4 bits
  std::uint8_t mcs = 0;            // 5 bits
  std::uint8_t ndi = 0;            // 1 bit
  std::uint8_t rv = 0;             // 2 bits
  std::uint8_t harq_id = 0;        // 4 bits
  std::uint8_t dai = 0;            // 2 bits
  std::uint8_t tpc = 0;            // 2 bits
  std::uint8_t harq_feedback = 0;  // 3 bits
  std::uint8_t ports = 0;          // 4 bits
  std::uint8_t srs_request = 0;    // 2 bits
  std::uint8_t dmrs_id = 0;        // 1 bit
  std::uint8_t aggregation_level = 1; // context, one of {1,2,4,8,16}

  link_direction direction() const { return format_direction(format); }

  friend bool operator==(const dci&, const dci&) = default;
};

inline constexpr std::size_t dci_field_bits = 50;
inline constexpr std::size_t dci_packed_bits = 56; // padded to a byte boundary

/// Canonical fixed-order packing:
/// format(4) | freq_riv(16) | time_index(4) | mcs(5) | ndi(1) | rv(2) |
/// harq_id(4) | dai(2) | tpc(2) | harq_feedback(3) | ports(4) |
/// srs_request(2) | dmrs_id(1), zero-padded to 56 bits.
bit_string pack_dci(const dci& record);
dci unpack_dci(const bit_string& bits);

/// CRC-24C (generator 0xB2B117), init 0, no reflection, no final xor,
/// MSB-first over the bit string.
std::uint32_t crc24(const bit_string& bits);

/// Payload plus its RNTI-scrambled CRC as received.
struct dci_envelope {
  bit_string payload;
  std::uint32_t scrambled_crc = 0; // 24 bits

  friend bool operator==(const dci_envelope&, const dci_envelope&) = default;
};

dci_envelope make_envelope(const bit_string& payload, rnti_t rnti);

/// XOR of the recomputed CRC and the received one; the upper 8 bits must
/// cancel, the low 16 are the scrambling RNTI.
rnti_t recover_rnti(const dci_envelope& envelope);

bool verify_dci(const dci_envelope& envelope, rnti_t rnti);

struct prb_allocation {
  int start_prb = 0;
  int num_prb = 0;

  friend bool operator==(const prb_allocation&, const prb_allocation&) = default;
};

struct symbol_allocation {
  int start_symbol = 0;
  int num_symbols = 0;

  friend bool operator==(const symbol_allocation&, const symbol_allocation&) = default;
};

/// Resource-indication value codec for contiguous (type 1) allocations.
prb_allocation riv_decode(std::uint32_t riv, int bwp_size_prb);
std::uint32_t riv_encode(const prb_allocation& alloc, int bwp_size_prb);

/// Start-and-length indicator codec over the 14-symbol slot.
symbol_allocation sliv_decode(int sliv);
int sliv_encode(const symbol_allocation& alloc);

enum class rnti_type : std::uint8_t { c_rnti, tc_rnti, si_rnti };

const char* rnti_type_name(rnti_type type);

/// A DCI translated to physical resources, modulation and transport block.
struct grant {
  rnti_t rnti;
  rnti_type type = rnti_type::c_rnti;
  int start_prb = 0;
  int num_prb = 0;
  int start_symbol = 0;
  int num_symbols = 0;
  int modulation_order = 2; // Q_m
  rational code_rate{0};    // R
  int num_layers = 1;       // v
  int tbs_bits = 0;
  bool is_new_data = true; // refined by the HARQ tracker
  int harq_id = 0;

  friend bool operator==(const grant&, const grant&) = default;
};

/// Overrides for the PDSCH DMRS reservation used in the transport-block math.
/// When absent, the pattern is derived from the UE's dmrs_additional_position.
struct dmrs_override {
  std::string reserved_pattern; // 14-char binary string, '1' = DMRS symbol
};

grant dci_to_grant(const dci& record,
                   const cell_common_config& cell,
                   const ue_dedicated_config& ue,
                   rnti_t rnti,
                   const std::optional<dmrs_override>& dmrs = std::nullopt);

} // namespace rantel

#endif
