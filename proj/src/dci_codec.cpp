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

#include "rantel/dci_codec.hpp"

#include <array>

#include "rantel/errors.hpp"
#include "rantel/tbs_calc.hpp"

namespace rantel {

namespace {

constexpr std::uint32_t crc24_poly = 0xB2B117;
constexpr std::uint32_t crc24_mask = 0xFFFFFF;

std::array<std::uint32_t, 256> make_crc_table()
{
  std::array<std::uint32_t, 256> table{};
  for (std::uint32_t i = 0; i < 256; ++i) {
    std::uint32_t crc = i << 16;
    for (int k = 0; k < 8; ++k) {
      crc = (crc & 0x800000) ? ((crc << 1) ^ crc24_poly) & crc24_mask : (crc << 1) & crc24_mask;
    }
    table[i] = crc;
  }
  return table;
}

const std::array<std::uint32_t, 256> crc_table = make_crc_table();

void check_width(const char* name, std::uint32_t value, unsigned width)
{
  if (value >> width) {
    fail(errc::field_overflow, std::string(name) + " exceeds " + std::to_string(width) + " bits");
  }
}

} // namespace

const char* dci_format_name(dci_format fmt)
{
  switch (fmt) {
    case dci_format::f0_0: return "0_0";
    case dci_format::f0_1: return "0_1";
    case dci_format::f1_0: return "1_0";
    case dci_format::f1_1: return "1_1";
  }
  return "?";
}

link_direction format_direction(dci_format fmt)
{
  return (fmt == dci_format::f0_0 || fmt == dci_format::f0_1) ? link_direction::uplink
                                                              : link_direction::downlink;
}

const char* rnti_type_name(rnti_type type)
{
  switch (type) {
    case rnti_type::c_rnti: return "C-RNTI";
    case rnti_type::tc_rnti: return "TC-RNTI";
    case rnti_type::si_rnti: return "SI-RNTI";
  }
  return "?";
}

bit_string pack_dci(const dci& record)
{
  const auto fmt = static_cast<std::uint32_t>(record.format);
  check_width("format", fmt, 4);
  check_width("time_index", record.time_index, 4);
  check_width("mcs", record.mcs, 5);
  check_width("ndi", record.ndi, 1);
  check_width("rv", record.rv, 2);
  check_width("harq_id", record.harq_id, 4);
  check_width("dai", record.dai, 2);
  check_width("tpc", record.tpc, 2);
  check_width("harq_feedback", record.harq_feedback, 3);
  check_width("ports", record.ports, 4);
  check_width("srs_request", record.srs_request, 2);
  check_width("dmrs_id", record.dmrs_id, 1);

  bit_string bits;
  bits.append(fmt, 4);
  bits.append(record.freq_riv, 16);
  bits.append(record.time_index, 4);
  bits.append(record.mcs, 5);
  bits.append(record.ndi, 1);
  bits.append(record.rv, 2);
  bits.append(record.harq_id, 4);
  bits.append(record.dai, 2);
  bits.append(record.tpc, 2);
  bits.append(record.harq_feedback, 3);
  bits.append(record.ports, 4);
  bits.append(record.srs_request, 2);
  bits.append(record.dmrs_id, 1);
  bits.append(0, dci_packed_bits - dci_field_bits);
  return bits;
}

dci unpack_dci(const bit_string& bits)
{
  if (bits.size_bits() != dci_packed_bits) {
    fail(errc::bad_length, "packed DCI must be " + std::to_string(dci_packed_bits) + " bits");
  }
  dci d;
  std::size_t pos = 0;
  auto take = [&](unsigned width) {
    const std::uint32_t v = bits.extract(pos, width);
    pos += width;
    return v;
  };
  d.format = static_cast<dci_format>(take(4));
  d.freq_riv = static_cast<std::uint16_t>(take(16));
  d.time_index = static_cast<std::uint8_t>(take(4));
  d.mcs = static_cast<std::uint8_t>(take(5));
  d.ndi = static_cast<std::uint8_t>(take(1));
  d.rv = static_cast<std::uint8_t>(take(2));
  d.harq_id = static_cast<std::uint8_t>(take(4));
  d.dai = static_cast<std::uint8_t>(take(2));
  d.tpc = static_cast<std::uint8_t>(take(2));
  d.harq_feedback = static_cast<std::uint8_t>(take(3));
  d.ports = static_cast<std::uint8_t>(take(4));
  d.srs_request = static_cast<std::uint8_t>(take(2));
  d.dmrs_id = static_cast<std::uint8_t>(take(1));
  d.aggregation_level = 1;
  if (static_cast<std::uint32_t>(d.format) > 3) {
    fail(errc::field_overflow, "format code out of range");
  }
  return d;
}

std::uint32_t crc24(const bit_string& bits)
{
  if (bits.size_bits() == 0) {
    fail(errc::empty_input, "CRC of empty bit string");
  }
  std::uint32_t crc = 0;
  const std::size_t full_bytes = bits.size_bits() / 8;
  for (std::size_t i = 0; i < full_bytes; ++i) {
    crc = ((crc << 8) & crc24_mask) ^ crc_table[((crc >> 16) ^ bits.bytes()[i]) & 0xFF];
  }
  for (std::size_t i = full_bytes * 8; i < bits.size_bits(); ++i) {
    const std::uint32_t feedback = (crc >> 23) ^ static_cast<std::uint32_t>(bits.bit(i));
    crc = (crc << 1) & crc24_mask;
    if (feedback) {
      crc ^= crc24_poly;
    }
  }
  return crc;
}

dci_envelope make_envelope(const bit_string& payload, rnti_t rnti)
{
  return dci_envelope{payload, crc24(payload) ^ rnti.value};
}

rnti_t recover_rnti(const dci_envelope& envelope)
{
  const std::uint32_t x = crc24(envelope.payload) ^ envelope.scrambled_crc;
  if (x >> 16) {
    fail(errc::not_rnti_scrambled, "upper CRC byte does not cancel");
  }
  return rnti_t{static_cast<std::uint16_t>(x)};
}

bool verify_dci(const dci_envelope& envelope, rnti_t rnti)
{
  return (crc24(envelope.payload) ^ static_cast<std::uint32_t>(rnti.value)) ==
         envelope.scrambled_crc;
}

prb_allocation riv_decode(std::uint32_t riv, int bwp_size_prb)
{
  if (bwp_size_prb < 1) {
    fail(errc::invalid_value, "bandwidth part must hold at least one PRB");
  }
  const std::int64_t n = bwp_size_prb;
  if (riv >= static_cast<std::uint64_t>(n * (n + 1) / 2)) {
    fail(errc::riv_out_of_range, "RIV " + std::to_string(riv) + " too large for " +
                                     std::to_string(bwp_size_prb) + " PRBs");
  }
  int len = static_cast<int>(riv / n) + 1;
  int start = static_cast<int>(riv % n);
  if (start + len > bwp_size_prb) {
    start = bwp_size_prb - 1 - start;
    len = bwp_size_prb - len + 2;
  }
  return prb_allocation{start, len};
}

std::uint32_t riv_encode(const prb_allocation& alloc, int bwp_size_prb)
{
  if (alloc.num_prb < 1 || alloc.start_prb < 0 || alloc.start_prb + alloc.num_prb > bwp_size_prb) {
    fail(errc::invalid_value, "PRB allocation outside the bandwidth part");
  }
  const std::int64_t n = bwp_size_prb;
  const std::int64_t l1 = alloc.num_prb - 1;
  if (l1 <= (n / 2)) {
    return static_cast<std::uint32_t>(n * l1 + alloc.start_prb);
  }
  return static_cast<std::uint32_t>(n * (n - l1) + (n - 1 - alloc.start_prb));
}

symbol_allocation sliv_decode(int sliv)
{
  if (sliv < 0 || sliv >= 14 * 14) {
    fail(errc::sliv_out_of_range, "SLIV " + std::to_string(sliv) + " outside [0, 196)");
  }
  int len = sliv / 14 + 1;
  int start = sliv % 14;
  if (start + len > 14) {
    start = 14 - 1 - start;
    len = 14 - len + 2;
  }
  const symbol_allocation alloc{start, len};
  if (alloc.start_symbol < 0 || alloc.num_symbols < 1 ||
      alloc.start_symbol + alloc.num_symbols > 14 || sliv_encode(alloc) != sliv) {
    fail(errc::no_valid_decode, "SLIV " + std::to_string(sliv) + " is not a codeword");
  }
  return alloc;
}

int sliv_encode(const symbol_allocation& alloc)
{
  if (alloc.num_symbols < 1 || alloc.start_symbol < 0 ||
      alloc.start_symbol + alloc.num_symbols > 14) {
    fail(errc::invalid_value, "symbol allocation outside the slot");
  }
  const int l1 = alloc.num_symbols - 1;
  if (l1 <= 7) {
    return 14 * l1 + alloc.start_symbol;
  }
  return 14 * (14 - l1) + (14 - 1 - alloc.start_symbol);
}

grant dci_to_grant(const dci& record,
                   const cell_common_config& cell,
                   const ue_dedicated_config& ue,
                   rnti_t rnti,
                   const std::optional<dmrs_override>& dmrs)
{
  const auto& tda_list =
      !ue.pdsch_time_domain_list.empty() ? ue.pdsch_time_domain_list : cell.pdsch_time_domain_list;
  if (record.time_index >= tda_list.size()) {
    fail(errc::time_index_out_of_range,
         "t_alloc " + std::to_string(record.time_index) + " with a " +
             std::to_string(tda_list.size()) + "-entry time-domain list");
  }

  const symbol_allocation symbols = sliv_decode(tda_list[record.time_index].sliv);
  const prb_allocation prbs = riv_decode(record.freq_riv, cell.carrier_bandwidth_prb);
  const mcs_entry mcs = mcs_lookup(record.mcs, ue.mcs_table_sel);

  const std::string pattern =
      dmrs ? dmrs->reserved_pattern
           : dmrs_pattern_type_a(ue.dmrs_additional_position, symbols.start_symbol,
                                 symbols.num_symbols);
  const int dmrs_re = dmrs_re_per_prb(pattern, symbols.start_symbol, symbols.num_symbols);

  grant g;
  g.rnti = rnti;
  g.type = rnti.value == rnti_t::si_rnti ? rnti_type::si_rnti : rnti_type::c_rnti;
  g.start_prb = prbs.start_prb;
  g.num_prb = prbs.num_prb;
  g.start_symbol = symbols.start_symbol;
  g.num_symbols = symbols.num_symbols;
  g.modulation_order = mcs.modulation_order;
  g.code_rate = mcs.code_rate;
  g.num_layers = ue.max_mimo_layers;
  g.tbs_bits = grant_tbs(
      re_count_inputs{prbs.num_prb, symbols.num_symbols, dmrs_re, ue.xoverhead}, mcs,
      ue.max_mimo_layers);
  g.harq_id = record.harq_id;
  return g;
}

} // namespace rantel
