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

#include "rantel/trace_io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "rantel/errors.hpp"

namespace rantel {

namespace {

constexpr const char* observer_header = "# rantel-dci-trace v1 run=";
constexpr const char* truth_header = "# rantel-ground-truth v1 run=";

std::string read_header(std::istream& in, const char* expected)
{
  std::string line;
  if (!std::getline(in, line) || line.rfind(expected, 0) != 0) {
    fail(errc::malformed_document, "missing trace header");
  }
  return line.substr(std::string(expected).size());
}

// token of the form key=value
std::string expect_token(std::istringstream& is, const std::string& key)
{
  std::string token;
  if (!(is >> token) || token.rfind(key + "=", 0) != 0) {
    fail(errc::malformed_document, "expected token '" + key + "='");
  }
  return token.substr(key.size() + 1);
}

std::uint64_t to_u64(const std::string& s, int base = 10)
{
  std::uint64_t value = 0;
  const auto* begin = s.data();
  const auto* end = s.data() + s.size();
  if (base == 16 && s.rfind("0x", 0) == 0) {
    begin += 2;
  }
  auto [ptr, ec] = std::from_chars(begin, end, value, base);
  if (ec != std::errc{} || ptr != end) {
    fail(errc::malformed_document, "bad number '" + s + "'");
  }
  return value;
}

link_direction to_dir(const std::string& s)
{
  if (s == "dl") {
    return link_direction::downlink;
  }
  if (s == "ul") {
    return link_direction::uplink;
  }
  fail(errc::malformed_document, "bad direction '" + s + "'");
}

dci_format to_format(const std::string& s)
{
  for (auto fmt : {dci_format::f0_0, dci_format::f0_1, dci_format::f1_0, dci_format::f1_1}) {
    if (s == dci_format_name(fmt)) {
      return fmt;
    }
  }
  fail(errc::malformed_document, "bad format '" + s + "'");
}

} // namespace

void write_observer_trace(std::ostream& out, const std::string& run_id,
                          const std::vector<observer_record>& records)
{
  out << observer_header << run_id << "\n";
  char crc_hex[8];
  for (const observer_record& rec : records) {
    std::snprintf(crc_hex, sizeof(crc_hex), "%06x", rec.envelope.scrambled_crc & 0xFFFFFF);
    out << "tti=" << rec.tti << " dir=" << (rec.dir == link_direction::downlink ? "dl" : "ul")
        << " env=" << rec.envelope.payload.to_hex() << ":" << crc_hex << "\n";
  }
}

std::vector<observer_record> read_observer_trace(std::istream& in, std::string& run_id)
{
  run_id = read_header(in, observer_header);
  std::vector<observer_record> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream is(line);
    observer_record rec;
    rec.tti = to_u64(expect_token(is, "tti"));
    rec.dir = to_dir(expect_token(is, "dir"));
    const std::string env = expect_token(is, "env");
    const auto colon = env.find(':');
    if (colon == std::string::npos || env.size() - colon - 1 != 6) {
      fail(errc::malformed_document, "bad envelope encoding");
    }
    rec.envelope.payload = bit_string::from_hex(env.substr(0, colon), dci_packed_bits);
    rec.envelope.scrambled_crc = static_cast<std::uint32_t>(to_u64(env.substr(colon + 1), 16));
    out.push_back(std::move(rec));
  }
  return out;
}

void write_ground_truth(std::ostream& out, const std::string& run_id,
                        const std::vector<ground_truth_entry>& entries)
{
  out << truth_header << run_id << "\n";
  char rnti_hex[8];
  for (const ground_truth_entry& gt : entries) {
    std::snprintf(rnti_hex, sizeof(rnti_hex), "0x%04x", gt.rnti.value);
    out << "tti=" << gt.tti << " rnti=" << rnti_hex
        << " dir=" << (gt.dir == link_direction::downlink ? "dl" : "ul")
        << " format=" << dci_format_name(gt.record.format) << " riv=" << gt.record.freq_riv
        << " t=" << static_cast<int>(gt.record.time_index)
        << " mcs=" << static_cast<int>(gt.record.mcs) << " ndi=" << static_cast<int>(gt.record.ndi)
        << " rv=" << static_cast<int>(gt.record.rv) << " harq=" << static_cast<int>(gt.record.harq_id)
        << " dai=" << static_cast<int>(gt.record.dai) << " tpc=" << static_cast<int>(gt.record.tpc)
        << " hfb=" << static_cast<int>(gt.record.harq_feedback)
        << " ports=" << static_cast<int>(gt.record.ports)
        << " srs=" << static_cast<int>(gt.record.srs_request)
        << " dmrsid=" << static_cast<int>(gt.record.dmrs_id)
        << " agg=" << static_cast<int>(gt.record.aggregation_level) << " prb=" << gt.num_prb
        << " tbs=" << gt.tbs << " retx=" << (gt.is_retransmission ? 1 : 0) << "\n";
  }
}

std::vector<ground_truth_entry> read_ground_truth(std::istream& in, std::string& run_id)
{
  run_id = read_header(in, truth_header);
  std::vector<ground_truth_entry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::istringstream is(line);
    ground_truth_entry gt;
    gt.tti = to_u64(expect_token(is, "tti"));
    gt.rnti = rnti_t{static_cast<std::uint16_t>(to_u64(expect_token(is, "rnti"), 16))};
    gt.dir = to_dir(expect_token(is, "dir"));
    gt.record.format = to_format(expect_token(is, "format"));
    gt.record.freq_riv = static_cast<std::uint16_t>(to_u64(expect_token(is, "riv")));
    gt.record.time_index = static_cast<std::uint8_t>(to_u64(expect_token(is, "t")));
    gt.record.mcs = static_cast<std::uint8_t>(to_u64(expect_token(is, "mcs")));
    gt.record.ndi = static_cast<std::uint8_t>(to_u64(expect_token(is, "ndi")));
    gt.record.rv = static_cast<std::uint8_t>(to_u64(expect_token(is, "rv")));
    gt.record.harq_id = static_cast<std::uint8_t>(to_u64(expect_token(is, "harq")));
    gt.record.dai = static_cast<std::uint8_t>(to_u64(expect_token(is, "dai")));
    gt.record.tpc = static_cast<std::uint8_t>(to_u64(expect_token(is, "tpc")));
    gt.record.harq_feedback = static_cast<std::uint8_t>(to_u64(expect_token(is, "hfb")));
    gt.record.ports = static_cast<std::uint8_t>(to_u64(expect_token(is, "ports")));
    gt.record.srs_request = static_cast<std::uint8_t>(to_u64(expect_token(is, "srs")));
    gt.record.dmrs_id = static_cast<std::uint8_t>(to_u64(expect_token(is, "dmrsid")));
    gt.record.aggregation_level = static_cast<std::uint8_t>(to_u64(expect_token(is, "agg")));
    gt.num_prb = static_cast<int>(to_u64(expect_token(is, "prb")));
    gt.tbs = static_cast<int>(to_u64(expect_token(is, "tbs")));
    gt.is_retransmission = to_u64(expect_token(is, "retx")) != 0;
    out.push_back(gt);
  }
  return out;
}

namespace {

std::ofstream open_out(const std::string& path)
{
  std::ofstream out(path);
  if (!out) {
    fail(errc::invalid_value, "cannot write " + path);
  }
  return out;
}

std::ifstream open_in(const std::string& path)
{
  std::ifstream in(path);
  if (!in) {
    fail(errc::invalid_value, "cannot read " + path);
  }
  return in;
}

} // namespace

void write_observer_trace_file(const std::string& path, const std::string& run_id,
                               const std::vector<observer_record>& records)
{
  auto out = open_out(path);
  write_observer_trace(out, run_id, records);
}

std::vector<observer_record> read_observer_trace_file(const std::string& path, std::string& run_id)
{
  auto in = open_in(path);
  return read_observer_trace(in, run_id);
}

void write_ground_truth_file(const std::string& path, const std::string& run_id,
                             const std::vector<ground_truth_entry>& entries)
{
  auto out = open_out(path);
  write_ground_truth(out, run_id, entries);
}

std::vector<ground_truth_entry> read_ground_truth_file(const std::string& path,
                                                       std::string& run_id)
{
  auto in = open_in(path);
  return read_ground_truth(in, run_id);
}

} // namespace rantel
