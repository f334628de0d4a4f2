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

#ifndef RANTEL_RRC_CONFIG_HPP
#define RANTEL_RRC_CONFIG_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "rantel/mcs_tables.hpp"
#include "rantel/rational.hpp"

namespace rantel {

enum class pdsch_mapping_type : std::uint8_t { type_a, type_b };

/// One pdsch/pusch-TimeDomainAllocationList entry.
struct time_domain_alloc {
  int k_offset = 0; // k0 (downlink) or k2 (uplink)
  pdsch_mapping_type mapping_type = pdsch_mapping_type::type_a;
  int sliv = 0; // startSymbolAndLength

  friend bool operator==(const time_domain_alloc&, const time_domain_alloc&) = default;
};

struct search_space_config {
  int id = 0;
  int coreset_id = 0;
  std::string monitoring_symbols; // 14-char binary string
  std::map<int, int> aggregation_candidates; // level {1,2,4,8,16} -> candidates
  std::string type; // e.g. "common" / "ue-Specific"

  friend bool operator==(const search_space_config&, const search_space_config&) = default;
};

/// Cell-common parameters lifted from a SIB 1 dump.
struct cell_common_config {
  int band = 0;
  int carrier_bandwidth_prb = 0;
  int subcarrier_spacing_khz = 0;
  rational tti_duration_ms{0}; // 15 / subcarrier spacing
  int coreset0_index = 0;
  std::vector<search_space_config> common_search_spaces;
  std::vector<time_domain_alloc> pdsch_time_domain_list;
  // Original document, retained so untyped content (paging, broadcast
  // scheduling, power control) passes through serialization untouched.
  nlohmann::ordered_json opaque;

  friend bool operator==(const cell_common_config&, const cell_common_config&) = default;
};

enum class dci_format_set : std::uint8_t {
  formats_0_0_and_1_0,
  formats_0_1_and_1_1,
};

const char* dci_format_set_name(dci_format_set set);

/// UE-dedicated parameters lifted from an RRC Setup (MSG 4) dump.
struct ue_dedicated_config {
  int coreset_id = 0;
  int coreset_duration_symbols = 1;
  std::map<int, int> aggregation_level_candidates;
  dci_format_set dci_formats = dci_format_set::formats_0_1_and_1_1;
  int dmrs_additional_position = 1;
  std::vector<time_domain_alloc> pdsch_time_domain_list; // overrides the cell list when non-empty
  int max_mimo_layers = 1;
  int num_harq_processes = 16;
  mcs_table mcs_table_sel = mcs_table::qam64;
  int xoverhead = 0; // N_oh^PRB
  nlohmann::ordered_json opaque; // original document, see cell_common_config

  friend bool operator==(const ue_dedicated_config&, const ue_dedicated_config&) = default;
};

cell_common_config parse_sib1(const std::string& document);
ue_dedicated_config parse_msg4(const std::string& document);

cell_common_config parse_sib1_json(const nlohmann::ordered_json& doc);
ue_dedicated_config parse_msg4_json(const nlohmann::ordered_json& doc);

/// Inverse of the parsers: emit the document shape the parser accepts.
nlohmann::ordered_json serialize_sib1(const cell_common_config& cfg);
nlohmann::ordered_json serialize_msg4(const ue_dedicated_config& cfg);

/// Printable one-screen summary for the parse-config CLI verb.
std::string summarize(const cell_common_config& cfg);
std::string summarize(const ue_dedicated_config& cfg);

} // namespace rantel

#endif
