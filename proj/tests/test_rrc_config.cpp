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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rantel/errors.hpp"
#include "rantel/rrc_config.hpp"
#include "test_helpers.hpp"

using namespace rantel;
using rantel::testing::fixture_path;
using rantel::testing::read_file;

TEST_CASE("parse_sib1: cell dump fixture")
{
  const cell_common_config cfg = parse_sib1(read_file(fixture_path("sib1.json")));

  CHECK(cfg.band == 48);
  CHECK(cfg.carrier_bandwidth_prb == 51);
  CHECK(cfg.subcarrier_spacing_khz == 30);
  CHECK(cfg.tti_duration_ms == rational(1, 2));
  CHECK(cfg.coreset0_index == 10);

  REQUIRE(cfg.pdsch_time_domain_list.size() == 2);
  CHECK(cfg.pdsch_time_domain_list[0].sliv == 53);
  CHECK(cfg.pdsch_time_domain_list[1].sliv == 67);
  CHECK(cfg.pdsch_time_domain_list[0].k_offset == 0);
  CHECK(cfg.pdsch_time_domain_list[0].mapping_type == pdsch_mapping_type::type_a);

  REQUIRE(cfg.common_search_spaces.size() == 1);
  const search_space_config& ss = cfg.common_search_spaces[0];
  CHECK(ss.id == 1);
  CHECK(ss.coreset_id == 0);
  CHECK(ss.monitoring_symbols == "10000000000000");
  CHECK(ss.aggregation_candidates.at(4) == 2);
  CHECK(ss.aggregation_candidates.at(1) == 0);
  CHECK(ss.type == "common");

  // untyped content rides along
  CHECK(cfg.opaque["SIB1"]["servingCellConfigCommon"]["downlinkConfigCommon"]["bcch-Config"]
                  ["modificationPeriodCoeff"] == "n2");
}

TEST_CASE("parse_sib1: tti duration per subcarrier spacing")
{
  const char* minimal = R"({
    "SIB1": {"servingCellConfigCommon": {"downlinkConfigCommon": {
      "frequencyInfoDL": {"scs-SpecificCarrierList": [
        {"subcarrierSpacing": "kHz15", "carrierBandwidth": 25}]}}}}})";
  const cell_common_config cfg = parse_sib1(minimal);
  CHECK(cfg.tti_duration_ms == rational(1));
  CHECK(cfg.carrier_bandwidth_prb == 25);

  const std::string at60 = std::string(minimal).replace(std::string(minimal).find("kHz15"), 5, "kHz60");
  CHECK(parse_sib1(at60).tti_duration_ms == rational(1, 4));
}

TEST_CASE("parse_sib1: error paths")
{
  try {
    parse_sib1(R"({"SIB1": {"servingCellConfigCommon": {"downlinkConfigCommon": {}}}})");
    FAIL("expected MissingField");
  } catch (const error& e) {
    CHECK(e.code() == errc::missing_field);
    CHECK(std::string(e.what()).find("frequencyInfoDL") != std::string::npos);
  }

  try {
    parse_sib1("{ not json");
    FAIL("expected MalformedDocument");
  } catch (const error& e) {
    CHECK(e.code() == errc::malformed_document);
  }

  try {
    parse_sib1(R"({
      "SIB1": {"servingCellConfigCommon": {"downlinkConfigCommon": {
        "frequencyInfoDL": {"scs-SpecificCarrierList": [
          {"subcarrierSpacing": "kHz45", "carrierBandwidth": 25}]}}}}})");
    FAIL("expected InvalidValue");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_value);
  }
}

TEST_CASE("parse_msg4: attach dump fixture")
{
  const ue_dedicated_config cfg = parse_msg4(read_file(fixture_path("msg4.json")));

  CHECK(cfg.coreset_id == 1);
  CHECK(cfg.coreset_duration_symbols == 2);
  CHECK(cfg.max_mimo_layers == 2);
  CHECK(cfg.num_harq_processes == 16);
  CHECK(cfg.dci_formats == dci_format_set::formats_0_1_and_1_1);
  CHECK(cfg.dmrs_additional_position == 1);
  CHECK(cfg.aggregation_level_candidates ==
        std::map<int, int>{{1, 4}, {2, 4}, {4, 2}, {8, 1}, {16, 0}});
  REQUIRE(cfg.pdsch_time_domain_list.size() == 2);
  CHECK(cfg.pdsch_time_domain_list[0].sliv == 53);
  CHECK(cfg.pdsch_time_domain_list[1].sliv == 67);

  // shared-channel hints from the translated-grant capture
  CHECK(cfg.mcs_table_sel == mcs_table::qam256);
  CHECK(cfg.xoverhead == 0);
}

TEST_CASE("parse_msg4: token mapping with everything else defaulted")
{
  const char* minimal = R"({
    "RRCSetup": {"masterCellGroup": {"spCellConfig": {"spCellConfigDedicated": {
      "pdsch-ServingCellConfig": {"nrofHARQ-ProcessesForPDSCH": "n16"}}}}}})";
  const ue_dedicated_config cfg = parse_msg4(minimal);
  CHECK(cfg.num_harq_processes == 16);
  CHECK(cfg.max_mimo_layers == 1);
  CHECK(cfg.mcs_table_sel == mcs_table::qam64);
  CHECK(cfg.xoverhead == 0);
  CHECK(cfg.pdsch_time_domain_list.empty());
}

TEST_CASE("parse_msg4: error paths")
{
  try {
    parse_msg4(R"({"RRCSetup": {}})");
    FAIL("expected MissingField");
  } catch (const error& e) {
    CHECK(e.code() == errc::missing_field);
  }

  try {
    parse_msg4(R"({
      "RRCSetup": {"masterCellGroup": {"spCellConfig": {"spCellConfigDedicated": {
        "pdsch-ServingCellConfig": {"nrofHARQ-ProcessesForPDSCH": "n32"}}}}}})");
    FAIL("expected InvalidValue");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_value);
  }

  try {
    parse_msg4(R"({
      "RRCSetup": {"masterCellGroup": {"spCellConfig": {"spCellConfigDedicated": {
        "pdsch-ServingCellConfig": {"nrofHARQ-ProcessesForPDSCH": "sixteen"}}}}}})");
    FAIL("expected InvalidValue");
  } catch (const error& e) {
    CHECK(e.code() == errc::invalid_value);
  }
}

TEST_CASE("parsing is deterministic")
{
  const std::string text = read_file(fixture_path("sib1.json"));
  CHECK(parse_sib1(text) == parse_sib1(text));
  const std::string msg4 = read_file(fixture_path("msg4.json"));
  CHECK(parse_msg4(msg4) == parse_msg4(msg4));
}

TEST_CASE("round-trip: serialize then re-parse yields an identical config")
{
  const cell_common_config cell = parse_sib1(read_file(fixture_path("sib1.json")));
  CHECK(parse_sib1_json(serialize_sib1(cell)) == cell);

  const ue_dedicated_config ue = parse_msg4(read_file(fixture_path("msg4.json")));
  CHECK(parse_msg4_json(serialize_msg4(ue)) == ue);
}

TEST_CASE("round-trip: programmatically built configs")
{
  cell_common_config cell;
  cell.band = 41;
  cell.carrier_bandwidth_prb = 106;
  cell.subcarrier_spacing_khz = 30;
  cell.tti_duration_ms = rational(1, 2);
  cell.coreset0_index = 4;
  cell.pdsch_time_domain_list = {{0, pdsch_mapping_type::type_a, 53}};
  cell_common_config reparsed = parse_sib1_json(serialize_sib1(cell));
  // the reparsed copy carries the serialized document as its pass-through
  reparsed.opaque = cell.opaque;
  CHECK(reparsed == cell);

  ue_dedicated_config ue;
  ue.coreset_id = 1;
  ue.coreset_duration_symbols = 2;
  ue.aggregation_level_candidates = {{1, 4}, {2, 4}, {4, 2}, {8, 1}, {16, 0}};
  ue.dci_formats = dci_format_set::formats_0_1_and_1_1;
  ue.dmrs_additional_position = 2;
  ue.max_mimo_layers = 2;
  ue.num_harq_processes = 16;
  ue.mcs_table_sel = mcs_table::qam256;
  ue.xoverhead = 0;
  ue_dedicated_config ue_reparsed = parse_msg4_json(serialize_msg4(ue));
  ue_reparsed.opaque = ue.opaque;
  CHECK(ue_reparsed == ue);
}

TEST_CASE("summaries render the typed fields")
{
  const cell_common_config cell = parse_sib1(read_file(fixture_path("sib1.json")));
  const std::string s = summarize(cell);
  CHECK(s.find("51 PRB") != std::string::npos);
  CHECK(s.find("30 kHz") != std::string::npos);
  const ue_dedicated_config ue = parse_msg4(read_file(fixture_path("msg4.json")));
  const std::string u = summarize(ue);
  CHECK(u.find("qam256") != std::string::npos);
}
