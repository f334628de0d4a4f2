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

#include "rantel/rrc_config.hpp"

#include <sstream>

#include "rantel/dci_codec.hpp"
#include "rantel/errors.hpp"

namespace rantel {

using json = nlohmann::ordered_json;

namespace {

const json& require(const json& obj, const char* key)
{
  if (!obj.is_object()) {
    fail(errc::malformed_document, std::string("expected an object around '") + key + "'");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    fail(errc::missing_field, std::string("required key '") + key + "' absent");
  }
  return *it;
}

const json* find(const json& obj, const char* key)
{
  if (!obj.is_object()) {
    return nullptr;
  }
  auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

int require_int(const json& obj, const char* key)
{
  const json& v = require(obj, key);
  if (!v.is_number_integer()) {
    fail(errc::invalid_value, std::string(key) + " must be an integer");
  }
  return v.get<int>();
}

std::string require_string(const json& obj, const char* key)
{
  const json& v = require(obj, key);
  if (!v.is_string()) {
    fail(errc::invalid_value, std::string(key) + " must be a string");
  }
  return v.get<std::string>();
}

// "n16" / "n4" style enumerated counts.
int parse_n_token(const std::string& token, const char* key)
{
  if (token.size() < 2 || token[0] != 'n') {
    fail(errc::invalid_value, std::string(key) + ": unknown token '" + token + "'");
  }
  int value = 0;
  for (std::size_t i = 1; i < token.size(); ++i) {
    if (token[i] < '0' || token[i] > '9') {
      fail(errc::invalid_value, std::string(key) + ": unknown token '" + token + "'");
    }
    value = value * 10 + (token[i] - '0');
  }
  return value;
}

int parse_scs_token(const std::string& token)
{
  if (token == "kHz15") {
    return 15;
  }
  if (token == "kHz30") {
    return 30;
  }
  if (token == "kHz60") {
    return 60;
  }
  fail(errc::invalid_value, "unknown subcarrierSpacing token '" + token + "'");
}

int parse_pos_token(const std::string& token)
{
  for (int pos = 0; pos <= 3; ++pos) {
    if (token == "pos" + std::to_string(pos)) {
      return pos;
    }
  }
  fail(errc::invalid_value, "unknown dmrs-AdditionalPosition token '" + token + "'");
}

pdsch_mapping_type parse_mapping_token(const std::string& token)
{
  if (token == "typeA") {
    return pdsch_mapping_type::type_a;
  }
  if (token == "typeB") {
    return pdsch_mapping_type::type_b;
  }
  fail(errc::invalid_value, "unknown mappingType token '" + token + "'");
}

std::vector<time_domain_alloc> parse_tda_list(const json& list, const char* k_key)
{
  if (!list.is_array()) {
    fail(errc::invalid_value, "time-domain allocation list must be an array");
  }
  std::vector<time_domain_alloc> out;
  for (const json& entry : list) {
    time_domain_alloc tda;
    tda.k_offset = require_int(entry, k_key);
    tda.mapping_type = parse_mapping_token(require_string(entry, "mappingType"));
    tda.sliv = require_int(entry, "startSymbolAndLength");
    sliv_decode(tda.sliv); // must decode to a valid (S, L)
    out.push_back(tda);
  }
  return out;
}

std::map<int, int> parse_candidates(const json& obj)
{
  std::map<int, int> out;
  for (int level : {1, 2, 4, 8, 16}) {
    const std::string key = "aggregationLevel" + std::to_string(level);
    out[level] = parse_n_token(require_string(obj, key.c_str()), key.c_str());
  }
  return out;
}

search_space_config parse_search_space(const json& ss)
{
  search_space_config cfg;
  cfg.id = require_int(ss, "searchSpaceId");
  cfg.coreset_id = require_int(ss, "controlResourceSetId");
  cfg.monitoring_symbols = require_string(ss, "monitoringSymbolsWithinSlot");
  if (cfg.monitoring_symbols.size() != 14 ||
      cfg.monitoring_symbols.find_first_not_of("01") != std::string::npos) {
    fail(errc::invalid_value, "monitoringSymbolsWithinSlot must be a 14-bit pattern");
  }
  cfg.aggregation_candidates = parse_candidates(require(ss, "nrofCandidates"));
  const json& type = require(ss, "searchSpaceType");
  if (!type.is_object() || type.empty()) {
    fail(errc::invalid_value, "searchSpaceType must name a type");
  }
  cfg.type = type.begin().key();
  return cfg;
}

json parse_document(const std::string& document)
{
  json doc = json::parse(document, nullptr, false);
  if (doc.is_discarded()) {
    fail(errc::malformed_document, "document is not well-formed");
  }
  return doc;
}

json candidates_to_json(const std::map<int, int>& candidates)
{
  json out = json::object();
  for (const auto& [level, count] : candidates) {
    out["aggregationLevel" + std::to_string(level)] = "n" + std::to_string(count);
  }
  return out;
}

json tda_list_to_json(const std::vector<time_domain_alloc>& list, const char* k_key)
{
  json out = json::array();
  for (const auto& tda : list) {
    json entry;
    entry[k_key] = tda.k_offset;
    entry["mappingType"] = tda.mapping_type == pdsch_mapping_type::type_a ? "typeA" : "typeB";
    entry["startSymbolAndLength"] = tda.sliv;
    out.push_back(entry);
  }
  return out;
}

// Overlay helper: write only where the pointed-to key already exists, so
// pass-through documents round-trip byte-identically.
void set_existing(json& doc, const nlohmann::json_pointer<std::string>& ptr, const json& value)
{
  if (doc.contains(ptr)) {
    doc[ptr] = value;
  }
}

} // namespace

const char* dci_format_set_name(dci_format_set set)
{
  return set == dci_format_set::formats_0_0_and_1_0 ? "formats0-0-And-1-0" : "formats0-1-And-1-1";
}

cell_common_config parse_sib1(const std::string& document)
{
  return parse_sib1_json(parse_document(document));
}

cell_common_config parse_sib1_json(const json& doc)
{
  const json& sib1 = require(doc, "SIB1");
  const json& serving = require(sib1, "servingCellConfigCommon");
  const json& dl_common = require(serving, "downlinkConfigCommon");
  const json& freq = require(dl_common, "frequencyInfoDL");

  cell_common_config cfg;

  if (const json* bands = find(freq, "frequencyBandList"); bands) {
    if (!bands->is_array() || bands->empty()) {
      fail(errc::invalid_value, "frequencyBandList must list at least one band");
    }
    cfg.band = require_int((*bands)[0], "freqBandIndicatorNR");
  }

  const json& carriers = require(freq, "scs-SpecificCarrierList");
  if (!carriers.is_array() || carriers.empty()) {
    fail(errc::invalid_value, "scs-SpecificCarrierList must list at least one carrier");
  }
  cfg.carrier_bandwidth_prb = require_int(carriers[0], "carrierBandwidth");
  if (cfg.carrier_bandwidth_prb <= 0) {
    fail(errc::invalid_value, "carrierBandwidth must be positive");
  }
  cfg.subcarrier_spacing_khz = parse_scs_token(require_string(carriers[0], "subcarrierSpacing"));
  cfg.tti_duration_ms = rational(15, cfg.subcarrier_spacing_khz);

  if (const json* bwp = find(dl_common, "initialDownlinkBWP"); bwp) {
    if (const json* pdcch = find(*bwp, "pdcch-ConfigCommon"); pdcch) {
      if (const json* coreset0 = find(*pdcch, "controlResourceSetZero"); coreset0) {
        cfg.coreset0_index = coreset0->get<int>();
      }
      if (const json* css = find(*pdcch, "commonSearchSpaceList"); css) {
        for (const json& ss : *css) {
          cfg.common_search_spaces.push_back(parse_search_space(ss));
        }
      }
    }
    if (const json* pdsch = find(*bwp, "pdsch-ConfigCommon"); pdsch) {
      if (const json* tda = find(*pdsch, "pdsch-TimeDomainAllocationList"); tda) {
        cfg.pdsch_time_domain_list = parse_tda_list(*tda, "k0");
      }
    }
  }

  cfg.opaque = doc; // full document retained for pass-through
  return cfg;
}

ue_dedicated_config parse_msg4(const std::string& document)
{
  return parse_msg4_json(parse_document(document));
}

ue_dedicated_config parse_msg4_json(const json& doc)
{
  const json& setup = require(doc, "RRCSetup");
  const json& mcg = require(setup, "masterCellGroup");
  const json& sp_cell = require(mcg, "spCellConfig");
  const json& dedicated = require(sp_cell, "spCellConfigDedicated");

  ue_dedicated_config cfg;

  if (const json* bwp = find(dedicated, "initialDownlinkBWP"); bwp) {
    if (const json* pdcch = find(*bwp, "pdcch-Config"); pdcch) {
      if (const json* coresets = find(*pdcch, "controlResourceSetToAddModList"); coresets) {
        if (!coresets->is_array() || coresets->empty()) {
          fail(errc::invalid_value, "controlResourceSetToAddModList must list a CORESET");
        }
        cfg.coreset_id = require_int((*coresets)[0], "controlResourceSetId");
        cfg.coreset_duration_symbols = require_int((*coresets)[0], "duration");
      }
      if (const json* sslist = find(*pdcch, "searchSpacesToAddModList"); sslist) {
        if (!sslist->is_array() || sslist->empty()) {
          fail(errc::invalid_value, "searchSpacesToAddModList must list a search space");
        }
        const json& ss = (*sslist)[0];
        cfg.aggregation_level_candidates = parse_candidates(require(ss, "nrofCandidates"));
        const json& ue_specific = require(require(ss, "searchSpaceType"), "ue-Specific");
        const std::string formats = require_string(ue_specific, "dci-Formats");
        if (formats == "formats0-1-And-1-1") {
          cfg.dci_formats = dci_format_set::formats_0_1_and_1_1;
        } else if (formats == "formats0-0-And-1-0") {
          cfg.dci_formats = dci_format_set::formats_0_0_and_1_0;
        } else {
          fail(errc::invalid_value, "unknown dci-Formats token '" + formats + "'");
        }
      }
    }
    if (const json* pdsch = find(*bwp, "pdsch-Config"); pdsch) {
      if (const json* dmrs = find(*pdsch, "dmrs-DownlinkForPDSCH-MappingTypeA"); dmrs) {
        cfg.dmrs_additional_position =
            parse_pos_token(require_string(*dmrs, "dmrs-AdditionalPosition"));
      }
      if (const json* tda = find(*pdsch, "pdsch-TimeDomainAllocationList"); tda) {
        cfg.pdsch_time_domain_list = parse_tda_list(*tda, "k0");
      }
    }
  }

  if (const json* serving = find(dedicated, "pdsch-ServingCellConfig"); serving) {
    if (const json* harq = find(*serving, "nrofHARQ-ProcessesForPDSCH"); harq) {
      if (!harq->is_string()) {
        fail(errc::invalid_value, "nrofHARQ-ProcessesForPDSCH must be a token");
      }
      cfg.num_harq_processes =
          parse_n_token(harq->get<std::string>(), "nrofHARQ-ProcessesForPDSCH");
      if (cfg.num_harq_processes < 1 || cfg.num_harq_processes > 16) {
        fail(errc::invalid_value, "nrofHARQ-ProcessesForPDSCH outside [1, 16]");
      }
    }
    if (const json* layers = find(*serving, "maxMIMO-Layers"); layers) {
      cfg.max_mimo_layers = layers->get<int>();
      if (cfg.max_mimo_layers < 1) {
        fail(errc::invalid_value, "maxMIMO-Layers must be at least 1");
      }
    }
  }

  // Shared-channel hints (mcs table, PDSCH overhead) when the dump carries
  // them alongside the RRC content, as translated-grant captures do.
  if (const json* sch = find(doc, "SCH"); sch) {
    const std::string table = require_string(*sch, "mcs_table");
    if (table == "256qam" || table == "qam256") {
      cfg.mcs_table_sel = mcs_table::qam256;
    } else if (table == "64qam" || table == "qam64") {
      cfg.mcs_table_sel = mcs_table::qam64;
    } else {
      fail(errc::invalid_value, "unknown mcs_table token '" + table + "'");
    }
    if (const json* oh = find(*sch, "xoverhead"); oh) {
      cfg.xoverhead = oh->get<int>();
      if (cfg.xoverhead < 0) {
        fail(errc::invalid_value, "xoverhead must be nonnegative");
      }
    }
  }

  cfg.opaque = doc;
  return cfg;
}

json serialize_sib1(const cell_common_config& cfg)
{
  using ptr = nlohmann::json_pointer<std::string>;
  const std::string scs_token = "kHz" + std::to_string(cfg.subcarrier_spacing_khz);

  if (cfg.opaque.is_object() && cfg.opaque.contains("SIB1")) {
    json doc = cfg.opaque;
    const std::string freq = "/SIB1/servingCellConfigCommon/downlinkConfigCommon/frequencyInfoDL";
    set_existing(doc, ptr(freq + "/frequencyBandList/0/freqBandIndicatorNR"), cfg.band);
    set_existing(doc, ptr(freq + "/scs-SpecificCarrierList/0/carrierBandwidth"),
                 cfg.carrier_bandwidth_prb);
    set_existing(doc, ptr(freq + "/scs-SpecificCarrierList/0/subcarrierSpacing"), scs_token);
    const std::string bwp = "/SIB1/servingCellConfigCommon/downlinkConfigCommon/initialDownlinkBWP";
    set_existing(doc, ptr(bwp + "/pdcch-ConfigCommon/controlResourceSetZero"), cfg.coreset0_index);
    if (!cfg.pdsch_time_domain_list.empty()) {
      set_existing(doc, ptr(bwp + "/pdsch-ConfigCommon/pdsch-TimeDomainAllocationList"),
                   tda_list_to_json(cfg.pdsch_time_domain_list, "k0"));
    }
    return doc;
  }

  json css = json::array();
  for (const auto& ss : cfg.common_search_spaces) {
    json entry;
    entry["searchSpaceId"] = ss.id;
    entry["controlResourceSetId"] = ss.coreset_id;
    entry["monitoringSymbolsWithinSlot"] = ss.monitoring_symbols;
    entry["nrofCandidates"] = candidates_to_json(ss.aggregation_candidates);
    entry["searchSpaceType"] = {{ss.type, json::object()}};
    css.push_back(entry);
  }

  json dl_common;
  dl_common["frequencyInfoDL"] = {
      {"frequencyBandList", json::array({{{"freqBandIndicatorNR", cfg.band}}})},
      {"scs-SpecificCarrierList",
       json::array({{{"offsetToCarrier", 0},
                     {"subcarrierSpacing", scs_token},
                     {"carrierBandwidth", cfg.carrier_bandwidth_prb}}})}};
  dl_common["initialDownlinkBWP"] = {
      {"pdcch-ConfigCommon",
       {{"controlResourceSetZero", cfg.coreset0_index}, {"commonSearchSpaceList", css}}},
      {"pdsch-ConfigCommon",
       {{"pdsch-TimeDomainAllocationList", tda_list_to_json(cfg.pdsch_time_domain_list, "k0")}}}};

  return {{"SIB1", {{"servingCellConfigCommon", {{"downlinkConfigCommon", dl_common}}}}}};
}

json serialize_msg4(const ue_dedicated_config& cfg)
{
  using ptr = nlohmann::json_pointer<std::string>;
  const char* table_token = cfg.mcs_table_sel == mcs_table::qam256 ? "256qam" : "64qam";

  if (cfg.opaque.is_object() && cfg.opaque.contains("RRCSetup")) {
    json doc = cfg.opaque;
    const std::string ded = "/RRCSetup/masterCellGroup/spCellConfig/spCellConfigDedicated";
    set_existing(doc,
                 ptr(ded + "/initialDownlinkBWP/pdcch-Config/controlResourceSetToAddModList/0/"
                           "controlResourceSetId"),
                 cfg.coreset_id);
    set_existing(doc,
                 ptr(ded + "/initialDownlinkBWP/pdcch-Config/controlResourceSetToAddModList/0/"
                           "duration"),
                 cfg.coreset_duration_symbols);
    set_existing(doc,
                 ptr(ded + "/initialDownlinkBWP/pdsch-Config/dmrs-DownlinkForPDSCH-MappingTypeA/"
                           "dmrs-AdditionalPosition"),
                 "pos" + std::to_string(cfg.dmrs_additional_position));
    if (!cfg.pdsch_time_domain_list.empty()) {
      set_existing(doc, ptr(ded + "/initialDownlinkBWP/pdsch-Config/pdsch-TimeDomainAllocationList"),
                   tda_list_to_json(cfg.pdsch_time_domain_list, "k0"));
    }
    set_existing(doc, ptr(ded + "/pdsch-ServingCellConfig/nrofHARQ-ProcessesForPDSCH"),
                 "n" + std::to_string(cfg.num_harq_processes));
    set_existing(doc, ptr(ded + "/pdsch-ServingCellConfig/maxMIMO-Layers"), cfg.max_mimo_layers);
    set_existing(doc, ptr("/SCH/mcs_table"), table_token);
    set_existing(doc, ptr("/SCH/xoverhead"), cfg.xoverhead);
    return doc;
  }

  json ss;
  ss["searchSpaceId"] = 2;
  ss["controlResourceSetId"] = cfg.coreset_id;
  ss["nrofCandidates"] = candidates_to_json(cfg.aggregation_level_candidates);
  ss["searchSpaceType"] = {{"ue-Specific", {{"dci-Formats", dci_format_set_name(cfg.dci_formats)}}}};

  json pdsch;
  pdsch["dmrs-DownlinkForPDSCH-MappingTypeA"] = {
      {"dmrs-AdditionalPosition", "pos" + std::to_string(cfg.dmrs_additional_position)}};
  if (!cfg.pdsch_time_domain_list.empty()) {
    pdsch["pdsch-TimeDomainAllocationList"] = tda_list_to_json(cfg.pdsch_time_domain_list, "k0");
  }

  json dedicated;
  dedicated["initialDownlinkBWP"] = {
      {"pdcch-Config",
       {{"controlResourceSetToAddModList",
         json::array({{{"controlResourceSetId", cfg.coreset_id},
                       {"duration", cfg.coreset_duration_symbols}}})},
        {"searchSpacesToAddModList", json::array({ss})}}},
      {"pdsch-Config", pdsch}};
  dedicated["pdsch-ServingCellConfig"] = {
      {"nrofHARQ-ProcessesForPDSCH", "n" + std::to_string(cfg.num_harq_processes)},
      {"maxMIMO-Layers", cfg.max_mimo_layers}};

  json doc;
  doc["RRCSetup"] = {{"masterCellGroup", {{"spCellConfig", {{"spCellConfigDedicated", dedicated}}}}}};
  doc["SCH"] = {{"mcs_table", table_token}, {"xoverhead", cfg.xoverhead}};
  return doc;
}

std::string summarize(const cell_common_config& cfg)
{
  std::ostringstream os;
  os << "cell-common:\n"
     << "  band:               n" << cfg.band << "\n"
     << "  carrier bandwidth:  " << cfg.carrier_bandwidth_prb << " PRB\n"
     << "  subcarrier spacing: " << cfg.subcarrier_spacing_khz << " kHz\n"
     << "  tti duration:       " << cfg.tti_duration_ms.to_double() << " ms\n"
     << "  coreset 0 index:    " << cfg.coreset0_index << "\n"
     << "  common search spaces: " << cfg.common_search_spaces.size() << "\n"
     << "  pdsch time-domain allocations:";
  for (const auto& tda : cfg.pdsch_time_domain_list) {
    const auto sym = sliv_decode(tda.sliv);
    os << " sliv=" << tda.sliv << "(" << sym.start_symbol << ":" << sym.num_symbols << ")";
  }
  os << "\n";
  return os.str();
}

std::string summarize(const ue_dedicated_config& cfg)
{
  std::ostringstream os;
  os << "ue-dedicated:\n"
     << "  coreset id/duration: " << cfg.coreset_id << "/" << cfg.coreset_duration_symbols
     << " symbols\n"
     << "  dci formats:         " << dci_format_set_name(cfg.dci_formats) << "\n"
     << "  aggregation candidates:";
  for (const auto& [level, count] : cfg.aggregation_level_candidates) {
    os << " L" << level << ":" << count;
  }
  os << "\n"
     << "  dmrs add position:   pos" << cfg.dmrs_additional_position << "\n"
     << "  max mimo layers:     " << cfg.max_mimo_layers << "\n"
     << "  harq processes:      " << cfg.num_harq_processes << "\n"
     << "  mcs table:           " << mcs_table_name(cfg.mcs_table_sel) << "\n"
     << "  xoverhead:           " << cfg.xoverhead << "\n";
  if (!cfg.pdsch_time_domain_list.empty()) {
    os << "  pdsch time-domain allocations:";
    for (const auto& tda : cfg.pdsch_time_domain_list) {
      const auto sym = sliv_decode(tda.sliv);
      os << " sliv=" << tda.sliv << "(" << sym.start_symbol << ":" << sym.num_symbols << ")";
    }
    os << "\n";
  }
  return os.str();
}

} // namespace rantel
