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

#include "rantel/pipeline.hpp"

#include <sstream>

#include "rantel/errors.hpp"

namespace rantel {

namespace {

estimator_config with_tti(estimator_config cfg, const rational& tti_ms)
{
  cfg.tti_duration_ms = tti_ms;
  return cfg;
}

} // namespace

decode_pipeline::decode_pipeline(cell_common_config cell, std::string tdd_pattern,
                                 estimator_config est_cfg)
    : cell_(std::move(cell)), tdd_pattern_(std::move(tdd_pattern)),
      estimator_(with_tti(est_cfg, cell_.tti_duration_ms))
{
  if (tdd_pattern_.size() != 10 || tdd_pattern_.find_first_not_of("DUS") != std::string::npos) {
    fail(errc::invalid_config, "TDD pattern must be 10 slots over {D, U, S}");
  }
}

void decode_pipeline::add_ue(rnti_t rnti, const ue_dedicated_config& config)
{
  registry_.register_known(rnti, config);
  estimator_.register_ue(rnti, default_spare_efficiency(cell_, config));
  ue_configs_[rnti.value] = config;
}

const ue_dedicated_config& decode_pipeline::ue_config(rnti_t rnti) const
{
  auto it = ue_configs_.find(rnti.value);
  if (it == ue_configs_.end()) {
    fail(errc::unknown_rnti, "UE not attached to the pipeline");
  }
  return it->second;
}

bool decode_pipeline::downlink_slot(std::uint64_t tti) const
{
  return tdd_pattern_[tti % tdd_pattern_.size()] == 'D';
}

void decode_pipeline::process_tti(std::uint64_t tti, std::span<const observer_record> records)
{
  // age windows across skipped TTIs
  for (std::uint64_t t = next_tti_; t < tti; ++t) {
    tti_record empty;
    empty.tti_index = t;
    empty.spare_prb = downlink_slot(t) ? cell_.carrier_bandwidth_prb : 0;
    estimator_.record_tti(empty);
  }

  tti_record record;
  record.tti_index = tti;

  for (const observer_record& rec : records) {
    rnti_t rnti;
    try {
      rnti = recover_rnti(rec.envelope);
    } catch (const error&) {
      ++rejected_;
      continue;
    }
    if (!registry_.is_registered(rnti) || !verify_dci(rec.envelope, rnti)) {
      ++rejected_;
      continue;
    }
    const dci d = unpack_dci(rec.envelope.payload);
    const ue_dedicated_config& ue = ue_configs_.at(rnti.value);
    const grant g = dci_to_grant(d, cell_, ue, rnti);
    const dci_classification cls = registry_.classify_dci(rnti, d, g.tbs_bits, g.num_prb, tti);
    ++decoded_;

    if (d.direction() == link_direction::downlink) {
      record.entries.push_back({rnti, cls.effective_tbs, g.num_prb});
      record.used_prb_total += g.num_prb;
    }
    // uplink records are classified for miss accounting but carry no
    // downlink capacity
  }

  const int dl_capacity = downlink_slot(tti) ? cell_.carrier_bandwidth_prb : 0;
  record.spare_prb = std::max(0, dl_capacity - record.used_prb_total);
  estimator_.record_tti(record);
  next_tti_ = tti + 1;
}

std::string telemetry_csv_header() { return "tti,rnti,b_alloc,b_spare,used_prb,spare_prb"; }

std::string telemetry_csv_line(const telemetry_csv_row& row)
{
  std::ostringstream os;
  os << row.tti << ",0x" << std::hex << row.rnti << std::dec << "," << row.b_alloc << ","
     << row.b_spare << "," << row.used_prb << "," << row.spare_prb;
  return os.str();
}

} // namespace rantel
