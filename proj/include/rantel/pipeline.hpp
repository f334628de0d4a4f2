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

#ifndef RANTEL_PIPELINE_HPP
#define RANTEL_PIPELINE_HPP

#include <span>
#include <string>
#include <vector>

#include "rantel/capacity_estimator.hpp"
#include "rantel/gnb_sim.hpp"
#include "rantel/rrc_config.hpp"
#include "rantel/ue_tracker.hpp"

namespace rantel {

/// Observer-side decode chain: envelope -> control record -> grant ->
/// HARQ classification -> per-TTI window accounting. One instance per cell.
class decode_pipeline {
public:
  decode_pipeline(cell_common_config cell, std::string tdd_pattern,
                  estimator_config est_cfg = {});

  /// Attach a UE whose identifier and dedicated configuration are known.
  void add_ue(rnti_t rnti, const ue_dedicated_config& config);

  /// Consume the envelopes of one TTI (nondecreasing indices; gaps are fed
  /// through as empty TTIs so windows age correctly).
  void process_tti(std::uint64_t tti, std::span<const observer_record> records);

  capacity_estimator& estimator() { return estimator_; }
  const capacity_estimator& estimator() const { return estimator_; }
  ue_registry& registry() { return registry_; }
  const cell_common_config& cell() const { return cell_; }
  const ue_dedicated_config& ue_config(rnti_t rnti) const;

  /// True when the TDD pattern makes this TTI a downlink slot.
  bool downlink_slot(std::uint64_t tti) const;

  std::uint64_t decoded_count() const { return decoded_; }
  std::uint64_t rejected_count() const { return rejected_; }

private:
  cell_common_config cell_;
  std::string tdd_pattern_;
  capacity_estimator estimator_;
  ue_registry registry_;
  std::map<std::uint16_t, ue_dedicated_config> ue_configs_;
  std::uint64_t next_tti_ = 0;
  std::uint64_t decoded_ = 0;
  std::uint64_t rejected_ = 0;
};

/// One telemetry CSV row per (TTI, UE): the Eq.-style feedback series.
struct telemetry_csv_row {
  std::uint64_t tti;
  std::uint16_t rnti;
  std::uint32_t b_alloc;
  std::uint32_t b_spare;
  int used_prb;
  int spare_prb;
};

std::string telemetry_csv_header();
std::string telemetry_csv_line(const telemetry_csv_row& row);

} // namespace rantel

#endif
