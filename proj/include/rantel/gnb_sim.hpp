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

#ifndef RANTEL_GNB_SIM_HPP
#define RANTEL_GNB_SIM_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rantel/capacity_estimator.hpp"
#include "rantel/dci_codec.hpp"
#include "rantel/rrc_config.hpp"

namespace rantel {

/// Traffic and channel description for one simulated UE. The MCS trace is a
/// monotone staircase of (from_tti, mcs_index) steps standing in for channel
/// quality over static/blocked/moving runs.
struct sim_ue_spec {
  rnti_t rnti;
  std::uint64_t dl_demand_bits_per_s = 0;
  std::uint64_t ul_demand_bits_per_s = 0;
  std::vector<std::pair<std::uint64_t, unsigned>> mcs_trace = {{0, 27}};
};

struct sim_config {
  std::uint64_t seed = 1;
  int carrier_bandwidth_prb = 51;
  int subcarrier_spacing_khz = 30;
  std::string tdd_pattern = "DDDDDDDSUU"; // one slot type per char, period 10
  std::vector<sim_ue_spec> ue_specs;
  double retransmission_probability = 0.0;
  double dci_loss_probability_dl = 0.0; // observer stream only
  double dci_loss_probability_ul = 0.0;
  std::uint64_t duration_tti = 0;
  ue_dedicated_config ue_config; // dedicated config shared by the simulated UEs
};

/// One emitted control record as the scheduler saw it.
struct ground_truth_entry {
  std::uint64_t tti = 0;
  rnti_t rnti;
  link_direction dir = link_direction::downlink;
  dci record;
  int num_prb = 0;
  int tbs = 0;
  bool is_retransmission = false;
};

/// One observer-stream line: the envelope as it would be sniffed.
struct observer_record {
  std::uint64_t tti = 0;
  link_direction dir = link_direction::downlink;
  dci_envelope envelope;
};

struct sim_output {
  std::string run_id; // hash of seed and config; both trace files carry it
  cell_common_config cell;
  ue_dedicated_config ue_config;
  std::string tdd_pattern;
  std::vector<observer_record> observer;
  std::vector<ground_truth_entry> truth;
  std::uint64_t duration_tti = 0;
};

/// Deterministic per-seed scheduler run: round-robin downlink/uplink grants
/// with demand caps, HARQ retransmissions repeating the prior grant with an
/// unchanged NDI, and loss injection on the observer stream only.
sim_output run_simulation(const sim_config& config);

std::string sim_run_id(const sim_config& config);

/// Per-UE and aggregate decode-miss accounting plus per-TTI PRB error.
struct miss_report {
  struct ue_stats {
    std::uint64_t truth_dl = 0;
    std::uint64_t truth_ul = 0;
    std::uint64_t missed_dl = 0;
    std::uint64_t missed_ul = 0;
  };

  std::map<std::uint16_t, ue_stats> per_ue;
  std::uint64_t truth_dl = 0;
  std::uint64_t truth_ul = 0;
  std::uint64_t missed_dl = 0;
  std::uint64_t missed_ul = 0;
  std::uint64_t spurious = 0; // observer records with no ground-truth partner

  std::vector<std::uint32_t> per_tti_prb_error; // |decoded - truth| per TTI

  double miss_rate_dl() const
  {
    return truth_dl == 0 ? 0.0 : static_cast<double>(missed_dl) / static_cast<double>(truth_dl);
  }
  double miss_rate_ul() const
  {
    return truth_ul == 0 ? 0.0 : static_cast<double>(missed_ul) / static_cast<double>(truth_ul);
  }
  double prb_error_mean() const;
};

/// Join the observer stream against the ground truth of the same run by
/// (TTI, direction, RNTI, HARQ process). Run identifiers must match.
miss_report match_traces(const std::vector<observer_record>& observer,
                         const std::string& observer_run_id,
                         const std::vector<ground_truth_entry>& truth,
                         const std::string& truth_run_id,
                         std::uint64_t duration_tti,
                         int carrier_bandwidth_prb);

} // namespace rantel

#endif
