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

#include "rantel/gnb_sim.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <random>

#include "rantel/errors.hpp"
#include "rantel/tbs_calc.hpp"

namespace rantel {

namespace {

struct harq_process {
  bool ever_used = false;
  std::uint8_t ndi = 1; // toggled to 0 on the first transport block
  bool pending_retx = false;
  dci last_dci;
  int last_prb = 0;
  int last_tbs = 0;
};

// per-UE, per-direction scheduling state
struct ue_sched_state {
  std::uint64_t backlog_ticks = 0; // backlog in bits * ticks_per_second
  std::array<harq_process, 16> harq{};
  int next_harq = 0;
  std::size_t mcs_step = 0;
};

unsigned current_mcs(const sim_ue_spec& spec, std::size_t& step, std::uint64_t tti)
{
  while (step + 1 < spec.mcs_trace.size() && spec.mcs_trace[step + 1].first <= tti) {
    ++step;
  }
  return spec.mcs_trace[step].second;
}

std::uint64_t fnv1a_bytes(std::uint64_t h, const void* data, std::size_t len)
{
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001B3ULL;
  }
  return h;
}

} // namespace

std::string sim_run_id(const sim_config& config)
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](const auto& v) { h = fnv1a_bytes(h, &v, sizeof(v)); };
  mix(config.seed);
  mix(config.carrier_bandwidth_prb);
  mix(config.subcarrier_spacing_khz);
  mix(config.retransmission_probability);
  mix(config.dci_loss_probability_dl);
  mix(config.dci_loss_probability_ul);
  mix(config.duration_tti);
  h = fnv1a_bytes(h, config.tdd_pattern.data(), config.tdd_pattern.size());
  for (const auto& ue : config.ue_specs) {
    mix(ue.rnti.value);
    mix(ue.dl_demand_bits_per_s);
    mix(ue.ul_demand_bits_per_s);
    for (const auto& [tti, mcs] : ue.mcs_trace) {
      mix(tti);
      mix(mcs);
    }
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

sim_output run_simulation(const sim_config& config)
{
  if (config.tdd_pattern.size() != 10 ||
      config.tdd_pattern.find_first_not_of("DUS") != std::string::npos) {
    fail(errc::invalid_config, "TDD pattern must be 10 slots over {D, U, S}");
  }
  if (config.carrier_bandwidth_prb <= 0 || config.duration_tti == 0 || config.ue_specs.empty()) {
    fail(errc::invalid_config, "need a carrier, a duration and at least one UE");
  }
  for (double p : {config.retransmission_probability, config.dci_loss_probability_dl,
                   config.dci_loss_probability_ul}) {
    if (p < 0.0 || p > 1.0) {
      fail(errc::invalid_config, "probabilities must lie in [0, 1]");
    }
  }
  if (config.subcarrier_spacing_khz != 15 && config.subcarrier_spacing_khz != 30 &&
      config.subcarrier_spacing_khz != 60) {
    fail(errc::invalid_config, "subcarrier spacing must be 15, 30 or 60 kHz");
  }

  sim_output out;
  out.run_id = sim_run_id(config);
  out.tdd_pattern = config.tdd_pattern;
  out.duration_tti = config.duration_tti;
  out.ue_config = config.ue_config;

  cell_common_config cell;
  cell.band = 48;
  cell.carrier_bandwidth_prb = config.carrier_bandwidth_prb;
  cell.subcarrier_spacing_khz = config.subcarrier_spacing_khz;
  cell.tti_duration_ms = rational(15, config.subcarrier_spacing_khz);
  cell.pdsch_time_domain_list = {{0, pdsch_mapping_type::type_a, 53},
                                 {0, pdsch_mapping_type::type_a, 67}};
  out.cell = cell;

  const std::uint64_t ticks_per_second =
      static_cast<std::uint64_t>((rational(1000) / cell.tti_duration_ms).num());

  const ue_dedicated_config& ue_cfg = config.ue_config;
  const auto& tda_list = !ue_cfg.pdsch_time_domain_list.empty() ? ue_cfg.pdsch_time_domain_list
                                                                : cell.pdsch_time_domain_list;
  const symbol_allocation symbols = sliv_decode(tda_list[0].sliv);
  const std::string dmrs_pattern = dmrs_pattern_type_a(
      ue_cfg.dmrs_additional_position, symbols.start_symbol, symbols.num_symbols);
  const int dmrs_re = dmrs_re_per_prb(dmrs_pattern, symbols.start_symbol, symbols.num_symbols);

  auto tbs_for = [&](unsigned mcs_idx, int n_prb) {
    const mcs_entry mcs = mcs_lookup(mcs_idx, ue_cfg.mcs_table_sel);
    return grant_tbs(re_count_inputs{n_prb, symbols.num_symbols, dmrs_re, ue_cfg.xoverhead}, mcs,
                     ue_cfg.max_mimo_layers);
  };

  std::mt19937_64 rng_sched(config.seed);
  std::mt19937_64 rng_loss(config.seed ^ 0x9E3779B97F4A7C15ULL);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);

  const std::size_t n_ues = config.ue_specs.size();
  std::vector<ue_sched_state> dl_state(n_ues);
  std::vector<ue_sched_state> ul_state(n_ues);

  auto schedule_slot = [&](std::uint64_t tti, link_direction dir) {
    auto& states = dir == link_direction::downlink ? dl_state : ul_state;
    int budget = config.carrier_bandwidth_prb;
    int next_start = 0;

    for (std::size_t off = 0; off < n_ues && budget > 0; ++off) {
      const std::size_t u = (tti + off) % n_ues;
      const sim_ue_spec& spec = config.ue_specs[u];
      ue_sched_state& st = states[u];

      dci d;
      d.format = dir == link_direction::downlink ? dci_format::f1_1 : dci_format::f0_1;
      d.time_index = 0;
      d.aggregation_level = 4;

      int n_prb = 0;
      int tbs = 0;
      bool retx = false;

      // a NACKed process is served before any new data
      int retx_harq = -1;
      for (int h = 0; h < ue_cfg.num_harq_processes; ++h) {
        if (st.harq[h].pending_retx && st.harq[h].last_prb <= budget) {
          retx_harq = h;
          break;
        }
      }

      if (retx_harq >= 0) {
        harq_process& hp = st.harq[retx_harq];
        d = hp.last_dci;
        d.rv = static_cast<std::uint8_t>(std::min(3, d.rv + 1));
        n_prb = hp.last_prb;
        tbs = hp.last_tbs;
        retx = true;
        hp.pending_retx = uniform(rng_sched) < config.retransmission_probability;
        hp.last_dci = d;
      } else {
        const std::uint64_t available_bits = st.backlog_ticks / ticks_per_second;
        if (available_bits < 16) {
          continue; // nothing worth a grant
        }
        const unsigned mcs_idx = current_mcs(spec, st.mcs_step, tti);
        const int per_prb = std::max(1, tbs_for(mcs_idx, 1));
        int want = static_cast<int>(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(config.carrier_bandwidth_prb),
                                    (available_bits + per_prb - 1) / per_prb));
        n_prb = std::min(want, budget);
        if (n_prb <= 0) {
          continue;
        }
        tbs = tbs_for(mcs_idx, n_prb);

        harq_process& hp = st.harq[st.next_harq];
        d.mcs = static_cast<std::uint8_t>(mcs_idx);
        d.harq_id = static_cast<std::uint8_t>(st.next_harq);
        d.ndi = hp.ever_used ? static_cast<std::uint8_t>(hp.ndi ^ 1U) : 0;
        hp.ever_used = true;
        hp.ndi = d.ndi;
        d.rv = 0;
        d.freq_riv = static_cast<std::uint16_t>(
            riv_encode({next_start, n_prb}, config.carrier_bandwidth_prb));
        st.next_harq = (st.next_harq + 1) % ue_cfg.num_harq_processes;

        const std::uint64_t drained =
            std::min<std::uint64_t>(st.backlog_ticks, static_cast<std::uint64_t>(tbs) * ticks_per_second);
        st.backlog_ticks -= drained;

        hp.pending_retx = uniform(rng_sched) < config.retransmission_probability;
        hp.last_dci = d;
        hp.last_prb = n_prb;
        hp.last_tbs = tbs;
      }

      budget -= n_prb;
      next_start += n_prb;

      out.truth.push_back({tti, spec.rnti, dir, d, n_prb, tbs, retx});

      const double loss = dir == link_direction::downlink ? config.dci_loss_probability_dl
                                                          : config.dci_loss_probability_ul;
      if (uniform(rng_loss) >= loss) {
        out.observer.push_back({tti, dir, make_envelope(pack_dci(d), spec.rnti)});
      }
    }
  };

  for (std::uint64_t tti = 0; tti < config.duration_tti; ++tti) {
    // demand arrives every TTI regardless of slot direction
    for (std::size_t u = 0; u < n_ues; ++u) {
      dl_state[u].backlog_ticks += config.ue_specs[u].dl_demand_bits_per_s;
      ul_state[u].backlog_ticks += config.ue_specs[u].ul_demand_bits_per_s;
    }

    const char slot = config.tdd_pattern[tti % 10];
    if (slot == 'D') {
      schedule_slot(tti, link_direction::downlink);
    } else if (slot == 'U') {
      schedule_slot(tti, link_direction::uplink);
    }
    // 'S' slots carry no data grants
  }
  return out;
}

double miss_report::prb_error_mean() const
{
  if (per_tti_prb_error.empty()) {
    return 0.0;
  }
  std::uint64_t sum = 0;
  for (std::uint32_t e : per_tti_prb_error) {
    sum += e;
  }
  return static_cast<double>(sum) / static_cast<double>(per_tti_prb_error.size());
}

miss_report match_traces(const std::vector<observer_record>& observer,
                         const std::string& observer_run_id,
                         const std::vector<ground_truth_entry>& truth,
                         const std::string& truth_run_id,
                         std::uint64_t duration_tti,
                         int carrier_bandwidth_prb)
{
  if (observer_run_id != truth_run_id) {
    fail(errc::mismatched_runs, "observer and ground-truth traces come from different runs");
  }

  miss_report report;
  report.per_tti_prb_error.assign(duration_tti, 0);

  std::vector<std::int64_t> truth_prb(duration_tti, 0);
  std::vector<std::int64_t> observed_prb(duration_tti, 0);

  // key: tti | dir | rnti | harq -> outstanding truth entries
  auto key_of = [](std::uint64_t tti, link_direction dir, std::uint16_t rnti, std::uint8_t harq) {
    return (tti << 22) | (static_cast<std::uint64_t>(dir == link_direction::uplink) << 21) |
           (static_cast<std::uint64_t>(rnti) << 5) | harq;
  };

  std::map<std::uint64_t, int> outstanding;
  for (const ground_truth_entry& gt : truth) {
    auto& ue = report.per_ue[gt.rnti.value];
    if (gt.dir == link_direction::downlink) {
      ++ue.truth_dl;
      ++report.truth_dl;
    } else {
      ++ue.truth_ul;
      ++report.truth_ul;
    }
    if (gt.tti < duration_tti) {
      truth_prb[gt.tti] += gt.num_prb;
    }
    const std::uint64_t key = key_of(gt.tti, gt.dir, gt.rnti.value, gt.record.harq_id);
    ++outstanding[key];
  }

  for (const observer_record& rec : observer) {
    const dci d = unpack_dci(rec.envelope.payload);
    const rnti_t rnti = recover_rnti(rec.envelope);
    const std::uint64_t key = key_of(rec.tti, rec.dir, rnti.value, d.harq_id);
    auto it = outstanding.find(key);
    if (it == outstanding.end() || it->second == 0) {
      ++report.spurious;
      continue;
    }
    --it->second;
    if (rec.tti < duration_tti) {
      observed_prb[rec.tti] += riv_decode(d.freq_riv, carrier_bandwidth_prb).num_prb;
    }
  }

  for (auto& [key, count] : outstanding) {
    if (count == 0) {
      continue;
    }
    const auto rnti_value = static_cast<std::uint16_t>((key >> 5) & 0xFFFF);
    const bool uplink = ((key >> 21) & 1ULL) != 0;
    auto& ue = report.per_ue[rnti_value];
    if (uplink) {
      ue.missed_ul += static_cast<std::uint64_t>(count);
      report.missed_ul += static_cast<std::uint64_t>(count);
    } else {
      ue.missed_dl += static_cast<std::uint64_t>(count);
      report.missed_dl += static_cast<std::uint64_t>(count);
    }
  }

  for (std::uint64_t t = 0; t < duration_tti; ++t) {
    report.per_tti_prb_error[t] =
        static_cast<std::uint32_t>(std::llabs(truth_prb[t] - observed_prb[t]));
  }
  return report;
}

} // namespace rantel
