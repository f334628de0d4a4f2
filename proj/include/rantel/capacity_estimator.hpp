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

#ifndef RANTEL_CAPACITY_ESTIMATOR_HPP
#define RANTEL_CAPACITY_ESTIMATOR_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "rantel/dci_codec.hpp"
#include "rantel/rational.hpp"
#include "rantel/rrc_config.hpp"

namespace rantel {

/// One classified grant inside a TTI. effective_tbs is zero for
/// retransmissions while num_prb still counts as occupied.
struct tti_grant_entry {
  rnti_t rnti;
  int effective_tbs = 0;
  int num_prb = 0;
};

struct tti_record {
  std::uint64_t tti_index = 0;
  std::vector<tti_grant_entry> entries;
  int used_prb_total = 0;
  int spare_prb = 0; // downlink-capable PRBs left in this TTI

  friend bool operator==(const tti_record&, const tti_record&) = default;
};

/// The per-TTI feedback tuple: allocated and fair-share spare bit rate,
/// both in bits per second, saturating at 32 bits.
struct telemetry_sample {
  std::uint64_t tti_index = 0;
  std::uint32_t b_alloc = 0;
  std::uint32_t b_spare = 0;

  friend bool operator==(const telemetry_sample&, const telemetry_sample&) = default;
};

enum class spare_share_mode : std::uint8_t {
  active_ues, // split across UEs seen within the window (default)
  all_ues,    // split across every registered UE
};

struct estimator_config {
  int window_ms = 100;
  rational tti_duration_ms{1, 2};
  spare_share_mode share_mode = spare_share_mode::active_ues;
};

/// No-history fallback for the spare-rate computation: the lowest MCS of the
/// UE's configured table on one PRB over the UE's default time-domain
/// allocation. A deliberately pessimistic floor.
rational default_spare_efficiency(const cell_common_config& cell, const ue_dedicated_config& ue);

/// Sliding-window bit-rate accounting per UE plus fair-share spare capacity.
/// Single writer feeds record_tti; readers may sample concurrently.
class capacity_estimator {
public:
  explicit capacity_estimator(estimator_config cfg = {});

  void register_ue(rnti_t rnti, const rational& default_efficiency, std::uint64_t now_tti = 0);
  void release_ue(rnti_t rnti);

  /// Ingest one TTI. Indices must be strictly increasing; skipped indices
  /// count as empty TTIs.
  void record_tti(const tti_record& record);

  /// Window sum of effective transport blocks over the window duration.
  std::uint64_t allocated_rate(rnti_t rnti, std::uint64_t now_tti) const;

  /// Fair share of the most recent TTI's spare PRBs, valued at the UE's last
  /// new-data efficiency (bits per PRB per TTI) over one TTI.
  std::uint64_t spare_rate(rnti_t rnti) const;

  telemetry_sample sample(rnti_t rnti, std::uint64_t now_tti) const;

  /// Total effective bits ever recorded for the UE (trace-volume checks).
  std::uint64_t cumulative_effective_bits(rnti_t rnti) const;

  int active_ue_count(std::uint64_t now_tti) const;
  int window_tti_count() const { return window_tti_; }
  std::uint64_t last_tti() const;

private:
  struct window_slot {
    std::uint64_t tti = 0;
    std::uint32_t bits = 0;
    bool used = false;
  };

  struct ue_window {
    std::vector<window_slot> ring;
    rational efficiency{0};        // updated from new-data grants
    rational default_efficiency{0};
    std::uint64_t last_activity_tti = 0;
    bool has_activity = false;
    std::uint64_t cumulative_bits = 0;
  };

  bool ue_active(const ue_window& ue, std::uint64_t now_tti) const;
  const ue_window& get(rnti_t rnti) const;

  estimator_config cfg_;
  int window_tti_;
  std::uint64_t ticks_per_second_;

  mutable std::mutex mutex_;
  std::map<std::uint16_t, ue_window> ues_;
  std::optional<std::uint64_t> last_tti_;
  int last_spare_prb_ = 0;
};

} // namespace rantel

#endif
