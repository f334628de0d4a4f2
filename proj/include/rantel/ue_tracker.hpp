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

#ifndef RANTEL_UE_TRACKER_HPP
#define RANTEL_UE_TRACKER_HPP

#include <array>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>

#include "rantel/dci_codec.hpp"
#include "rantel/rational.hpp"
#include "rantel/rrc_config.hpp"

namespace rantel {

enum class dci_kind : std::uint8_t { new_data, retransmission };

struct dci_classification {
  dci_kind kind = dci_kind::new_data;
  int effective_tbs = 0; // zero for retransmissions

  friend bool operator==(const dci_classification&, const dci_classification&) = default;
};

/// Per-UE state discovered from the attach exchange. One 16-entry NDI array
/// per direction; an entry is unknown until the first record on that process.
struct ue_state {
  rnti_t crnti;
  ue_dedicated_config config;
  std::array<std::optional<std::uint8_t>, 16> harq_ndi_dl{};
  std::array<std::optional<std::uint8_t>, 16> harq_ndi_ul{};
  std::optional<rational> last_grant_efficiency; // bits per PRB per TTI
  std::uint64_t last_activity_tti = 0;
  std::uint64_t registered_tti = 0;
};

/// Registry of live UEs. Single ingest thread mutates; readers get copies.
class ue_registry {
public:
  /// Promote the scrambling identifier of an attach-scheduling record and
  /// bind the dedicated configuration.
  ue_state& register_from_msg4(const dci_envelope& envelope, const std::string& msg4_doc,
                               std::uint64_t now_tti = 0);

  /// Register a UE whose identifier and configuration are already known
  /// (trace replay against a known attach state).
  ue_state& register_known(rnti_t rnti, const ue_dedicated_config& config,
                           std::uint64_t now_tti = 0);

  /// First record on a process counts as new data; a repeated NDI marks a
  /// retransmission whose transport block must not be counted again.
  dci_classification classify_dci(rnti_t rnti, const dci& record, int grant_tbs, int num_prb,
                                  std::uint64_t now_tti = 0);

  void release(rnti_t rnti);

  bool is_registered(rnti_t rnti) const;
  ue_state snapshot(rnti_t rnti) const;
  std::vector<rnti_t> registered() const;

private:
  ue_state& get_live(rnti_t rnti);

  mutable std::mutex mutex_;
  std::map<std::uint16_t, ue_state> live_;
};

} // namespace rantel

#endif
