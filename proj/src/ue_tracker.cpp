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

#include "rantel/ue_tracker.hpp"

#include "rantel/errors.hpp"

namespace rantel {

ue_state& ue_registry::register_from_msg4(const dci_envelope& envelope,
                                          const std::string& msg4_doc, std::uint64_t now_tti)
{
  const rnti_t rnti = recover_rnti(envelope); // TC-RNTI promoted to C-RNTI
  return register_known(rnti, parse_msg4(msg4_doc), now_tti);
}

ue_state& ue_registry::register_known(rnti_t rnti, const ue_dedicated_config& config,
                                      std::uint64_t now_tti)
{
  std::lock_guard lock(mutex_);
  if (live_.contains(rnti.value)) {
    fail(errc::duplicate_rnti, "RNTI already registered");
  }
  ue_state state;
  state.crnti = rnti;
  state.config = config;
  state.registered_tti = now_tti;
  state.last_activity_tti = now_tti;
  return live_.emplace(rnti.value, std::move(state)).first->second;
}

dci_classification ue_registry::classify_dci(rnti_t rnti, const dci& record, int grant_tbs,
                                             int num_prb, std::uint64_t now_tti)
{
  std::lock_guard lock(mutex_);
  ue_state& state = get_live(rnti);
  if (record.harq_id >= 16) {
    fail(errc::harq_id_out_of_range, "harq_id above 15");
  }

  auto& ndi_array = record.direction() == link_direction::downlink ? state.harq_ndi_dl
                                                                   : state.harq_ndi_ul;
  std::optional<std::uint8_t>& stored = ndi_array[record.harq_id];

  const bool fresh = !stored.has_value() || *stored != record.ndi;
  stored = record.ndi;
  state.last_activity_tti = now_tti;

  if (!fresh) {
    return {dci_kind::retransmission, 0};
  }
  if (num_prb > 0 && grant_tbs > 0) {
    state.last_grant_efficiency = rational(grant_tbs, num_prb);
  }
  return {dci_kind::new_data, grant_tbs};
}

void ue_registry::release(rnti_t rnti)
{
  std::lock_guard lock(mutex_);
  if (live_.erase(rnti.value) == 0) {
    fail(errc::unknown_rnti, "RNTI not registered");
  }
}

bool ue_registry::is_registered(rnti_t rnti) const
{
  std::lock_guard lock(mutex_);
  return live_.contains(rnti.value);
}

ue_state ue_registry::snapshot(rnti_t rnti) const
{
  std::lock_guard lock(mutex_);
  auto it = live_.find(rnti.value);
  if (it == live_.end()) {
    fail(errc::unknown_rnti, "RNTI not registered");
  }
  return it->second;
}

std::vector<rnti_t> ue_registry::registered() const
{
  std::lock_guard lock(mutex_);
  std::vector<rnti_t> out;
  out.reserve(live_.size());
  for (const auto& [value, state] : live_) {
    out.push_back(rnti_t{value});
  }
  return out;
}

ue_state& ue_registry::get_live(rnti_t rnti)
{
  auto it = live_.find(rnti.value);
  if (it == live_.end()) {
    fail(errc::unknown_rnti, "RNTI not registered");
  }
  return it->second;
}

} // namespace rantel
