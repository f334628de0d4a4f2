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

#include "rantel/capacity_estimator.hpp"

#include <algorithm>
#include <limits>

#include "rantel/errors.hpp"
#include "rantel/tbs_calc.hpp"

namespace rantel {

namespace {

std::uint32_t saturate32(std::uint64_t v)
{
  return v > std::numeric_limits<std::uint32_t>::max()
             ? std::numeric_limits<std::uint32_t>::max()
             : static_cast<std::uint32_t>(v);
}

} // namespace

rational default_spare_efficiency(const cell_common_config& cell, const ue_dedicated_config& ue)
{
  const auto& tda_list =
      !ue.pdsch_time_domain_list.empty() ? ue.pdsch_time_domain_list : cell.pdsch_time_domain_list;
  symbol_allocation symbols{2, 12};
  if (!tda_list.empty()) {
    symbols = sliv_decode(tda_list.front().sliv);
  }
  const std::string pattern =
      dmrs_pattern_type_a(ue.dmrs_additional_position, symbols.start_symbol, symbols.num_symbols);
  const mcs_entry floor_mcs = mcs_lookup(0, ue.mcs_table_sel);
  const int tbs = grant_tbs(
      re_count_inputs{1, symbols.num_symbols,
                      dmrs_re_per_prb(pattern, symbols.start_symbol, symbols.num_symbols),
                      ue.xoverhead},
      floor_mcs, 1);
  return rational(tbs);
}

capacity_estimator::capacity_estimator(estimator_config cfg) : cfg_(cfg)
{
  if (cfg_.window_ms <= 0 || cfg_.tti_duration_ms <= rational(0)) {
    fail(errc::invalid_config, "window and TTI duration must be positive");
  }
  const rational count = rational(cfg_.window_ms) / cfg_.tti_duration_ms;
  if (!count.is_integer() || count.num() <= 0) {
    fail(errc::invalid_config, "window must hold a whole number of TTIs");
  }
  window_tti_ = static_cast<int>(count.num());
  const rational tps = rational(1000) / cfg_.tti_duration_ms;
  ticks_per_second_ = static_cast<std::uint64_t>(tps.is_integer() ? tps.num() : tps.floor());
}

void capacity_estimator::register_ue(rnti_t rnti, const rational& default_efficiency,
                                     std::uint64_t now_tti)
{
  std::lock_guard lock(mutex_);
  if (ues_.contains(rnti.value)) {
    fail(errc::duplicate_rnti, "UE already tracked");
  }
  ue_window ue;
  ue.ring.resize(static_cast<std::size_t>(window_tti_));
  ue.default_efficiency = default_efficiency;
  ue.efficiency = default_efficiency;
  ue.last_activity_tti = now_tti;
  ue.has_activity = true; // registration counts as activity
  ues_.emplace(rnti.value, std::move(ue));
}

void capacity_estimator::release_ue(rnti_t rnti)
{
  std::lock_guard lock(mutex_);
  if (ues_.erase(rnti.value) == 0) {
    fail(errc::unknown_rnti, "UE not tracked");
  }
}

void capacity_estimator::record_tti(const tti_record& record)
{
  std::lock_guard lock(mutex_);
  if (last_tti_ && record.tti_index <= *last_tti_) {
    fail(errc::non_monotonic_tti, "TTI index must strictly increase");
  }
  if (record.spare_prb < 0) {
    fail(errc::invalid_value, "spare PRB count cannot be negative");
  }
  last_tti_ = record.tti_index;
  last_spare_prb_ = record.spare_prb;

  for (const tti_grant_entry& entry : record.entries) {
    auto it = ues_.find(entry.rnti.value);
    if (it == ues_.end()) {
      fail(errc::unknown_rnti, "grant for an untracked UE");
    }
    ue_window& ue = it->second;
    window_slot& slot = ue.ring[record.tti_index % ue.ring.size()];
    if (slot.used && slot.tti == record.tti_index) {
      slot.bits += static_cast<std::uint32_t>(entry.effective_tbs);
    } else {
      slot = {record.tti_index, static_cast<std::uint32_t>(entry.effective_tbs), true};
    }
    ue.cumulative_bits += static_cast<std::uint64_t>(entry.effective_tbs);
    ue.last_activity_tti = record.tti_index;
    ue.has_activity = true;
    if (entry.effective_tbs > 0 && entry.num_prb > 0) {
      ue.efficiency = rational(entry.effective_tbs, entry.num_prb);
    }
  }
}

std::uint64_t capacity_estimator::allocated_rate(rnti_t rnti, std::uint64_t now_tti) const
{
  std::lock_guard lock(mutex_);
  const ue_window& ue = get(rnti);
  const std::uint64_t window = static_cast<std::uint64_t>(window_tti_);
  std::uint64_t sum = 0;
  for (const window_slot& slot : ue.ring) {
    if (slot.used && slot.tti <= now_tti && now_tti - slot.tti < window) {
      sum += slot.bits;
    }
  }
  return sum * 1000ULL / static_cast<std::uint64_t>(cfg_.window_ms);
}

std::uint64_t capacity_estimator::spare_rate(rnti_t rnti) const
{
  std::lock_guard lock(mutex_);
  const ue_window& ue = get(rnti);

  int sharers = 0;
  if (cfg_.share_mode == spare_share_mode::all_ues) {
    sharers = static_cast<int>(ues_.size());
  } else {
    const std::uint64_t now = last_tti_.value_or(0);
    for (const auto& [value, other] : ues_) {
      sharers += ue_active(other, now) ? 1 : 0;
    }
    // the queried UE always takes part
    if (!ue_active(ue, now)) {
      ++sharers;
    }
  }
  if (sharers == 0 || last_spare_prb_ <= 0) {
    return 0;
  }
  const int fair_prb = last_spare_prb_ / sharers; // remainder left unassigned
  const rational eff = ue.efficiency.num() > 0 ? ue.efficiency : ue.default_efficiency;
  const rational rate =
      rational(fair_prb) * eff * rational(static_cast<std::int64_t>(ticks_per_second_));
  return rate.num() <= 0 ? 0 : static_cast<std::uint64_t>(rate.floor());
}

telemetry_sample capacity_estimator::sample(rnti_t rnti, std::uint64_t now_tti) const
{
  return telemetry_sample{now_tti, saturate32(allocated_rate(rnti, now_tti)),
                          saturate32(spare_rate(rnti))};
}

std::uint64_t capacity_estimator::cumulative_effective_bits(rnti_t rnti) const
{
  std::lock_guard lock(mutex_);
  return get(rnti).cumulative_bits;
}

int capacity_estimator::active_ue_count(std::uint64_t now_tti) const
{
  std::lock_guard lock(mutex_);
  int count = 0;
  for (const auto& [value, ue] : ues_) {
    count += ue_active(ue, now_tti) ? 1 : 0;
  }
  return count;
}

std::uint64_t capacity_estimator::last_tti() const
{
  std::lock_guard lock(mutex_);
  return last_tti_.value_or(0);
}

bool capacity_estimator::ue_active(const ue_window& ue, std::uint64_t now_tti) const
{
  if (!ue.has_activity) {
    return false;
  }
  return now_tti < ue.last_activity_tti + static_cast<std::uint64_t>(window_tti_);
}

const capacity_estimator::ue_window& capacity_estimator::get(rnti_t rnti) const
{
  auto it = ues_.find(rnti.value);
  if (it == ues_.end()) {
    fail(errc::unknown_rnti, "UE not tracked");
  }
  return it->second;
}

} // namespace rantel
