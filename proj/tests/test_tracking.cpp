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

#include <numeric>

#include "rantel/capacity_estimator.hpp"
#include "rantel/errors.hpp"
#include "rantel/ue_tracker.hpp"
#include "test_helpers.hpp"

using namespace rantel;
using rantel::testing::fixture_path;
using rantel::testing::read_file;
using rantel::testing::sample_trace_dci;

namespace {

dci dl_dci(std::uint8_t harq_id, std::uint8_t ndi)
{
  dci d = sample_trace_dci();
  d.harq_id = harq_id;
  d.ndi = ndi;
  return d;
}

dci ul_dci(std::uint8_t harq_id, std::uint8_t ndi)
{
  dci d = dl_dci(harq_id, ndi);
  d.format = dci_format::f0_1;
  return d;
}

} // namespace

TEST_CASE("register_from_msg4: promotes the scrambling RNTI and binds config")
{
  ue_registry reg;
  const dci_envelope env = make_envelope(pack_dci(sample_trace_dci()), rnti_t{0x4296});
  const ue_state& state = reg.register_from_msg4(env, read_file(fixture_path("msg4.json")));

  CHECK(state.crnti == rnti_t{0x4296});
  CHECK(state.config.max_mimo_layers == 2);
  for (int h = 0; h < 16; ++h) {
    CHECK_FALSE(state.harq_ndi_dl[h].has_value());
    CHECK_FALSE(state.harq_ndi_ul[h].has_value());
  }
  CHECK_FALSE(state.last_grant_efficiency.has_value());

  try {
    reg.register_from_msg4(env, read_file(fixture_path("msg4.json")));
    FAIL("expected DuplicateRnti");
  } catch (const error& e) {
    CHECK(e.code() == errc::duplicate_rnti);
  }
}

TEST_CASE("register_from_msg4: corrupted envelope propagates NotRntiScrambled")
{
  const bit_string payload = pack_dci(sample_trace_dci());
  // pick a flip whose CRC delta reaches the top byte, so recovery must flag it
  std::size_t flagged_bit = payload.size_bits();
  for (std::size_t i = 0; i < payload.size_bits(); ++i) {
    bit_string corrupted = payload;
    corrupted.flip_bit(i);
    if (((crc24(corrupted) ^ crc24(payload)) >> 16) != 0) {
      flagged_bit = i;
      break;
    }
  }
  REQUIRE(flagged_bit < payload.size_bits());

  ue_registry reg;
  dci_envelope env = make_envelope(payload, rnti_t{0x4296});
  env.payload.flip_bit(flagged_bit);
  CHECK_FALSE(verify_dci(env, rnti_t{0x4296}));
  try {
    reg.register_from_msg4(env, read_file(fixture_path("msg4.json")));
    FAIL("expected NotRntiScrambled");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_rnti_scrambled);
  }
}

TEST_CASE("classify_dci: unknown state, repeat, toggle")
{
  ue_registry reg;
  const rnti_t rnti{0x4296};
  reg.register_known(rnti, parse_msg4(read_file(fixture_path("msg4.json"))));

  CHECK(reg.classify_dci(rnti, dl_dci(11, 0), 3240, 2) ==
        dci_classification{dci_kind::new_data, 3240});
  CHECK(reg.classify_dci(rnti, dl_dci(11, 0), 3240, 2) ==
        dci_classification{dci_kind::retransmission, 0});
  CHECK(reg.classify_dci(rnti, dl_dci(11, 1), 3240, 2) ==
        dci_classification{dci_kind::new_data, 3240});

  CHECK(reg.snapshot(rnti).last_grant_efficiency == rational(1620));

  dci bad = dl_dci(0, 0);
  bad.harq_id = 16;
  try {
    reg.classify_dci(rnti, bad, 100, 1);
    FAIL("expected HarqIdOutOfRange");
  } catch (const error& e) {
    CHECK(e.code() == errc::harq_id_out_of_range);
  }

  try {
    reg.classify_dci(rnti_t{0x9999}, dl_dci(0, 0), 100, 1);
    FAIL("expected UnknownRnti");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_rnti);
  }
}

TEST_CASE("classify_dci: alternating vs constant NDI sequences")
{
  ue_registry reg;
  const rnti_t rnti{0x17};
  reg.register_known(rnti, ue_dedicated_config{});

  int fresh = 0;
  for (int i = 0; i < 10; ++i) {
    const auto c = reg.classify_dci(rnti, dl_dci(3, static_cast<std::uint8_t>(i % 2)), 100, 1);
    fresh += c.kind == dci_kind::new_data ? 1 : 0;
  }
  CHECK(fresh == 10);

  fresh = 0;
  for (int i = 0; i < 10; ++i) {
    const auto c = reg.classify_dci(rnti, dl_dci(4, 1), 100, 1);
    fresh += c.kind == dci_kind::new_data ? 1 : 0;
  }
  CHECK(fresh == 1);
}

TEST_CASE("classify_dci: effective sum equals new-data sum over a trace")
{
  ue_registry reg;
  const rnti_t rnti{0x21};
  reg.register_known(rnti, ue_dedicated_config{});

  std::mt19937 rng(5);
  long long effective = 0;
  long long fresh_only = 0;
  for (int i = 0; i < 4000; ++i) {
    const dci d = dl_dci(static_cast<std::uint8_t>(rng() % 16),
                         static_cast<std::uint8_t>(rng() % 2));
    const int tbs = static_cast<int>(100 + rng() % 5000);
    const auto c = reg.classify_dci(rnti, d, tbs, 2);
    effective += c.effective_tbs;
    fresh_only += c.kind == dci_kind::new_data ? tbs : 0;
    if (c.kind == dci_kind::retransmission) {
      CHECK(c.effective_tbs == 0);
    }
  }
  CHECK(effective == fresh_only);
}

TEST_CASE("classify_dci: downlink and uplink HARQ arrays never interact")
{
  // interleaved trace
  ue_registry inter;
  const rnti_t rnti{0x31};
  inter.register_known(rnti, ue_dedicated_config{});
  std::vector<dci_classification> interleaved;
  for (int i = 0; i < 6; ++i) {
    interleaved.push_back(inter.classify_dci(rnti, dl_dci(2, static_cast<std::uint8_t>(i % 2)), 10, 1));
    interleaved.push_back(inter.classify_dci(rnti, ul_dci(2, 1), 20, 1));
  }

  // the same records with directions separated
  ue_registry sep;
  sep.register_known(rnti, ue_dedicated_config{});
  std::vector<dci_classification> split;
  for (int i = 0; i < 6; ++i) {
    split.push_back(sep.classify_dci(rnti, dl_dci(2, static_cast<std::uint8_t>(i % 2)), 10, 1));
  }
  std::vector<dci_classification> split_ul;
  for (int i = 0; i < 6; ++i) {
    split_ul.push_back(sep.classify_dci(rnti, ul_dci(2, 1), 20, 1));
  }

  for (int i = 0; i < 6; ++i) {
    CHECK(interleaved[static_cast<std::size_t>(2 * i)] == split[static_cast<std::size_t>(i)]);
    CHECK(interleaved[static_cast<std::size_t>(2 * i + 1)] ==
          split_ul[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("release: frees the RNTI exactly once")
{
  ue_registry reg;
  const rnti_t rnti{0x44};
  reg.register_known(rnti, ue_dedicated_config{});
  reg.release(rnti);
  reg.register_known(rnti, ue_dedicated_config{}); // reuse after release

  reg.release(rnti);
  try {
    reg.release(rnti);
    FAIL("expected UnknownRnti");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_rnti);
  }
}

TEST_CASE("estimator: empty TTIs and PRB bookkeeping")
{
  capacity_estimator est;
  est.register_ue(rnti_t{1}, rational(24));

  est.record_tti({.tti_index = 0, .entries = {}, .used_prb_total = 0, .spare_prb = 51});
  CHECK(est.allocated_rate(rnti_t{1}, 0) == 0);

  est.record_tti({.tti_index = 1,
                  .entries = {{rnti_t{1}, 3240, 2}},
                  .used_prb_total = 2,
                  .spare_prb = 49});
  CHECK(est.allocated_rate(rnti_t{1}, 1) == 3240 * 10);

  try {
    est.record_tti({.tti_index = 1, .entries = {}, .used_prb_total = 0, .spare_prb = 51});
    FAIL("expected NonMonotonicTti");
  } catch (const error& e) {
    CHECK(e.code() == errc::non_monotonic_tti);
  }
}

TEST_CASE("estimator: full and half windows at the 0.5 ms TTI")
{
  capacity_estimator est;
  est.register_ue(rnti_t{1}, rational(24));
  CHECK(est.window_tti_count() == 200);

  for (std::uint64_t t = 0; t < 200; ++t) {
    est.record_tti({t, {{rnti_t{1}, 3240, 2}}, 2, 49});
  }
  CHECK(est.allocated_rate(rnti_t{1}, 199) == 6480000);

  // only the most recent 100 of 200 carry data
  capacity_estimator half;
  half.register_ue(rnti_t{1}, rational(24));
  for (std::uint64_t t = 0; t < 200; ++t) {
    if (t >= 100) {
      half.record_tti({t, {{rnti_t{1}, 3240, 2}}, 2, 49});
    } else {
      half.record_tti({t, {}, 0, 51});
    }
  }
  CHECK(half.allocated_rate(rnti_t{1}, 199) == 3240000);
}

TEST_CASE("estimator: old slots age out across gaps")
{
  capacity_estimator est;
  est.register_ue(rnti_t{1}, rational(24));
  est.record_tti({0, {{rnti_t{1}, 3240, 2}}, 2, 49});
  est.record_tti({300, {{rnti_t{1}, 1000, 1}}, 1, 50});
  CHECK(est.allocated_rate(rnti_t{1}, 300) == 1000 * 10);
}

TEST_CASE("estimator: fair-share spare rate")
{
  estimator_config cfg;
  capacity_estimator est(cfg);
  est.register_ue(rnti_t{1}, rational(24));
  est.register_ue(rnti_t{2}, rational(24));

  // UE 1 carries the sample-trace efficiency 3240/2 = 1620 bits/PRB/TTI;
  // UE 2 runs a lower coding rate
  est.record_tti({0, {{rnti_t{1}, 3240, 2}, {rnti_t{2}, 1000, 2}}, 4, 20});

  CHECK(est.active_ue_count(0) == 2);
  // fair = 20/2 = 10 PRB; 10 * 1620 * 2000
  CHECK(est.spare_rate(rnti_t{1}) == 32400000);
  // same fair share, different efficiency
  CHECK(est.spare_rate(rnti_t{2}) == static_cast<std::uint64_t>(10) * 500 * 2000);
  CHECK(est.spare_rate(rnti_t{1}) != est.spare_rate(rnti_t{2}));

  est.record_tti({1, {}, 0, 0});
  CHECK(est.spare_rate(rnti_t{1}) == 0);
}

TEST_CASE("estimator: spare conservation under integer division")
{
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    capacity_estimator est;
    const int n_ues = 1 + static_cast<int>(rng() % 7);
    for (int u = 0; u < n_ues; ++u) {
      est.register_ue(rnti_t{static_cast<std::uint16_t>(u + 1)}, rational(1));
    }
    const int spare = static_cast<int>(rng() % 52);
    est.record_tti({0, {}, 51 - spare, spare});
    const int fair = spare / n_ues;
    CHECK(fair * n_ues <= spare);
    if (fair > 0) {
      CHECK(est.spare_rate(rnti_t{1}) == static_cast<std::uint64_t>(fair) * 2000);
    }
  }
}

TEST_CASE("estimator: no-history UE falls back to the lowest-MCS efficiency")
{
  const cell_common_config cell = parse_sib1(read_file(fixture_path("sib1.json")));
  const ue_dedicated_config ue = parse_msg4(read_file(fixture_path("msg4.json")));

  // qam256 index 0 (Qm 2, R 120/1024) on one PRB over (2, 12) with the pos1
  // pattern {2, 11}: N_RE = 120, N_info = 28.125, quantized to 24
  const rational eff = default_spare_efficiency(cell, ue);
  CHECK(eff == rational(24));

  capacity_estimator est;
  est.register_ue(rnti_t{7}, eff);
  est.record_tti({0, {}, 0, 51});
  CHECK(est.allocated_rate(rnti_t{7}, 0) == 0);
  CHECK(est.spare_rate(rnti_t{7}) == static_cast<std::uint64_t>(51) * 24 * 2000);

  const telemetry_sample s = est.sample(rnti_t{7}, 0);
  CHECK(s.b_alloc == 0);
  CHECK(s.b_spare == 51 * 24 * 2000);
}

TEST_CASE("estimator: samples pass through and saturate at 32 bits")
{
  capacity_estimator est;
  est.register_ue(rnti_t{1}, rational(24));
  for (std::uint64_t t = 0; t < 200; ++t) {
    est.record_tti({t, {{rnti_t{1}, 3240, 2}}, 2, 0});
  }
  const telemetry_sample s = est.sample(rnti_t{1}, 199);
  CHECK(s == telemetry_sample{199, 6480000, 0});

  capacity_estimator big;
  big.register_ue(rnti_t{1}, rational(24));
  for (std::uint64_t t = 0; t < 200; ++t) {
    big.record_tti({t, {{rnti_t{1}, 3000000, 51}}, 51, 0});
  }
  CHECK(big.allocated_rate(rnti_t{1}, 199) == 6000000000ULL);
  CHECK(big.sample(rnti_t{1}, 199).b_alloc == 4294967295U);
}

TEST_CASE("estimator: allocated rate invariant to entry order")
{
  capacity_estimator a;
  capacity_estimator b;
  for (auto* est : {&a, &b}) {
    est->register_ue(rnti_t{1}, rational(1));
    est->register_ue(rnti_t{2}, rational(1));
  }
  a.record_tti({0, {{rnti_t{1}, 100, 1}, {rnti_t{2}, 200, 2}, {rnti_t{1}, 50, 1}}, 4, 47});
  b.record_tti({0, {{rnti_t{1}, 50, 1}, {rnti_t{2}, 200, 2}, {rnti_t{1}, 100, 1}}, 4, 47});
  CHECK(a.allocated_rate(rnti_t{1}, 0) == b.allocated_rate(rnti_t{1}, 0));
  CHECK(a.allocated_rate(rnti_t{2}, 0) == b.allocated_rate(rnti_t{2}, 0));
}

TEST_CASE("estimator: unknown UEs are rejected")
{
  capacity_estimator est;
  try {
    est.allocated_rate(rnti_t{9}, 0);
    FAIL("expected UnknownRnti");
  } catch (const error& e) {
    CHECK(e.code() == errc::unknown_rnti);
  }
}
