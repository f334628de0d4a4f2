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

#include "rantel/tbs_calc.hpp"

#include <algorithm>
#include <array>

#include "rantel/errors.hpp"

namespace rantel {

int count_re(const re_count_inputs& in)
{
  if (in.n_prb < 0 || in.num_symbols < 0 || in.num_symbols > 14 || in.dmrs_re_per_prb < 0 ||
      in.overhead < 0) {
    fail(errc::invalid_value, "resource-element inputs out of range");
  }
  if (in.n_prb == 0) {
    return 0;
  }
  const int per_prb =
      re_count_inputs::subcarriers_per_rb * in.num_symbols - in.dmrs_re_per_prb - in.overhead;
  if (per_prb < 0) {
    fail(errc::negative_per_prb_re, "DMRS plus overhead exceed the allocation");
  }
  return std::min(156, per_prb) * in.n_prb;
}

int dmrs_re_per_prb(const std::string& pattern, int start_symbol, int num_symbols)
{
  if (pattern.size() != 14) {
    fail(errc::bad_pattern, "DMRS pattern must be 14 symbols long");
  }
  if (start_symbol < 0 || num_symbols < 0 || start_symbol + num_symbols > 14) {
    fail(errc::invalid_value, "symbol window out of slot bounds");
  }
  int count = 0;
  for (int s = start_symbol; s < start_symbol + num_symbols; ++s) {
    const char c = pattern[static_cast<std::size_t>(s)];
    if (c == '1') {
      ++count;
    } else if (c != '0') {
      fail(errc::bad_pattern, "DMRS pattern must be binary");
    }
  }
  // reject non-binary characters outside the window too
  for (char c : pattern) {
    if (c != '0' && c != '1') {
      fail(errc::bad_pattern, "DMRS pattern must be binary");
    }
  }
  return 12 * count;
}

std::string dmrs_pattern_type_a(int additional_position, int start_symbol, int num_symbols)
{
  if (additional_position < 0 || additional_position > 3) {
    fail(errc::invalid_value, "dmrs-AdditionalPosition out of range");
  }
  if (start_symbol < 0 || num_symbols < 1 || start_symbol + num_symbols > 14) {
    fail(errc::invalid_value, "symbol allocation out of slot bounds");
  }
  // Duration for mapping type A runs from the slot start to the end of the
  // allocation. First DMRS symbol fixed at 2 (typeA position 2).
  const int ld = start_symbol + num_symbols;
  constexpr int l0 = 2;

  std::array<int, 4> extra{}; // additional positions beyond l0, 0-terminated count
  int n_extra = 0;
  if (additional_position >= 1) {
    if (ld >= 13) {
      if (additional_position == 1) {
        extra = {11};
        n_extra = 1;
      } else if (additional_position == 2) {
        extra = {7, 11};
        n_extra = 2;
      } else {
        extra = {5, 8, 11};
        n_extra = 3;
      }
    } else if (ld == 12) {
      if (additional_position == 1) {
        extra = {9};
        n_extra = 1;
      } else if (additional_position == 2) {
        extra = {6, 9};
        n_extra = 2;
      } else {
        extra = {5, 8, 11};
        n_extra = 3;
      }
    } else if (ld >= 10) {
      if (additional_position == 1) {
        extra = {9};
        n_extra = 1;
      } else {
        extra = {6, 9};
        n_extra = 2;
      }
    } else if (ld >= 8) {
      extra = {7};
      n_extra = 1;
    }
    // ld <= 7: front-loaded symbol only
  }

  std::string pattern(14, '0');
  if (l0 < ld) {
    pattern[l0] = '1';
  }
  for (int i = 0; i < n_extra; ++i) {
    pattern[static_cast<std::size_t>(extra[static_cast<std::size_t>(i)])] = '1';
  }
  return pattern;
}

rational compute_n_info(int n_re, const rational& code_rate, int modulation_order, int num_layers)
{
  return rational(n_re) * code_rate * rational(modulation_order) * rational(num_layers);
}

namespace {

std::int64_t pow2(int n) { return std::int64_t{1} << n; }

} // namespace

int compute_tbs(const rational& n_info, const rational& code_rate, const tbs_options& opt)
{
  if (n_info <= rational(0)) {
    fail(errc::non_positive_n_info, "N_info must be positive");
  }

  if (n_info <= rational(3824)) {
    const int n = std::max(3, floor_log2(n_info) - 6);
    const std::int64_t quantized = pow2(n) * (n_info / rational(pow2(n))).floor();
    const std::int64_t n_info_prime = std::max<std::int64_t>(24, quantized);
    return tbs_table_ceil(n_info_prime);
  }

  const rational excess = n_info - rational(24);
  const int n = floor_log2(excess) - 5;
  const std::int64_t quantized = pow2(n) * (excess / rational(pow2(n))).round_half_up();
  const std::int64_t np = std::max<std::int64_t>(3840, quantized);

  auto segmented = [np](std::int64_t c) {
    // TBS = 8C * ceil((N' + 24C) / (8C)) - 24
    const std::int64_t num = np + 24 * c;
    const std::int64_t den = 8 * c;
    return den * ((num + den - 1) / den) - 24;
  };

  if (code_rate <= rational(1, 4)) {
    const std::int64_t c = (np + 24 + opt.divisor_low_rate() - 1) / opt.divisor_low_rate();
    return static_cast<int>(segmented(c));
  }
  if (np > 8424) {
    const std::int64_t c = (np + 24 + 8424 - 1) / 8424;
    return static_cast<int>(segmented(c));
  }
  return static_cast<int>(8 * ((np + 24 + 7) / 8) - 24);
}

int grant_tbs(const re_count_inputs& re_in,
              const mcs_entry& mcs,
              int num_layers,
              const tbs_options& opt)
{
  const int n_re = count_re(re_in);
  if (n_re == 0) {
    return 0; // padding TTIs and empty allocations are representable
  }
  const rational n_info = compute_n_info(n_re, mcs.code_rate, mcs.modulation_order, num_layers);
  return compute_tbs(n_info, mcs.code_rate, opt);
}

} // namespace rantel
