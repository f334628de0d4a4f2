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

#ifndef RANTEL_TBS_CALC_HPP
#define RANTEL_TBS_CALC_HPP

#include <string>

#include "rantel/mcs_tables.hpp"
#include "rantel/rational.hpp"

namespace rantel {

/// Inputs for the resource-element count N_RE.
struct re_count_inputs {
  int n_prb = 0;
  int num_symbols = 0;      // N_symb^sh
  int dmrs_re_per_prb = 0;  // N_DMRS^PRB
  int overhead = 0;         // N_oh^PRB

  static constexpr int subcarriers_per_rb = 12; // N_sc^RB
};

/// N'_RE = 12*N_symb - N_DMRS - N_oh; N_RE = min(156, N'_RE) * n_PRB.
/// A zero-PRB allocation short-circuits to 0; a negative per-PRB count raises
/// NegativePerPrbRe (inconsistent DMRS/overhead configuration).
int count_re(const re_count_inputs& in);

/// 12 * number of '1' positions of `pattern` inside
/// [start_symbol, start_symbol + num_symbols).
int dmrs_re_per_prb(const std::string& pattern, int start_symbol, int num_symbols);

/// Type A, single-symbol DMRS positions (first position fixed at symbol 2),
/// rendered as the 14-char reservation pattern. Row selection follows the
/// allocation duration counted from the slot start.
std::string dmrs_pattern_type_a(int additional_position, int start_symbol, int num_symbols);

/// N_info = N_RE * R * Q_m * v, exact.
rational compute_n_info(int n_re, const rational& code_rate, int modulation_order, int num_layers);

struct tbs_options {
  // The R <= 1/4 segmentation divisor. 3816 per the standard; 3814 reproduces
  // a known transcription variant.
  bool legacy_divisor = false;

  int divisor_low_rate() const { return legacy_divisor ? 3814 : 3816; }
};

/// Quantized transport block size from N_info:
///  - N_info <= 3824: quantize down to N'_info and round up into the 93-entry
///    table.
///  - N_info >  3824: quantize to N'_info >= 3840, then the code-block
///    formulas, split by R <= 1/4 and N'_info > 8424.
int compute_tbs(const rational& n_info, const rational& code_rate, const tbs_options& opt = {});

/// Full chain count_re -> N_info -> TBS. Zero-size allocations yield 0.
int grant_tbs(const re_count_inputs& re_in,
              const mcs_entry& mcs,
              int num_layers,
              const tbs_options& opt = {});

} // namespace rantel

#endif
