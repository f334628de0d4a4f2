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

#ifndef RANTEL_ERRORS_HPP
#define RANTEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rantel {

enum class errc {
  // config parsing
  missing_field,
  malformed_document,
  invalid_value,
  // dci codec
  field_overflow,
  bad_length,
  empty_input,
  not_rnti_scrambled,
  riv_out_of_range,
  sliv_out_of_range,
  no_valid_decode,
  reserved_mcs,
  time_index_out_of_range,
  // tbs
  negative_per_prb_re,
  non_positive_n_info,
  bad_pattern,
  // ue tracking
  duplicate_rnti,
  unknown_rnti,
  harq_id_out_of_range,
  // estimator
  non_monotonic_tti,
  // simulator / reporting
  invalid_config,
  mismatched_runs,
  invalid_scenario,
  // wire protocol
  invalid_coordinates,
  unsupported_method,
  out_of_order_method,
  malformed_message,
  subscriber_gone,
  // qoe
  unnormalized_input,
  empty_series,
};

const char* errc_name(errc code);

/// Single exception type for the toolkit; tests match on code().
class error : public std::runtime_error {
public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

} // namespace rantel

#endif
