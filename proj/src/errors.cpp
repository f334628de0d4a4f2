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

#include "rantel/errors.hpp"

namespace rantel {

const char* errc_name(errc code)
{
  switch (code) {
    case errc::missing_field: return "MissingField";
    case errc::malformed_document: return "MalformedDocument";
    case errc::invalid_value: return "InvalidValue";
    case errc::field_overflow: return "FieldOverflow";
    case errc::bad_length: return "BadLength";
    case errc::empty_input: return "EmptyInput";
    case errc::not_rnti_scrambled: return "NotRntiScrambled";
    case errc::riv_out_of_range: return "RivOutOfRange";
    case errc::sliv_out_of_range: return "SlivOutOfRange";
    case errc::no_valid_decode: return "NoValidDecode";
    case errc::reserved_mcs: return "ReservedMcs";
    case errc::time_index_out_of_range: return "TimeIndexOutOfRange";
    case errc::negative_per_prb_re: return "NegativePerPrbRe";
    case errc::non_positive_n_info: return "NonPositiveNInfo";
    case errc::bad_pattern: return "BadPattern";
    case errc::duplicate_rnti: return "DuplicateRnti";
    case errc::unknown_rnti: return "UnknownRnti";
    case errc::harq_id_out_of_range: return "HarqIdOutOfRange";
    case errc::non_monotonic_tti: return "NonMonotonicTti";
    case errc::invalid_config: return "InvalidConfig";
    case errc::mismatched_runs: return "MismatchedRuns";
    case errc::invalid_scenario: return "InvalidScenario";
    case errc::invalid_coordinates: return "InvalidCoordinates";
    case errc::unsupported_method: return "UnsupportedMethod";
    case errc::out_of_order_method: return "OutOfOrderMethod";
    case errc::malformed_message: return "MalformedMessage";
    case errc::subscriber_gone: return "SubscriberGone";
    case errc::unnormalized_input: return "UnnormalizedInput";
    case errc::empty_series: return "EmptySeries";
  }
  return "UnknownError";
}

} // namespace rantel
