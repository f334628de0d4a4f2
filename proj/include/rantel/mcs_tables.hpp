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

#ifndef RANTEL_MCS_TABLES_HPP
#define RANTEL_MCS_TABLES_HPP

#include <cstdint>
#include <span>

#include "rantel/rational.hpp"

namespace rantel {

enum class mcs_table : std::uint8_t {
  qam64,  // modulation orders up to 64QAM
  qam256, // modulation orders up to 256QAM
};

const char* mcs_table_name(mcs_table table);

/// One row of a modulation-and-coding table: modulation order Q_m and target
/// code rate R. Two 256QAM rows carry half-integer R*1024 values (682.5 and
/// 916.5), so the rate is held as an exact rational.
struct mcs_entry {
  int modulation_order;
  rational code_rate; // R, e.g. 948/1024

  rational code_rate_x1024() const { return code_rate * rational(1024); }
};

/// Table row lookup. Reserved (retransmission-only) indices raise ReservedMcs.
mcs_entry mcs_lookup(unsigned mcs_index, mcs_table table);

bool mcs_is_reserved(unsigned mcs_index, mcs_table table);

/// The 93-entry transport-block-size quantization table, ascending.
std::span<const int> tbs_table();

/// Smallest table entry >= target. Throws InvalidValue above the table ceiling.
int tbs_table_ceil(std::int64_t target);

/// FNV-1a over the serialized table contents; pinned in tests so silent edits
/// to the embedded standard tables are caught.
std::uint64_t mcs_tables_checksum();
std::uint64_t tbs_table_checksum();

} // namespace rantel

#endif
