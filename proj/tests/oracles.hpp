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

// Independent reference implementations used only by tests. These are written
// from the primary definitions (polynomial long division, the TS 38.214
// clauses) on purpose and must stay decoupled from the library code paths
// they check.

#ifndef RANTEL_TESTS_ORACLES_HPP
#define RANTEL_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

namespace rantel::oracle {

/// CRC by explicit long division: append 24 zero bits, subtract (xor) the
/// 25-bit generator wherever the running remainder has a leading one.
std::uint32_t crc24_long_division(const std::vector<int>& bits);

/// TBS per TS 38.214 5.1.3.2 written over explicit integer fractions.
/// n_info = (nre * qm * v * r_num) / r_den; code rate = r_num / r_den.
/// Returns -1 when n_info is not positive.
long long tbs_from_n_info(long long n_info_num,
                          long long n_info_den,
                          long long r_num,
                          long long r_den,
                          bool legacy_divisor = false);

/// Full-chain TBS from grant parameters (resource elements counted inline).
long long tbs_from_grant(int n_prb,
                         int num_symbols,
                         int dmrs_re_per_prb,
                         int overhead,
                         int qm,
                         long long r_num,
                         long long r_den,
                         int num_layers,
                         bool legacy_divisor = false);

} // namespace rantel::oracle

#endif
