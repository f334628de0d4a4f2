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

#include "rantel/mcs_tables.hpp"

#include <algorithm>
#include <array>

#include "rantel/errors.hpp"

namespace rantel {

namespace {

// Row storage: code rate as R*2048 so the half-integer 256QAM rows (indices 20
// and 26: R*1024 = 682.5 and 916.5) stay exact. r_x2048 == 0 marks a reserved
// retransmission-only index.
struct mcs_row {
  std::uint8_t qm;
  std::uint16_t r_x2048;
};

// TS 38.214 Table 5.1.3.1-1 (qam64).
constexpr std::array<mcs_row, 32> table_qam64 = {{
    {2, 240},  {2, 314},  {2, 386},  {2, 502},  {2, 616},  {2, 758},  {2, 898},  {2, 1052},
    {2, 1204}, {2, 1358}, {4, 680},  {4, 756},  {4, 868},  {4, 980},  {4, 1106}, {4, 1232},
    {4, 1316}, {6, 876},  {6, 932},  {6, 1034}, {6, 1134}, {6, 1232}, {6, 1332}, {6, 1438},
    {6, 1544}, {6, 1644}, {6, 1746}, {6, 1820}, {6, 1896}, {2, 0},    {4, 0},    {6, 0},
}};

// TS 38.214 Table 5.1.3.1-2 (qam256).
constexpr std::array<mcs_row, 32> table_qam256 = {{
    {2, 240},  {2, 386},  {2, 616},  {2, 898},  {2, 1204}, {4, 756},  {4, 868},  {4, 980},
    {4, 1106}, {4, 1232}, {4, 1316}, {6, 932},  {6, 1034}, {6, 1134}, {6, 1232}, {6, 1332},
    {6, 1438}, {6, 1544}, {6, 1644}, {6, 1746}, {8, 1365}, {8, 1422}, {8, 1508}, {8, 1594},
    {8, 1682}, {8, 1770}, {8, 1833}, {8, 1896}, {2, 0},    {4, 0},    {6, 0},    {8, 0},
}};

// TS 38.214 Table 5.1.3.2-1.
constexpr std::array<int, 93> tbs_entries = {
    24,   32,   40,   48,   56,   64,   72,   80,   88,   96,   104,  112,  120,  128,
    136,  144,  152,  160,  168,  176,  184,  192,  208,  224,  240,  256,  272,  288,
    304,  320,  336,  352,  368,  384,  408,  432,  456,  480,  504,  528,  552,  576,
    608,  640,  672,  704,  736,  768,  808,  848,  888,  928,  984,  1032, 1064, 1128,
    1160, 1192, 1224, 1256, 1288, 1320, 1352, 1416, 1480, 1544, 1608, 1672, 1736, 1800,
    1864, 1928, 2024, 2088, 2152, 2216, 2280, 2408, 2472, 2536, 2600, 2664, 2728, 2792,
    2856, 2976, 3104, 3240, 3368, 3496, 3624, 3752, 3824,
};

const std::array<mcs_row, 32>& rows_for(mcs_table table)
{
  return table == mcs_table::qam64 ? table_qam64 : table_qam256;
}

std::uint64_t fnv1a(std::uint64_t h, std::uint64_t v)
{
  for (int i = 0; i < 8; ++i) {
    h ^= (v >> (8 * i)) & 0xFF;
    h *= 0x100000001B3ULL;
  }
  return h;
}

} // namespace

const char* mcs_table_name(mcs_table table)
{
  return table == mcs_table::qam64 ? "qam64" : "qam256";
}

bool mcs_is_reserved(unsigned mcs_index, mcs_table table)
{
  if (mcs_index > 31) {
    fail(errc::invalid_value, "MCS index above 31");
  }
  return rows_for(table)[mcs_index].r_x2048 == 0;
}

mcs_entry mcs_lookup(unsigned mcs_index, mcs_table table)
{
  if (mcs_index > 31) {
    fail(errc::invalid_value, "MCS index above 31");
  }
  const mcs_row& row = rows_for(table)[mcs_index];
  if (row.r_x2048 == 0) {
    fail(errc::reserved_mcs, "MCS index " + std::to_string(mcs_index) + " is reserved in " +
                                 mcs_table_name(table));
  }
  return mcs_entry{row.qm, rational(row.r_x2048, 2048)};
}

std::span<const int> tbs_table() { return tbs_entries; }

int tbs_table_ceil(std::int64_t target)
{
  auto it = std::lower_bound(tbs_entries.begin(), tbs_entries.end(), target);
  if (it == tbs_entries.end()) {
    fail(errc::invalid_value, "target above transport-block table ceiling");
  }
  return *it;
}

std::uint64_t mcs_tables_checksum()
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const auto& tbl : {table_qam64, table_qam256}) {
    for (const mcs_row& row : tbl) {
      h = fnv1a(h, (static_cast<std::uint64_t>(row.qm) << 32) | row.r_x2048);
    }
  }
  return h;
}

std::uint64_t tbs_table_checksum()
{
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (int v : tbs_entries) {
    h = fnv1a(h, static_cast<std::uint64_t>(v));
  }
  return h;
}

} // namespace rantel
