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

#include "oracles.hpp"

#include <algorithm>

namespace rantel::oracle {

std::uint32_t crc24_long_division(const std::vector<int>& bits)
{
  // generator x^24 + x^23 + x^21 + x^20 + x^17 + x^15 + x^13 + x^12 +
  //           x^8 + x^4 + x^2 + x + 1  (25 coefficients)
  static const int gen[25] = {1, 1, 0, 1, 1, 0, 0, 1, 0, 1, 0, 1, 1,
                              0, 0, 0, 1, 0, 0, 0, 1, 0, 1, 1, 1};

  std::vector<int> work(bits);
  work.insert(work.end(), 24, 0);
  for (std::size_t i = 0; i + 24 < work.size(); ++i) {
    if (work[i] == 1) {
      for (std::size_t j = 0; j < 25; ++j) {
        work[i + j] ^= gen[j];
      }
    }
  }
  std::uint32_t remainder = 0;
  for (std::size_t i = work.size() - 24; i < work.size(); ++i) {
    remainder = (remainder << 1) | static_cast<std::uint32_t>(work[i]);
  }
  return remainder;
}

namespace {

// largest k with 2^k * den <= num (floor of log2 of num/den), num >= den > 0
int floor_log2_frac(long long num, long long den)
{
  int k = 0;
  long long scaled = den;
  while (scaled * 2 <= num) {
    scaled *= 2;
    ++k;
  }
  return k;
}

long long ceil_div(long long a, long long b) { return (a + b - 1) / b; }

// the 93 quantized sizes of TS 38.214 Table 5.1.3.2-1
const long long table_5132_1[] = {
    24,   32,   40,   48,   56,   64,   72,   80,   88,   96,   104,  112,  120,  128,
    136,  144,  152,  160,  168,  176,  184,  192,  208,  224,  240,  256,  272,  288,
    304,  320,  336,  352,  368,  384,  408,  432,  456,  480,  504,  528,  552,  576,
    608,  640,  672,  704,  736,  768,  808,  848,  888,  928,  984,  1032, 1064, 1128,
    1160, 1192, 1224, 1256, 1288, 1320, 1352, 1416, 1480, 1544, 1608, 1672, 1736, 1800,
    1864, 1928, 2024, 2088, 2152, 2216, 2280, 2408, 2472, 2536, 2600, 2664, 2728, 2792,
    2856, 2976, 3104, 3240, 3368, 3496, 3624, 3752, 3824};

} // namespace

long long tbs_from_n_info(long long n_info_num,
                          long long n_info_den,
                          long long r_num,
                          long long r_den,
                          bool legacy_divisor)
{
  if (n_info_num <= 0 || n_info_den <= 0) {
    return -1;
  }

  if (n_info_num <= 3824 * n_info_den) {
    const int n = std::max(3, floor_log2_frac(n_info_num, n_info_den) - 6);
    const long long floored = n_info_num / (n_info_den << n); // floor(n_info / 2^n)
    const long long np = std::max(24LL, (1LL << n) * floored);
    for (long long entry : table_5132_1) {
      if (entry >= np) {
        return entry;
      }
    }
    return -1; // unreachable: np <= 3824
  }

  const long long excess_num = n_info_num - 24 * n_info_den; // n_info - 24 > 3800
  const int n = floor_log2_frac(excess_num, n_info_den) - 5;
  const long long b = n_info_den << n;
  const long long rounded = (2 * excess_num + b) / (2 * b); // round half up
  const long long np = std::max(3840LL, (1LL << n) * rounded);

  if (4 * r_num <= r_den) { // R <= 1/4
    const long long c = ceil_div(np + 24, legacy_divisor ? 3814 : 3816);
    return 8 * c * ceil_div(np + 24 * c, 8 * c) - 24;
  }
  if (np > 8424) {
    const long long c = ceil_div(np + 24, 8424);
    return 8 * c * ceil_div(np + 24 * c, 8 * c) - 24;
  }
  return 8 * ceil_div(np + 24, 8) - 24;
}

long long tbs_from_grant(int n_prb,
                         int num_symbols,
                         int dmrs_re_per_prb,
                         int overhead,
                         int qm,
                         long long r_num,
                         long long r_den,
                         int num_layers,
                         bool legacy_divisor)
{
  const long long per_prb = 12LL * num_symbols - dmrs_re_per_prb - overhead;
  if (per_prb < 0) {
    return -1;
  }
  const long long n_re = std::min(156LL, per_prb) * n_prb;
  if (n_re == 0) {
    return 0;
  }
  return tbs_from_n_info(n_re * qm * num_layers * r_num, r_den, r_num, r_den, legacy_divisor);
}

} // namespace rantel::oracle
