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

#ifndef RANTEL_TRACE_IO_HPP
#define RANTEL_TRACE_IO_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "rantel/gnb_sim.hpp"

namespace rantel {

/// Observer trace grammar (newline-delimited, '#'-prefixed header):
///   # rantel-dci-trace v1 run=<16 hex digits>
///   tti=<u64> dir=<dl|ul> env=<payload hex>:<crc 6 hex digits>
/// The payload hex spans ceil(56/8)*2 = 14 digits, MSB first.
void write_observer_trace(std::ostream& out, const std::string& run_id,
                          const std::vector<observer_record>& records);
std::vector<observer_record> read_observer_trace(std::istream& in, std::string& run_id);

/// Ground-truth log grammar:
///   # rantel-ground-truth v1 run=<16 hex digits>
///   tti=<u64> rnti=<hex> dir=<dl|ul> format=<s> riv=<u> t=<u> mcs=<u> ndi=<u>
///   rv=<u> harq=<u> dai=<u> tpc=<u> hfb=<u> ports=<u> srs=<u> dmrsid=<u>
///   agg=<u> prb=<u> tbs=<u> retx=<0|1>
void write_ground_truth(std::ostream& out, const std::string& run_id,
                        const std::vector<ground_truth_entry>& entries);
std::vector<ground_truth_entry> read_ground_truth(std::istream& in, std::string& run_id);

void write_observer_trace_file(const std::string& path, const std::string& run_id,
                               const std::vector<observer_record>& records);
std::vector<observer_record> read_observer_trace_file(const std::string& path,
                                                      std::string& run_id);
void write_ground_truth_file(const std::string& path, const std::string& run_id,
                             const std::vector<ground_truth_entry>& entries);
std::vector<ground_truth_entry> read_ground_truth_file(const std::string& path,
                                                       std::string& run_id);

} // namespace rantel

#endif
