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

#ifndef RANTEL_DIRECTORY_HPP
#define RANTEL_DIRECTORY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rantel {

struct directory_request {
  double latitude = 0.0;  // decimal degrees
  double longitude = 0.0;
};

struct server_endpoint {
  std::string host;
  std::uint16_t port = 0;

  friend bool operator==(const server_endpoint&, const server_endpoint&) = default;
};

struct directory_entry {
  server_endpoint endpoint;
  double latitude = 0.0;
  double longitude = 0.0;
};

struct directory_response {
  std::vector<server_endpoint> servers; // nearest first
};

/// Great-circle distance in kilometres.
double haversine_km(double lat1, double lon1, double lat2, double lon2);

/// Registry entries sorted by distance to the request point. Ties keep
/// registry order.
directory_response directory_lookup(const directory_request& request,
                                    const std::vector<directory_entry>& registry);

/// Registry file: JSON array of {host, port, latitude, longitude}.
std::vector<directory_entry> load_directory_registry(const std::string& json_text);

std::string directory_request_to_json(const directory_request& request);
directory_request directory_request_from_json(const std::string& json_text);
std::string directory_response_to_json(const directory_response& response);
directory_response directory_response_from_json(const std::string& json_text);

} // namespace rantel

#endif
