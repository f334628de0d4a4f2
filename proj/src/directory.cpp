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

#include "rantel/directory.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "rantel/errors.hpp"

namespace rantel {

namespace {

using json = nlohmann::json;

void check_coordinates(double lat, double lon)
{
  if (!std::isfinite(lat) || !std::isfinite(lon) || lat < -90.0 || lat > 90.0 || lon < -180.0 ||
      lon > 180.0) {
    fail(errc::invalid_coordinates, "latitude/longitude out of range");
  }
}

} // namespace

double haversine_km(double lat1, double lon1, double lat2, double lon2)
{
  constexpr double earth_radius_km = 6371.0;
  constexpr double deg = M_PI / 180.0;
  const double dlat = (lat2 - lat1) * deg;
  const double dlon = (lon2 - lon1) * deg;
  const double a = std::sin(dlat / 2) * std::sin(dlat / 2) +
                   std::cos(lat1 * deg) * std::cos(lat2 * deg) * std::sin(dlon / 2) *
                       std::sin(dlon / 2);
  return 2.0 * earth_radius_km * std::asin(std::min(1.0, std::sqrt(a)));
}

directory_response directory_lookup(const directory_request& request,
                                    const std::vector<directory_entry>& registry)
{
  check_coordinates(request.latitude, request.longitude);

  std::vector<std::pair<double, std::size_t>> ranked;
  ranked.reserve(registry.size());
  for (std::size_t i = 0; i < registry.size(); ++i) {
    ranked.emplace_back(haversine_km(request.latitude, request.longitude, registry[i].latitude,
                                     registry[i].longitude),
                        i);
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });

  directory_response response;
  response.servers.reserve(ranked.size());
  for (const auto& [distance, index] : ranked) {
    response.servers.push_back(registry[index].endpoint);
  }
  return response;
}

std::vector<directory_entry> load_directory_registry(const std::string& json_text)
{
  const json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_array()) {
    fail(errc::malformed_document, "registry must be a JSON array");
  }
  std::vector<directory_entry> out;
  for (const json& item : doc) {
    directory_entry entry;
    entry.endpoint.host = item.at("host").get<std::string>();
    entry.endpoint.port = item.at("port").get<std::uint16_t>();
    entry.latitude = item.at("latitude").get<double>();
    entry.longitude = item.at("longitude").get<double>();
    check_coordinates(entry.latitude, entry.longitude);
    out.push_back(std::move(entry));
  }
  return out;
}

std::string directory_request_to_json(const directory_request& request)
{
  return json{{"latitude", request.latitude}, {"longitude", request.longitude}}.dump();
}

directory_request directory_request_from_json(const std::string& json_text)
{
  const json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    fail(errc::malformed_document, "request must be a JSON object");
  }
  directory_request request;
  try {
    request.latitude = doc.at("latitude").get<double>();
    request.longitude = doc.at("longitude").get<double>();
  } catch (const json::exception&) {
    fail(errc::malformed_document, "request needs numeric latitude/longitude");
  }
  check_coordinates(request.latitude, request.longitude);
  return request;
}

std::string directory_response_to_json(const directory_response& response)
{
  json servers = json::array();
  for (const server_endpoint& ep : response.servers) {
    servers.push_back({{"host", ep.host}, {"port", ep.port}});
  }
  return json{{"servers", servers}}.dump();
}

directory_response directory_response_from_json(const std::string& json_text)
{
  const json doc = json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() || !doc.contains("servers")) {
    fail(errc::malformed_document, "response must carry a servers array");
  }
  directory_response response;
  for (const json& item : doc["servers"]) {
    response.servers.push_back(
        {item.at("host").get<std::string>(), item.at("port").get<std::uint16_t>()});
  }
  return response;
}

} // namespace rantel
