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

#ifndef RANTEL_RTSP_HPP
#define RANTEL_RTSP_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rantel/errors.hpp"

namespace rantel {

enum class rtsp_method : std::uint8_t { options, describe, setup, announce, play };

const char* rtsp_method_token(rtsp_method m);

/// Request line + headers + optional body. The session layer keys on CSeq
/// echoing and the Transport client_port for stream setup.
struct rtsp_request {
  rtsp_method method = rtsp_method::options;
  std::string raw_method; // as received (e.g. "ANNOUNC")
  std::string uri;
  int cseq = 0;
  std::map<std::string, std::string> headers;
  std::string body;
};

struct rtsp_response {
  int status = 200;
  std::string reason = "OK";
  int cseq = 0;
  std::map<std::string, std::string> headers;
  std::string body;
};

/// Wire grammar: "<METHOD> <uri> RTSP/1.0\r\n" headers "\r\n" body.
/// "ANNOUNC" is accepted as an alias of ANNOUNCE; unknown methods raise
/// UnsupportedMethod, anything else unparsable raises MalformedMessage.
rtsp_request parse_rtsp_request(const std::string& text);
std::string serialize_rtsp_request(const rtsp_request& request);

rtsp_response parse_rtsp_response(const std::string& text);
std::string serialize_rtsp_response(const rtsp_response& response);

enum class session_role : std::uint8_t { client, telemetry_server };

enum class session_state : std::uint8_t { fresh, described, ready, announced, playing };

const char* session_state_name(session_state s);

struct stream_binding {
  std::string name;
  std::uint16_t server_port = 0;
  std::uint16_t client_port = 0;
};

/// Per-connection protocol state machine. Every (state, method) pair has a
/// defined outcome; protocol violations yield an error response plus the
/// matching error code, never an exception.
class rtsp_session {
public:
  rtsp_session(session_role role, std::vector<std::string> catalog,
               std::uint16_t port_base = 52000);

  struct outcome {
    rtsp_response response;
    std::optional<errc> error;      // unsupported_method / out_of_order_method
    bool session_activated = false; // true on the transition into playing
  };

  outcome handle(const rtsp_request& request);

  session_state state() const { return state_; }
  session_role role() const { return role_; }
  const std::vector<stream_binding>& streams() const { return streams_; }

private:
  rtsp_response ok(int cseq) const;

  session_role role_;
  std::vector<std::string> catalog_;
  std::uint16_t next_port_;
  session_state state_ = session_state::fresh;
  std::vector<stream_binding> streams_;
};

} // namespace rantel

#endif
