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

#include "rantel/rtsp.hpp"

#include <algorithm>
#include <sstream>

namespace rantel {

namespace {

constexpr const char* rtsp_version = "RTSP/1.0";
// token list as the handshake advertises it
constexpr const char* public_methods = "DESCRIBE, SETUP, ANNOUNC, PLAY";

std::string trim(const std::string& s)
{
  const auto begin = s.find_first_not_of(" \t\r");
  const auto end = s.find_last_not_of(" \t\r");
  return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
}

std::optional<rtsp_method> method_from_token(const std::string& token)
{
  if (token == "OPTIONS" || token == "OPTION") {
    return rtsp_method::options;
  }
  if (token == "DESCRIBE") {
    return rtsp_method::describe;
  }
  if (token == "SETUP") {
    return rtsp_method::setup;
  }
  if (token == "ANNOUNCE" || token == "ANNOUNC") {
    return rtsp_method::announce;
  }
  if (token == "PLAY") {
    return rtsp_method::play;
  }
  return std::nullopt;
}

struct parsed_head {
  std::string start_line;
  std::map<std::string, std::string> headers;
  std::string body;
  int cseq = -1;
};

parsed_head parse_head(const std::string& text)
{
  parsed_head out;
  const auto head_end = text.find("\r\n\r\n");
  if (head_end == std::string::npos) {
    fail(errc::malformed_message, "missing header terminator");
  }
  out.body = text.substr(head_end + 4);

  std::istringstream head(text.substr(0, head_end));
  if (!std::getline(head, out.start_line)) {
    fail(errc::malformed_message, "empty message");
  }
  out.start_line = trim(out.start_line);

  std::string line;
  while (std::getline(head, line)) {
    line = trim(line);
    if (line.empty()) {
      continue;
    }
    const auto colon = line.find(':');
    if (colon == std::string::npos) {
      fail(errc::malformed_message, "header line without ':'");
    }
    out.headers[trim(line.substr(0, colon))] = trim(line.substr(colon + 1));
  }
  if (auto it = out.headers.find("CSeq"); it != out.headers.end()) {
    try {
      out.cseq = std::stoi(it->second);
    } catch (const std::exception&) {
      fail(errc::malformed_message, "CSeq is not a number");
    }
    out.headers.erase(it);
  }
  return out;
}

} // namespace

const char* rtsp_method_token(rtsp_method m)
{
  switch (m) {
    case rtsp_method::options: return "OPTIONS";
    case rtsp_method::describe: return "DESCRIBE";
    case rtsp_method::setup: return "SETUP";
    case rtsp_method::announce: return "ANNOUNCE";
    case rtsp_method::play: return "PLAY";
  }
  return "?";
}

const char* session_state_name(session_state s)
{
  switch (s) {
    case session_state::fresh: return "fresh";
    case session_state::described: return "described";
    case session_state::ready: return "ready";
    case session_state::announced: return "announced";
    case session_state::playing: return "playing";
  }
  return "?";
}

rtsp_request parse_rtsp_request(const std::string& text)
{
  parsed_head head = parse_head(text);

  std::istringstream start(head.start_line);
  std::string method_token;
  std::string uri;
  std::string version;
  if (!(start >> method_token >> uri >> version) || version.rfind("RTSP/", 0) != 0) {
    fail(errc::malformed_message, "bad request line");
  }
  const auto method = method_from_token(method_token);
  if (!method) {
    fail(errc::unsupported_method, "method '" + method_token + "'");
  }
  if (head.cseq < 0) {
    fail(errc::malformed_message, "missing CSeq");
  }

  rtsp_request request;
  request.method = *method;
  request.raw_method = method_token;
  request.uri = uri;
  request.cseq = head.cseq;
  request.headers = std::move(head.headers);
  request.body = std::move(head.body);
  return request;
}

std::string serialize_rtsp_request(const rtsp_request& request)
{
  std::ostringstream os;
  const std::string token =
      request.raw_method.empty() ? rtsp_method_token(request.method) : request.raw_method;
  os << token << " " << request.uri << " " << rtsp_version << "\r\n";
  os << "CSeq: " << request.cseq << "\r\n";
  for (const auto& [key, value] : request.headers) {
    os << key << ": " << value << "\r\n";
  }
  if (!request.body.empty()) {
    os << "Content-Length: " << request.body.size() << "\r\n";
  }
  os << "\r\n" << request.body;
  return os.str();
}

rtsp_response parse_rtsp_response(const std::string& text)
{
  parsed_head head = parse_head(text);

  std::istringstream start(head.start_line);
  std::string version;
  int status = 0;
  if (!(start >> version >> status) || version.rfind("RTSP/", 0) != 0) {
    fail(errc::malformed_message, "bad status line");
  }
  rtsp_response response;
  response.status = status;
  std::getline(start, response.reason);
  response.reason = trim(response.reason);
  response.cseq = head.cseq;
  response.headers = std::move(head.headers);
  response.body = std::move(head.body);
  return response;
}

std::string serialize_rtsp_response(const rtsp_response& response)
{
  std::ostringstream os;
  os << rtsp_version << " " << response.status << " " << response.reason << "\r\n";
  os << "CSeq: " << response.cseq << "\r\n";
  for (const auto& [key, value] : response.headers) {
    os << key << ": " << value << "\r\n";
  }
  if (!response.body.empty()) {
    os << "Content-Length: " << response.body.size() << "\r\n";
  }
  os << "\r\n" << response.body;
  return os.str();
}

rtsp_session::rtsp_session(session_role role, std::vector<std::string> catalog,
                           std::uint16_t port_base)
    : role_(role), catalog_(std::move(catalog)), next_port_(port_base)
{
}

rtsp_response rtsp_session::ok(int cseq) const
{
  rtsp_response response;
  response.status = 200;
  response.reason = "OK";
  response.cseq = cseq;
  return response;
}

rtsp_session::outcome rtsp_session::handle(const rtsp_request& request)
{
  outcome out;
  out.response = ok(request.cseq);

  switch (request.method) {
    case rtsp_method::options:
      out.response.headers["Public"] = public_methods;
      return out;

    case rtsp_method::describe: {
      std::ostringstream body;
      for (const std::string& stream : catalog_) {
        body << "stream: " << stream << "\n";
      }
      out.response.body = body.str();
      out.response.headers["Content-Type"] = "text/plain";
      if (state_ == session_state::fresh) {
        state_ = session_state::described;
      }
      return out;
    }

    case rtsp_method::setup: {
      if (state_ == session_state::playing) {
        out.response.status = 455;
        out.response.reason = "Method Not Valid in This State";
        out.error = errc::out_of_order_method;
        return out;
      }
      // stream name = last path segment of the uri
      const auto slash = request.uri.find_last_of('/');
      const std::string name =
          slash == std::string::npos ? request.uri : request.uri.substr(slash + 1);
      if (std::find(catalog_.begin(), catalog_.end(), name) == catalog_.end()) {
        out.response.status = 404;
        out.response.reason = "Stream Not Found";
        out.error = errc::unsupported_method;
        return out;
      }
      stream_binding binding;
      binding.name = name;
      binding.server_port = next_port_++;
      if (auto it = request.headers.find("Transport"); it != request.headers.end()) {
        const auto pos = it->second.find("client_port=");
        if (pos != std::string::npos) {
          binding.client_port =
              static_cast<std::uint16_t>(std::atoi(it->second.c_str() + pos + 12));
        }
      }
      streams_.push_back(binding);
      out.response.headers["Transport"] = "RTP/AVP;unicast;server_port=" +
                                          std::to_string(binding.server_port) +
                                          ";client_port=" + std::to_string(binding.client_port);
      out.response.headers["Session"] = "1";
      state_ = session_state::ready;
      return out;
    }

    case rtsp_method::announce:
      if (streams_.empty() || state_ == session_state::playing) {
        out.response.status = 455;
        out.response.reason = "Method Not Valid in This State";
        out.error = errc::out_of_order_method;
        return out;
      }
      state_ = session_state::announced;
      return out;

    case rtsp_method::play:
      if (state_ != session_state::announced) {
        out.response.status = 455;
        out.response.reason = "Method Not Valid in This State";
        out.error = errc::out_of_order_method;
        return out;
      }
      state_ = session_state::playing;
      out.session_activated = true;
      out.response.headers["Range"] = "npt=now-";
      return out;
  }

  out.response.status = 501;
  out.response.reason = "Not Implemented";
  out.error = errc::unsupported_method;
  return out;
}

} // namespace rantel
