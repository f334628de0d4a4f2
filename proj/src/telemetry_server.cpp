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

#include "rantel/telemetry_server.hpp"

#include <arpa/inet.h>
#include <netinet/in.h>
#include <poll.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cstring>
#include <map>

#include "net_util.hpp"

namespace rantel {

namespace {

// one buffered RTSP connection inside the event loop
struct connection {
  net::socket_fd fd;
  std::string peer;
  std::string buffer;
  rtsp_session session;
  session_role role = session_role::client;

  connection(net::socket_fd sock, std::string peer_addr, std::vector<std::string> catalog)
      : fd(std::move(sock)), peer(std::move(peer_addr)),
        session(session_role::client, std::move(catalog))
  {
  }
};

// extract one complete message (headers + Content-Length body) from buffer
bool take_message(std::string& buffer, std::string& message)
{
  const auto head_end = buffer.find("\r\n\r\n");
  if (head_end == std::string::npos) {
    return false;
  }
  std::size_t body_len = 0;
  const std::string head = buffer.substr(0, head_end);
  const auto cl = head.find("Content-Length:");
  if (cl != std::string::npos) {
    body_len = static_cast<std::size_t>(std::atol(head.c_str() + cl + 15));
  }
  const std::size_t total = head_end + 4 + body_len;
  if (buffer.size() < total) {
    return false;
  }
  message = buffer.substr(0, total);
  buffer.erase(0, total);
  return true;
}

} // namespace

rtsp_server::rtsp_server(std::uint16_t port, std::vector<std::string> catalog)
    : catalog_(std::move(catalog))
{
  net::socket_fd listener = net::tcp_listen(port, port_);
  listen_fd_ = listener.release();
  if (::pipe(wake_fd_) != 0) {
    fail(errc::invalid_value, "pipe() failed");
  }
}

rtsp_server::~rtsp_server()
{
  stop();
  if (listen_fd_ >= 0) {
    ::close(listen_fd_);
  }
  for (int fd : wake_fd_) {
    if (fd >= 0) {
      ::close(fd);
    }
  }
}

void rtsp_server::set_play_callback(play_callback cb)
{
  std::lock_guard lock(cb_mutex_);
  on_play_ = std::move(cb);
}

void rtsp_server::start()
{
  if (running_.exchange(true)) {
    return;
  }
  thread_ = std::thread([this] { loop(); });
}

void rtsp_server::stop()
{
  if (!running_.exchange(false)) {
    return;
  }
  const char byte = 'x';
  [[maybe_unused]] ssize_t n = ::write(wake_fd_[1], &byte, 1);
  if (thread_.joinable()) {
    thread_.join();
  }
}

void rtsp_server::loop()
{
  std::map<int, std::unique_ptr<connection>> connections;

  while (running_.load()) {
    std::vector<pollfd> fds;
    fds.push_back({listen_fd_, POLLIN, 0});
    fds.push_back({wake_fd_[0], POLLIN, 0});
    for (const auto& [fd, conn] : connections) {
      fds.push_back({fd, POLLIN, 0});
    }

    if (::poll(fds.data(), fds.size(), 200) < 0) {
      if (errno == EINTR) {
        continue;
      }
      break;
    }

    if (fds[1].revents & POLLIN) {
      char drain[16];
      [[maybe_unused]] ssize_t n = ::read(wake_fd_[0], drain, sizeof(drain));
    }

    if (fds[0].revents & POLLIN) {
      sockaddr_in peer{};
      socklen_t len = sizeof(peer);
      const int client = ::accept(listen_fd_, reinterpret_cast<sockaddr*>(&peer), &len);
      if (client >= 0) {
        char addr[INET_ADDRSTRLEN] = {0};
        ::inet_ntop(AF_INET, &peer.sin_addr, addr, sizeof(addr));
        connections.emplace(client, std::make_unique<connection>(net::socket_fd(client), addr,
                                                                 catalog_));
      }
    }

    for (std::size_t i = 2; i < fds.size(); ++i) {
      if (!(fds[i].revents & (POLLIN | POLLHUP | POLLERR))) {
        continue;
      }
      auto it = connections.find(fds[i].fd);
      if (it == connections.end()) {
        continue;
      }
      connection& conn = *it->second;

      char chunk[4096];
      const ssize_t n = ::recv(conn.fd.get(), chunk, sizeof(chunk), 0);
      if (n <= 0) {
        connections.erase(it);
        continue;
      }
      conn.buffer.append(chunk, static_cast<std::size_t>(n));

      std::string message;
      bool closed = false;
      while (!closed && take_message(conn.buffer, message)) {
        rtsp_response response;
        bool activated = false;
        try {
          const rtsp_request request = parse_rtsp_request(message);
          if (request.uri.find("/telemetry") != std::string::npos) {
            conn.role = session_role::telemetry_server;
          }
          const rtsp_session::outcome out = conn.session.handle(request);
          response = out.response;
          activated = out.session_activated;
        } catch (const error& e) {
          response.status = e.code() == errc::unsupported_method ? 501 : 400;
          response.reason =
              e.code() == errc::unsupported_method ? "Not Implemented" : "Bad Request";
          response.cseq = 0;
        }
        const std::string text = serialize_rtsp_response(response);
        if (!net::send_all(conn.fd.get(), text.data(), text.size())) {
          connections.erase(it);
          closed = true;
          break;
        }
        if (activated) {
          activated_.fetch_add(1);
          play_callback cb;
          {
            std::lock_guard lock(cb_mutex_);
            cb = on_play_;
          }
          if (cb) {
            cb(session_info{conn.role, conn.peer, conn.session.streams()});
          }
        }
      }
    }
  }
}

rtsp_client::rtsp_client(const std::string& host, std::uint16_t port)
{
  fd_ = net::tcp_connect(host, port).release();
  base_uri_ = "rtsp://" + host + ":" + std::to_string(port);
}

rtsp_client::~rtsp_client()
{
  if (fd_ >= 0) {
    ::close(fd_);
  }
}

rtsp_response rtsp_client::request(rtsp_request req)
{
  req.cseq = next_cseq_++;
  const std::string text = serialize_rtsp_request(req);
  if (!net::send_all(fd_, text.data(), text.size())) {
    fail(errc::subscriber_gone, "connection lost while sending");
  }

  std::string message;
  while (!take_message(buffer_, message)) {
    char chunk[4096];
    const ssize_t n = ::recv(fd_, chunk, sizeof(chunk), 0);
    if (n <= 0) {
      fail(errc::subscriber_gone, "connection lost while waiting for a response");
    }
    buffer_.append(chunk, static_cast<std::size_t>(n));
  }
  rtsp_response response = parse_rtsp_response(message);
  if (response.cseq != req.cseq) {
    fail(errc::malformed_message, "response CSeq does not echo the request");
  }
  return response;
}

std::vector<stream_binding> rtsp_client::run_handshake(
    session_role role, const std::vector<std::pair<std::string, std::uint16_t>>& streams)
{
  const std::string base =
      base_uri_ + (role == session_role::telemetry_server ? "/telemetry" : "/game");

  rtsp_request options;
  options.method = rtsp_method::options;
  options.uri = base;
  if (request(options).status != 200) {
    fail(errc::malformed_message, "OPTIONS rejected");
  }

  rtsp_request describe;
  describe.method = rtsp_method::describe;
  describe.uri = base;
  if (request(describe).status != 200) {
    fail(errc::malformed_message, "DESCRIBE rejected");
  }

  std::vector<stream_binding> bindings;
  for (const auto& [name, client_port] : streams) {
    rtsp_request setup;
    setup.method = rtsp_method::setup;
    setup.uri = base + "/" + name;
    setup.headers["Transport"] =
        "RTP/AVP;unicast;client_port=" + std::to_string(client_port);
    const rtsp_response response = request(setup);
    if (response.status != 200) {
      fail(errc::malformed_message, "SETUP rejected for stream " + name);
    }
    stream_binding binding;
    binding.name = name;
    binding.client_port = client_port;
    if (auto it = response.headers.find("Transport"); it != response.headers.end()) {
      const auto pos = it->second.find("server_port=");
      if (pos != std::string::npos) {
        binding.server_port =
            static_cast<std::uint16_t>(std::atoi(it->second.c_str() + pos + 12));
      }
    }
    bindings.push_back(binding);
  }

  rtsp_request announce;
  announce.method = rtsp_method::announce;
  announce.uri = base;
  if (request(announce).status != 200) {
    fail(errc::malformed_message, "ANNOUNCE rejected");
  }

  rtsp_request play;
  play.method = rtsp_method::play;
  play.uri = base;
  if (request(play).status != 200) {
    fail(errc::malformed_message, "PLAY rejected");
  }
  return bindings;
}

sample_streamer::sample_streamer(sample_source source, config cfg)
    : source_(std::move(source)), cfg_(cfg)
{
}

sample_streamer::~sample_streamer() { stop(); }

std::size_t sample_streamer::add_subscriber(send_fn sender)
{
  std::lock_guard lock(mutex_);
  const std::size_t id = next_id_++;
  subscribers_.push_back({id, std::move(sender), 0});
  return id;
}

void sample_streamer::remove_subscriber(std::size_t id)
{
  std::lock_guard lock(mutex_);
  std::erase_if(subscribers_, [id](const subscriber& s) { return s.id == id; });
}

std::size_t sample_streamer::subscriber_count() const
{
  std::lock_guard lock(mutex_);
  return subscribers_.size();
}

void sample_streamer::set_gone_callback(gone_callback cb)
{
  std::lock_guard lock(mutex_);
  on_gone_ = std::move(cb);
}

void sample_streamer::start()
{
  if (running_.exchange(true)) {
    return;
  }
  thread_ = std::thread([this] { loop(); });
}

void sample_streamer::stop()
{
  if (!running_.exchange(false)) {
    return;
  }
  if (thread_.joinable()) {
    thread_.join();
  }
}

void sample_streamer::loop()
{
  auto deadline = std::chrono::steady_clock::now();
  while (running_.load()) {
    deadline += cfg_.cadence;
    std::this_thread::sleep_until(deadline);

    const telemetry_sample sample = source_();
    const auto bytes = encode_sample(sample);

    std::vector<std::pair<std::size_t, gone_callback>> gone;
    {
      std::lock_guard lock(mutex_);
      for (auto it = subscribers_.begin(); it != subscribers_.end();) {
        if (it->send(bytes)) {
          it->consecutive_failures = 0;
          ++it;
        } else if (++it->consecutive_failures > cfg_.retry_budget) {
          gone.emplace_back(it->id, on_gone_);
          it = subscribers_.erase(it); // stream torn down
        } else {
          ++it;
        }
      }
    }
    for (const auto& [id, cb] : gone) {
      if (cb) {
        cb(id);
      }
    }
    ticks_.fetch_add(1);
  }
}

sample_streamer::send_fn make_udp_sender(const std::string& host, std::uint16_t port)
{
  auto fd = std::make_shared<net::socket_fd>(net::udp_connect(host, port));
  return [fd](std::span<const std::uint8_t> bytes) {
    return ::send(fd->get(), bytes.data(), bytes.size(), MSG_NOSIGNAL) ==
           static_cast<ssize_t>(bytes.size());
  };
}

} // namespace rantel
