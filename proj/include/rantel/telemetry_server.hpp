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

#ifndef RANTEL_TELEMETRY_SERVER_HPP
#define RANTEL_TELEMETRY_SERVER_HPP

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <vector>

#include "rantel/capacity_estimator.hpp"
#include "rantel/rtsp.hpp"
#include "rantel/sample_codec.hpp"

namespace rantel {

/// Event-driven RTSP endpoint: one poll loop, any number of concurrent
/// sessions, so a telemetry-side handshake may interleave with a client
/// handshake mid-flight.
class rtsp_server {
public:
  struct session_info {
    session_role role = session_role::client;
    std::string peer_address;
    std::vector<stream_binding> streams;
  };

  using play_callback = std::function<void(const session_info&)>;

  rtsp_server(std::uint16_t port, std::vector<std::string> catalog);
  ~rtsp_server();

  rtsp_server(const rtsp_server&) = delete;
  rtsp_server& operator=(const rtsp_server&) = delete;

  void set_play_callback(play_callback cb);
  void start();
  void stop();

  std::uint16_t port() const { return port_; }
  int sessions_activated() const { return activated_.load(); }

private:
  void loop();

  std::vector<std::string> catalog_;
  std::uint16_t port_ = 0;
  int listen_fd_ = -1;
  int wake_fd_[2] = {-1, -1};
  std::thread thread_;
  std::atomic<bool> running_{false};
  std::atomic<int> activated_{0};
  play_callback on_play_;
  std::mutex cb_mutex_;
};

/// Blocking RTSP client used by the command-line tools and tests. Requests
/// may be issued one at a time; interleaving across instances is up to the
/// caller.
class rtsp_client {
public:
  rtsp_client(const std::string& host, std::uint16_t port);
  ~rtsp_client();

  rtsp_client(const rtsp_client&) = delete;
  rtsp_client& operator=(const rtsp_client&) = delete;

  rtsp_response request(rtsp_request req);

  /// The five-message establishment flow; returns the negotiated bindings.
  std::vector<stream_binding> run_handshake(
      session_role role, const std::vector<std::pair<std::string, std::uint16_t>>& streams);

private:
  int fd_ = -1;
  int next_cseq_ = 1;
  std::string base_uri_;
  std::string buffer_;
};

/// Paced datagram fan-out for one telemetry stream: every cadence interval
/// the source is sampled once and the encoded bytes go to every subscriber.
/// A subscriber whose sends keep failing past the retry budget is torn down.
class sample_streamer {
public:
  using sample_source = std::function<telemetry_sample()>;
  using send_fn = std::function<bool(std::span<const std::uint8_t>)>;
  using gone_callback = std::function<void(std::size_t subscriber_id)>;

  struct config {
    std::chrono::microseconds cadence{500}; // one TTI at 30 kHz spacing
    int retry_budget = 3;
  };

  sample_streamer(sample_source source, config cfg = {});
  ~sample_streamer();

  sample_streamer(const sample_streamer&) = delete;
  sample_streamer& operator=(const sample_streamer&) = delete;

  std::size_t add_subscriber(send_fn sender);
  void remove_subscriber(std::size_t id);
  std::size_t subscriber_count() const;
  void set_gone_callback(gone_callback cb);

  void start();
  void stop();

  std::uint64_t ticks_sent() const { return ticks_.load(); }

private:
  void loop();

  struct subscriber {
    std::size_t id;
    send_fn send;
    int consecutive_failures = 0;
  };

  sample_source source_;
  config cfg_;
  mutable std::mutex mutex_;
  std::vector<subscriber> subscribers_;
  std::size_t next_id_ = 0;
  gone_callback on_gone_;
  std::thread thread_;
  std::atomic<bool> running_{false};
  std::atomic<std::uint64_t> ticks_{0};
};

/// send_fn over a connected UDP socket.
sample_streamer::send_fn make_udp_sender(const std::string& host, std::uint16_t port);

} // namespace rantel

#endif
