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

// Thin POSIX socket helpers shared by the wire-protocol sources. Internal.

#ifndef RANTEL_SRC_NET_UTIL_HPP
#define RANTEL_SRC_NET_UTIL_HPP

#include <cstdint>
#include <string>

namespace rantel::net {

/// RAII socket handle.
class socket_fd {
public:
  socket_fd() = default;
  explicit socket_fd(int fd) : fd_(fd) {}
  socket_fd(socket_fd&& other) noexcept : fd_(other.fd_) { other.fd_ = -1; }
  socket_fd& operator=(socket_fd&& other) noexcept;
  socket_fd(const socket_fd&) = delete;
  socket_fd& operator=(const socket_fd&) = delete;
  ~socket_fd();

  int get() const { return fd_; }
  bool valid() const { return fd_ >= 0; }
  int release();
  void reset(int fd = -1);

private:
  int fd_ = -1;
};

/// Listening TCP socket on 127.0.0.1; port 0 picks an ephemeral port.
socket_fd tcp_listen(std::uint16_t port, std::uint16_t& bound_port);

socket_fd tcp_connect(const std::string& host, std::uint16_t port);

/// Connected UDP socket (datagrams to one destination).
socket_fd udp_connect(const std::string& host, std::uint16_t port);

/// Bound UDP receive socket; port 0 picks an ephemeral port.
socket_fd udp_bind(std::uint16_t port, std::uint16_t& bound_port);

void set_nonblocking(int fd);

bool send_all(int fd, const void* data, std::size_t len);

} // namespace rantel::net

#endif
