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

#include "net_util.hpp"

#include <arpa/inet.h>
#include <fcntl.h>
#include <netinet/in.h>
#include <sys/socket.h>
#include <unistd.h>

#include <cerrno>
#include <cstring>

#include "rantel/errors.hpp"

namespace rantel::net {

socket_fd& socket_fd::operator=(socket_fd&& other) noexcept
{
  if (this != &other) {
    reset(other.fd_);
    other.fd_ = -1;
  }
  return *this;
}

socket_fd::~socket_fd() { reset(); }

int socket_fd::release()
{
  const int fd = fd_;
  fd_ = -1;
  return fd;
}

void socket_fd::reset(int fd)
{
  if (fd_ >= 0) {
    ::close(fd_);
  }
  fd_ = fd;
}

namespace {

sockaddr_in make_addr(const std::string& host, std::uint16_t port)
{
  sockaddr_in addr{};
  addr.sin_family = AF_INET;
  addr.sin_port = htons(port);
  if (::inet_pton(AF_INET, host.c_str(), &addr.sin_addr) != 1) {
    fail(errc::invalid_value, "not an IPv4 address: " + host);
  }
  return addr;
}

std::uint16_t local_port(int fd)
{
  sockaddr_in addr{};
  socklen_t len = sizeof(addr);
  if (::getsockname(fd, reinterpret_cast<sockaddr*>(&addr), &len) != 0) {
    fail(errc::invalid_value, "getsockname failed");
  }
  return ntohs(addr.sin_port);
}

} // namespace

socket_fd tcp_listen(std::uint16_t port, std::uint16_t& bound_port)
{
  socket_fd fd(::socket(AF_INET, SOCK_STREAM, 0));
  if (!fd.valid()) {
    fail(errc::invalid_value, "socket() failed");
  }
  const int one = 1;
  ::setsockopt(fd.get(), SOL_SOCKET, SO_REUSEADDR, &one, sizeof(one));
  sockaddr_in addr = make_addr("127.0.0.1", port);
  if (::bind(fd.get(), reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0 ||
      ::listen(fd.get(), 16) != 0) {
    fail(errc::invalid_value, std::string("bind/listen failed: ") + std::strerror(errno));
  }
  bound_port = local_port(fd.get());
  return fd;
}

socket_fd tcp_connect(const std::string& host, std::uint16_t port)
{
  socket_fd fd(::socket(AF_INET, SOCK_STREAM, 0));
  if (!fd.valid()) {
    fail(errc::invalid_value, "socket() failed");
  }
  sockaddr_in addr = make_addr(host, port);
  if (::connect(fd.get(), reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
    fail(errc::invalid_value, std::string("connect failed: ") + std::strerror(errno));
  }
  return fd;
}

socket_fd udp_connect(const std::string& host, std::uint16_t port)
{
  socket_fd fd(::socket(AF_INET, SOCK_DGRAM, 0));
  if (!fd.valid()) {
    fail(errc::invalid_value, "socket() failed");
  }
  sockaddr_in addr = make_addr(host, port);
  if (::connect(fd.get(), reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
    fail(errc::invalid_value, std::string("udp connect failed: ") + std::strerror(errno));
  }
  return fd;
}

socket_fd udp_bind(std::uint16_t port, std::uint16_t& bound_port)
{
  socket_fd fd(::socket(AF_INET, SOCK_DGRAM, 0));
  if (!fd.valid()) {
    fail(errc::invalid_value, "socket() failed");
  }
  sockaddr_in addr = make_addr("127.0.0.1", port);
  if (::bind(fd.get(), reinterpret_cast<sockaddr*>(&addr), sizeof(addr)) != 0) {
    fail(errc::invalid_value, std::string("udp bind failed: ") + std::strerror(errno));
  }
  bound_port = local_port(fd.get());
  return fd;
}

void set_nonblocking(int fd)
{
  const int flags = ::fcntl(fd, F_GETFL, 0);
  ::fcntl(fd, F_SETFL, flags | O_NONBLOCK);
}

bool send_all(int fd, const void* data, std::size_t len)
{
  const char* p = static_cast<const char*>(data);
  std::size_t sent = 0;
  while (sent < len) {
    const ssize_t n = ::send(fd, p + sent, len - sent, MSG_NOSIGNAL);
    if (n <= 0) {
      if (n < 0 && (errno == EINTR || errno == EAGAIN || errno == EWOULDBLOCK)) {
        continue;
      }
      return false;
    }
    sent += static_cast<std::size_t>(n);
  }
  return true;
}

} // namespace rantel::net
