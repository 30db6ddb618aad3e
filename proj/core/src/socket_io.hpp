#pragma once

#include <cerrno>
#include <cstdint>
#include <cstring>
#include <string>
#include <utility>

#include <netdb.h>
#include <sys/socket.h>
#include <sys/time.h>
#include <unistd.h>

#include "rescut/client.hpp"

namespace rescut::detail {

// RAII file descriptor.
class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) : fd_(fd) {}
  ~Socket() { close_now(); }

  Socket(Socket&& other) noexcept : fd_(std::exchange(other.fd_, -1)) {}
  Socket& operator=(Socket&& other) noexcept {
    if (this != &other) {
      close_now();
      fd_ = std::exchange(other.fd_, -1);
    }
    return *this;
  }
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;

  int fd() const { return fd_; }
  bool valid() const { return fd_ >= 0; }
  int release() { return std::exchange(fd_, -1); }
  void close_now() {
    if (fd_ >= 0) {
      ::close(fd_);
      fd_ = -1;
    }
  }

 private:
  int fd_ = -1;
};

inline std::pair<std::string, std::uint16_t> parse_address(const std::string& address) {
  const auto colon = address.rfind(':');
  if (colon == std::string::npos || colon == 0 || colon + 1 == address.size())
    throw ConnectError("address must be host:port, got '" + address + "'");
  const std::string host = address.substr(0, colon);
  unsigned long port = 0;
  try {
    port = std::stoul(address.substr(colon + 1));
  } catch (...) {
    throw ConnectError("bad port in address '" + address + "'");
  }
  if (port == 0 || port > 65535)
    throw ConnectError("port out of range in address '" + address + "'");
  return {host, static_cast<std::uint16_t>(port)};
}

inline void set_io_timeout(int fd, double seconds) {
  if (seconds <= 0) return;
  timeval tv{};
  tv.tv_sec = static_cast<time_t>(seconds);
  tv.tv_usec = static_cast<suseconds_t>((seconds - static_cast<double>(tv.tv_sec)) * 1e6);
  ::setsockopt(fd, SOL_SOCKET, SO_RCVTIMEO, &tv, sizeof tv);
  ::setsockopt(fd, SOL_SOCKET, SO_SNDTIMEO, &tv, sizeof tv);
}

inline Socket connect_to(const std::string& host, std::uint16_t port, double timeout_secs) {
  addrinfo hints{};
  hints.ai_family = AF_UNSPEC;
  hints.ai_socktype = SOCK_STREAM;
  addrinfo* list = nullptr;
  const std::string port_str = std::to_string(port);
  if (::getaddrinfo(host.c_str(), port_str.c_str(), &hints, &list) != 0 || list == nullptr)
    throw ConnectError("cannot resolve '" + host + "'");

  Socket sock;
  int last_errno = 0;
  for (addrinfo* ai = list; ai != nullptr; ai = ai->ai_next) {
    Socket candidate(::socket(ai->ai_family, ai->ai_socktype, ai->ai_protocol));
    if (!candidate.valid()) {
      last_errno = errno;
      continue;
    }
    set_io_timeout(candidate.fd(), timeout_secs);
    if (::connect(candidate.fd(), ai->ai_addr, ai->ai_addrlen) == 0) {
      sock = std::move(candidate);
      break;
    }
    last_errno = errno;
  }
  ::freeaddrinfo(list);
  if (!sock.valid())
    throw ConnectError("cannot connect to " + host + ":" + port_str + " (" +
                       std::strerror(last_errno) + ")");
  return sock;
}

inline void send_all(int fd, const std::string& data) {
  std::size_t sent = 0;
  while (sent < data.size()) {
    const ssize_t r = ::send(fd, data.data() + sent, data.size() - sent, MSG_NOSIGNAL);
    if (r < 0) {
      if (errno == EAGAIN || errno == EWOULDBLOCK)
        throw TimeoutError("send timed out");
      throw ConnectError(std::string("send failed: ") + std::strerror(errno));
    }
    sent += static_cast<std::size_t>(r);
  }
}

// Buffered '\n'-delimited reader that counts the bytes it consumes.
class LineReader {
 public:
  explicit LineReader(int fd) : fd_(fd) {}

  // Returns the next line without its terminator; a trailing '\r' is
  // stripped but still counted.
  std::string read_line() {
    for (;;) {
      const auto nl = buffer_.find('\n', scan_);
      if (nl != std::string::npos) {
        std::string line = buffer_.substr(0, nl);
        bytes_ += nl + 1;
        buffer_.erase(0, nl + 1);
        scan_ = 0;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        return line;
      }
      scan_ = buffer_.size();
      char chunk[65536];
      const ssize_t r = ::recv(fd_, chunk, sizeof chunk, 0);
      if (r > 0) {
        buffer_.append(chunk, static_cast<std::size_t>(r));
      } else if (r == 0) {
        throw ConnectError("connection closed mid-message");
      } else if (errno == EAGAIN || errno == EWOULDBLOCK) {
        throw TimeoutError("timed out waiting for data");
      } else {
        throw ConnectError(std::string("recv failed: ") + std::strerror(errno));
      }
    }
  }

  std::uint64_t bytes_consumed() const { return bytes_; }

 private:
  int fd_;
  std::string buffer_;
  std::size_t scan_ = 0;
  std::uint64_t bytes_ = 0;
};

}  // namespace rescut::detail
