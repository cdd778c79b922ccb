// Copyright 2026 The SwarmAttack Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SWARMATTACK_SUBPROCESS_HPP_
#define SWARMATTACK_SUBPROCESS_HPP_

#include <poll.h>
#include <signal.h>
#include <sys/socket.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <optional>
#include <string>
#include <string_view>

#include "swarmattack/errors.hpp"

namespace swarmattack {

/// A `/bin/sh -c` child whose stdin and stdout are one end of a Unix socket
/// pair, spoken to one line at a time. Writes use MSG_NOSIGNAL so a dead
/// child surfaces as an error rather than SIGPIPE. stderr is inherited.
class ChildProcess {
 public:
  explicit ChildProcess(const std::string& command) {
    int fds[2];
    if (::socketpair(AF_UNIX, SOCK_STREAM | SOCK_CLOEXEC, 0, fds) != 0) {
      throw ConnectFailed("socketpair: " + std::string(std::strerror(errno)));
    }
    const pid_t pid = ::fork();
    if (pid < 0) {
      ::close(fds[0]);
      ::close(fds[1]);
      throw ConnectFailed("fork: " + std::string(std::strerror(errno)));
    }
    if (pid == 0) {
      // Own process group, so the whole shell pipeline can be killed.
      ::setpgid(0, 0);
      ::dup2(fds[1], STDIN_FILENO);
      ::dup2(fds[1], STDOUT_FILENO);
      ::execl("/bin/sh", "sh", "-c", command.c_str(),
              static_cast<char*>(nullptr));
      ::_exit(127);
    }
    ::setpgid(pid, pid);
    ::close(fds[1]);
    fd_ = fds[0];
    pid_ = pid;
  }

  ChildProcess(const ChildProcess&) = delete;
  ChildProcess& operator=(const ChildProcess&) = delete;

  ~ChildProcess() {
    if (fd_ >= 0) {
      ::shutdown(fd_, SHUT_WR);
      ::close(fd_);
    }
    if (pid_ > 0) {
      // Give the child a moment to exit on EOF before forcing it.
      for (int i = 0; i < 50; ++i) {
        if (::waitpid(pid_, nullptr, WNOHANG) == pid_) return;
        ::usleep(2000);
      }
      ::kill(-pid_, SIGKILL);
      ::waitpid(pid_, nullptr, 0);
    }
  }

  void write_line(std::string_view line) {
    std::string buf(line);
    buf.push_back('\n');
    std::size_t off = 0;
    while (off < buf.size()) {
      const ssize_t n =
          ::send(fd_, buf.data() + off, buf.size() - off, MSG_NOSIGNAL);
      if (n < 0) {
        if (errno == EINTR) continue;
        throw ConnectFailed("write to child failed: " +
                            std::string(std::strerror(errno)));
      }
      off += static_cast<std::size_t>(n);
    }
  }

  /// Next line without its newline; nullopt on EOF. Throws Timeout.
  std::optional<std::string> read_line(std::chrono::milliseconds timeout) {
    const auto deadline = std::chrono::steady_clock::now() + timeout;
    for (;;) {
      if (const std::size_t nl = pending_.find('\n'); nl != std::string::npos) {
        std::string line = pending_.substr(0, nl);
        pending_.erase(0, nl + 1);
        return line;
      }
      if (eof_) {
        if (pending_.empty()) return std::nullopt;
        std::string line;
        line.swap(pending_);
        return line;
      }
      const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(
          deadline - std::chrono::steady_clock::now());
      if (left.count() <= 0) throw Timeout("no reply from child process");
      pollfd pfd{fd_, POLLIN, 0};
      const int rc = ::poll(&pfd, 1, static_cast<int>(left.count()));
      if (rc < 0) {
        if (errno == EINTR) continue;
        throw ProtocolError("poll failed: " +
                            std::string(std::strerror(errno)));
      }
      if (rc == 0) throw Timeout("no reply from child process");
      char chunk[4096];
      const ssize_t n = ::recv(fd_, chunk, sizeof chunk, 0);
      if (n < 0) {
        if (errno == EINTR) continue;
        eof_ = true;
      } else if (n == 0) {
        eof_ = true;
      } else {
        pending_.append(chunk, static_cast<std::size_t>(n));
      }
    }
  }

 private:
  int fd_ = -1;
  pid_t pid_ = -1;
  std::string pending_;
  bool eof_ = false;
};

}  // namespace swarmattack

#endif  // SWARMATTACK_SUBPROCESS_HPP_
