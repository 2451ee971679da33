/**
 * @file cas_adapter.hpp
 * @brief Bridge to an external computer algebra system.
 *
 * Wire protocol (UTF-8, one exchange per process):
 *   stdin   {"n": <n>}\n
 *   stdout  {"h_k5": <int>, "type": [<int>, <int>], "rank_ambiguous": <int>}\n
 * The command runs under /bin/sh -c in its own process group, which is killed on timeout.
 * POSIX only.
 */
#pragma once

#include <fcntl.h>
#include <poll.h>
#include <pthread.h>
#include <signal.h>
#include <sys/types.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <string>
#include <thread>

#include <nlohmann/json.hpp>

#include "quintic/errors.hpp"
#include "quintic/fixtures.hpp"

namespace quintic {

inline constexpr std::chrono::milliseconds kDefaultCasTimeout{600'000};

namespace detail {

class Fd {
 public:
  explicit Fd(int fd = -1) : fd_(fd) {}
  Fd(const Fd&) = delete;
  Fd& operator=(const Fd&) = delete;
  ~Fd() { reset(); }
  int get() const { return fd_; }
  void reset() {
    if (fd_ >= 0) ::close(fd_);
    fd_ = -1;
  }

 private:
  int fd_;
};

inline std::string errno_text(const char* what) { return std::string(what) + ": " + std::strerror(errno); }

/// write(2) with SIGPIPE blocked for this thread, so a dead reader surfaces as EPIPE.
inline bool write_all_nosigpipe(int fd, const std::string& data) {
  sigset_t pipe_set, old;
  sigemptyset(&pipe_set);
  sigaddset(&pipe_set, SIGPIPE);
  pthread_sigmask(SIG_BLOCK, &pipe_set, &old);
  std::size_t done = 0;
  bool ok = true;
  while (done < data.size()) {
    const ssize_t w = ::write(fd, data.data() + done, data.size() - done);
    if (w < 0) {
      if (errno == EINTR) continue;
      ok = false;
      break;
    }
    done += static_cast<std::size_t>(w);
  }
  if (!ok && errno == EPIPE) {
    const timespec zero{0, 0};
    sigtimedwait(&pipe_set, nullptr, &zero);
  }
  pthread_sigmask(SIG_SETMASK, &old, nullptr);
  return ok;
}

}  // namespace detail

/// Runs `command` for radicand n and returns the validated answer.
inline FixtureEntry cas_adapter_check(std::uint64_t n, const std::string& command,
                                      std::chrono::milliseconds timeout = kDefaultCasTimeout) {
  using clock = std::chrono::steady_clock;
  int in_pipe[2], out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) throw CasError(detail::errno_text("pipe"));
  detail::Fd child_in(in_pipe[0]), to_child(in_pipe[1]);
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) throw CasError(detail::errno_text("pipe"));
  detail::Fd from_child(out_pipe[0]), child_out(out_pipe[1]);

  const pid_t pid = ::fork();
  if (pid < 0) throw CasError(detail::errno_text("fork"));
  if (pid == 0) {
    ::setpgid(0, 0);
    ::dup2(child_in.get(), STDIN_FILENO);
    ::dup2(child_out.get(), STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::setpgid(pid, pid);
  child_in.reset();
  child_out.reset();

  const auto deadline = clock::now() + timeout;
  auto remaining_ms = [&] {
    const auto left = std::chrono::duration_cast<std::chrono::milliseconds>(deadline - clock::now()).count();
    return left > 0 ? static_cast<int>(std::min<long long>(left, 1'000'000'000)) : 0;
  };
  auto kill_and_reap = [&] {
    ::kill(-pid, SIGKILL);
    ::kill(pid, SIGKILL);
    int st;
    while (::waitpid(pid, &st, 0) < 0 && errno == EINTR) {
    }
  };

  const std::string request = nlohmann::json{{"n", n}}.dump() + "\n";
  detail::write_all_nosigpipe(to_child.get(), request);  // a child that ignores stdin is fine
  to_child.reset();

  std::string line;
  bool have_line = false;
  bool timed_out = false;
  char buf[4096];
  while (!have_line) {
    pollfd pfd{from_child.get(), POLLIN, 0};
    const int r = ::poll(&pfd, 1, remaining_ms());
    if (r < 0) {
      if (errno == EINTR) continue;
      kill_and_reap();
      throw CasError(detail::errno_text("poll"));
    }
    if (r == 0) {
      timed_out = true;
      break;
    }
    const ssize_t got = ::read(from_child.get(), buf, sizeof buf);
    if (got < 0) {
      if (errno == EINTR) continue;
      kill_and_reap();
      throw CasError(detail::errno_text("read"));
    }
    if (got == 0) break;
    line.append(buf, static_cast<std::size_t>(got));
    if (const auto nl = line.find('\n'); nl != std::string::npos) {
      line.resize(nl);
      have_line = true;
    }
  }
  from_child.reset();

  if (timed_out) {
    kill_and_reap();
    throw CasTimeout(n, "CAS adapter timed out after " + std::to_string(timeout.count()) + " ms for n = " +
                            std::to_string(n));
  }

  int status = 0;
  for (;;) {
    const pid_t w = ::waitpid(pid, &status, WNOHANG);
    if (w == pid) break;
    if (w < 0 && errno != EINTR) throw CasError(detail::errno_text("waitpid"));
    if (remaining_ms() == 0) {
      kill_and_reap();
      throw CasTimeout(n, "CAS adapter did not exit in time for n = " + std::to_string(n));
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  if (!WIFEXITED(status) || WEXITSTATUS(status) != 0) {
    throw CasError("CAS adapter failed for n = " + std::to_string(n) + " (" +
                   (WIFEXITED(status) ? "exit status " + std::to_string(WEXITSTATUS(status))
                                      : "signal " + std::to_string(WTERMSIG(status))) +
                   ")");
  }
  if (!have_line && line.empty()) throw CasProtocolError("CAS adapter gave no response for n = " + std::to_string(n));

  try {
    auto entry = fixture_from_json(nlohmann::json::parse(line), false);
    entry.n = n;
    return entry;
  } catch (const nlohmann::json::parse_error& e) {
    throw CasProtocolError("CAS adapter response is not JSON: " + std::string(e.what()));
  } catch (const FixtureError& e) {
    throw CasProtocolError("CAS adapter response has the wrong shape: " + std::string(e.what()));
  }
}

}  // namespace quintic
