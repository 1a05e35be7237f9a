#include "titlegen/subprocess.hpp"

#include <cerrno>
#include <csignal>
#include <cstring>
#include <exception>
#include <thread>

#include <fcntl.h>
#include <sys/wait.h>
#include <unistd.h>

#include "titlegen/error.hpp"

namespace titlegen {
namespace {

void write_all(int fd, const char* data, std::size_t size) {
  while (size > 0) {
    const ssize_t n = ::write(fd, data, size);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ExternalError(std::string("write to child failed: ") + std::strerror(errno));
    }
    data += n;
    size -= static_cast<std::size_t>(n);
  }
}

}  // namespace

ChildProcess::ChildProcess(const std::string& command) : command_(command) {
  // A child that exits early must not kill us with SIGPIPE.
  std::signal(SIGPIPE, SIG_IGN);

  int in_pipe[2];
  int out_pipe[2];
  if (::pipe2(in_pipe, O_CLOEXEC) != 0) throw ExternalError("pipe failed");
  if (::pipe2(out_pipe, O_CLOEXEC) != 0) {
    ::close(in_pipe[0]);
    ::close(in_pipe[1]);
    throw ExternalError("pipe failed");
  }

  pid_ = ::fork();
  if (pid_ < 0) {
    for (int fd : {in_pipe[0], in_pipe[1], out_pipe[0], out_pipe[1]}) ::close(fd);
    throw ExternalError("fork failed for '" + command + "'");
  }
  if (pid_ == 0) {
    ::dup2(in_pipe[0], STDIN_FILENO);
    ::dup2(out_pipe[1], STDOUT_FILENO);
    ::execl("/bin/sh", "sh", "-c", command.c_str(), static_cast<char*>(nullptr));
    ::_exit(127);
  }
  ::close(in_pipe[0]);
  ::close(out_pipe[1]);
  to_child_ = in_pipe[1];
  from_child_ = out_pipe[0];
}

ChildProcess::~ChildProcess() {
  close_stdin();
  if (from_child_ >= 0) ::close(from_child_);
  if (!waited_ && pid_ > 0) {
    ::kill(pid_, SIGTERM);
    ::waitpid(pid_, nullptr, 0);
  }
}

void ChildProcess::write_line(const std::string& line) {
  if (to_child_ < 0) throw ExternalError("stdin of '" + command_ + "' is closed");
  write_all(to_child_, line.data(), line.size());
  write_all(to_child_, "\n", 1);
}

bool ChildProcess::read_line(std::string& line) {
  for (;;) {
    const auto nl = buffer_.find('\n');
    if (nl != std::string::npos) {
      line = buffer_.substr(0, nl);
      buffer_.erase(0, nl + 1);
      if (!line.empty() && line.back() == '\r') line.pop_back();
      return true;
    }
    if (eof_) {
      if (buffer_.empty()) return false;
      line = std::move(buffer_);
      buffer_.clear();
      return true;
    }
    char chunk[4096];
    const ssize_t n = ::read(from_child_, chunk, sizeof chunk);
    if (n < 0) {
      if (errno == EINTR) continue;
      throw ExternalError(std::string("read from child failed: ") + std::strerror(errno));
    }
    if (n == 0) {
      eof_ = true;
    } else {
      buffer_.append(chunk, static_cast<std::size_t>(n));
    }
  }
}

void ChildProcess::close_stdin() {
  if (to_child_ >= 0) {
    ::close(to_child_);
    to_child_ = -1;
  }
}

int ChildProcess::wait() {
  if (waited_) return status_;
  close_stdin();
  int raw = 0;
  while (::waitpid(pid_, &raw, 0) < 0) {
    if (errno != EINTR) throw ExternalError("waitpid failed");
  }
  waited_ = true;
  if (WIFEXITED(raw)) {
    status_ = WEXITSTATUS(raw);
  } else if (WIFSIGNALED(raw)) {
    status_ = 128 + WTERMSIG(raw);
  }
  return status_;
}

std::vector<std::string> run_line_filter(const std::string& command,
                                         const std::vector<std::string>& lines) {
  ChildProcess child(command);
  std::thread writer([&] {
    // A write fails only when the child stopped reading; its exit status
    // and output decide the outcome, and callers validate the line count.
    try {
      for (const auto& l : lines) child.write_line(l);
    } catch (const ExternalError&) {
    }
    child.close_stdin();
  });

  std::vector<std::string> out;
  std::string line;
  try {
    while (child.read_line(line)) out.push_back(line);
  } catch (...) {
    writer.join();
    throw;
  }
  writer.join();
  const int status = child.wait();
  if (status != 0) {
    throw ExternalError("command '" + command + "' exited with status " +
                        std::to_string(status));
  }
  return out;
}

}  // namespace titlegen
