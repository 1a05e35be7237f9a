#pragma once

#include <string>
#include <sys/types.h>
#include <vector>

namespace titlegen {

// A child process run through /bin/sh -c with piped stdin/stdout. Used by
// the external parser and scorer adapters; not thread-safe on its own.
class ChildProcess {
 public:
  explicit ChildProcess(const std::string& command);
  ~ChildProcess();

  ChildProcess(const ChildProcess&) = delete;
  ChildProcess& operator=(const ChildProcess&) = delete;

  void write_line(const std::string& line);
  // False on end of stream.
  bool read_line(std::string& line);
  void close_stdin();
  // Waits for exit; returns the exit status (128 + signal if killed).
  int wait();

  const std::string& command() const { return command_; }

 private:
  std::string command_;
  pid_t pid_ = -1;
  int to_child_ = -1;
  int from_child_ = -1;
  std::string buffer_;
  bool eof_ = false;
  bool waited_ = false;
  int status_ = 0;
};

// Feeds every input line to a fresh child, collects its output lines and
// fails with ExternalError on a nonzero exit.
std::vector<std::string> run_line_filter(const std::string& command,
                                         const std::vector<std::string>& lines);

}  // namespace titlegen
