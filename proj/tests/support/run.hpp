#pragma once

// Runs the CLI binary through the shell, capturing stdout, stderr and the
// exit status.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iterator>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

namespace testing_support {

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

inline std::filesystem::path scratch_dir() {
  static const std::filesystem::path dir = [] {
    auto p = std::filesystem::temp_directory_path() / ("schottky-test-" + std::to_string(::getpid()));
    std::filesystem::create_directories(p);
    return p;
  }();
  return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  out << text;
}

/// `args` is appended to the binary path verbatim (shell syntax allowed).
inline RunResult run_cli(const std::string& binary, const std::string& args, const std::string& stdin_text = {}) {
  static int counter = 0;
  const auto base = scratch_dir() / ("run" + std::to_string(++counter));
  const auto in = base.string() + ".in", out = base.string() + ".out", err = base.string() + ".err";
  write_file(in, stdin_text);
  const std::string cmd = "'" + binary + "' " + args + " < '" + in + "' > '" + out + "' 2> '" + err + "'";
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

}  // namespace testing_support
