#pragma once

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "ilhv/io.hpp"

namespace ilhv::cli {

using io::Json;

enum ExitCode : int { kOk = 0, kFalse = 1, kInputError = 2, kPrecondition = 3 };

struct Options {
  std::size_t d = 1;
  std::size_t cap = 30;
  unsigned long long seed = 1;
  std::size_t count = 50;
  bool search = false;
  std::string format = "json";
  std::optional<std::filesystem::path> out;
  std::filesystem::path data_dir;
};

std::string sha256_hex(const std::string& bytes);
std::string file_digest(const std::filesystem::path& path);

/// Wraps a deterministic report with its digest; timing stays outside the digested part.
Json run_report(Json report, double seconds);

/// Writes `text` to `out` when set, otherwise to stdout.
void emit(const std::string& text, const std::optional<std::filesystem::path>& out);

int cmd_inflate(const std::filesystem::path& graph_file, const Options& opt);
int cmd_build(const std::filesystem::path& set_file, const Options& opt);
int cmd_verify(const std::filesystem::path& set_file, const Options& opt);
int cmd_bound(const std::filesystem::path& set_file, const Options& opt);
int cmd_reproduce(const std::string& name, const Options& opt);

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

}  // namespace ilhv::cli
