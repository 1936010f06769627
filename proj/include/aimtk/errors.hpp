#pragma once

#include <stdexcept>
#include <string>

namespace aimtk {

// Malformed input file (network CSV, preset table, scaling table).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, std::size_t line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        file_(file),
        line_(line) {}

  const std::string& file() const { return file_; }
  std::size_t line() const { return line_; }

 private:
  std::string file_;
  std::size_t line_;
};

// Bad or missing configuration (unknown preset, node outside scaling table).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Workload the modeled hardware cannot run (e.g. image plane exceeds SLM).
class UnsupportedWorkloadError : public std::runtime_error {
 public:
  explicit UnsupportedWorkloadError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace aimtk
