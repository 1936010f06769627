// Small CSV reader/writer with deterministic, locale-independent number
// formatting, plus the run manifest embedded as comment headers.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace aimtk::io {

struct CsvRow {
  std::vector<std::string> fields;
  std::size_t line = 0;
};

struct CsvFile {
  std::string path;
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
};

// Reads a comma-separated file; skips blank lines and '#' comments; first
// non-comment line is the header. Throws ParseError.
CsvFile read_csv(const std::string& path);

// Field accessors that raise ParseError naming file:line on bad values.
double csv_double(const CsvFile& f, const CsvRow& r, std::size_t idx);
std::uint64_t csv_u64(const CsvFile& f, const CsvRow& r, std::size_t idx);

// Fixed-decimal formatting via to_chars; never locale-dependent.
std::string fmt_fixed(double v, int precision);
std::string fmt_u64(std::uint64_t v);

// FNV-1a 64-bit content hash, hex-encoded.
std::string fnv1a64_file(const std::string& path);

// Provenance header block written at the top of every emitted file.
// Identical manifests produce byte-identical output.
struct RunManifest {
  std::string tool = "aimtk " AIMTK_VERSION;
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;  // path -> hash
  std::vector<std::pair<std::string, std::string>> params;

  void add_input(const std::string& path);
  void add_param(const std::string& key, const std::string& value);
  std::string render() const;  // "# key: value\n" lines
};

void write_text_file(const std::string& path, const std::string& content);

}  // namespace aimtk::io
