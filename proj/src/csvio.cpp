#include "aimtk/csvio.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

#include "aimtk/errors.hpp"

namespace aimtk::io {

namespace {
std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::stringstream ss(line);
  while (std::getline(ss, cur, ',')) out.push_back(trim(cur));
  if (!line.empty() && line.back() == ',') out.push_back("");
  return out;
}
}  // namespace

CsvFile read_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, 0, "cannot open file");
  CsvFile f;
  f.path = path;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    if (f.header.empty()) {
      f.header = split_fields(t);
    } else {
      f.rows.push_back({split_fields(t), lineno});
    }
  }
  if (f.header.empty()) throw ParseError(path, lineno, "file has no header row");
  return f;
}

double csv_double(const CsvFile& f, const CsvRow& r, std::size_t idx) {
  if (idx >= r.fields.size())
    throw ParseError(f.path, r.line, "missing field " + std::to_string(idx));
  try {
    std::size_t used = 0;
    double v = std::stod(r.fields[idx], &used);
    if (used != r.fields[idx].size()) throw std::invalid_argument("trailing");
    return v;
  } catch (...) {
    throw ParseError(f.path, r.line,
                     "bad numeric value '" + r.fields[idx] + "'");
  }
}

std::uint64_t csv_u64(const CsvFile& f, const CsvRow& r, std::size_t idx) {
  if (idx >= r.fields.size())
    throw ParseError(f.path, r.line, "missing field " + std::to_string(idx));
  const std::string& s = r.fields[idx];
  std::uint64_t v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size())
    throw ParseError(f.path, r.line, "bad integer value '" + s + "'");
  return v;
}

std::string fmt_fixed(double v, int precision) {
  char buf[64];
  auto [p, ec] =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed,
                    precision);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, p);
}

std::string fmt_u64(std::uint64_t v) {
  char buf[24];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

std::string fnv1a64_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, 0, "cannot open file for hashing");
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

void RunManifest::add_input(const std::string& path) {
  inputs.emplace_back(path, fnv1a64_file(path));
}

void RunManifest::add_param(const std::string& key, const std::string& value) {
  params.emplace_back(key, value);
}

std::string RunManifest::render() const {
  std::string out;
  out += "# " + tool + "\n";
  out += "# command: " + command + "\n";
  for (const auto& [path, hash] : inputs)
    out += "# input: " + path + " fnv1a64=" + hash + "\n";
  for (const auto& [k, v] : params) out += "# " + k + ": " + v + "\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot write " + path);
  out << content;
}

}  // namespace aimtk::io
