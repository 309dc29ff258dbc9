#pragma once

// Deterministic serialization: shortest round-trip number formatting, atomic
// file writes (temp + rename), CSV assembly and the per-run manifest.

#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace coulomb1d::io {

/// Shortest decimal that round-trips to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  if (res.ec != std::errc())
    throw std::runtime_error("format_double: to_chars failed");
  return std::string(buf, res.ptr);
}

/// Write content to path atomically: a temp file in the same directory is
/// renamed over the target, so readers never observe a partial file.
inline void write_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("write_atomic: cannot open " + tmp);
    out << content;
    if (!out.flush()) throw std::runtime_error("write_atomic: write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("write_atomic: rename to " + path + " failed: " +
                             std::strerror(errno));
  }
}

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

inline std::string to_csv(const CsvTable& t) {
  std::string out;
  for (size_t i = 0; i < t.header.size(); ++i) {
    if (i) out += ',';
    out += t.header[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    if (row.size() != t.header.size())
      throw std::invalid_argument("to_csv: row width does not match header");
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += row[i];
    }
    out += '\n';
  }
  return out;
}

/// JSON mirror of the CSV: array of objects keyed by the header names;
/// numeric-looking cells are emitted as numbers.
inline std::string to_json_rows(const CsvTable& t) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : t.rows) {
    nlohmann::json obj = nlohmann::json::object();
    for (size_t i = 0; i < row.size(); ++i) {
      double v = 0;
      const auto res = std::from_chars(row[i].data(), row[i].data() + row[i].size(), v);
      if (res.ec == std::errc() && res.ptr == row[i].data() + row[i].size())
        obj[t.header[i]] = v;
      else
        obj[t.header[i]] = row[i];
    }
    arr.push_back(obj);
  }
  return arr.dump(2) + "\n";
}

struct RunManifest {
  std::string command;
  nlohmann::json parameters = nlohmann::json::object();
  std::string version;
  std::string timestamp;
  std::vector<std::string> outputs;
};

inline void write_manifest(const RunManifest& m, const std::string& path) {
  nlohmann::json j;
  j["command"] = m.command;
  j["parameters"] = m.parameters;
  j["version"] = m.version;
  j["timestamp"] = m.timestamp;
  j["outputs"] = m.outputs;
  write_atomic(path, j.dump(2) + "\n");
}

}  // namespace coulomb1d::io
