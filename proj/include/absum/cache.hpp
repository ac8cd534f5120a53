#pragma once

// Persistent sum cache keyed by (instance hash, m, domain).  Writes go
// through a temp file plus rename so concurrent writers never expose a
// partial entry.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <string>

#include "absum/cyclotomic.hpp"
#include "absum/instance_io.hpp"

namespace absum {

struct CachedSum {
  CycInt value;
  uint64_t point_count = 0;
};

class SumCache {
 public:
  explicit SumCache(std::filesystem::path dir) : dir_(std::move(dir)) {
    std::filesystem::create_directories(dir_);
  }

  const std::filesystem::path& dir() const { return dir_; }

  std::optional<CachedSum> load(const std::string& key) const {
    auto path = entry_path(key);
    std::ifstream in(path);
    if (!in.good()) return std::nullopt;
    try {
      Json j;
      in >> j;
      if (!j.contains("value") || !j.contains("point_count")) return std::nullopt;
      return CachedSum{cyc_from_json(j["value"]), j["point_count"].get<uint64_t>()};
    } catch (...) {
      return std::nullopt;  // unreadable entries are treated as misses
    }
  }

  void store(const std::string& key, const CachedSum& entry) const {
    Json j;
    j["schema"] = 1;
    j["key"] = key;
    j["value"] = cyc_to_json(entry.value);
    j["point_count"] = entry.point_count;
    auto tmp = dir_ / (sanitize(key) + ".tmp." + std::to_string(std::random_device{}()));
    {
      std::ofstream out(tmp);
      out << j.dump();
    }
    std::error_code ec;
    std::filesystem::rename(tmp, entry_path(key), ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

 private:
  static std::string sanitize(const std::string& key) {
    std::string s;
    for (char c : key) s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '_') ? c : '_';
    return s;
  }

  std::filesystem::path entry_path(const std::string& key) const { return dir_ / (sanitize(key) + ".json"); }

  std::filesystem::path dir_;
};

}  // namespace absum
