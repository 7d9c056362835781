#include "godeaux/gbcache.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "godeaux/error.hpp"

namespace godeaux::gb {

namespace fs = std::filesystem;

static const char* kMagic = "godeaux-gb 1";

GBCache::GBCache(std::string dir) : dir_(std::move(dir)) {
  if (dir_.empty()) throw UsageError("cache directory must not be empty");
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw ResourceError("cannot create cache directory " + dir_ + ": " + ec.message());
}

std::string GBCache::path_for(const std::string& key) const {
  for (char ch : key)
    if (!((ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'f')))
      throw UsageError("cache key must be a hex digest");
  return dir_ + "/" + key + ".gb";
}

std::optional<std::vector<std::string>> GBCache::load(const std::string& key) const {
  std::ifstream in(path_for(key));
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kMagic) return std::nullopt;
  std::vector<std::string> lines;
  while (std::getline(in, line))
    if (!line.empty()) lines.push_back(line);
  return lines;
}

void GBCache::store(const std::string& key, const std::vector<std::string>& lines) const {
  std::string final_path = path_for(key);
  std::random_device rd;
  std::string tmp = final_path + ".tmp" + std::to_string(rd() % 1000000);
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ResourceError("cannot write cache file " + tmp);
    out << kMagic << "\n";
    for (const auto& l : lines) out << l << "\n";
  }
  std::error_code ec;
  fs::rename(tmp, final_path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw ResourceError("cache rename failed for " + final_path);
  }
}

GBCache::Stats GBCache::stats() const {
  Stats s;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".gb") continue;
    ++s.entries;
    s.bytes += entry.file_size();
  }
  return s;
}

std::uint64_t GBCache::clear() const {
  std::uint64_t removed = 0;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir_, ec)) {
    if (!entry.is_regular_file()) continue;
    if (entry.path().extension() != ".gb") continue;
    std::error_code rec;
    if (fs::remove(entry.path(), rec)) ++removed;
  }
  return removed;
}

}  // namespace godeaux::gb
