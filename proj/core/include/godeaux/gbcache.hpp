#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace godeaux::gb {

// Content-addressed basis store: one file per key, written atomically via a
// temp file so concurrent producers of the same key cannot tear each other.
// Values are polynomial lines in the shared text grammar; the caller supplies
// the ring when parsing them back (the key already pins the ring layout).
class GBCache {
 public:
  explicit GBCache(std::string dir);

  const std::string& dir() const { return dir_; }

  std::optional<std::vector<std::string>> load(const std::string& key) const;
  void store(const std::string& key, const std::vector<std::string>& lines) const;

  struct Stats {
    std::uint64_t entries = 0;
    std::uint64_t bytes = 0;
  };
  Stats stats() const;
  std::uint64_t clear() const;  // removes every entry, returns how many

 private:
  std::string path_for(const std::string& key) const;
  std::string dir_;
};

}  // namespace godeaux::gb
