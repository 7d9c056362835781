#pragma once

#include <cstdint>

namespace godeaux {

// splitmix64: tiny, fast, and stable across platforms. Every randomized
// routine takes one of these (or a seed) so identical configs replay
// byte-identically; nothing in the library touches global RNG state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  // Derive an independent stream, e.g. one per pipeline step.
  Rng fork(std::uint64_t salt) {
    return Rng(next() ^ (salt * 0x9e3779b97f4a7c15ULL + 0x3c6ef372fe94f82aULL));
  }

 private:
  std::uint64_t state_;
};

}  // namespace godeaux
