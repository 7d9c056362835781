#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>

#include "godeaux/error.hpp"

namespace godeaux {

// Hard limits for a single algebraic computation. Zero means "no limit".
// Exceeding any limit raises ResourceError with a description of what blew up.
struct Budget {
  std::uint64_t max_pairs = 0;      // S-pairs processed in one basis run
  std::uint64_t max_basis = 0;      // basis elements kept
  std::uint64_t max_wall_ms = 0;    // wall clock for one engine call
  std::uint64_t max_steps = 0;      // generic step counter for non-GB loops

  static Budget unlimited() { return {}; }
};

class BudgetClock {
 public:
  explicit BudgetClock(const Budget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}

  void count_pair() {
    ++pairs_;
    if (budget_.max_pairs && pairs_ > budget_.max_pairs)
      throw ResourceError("budget exceeded: S-pair limit " + std::to_string(budget_.max_pairs));
    if ((pairs_ & 0x3f) == 0) check_time();
  }
  void count_basis(std::uint64_t n) const {
    if (budget_.max_basis && n > budget_.max_basis)
      throw ResourceError("budget exceeded: basis size limit " + std::to_string(budget_.max_basis));
  }
  void count_step() {
    ++steps_;
    if (budget_.max_steps && steps_ > budget_.max_steps)
      throw ResourceError("budget exceeded: step limit " + std::to_string(budget_.max_steps));
    if ((steps_ & 0xff) == 0) check_time();
  }
  void check_time() const {
    if (!budget_.max_wall_ms) return;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    if (static_cast<std::uint64_t>(ms) > budget_.max_wall_ms)
      throw ResourceError("budget exceeded: wall clock limit " +
                          std::to_string(budget_.max_wall_ms) + " ms");
  }
  std::uint64_t pairs() const { return pairs_; }

 private:
  Budget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t pairs_ = 0;
  std::uint64_t steps_ = 0;
};

// Progress heartbeat: (phase, units done, extra). Used by the CLI to keep
// long Groebner runs visibly alive on stderr.
using ProgressFn = std::function<void(const std::string&, std::uint64_t, std::uint64_t)>;

}  // namespace godeaux
