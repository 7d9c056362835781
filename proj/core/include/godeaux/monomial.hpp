#pragma once

#include <array>
#include <cstdint>
#include <numeric>

#include "godeaux/error.hpp"

namespace godeaux::algebra {

// Hard cap on ring variables; the largest ring we build has 11.
inline constexpr int kMaxVars = 16;

// Exponent vector. The owning ring knows how many slots are live;
// unused slots stay zero so comparisons can run over the whole array.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};

  static Monomial unit() { return Monomial{}; }
  static Monomial var(int i, std::uint16_t k = 1) {
    Monomial m;
    m.e[i] = k;
    return m;
  }

  bool is_unit() const {
    for (auto x : e)
      if (x) return false;
    return true;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) {
      std::uint32_t s = std::uint32_t(e[i]) + o.e[i];
      if (s > 0xffff) throw MathError("monomial exponent overflow");
      r.e[i] = static_cast<std::uint16_t>(s);
    }
    return r;
  }

  bool divides(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] > o.e[i]) return false;
    return true;
  }

  // quotient; caller guarantees divisibility
  Monomial div(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(e[i] - o.e[i]);
    return r;
  }

  Monomial lcm(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] > o.e[i] ? e[i] : o.e[i];
    return r;
  }

  Monomial gcd(const Monomial& o) const {
    Monomial r;
    for (int i = 0; i < kMaxVars; ++i) r.e[i] = e[i] < o.e[i] ? e[i] : o.e[i];
    return r;
  }

  bool coprime(const Monomial& o) const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[i] && o.e[i]) return false;
    return true;
  }

  long total_degree() const {
    long d = 0;
    for (auto x : e) d += x;
    return d;
  }

  long weighted_degree(const std::array<std::uint16_t, kMaxVars>& w) const {
    long d = 0;
    for (int i = 0; i < kMaxVars; ++i) d += long(e[i]) * w[i];
    return d;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

}  // namespace godeaux::algebra
