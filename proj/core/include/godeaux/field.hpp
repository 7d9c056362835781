#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <variant>

#include "godeaux/error.hpp"

namespace godeaux::algebra {

// Coefficient field: the rationals, or a prime field F_p with p < 2^31.
struct Field {
  enum class Kind { rationals, prime };
  Kind kind = Kind::rationals;
  std::uint64_t p = 0;

  static Field rationals() { return Field{Kind::rationals, 0}; }
  static Field prime(std::uint64_t p);

  bool is_prime_field() const { return kind == Kind::prime; }
  bool operator==(const Field&) const = default;
  std::string describe() const;
};

// One element of a Field. F_p elements carry their modulus so arithmetic is
// self-checking; rationals are GMP-backed and always canonicalized.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar from_int(long n, const Field& f);
  static Scalar from_mpq(const mpq_class& q, const Field& f);

  bool is_fp() const { return std::holds_alternative<FpVal>(v_); }
  bool is_zero() const;
  bool is_one() const;

  std::uint64_t fp_value() const { return std::get<FpVal>(v_).v; }
  std::uint64_t fp_modulus() const { return std::get<FpVal>(v_).p; }
  const mpq_class& rat() const { return std::get<mpq_class>(v_); }

  Field field() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;   // throws MathError on zero divisor
  Scalar operator-() const;
  Scalar inverse() const;
  Scalar pow(long e) const;

  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // Canonical text: "3", "-7/2"; F_p values print as 0..p-1.
  std::string str() const;

 private:
  struct FpVal {
    std::uint64_t v;
    std::uint64_t p;
    bool operator==(const FpVal&) const = default;
  };
  explicit Scalar(FpVal f) : v_(f) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}

  std::variant<mpq_class, FpVal> v_;
};

// Modular helpers (p prime, operands already reduced).
std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p);
std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
bool is_prime_u64(std::uint64_t n);

}  // namespace godeaux::algebra
