#include "godeaux/field.hpp"

namespace godeaux::algebra {

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull}) {
    if (n % d == 0) return n == d;
  }
  for (std::uint64_t d = 37; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 31)) throw UsageError("prime field modulus must be < 2^31");
  if (!is_prime_u64(p)) throw UsageError("modulus " + std::to_string(p) + " is not prime");
  return Field{Kind::prime, p};
}

std::string Field::describe() const {
  return kind == Kind::rationals ? "QQ" : "F" + std::to_string(p);
}

std::uint64_t fp_add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint64_t fp_sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}
std::uint64_t fp_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (static_cast<unsigned __int128>(a) * b) % p;
}
std::uint64_t fp_pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = fp_mul(r, a, p);
    a = fp_mul(a, a, p);
    e >>= 1;
  }
  return r;
}
std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw MathError("division by zero in F_" + std::to_string(p));
  // extended Euclid on (a, p)
  long long t = 0, newt = 1;
  long long r = static_cast<long long>(p), newr = static_cast<long long>(a % p);
  while (newr != 0) {
    long long q = r / newr;
    long long tmp = t - q * newt;
    t = newt;
    newt = tmp;
    tmp = r - q * newr;
    r = newr;
    newr = tmp;
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

Scalar Scalar::zero(const Field& f) {
  if (f.is_prime_field()) return Scalar(FpVal{0, f.p});
  return Scalar(mpq_class(0));
}
Scalar Scalar::one(const Field& f) {
  if (f.is_prime_field()) return Scalar(FpVal{1 % f.p, f.p});
  return Scalar(mpq_class(1));
}
Scalar Scalar::from_int(long n, const Field& f) {
  if (f.is_prime_field()) {
    long long m = static_cast<long long>(n) % static_cast<long long>(f.p);
    if (m < 0) m += static_cast<long long>(f.p);
    return Scalar(FpVal{static_cast<std::uint64_t>(m), f.p});
  }
  return Scalar(mpq_class(n));
}
Scalar Scalar::from_mpq(const mpq_class& q, const Field& f) {
  if (!f.is_prime_field()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(c);
  }
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class pz(static_cast<unsigned long>(f.p));
  mpz_class nm = num % pz;
  if (nm < 0) nm += pz;
  mpz_class dm = den % pz;
  if (dm < 0) dm += pz;
  std::uint64_t n = nm.get_ui(), d = dm.get_ui();
  if (d == 0) throw MathError("denominator divisible by " + std::to_string(f.p));
  return Scalar(FpVal{fp_mul(n, fp_inv(d, f.p), f.p), f.p});
}

bool Scalar::is_zero() const {
  if (is_fp()) return fp_value() == 0;
  return rat() == 0;
}
bool Scalar::is_one() const {
  if (is_fp()) return fp_value() == 1 % fp_modulus();
  return rat() == 1;
}

Field Scalar::field() const {
  if (is_fp()) return Field{Field::Kind::prime, fp_modulus()};
  return Field::rationals();
}

namespace {
void check_same(const Scalar& a, const Scalar& b) {
  if (a.is_fp() != b.is_fp() || (a.is_fp() && a.fp_modulus() != b.fp_modulus()))
    throw UsageError("mixed coefficient fields in scalar arithmetic");
}
}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  check_same(*this, o);
  if (is_fp()) return Scalar(FpVal{fp_add(fp_value(), o.fp_value(), fp_modulus()), fp_modulus()});
  mpq_class r = rat() + o.rat();
  return Scalar(r);
}
Scalar Scalar::operator-(const Scalar& o) const {
  check_same(*this, o);
  if (is_fp()) return Scalar(FpVal{fp_sub(fp_value(), o.fp_value(), fp_modulus()), fp_modulus()});
  mpq_class r = rat() - o.rat();
  return Scalar(r);
}
Scalar Scalar::operator*(const Scalar& o) const {
  check_same(*this, o);
  if (is_fp()) return Scalar(FpVal{fp_mul(fp_value(), o.fp_value(), fp_modulus()), fp_modulus()});
  mpq_class r = rat() * o.rat();
  return Scalar(r);
}
Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }
Scalar Scalar::operator-() const {
  if (is_fp()) return Scalar(FpVal{fp_sub(0, fp_value(), fp_modulus()), fp_modulus()});
  mpq_class r = -rat();
  return Scalar(r);
}
Scalar Scalar::inverse() const {
  if (is_fp()) return Scalar(FpVal{fp_inv(fp_value(), fp_modulus()), fp_modulus()});
  if (rat() == 0) throw MathError("division by zero in QQ");
  mpq_class r = 1 / rat();
  return Scalar(r);
}
Scalar Scalar::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar r = Scalar::one(field());
  Scalar b = *this;
  unsigned long u = static_cast<unsigned long>(e);
  while (u) {
    if (u & 1) r = r * b;
    b = b * b;
    u >>= 1;
  }
  return r;
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_fp() != o.is_fp()) return false;
  if (is_fp()) return fp_modulus() == o.fp_modulus() && fp_value() == o.fp_value();
  return rat() == o.rat();
}

std::string Scalar::str() const {
  if (is_fp()) return std::to_string(fp_value());
  return rat().get_str();
}

}  // namespace godeaux::algebra
