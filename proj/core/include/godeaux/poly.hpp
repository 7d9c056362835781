#pragma once

#include <string>
#include <vector>

#include "godeaux/order.hpp"
#include "godeaux/parampoly.hpp"
#include "godeaux/ring.hpp"

namespace godeaux::algebra {

struct Term {
  Monomial m;
  ParamPoly c;
  bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

// Element of a weighted polynomial ring with parameter-carrying coefficients.
// Terms are kept sorted descending under the polynomial's own monomial order;
// printing always uses the canonical (wgrevlex) order so output is stable.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring, Order order = Order::wgrevlex())
      : ring_(std::move(ring)), order_(order) {}

  static Polynomial zero(RingPtr ring) { return Polynomial(std::move(ring)); }
  static Polynomial constant(RingPtr ring, const Scalar& c);
  static Polynomial from_int(RingPtr ring, long n);
  static Polynomial variable(RingPtr ring, int i, int exp = 1);
  static Polynomial parameter(RingPtr ring, int i);
  static Polynomial monomial(RingPtr ring, const Monomial& m, ParamPoly c);
  static Polynomial from_terms(RingPtr ring, Order order, std::vector<Term> raw);

  const RingPtr& ring() const { return ring_; }
  const Order& order() const { return order_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  const Term& leading_term() const;
  const Monomial& leading_monomial() const { return leading_term().m; }
  const ParamPoly& leading_coeff() const { return leading_term().c; }

  long degree() const;           // max weighted degree, -1 for zero
  bool is_homogeneous() const;   // all terms share one weighted degree

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scale(const Scalar& c) const;
  Polynomial scale(const ParamPoly& c) const;
  // multiply by mono * coeff; preserves term order, the reducer's workhorse
  Polynomial mul_term(const Monomial& mono, const ParamPoly& coeff) const;
  Polynomial pow(int e) const;

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial reorder(Order order) const;
  // coefficient of an exact ring monomial (zero ParamPoly if absent)
  ParamPoly coeff_of(const Monomial& m) const;

  Polynomial substitute_param(int index, const Scalar& value) const;
  Polynomial specialize_params(const std::vector<Scalar>& values) const;
  // replace ring variable i by q (same ring)
  Polynomial substitute_var(int index, const Polynomial& q) const;
  // evaluate at a point; params must already be specialized unless values given
  Scalar evaluate(const std::vector<Scalar>& point,
                  const std::vector<Scalar>& param_values = {}) const;

  std::string str() const;

 private:
  RingPtr ring_;
  Order order_{};
  std::vector<Term> terms_;
};

}  // namespace godeaux::algebra
