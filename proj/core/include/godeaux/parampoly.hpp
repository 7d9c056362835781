#pragma once

#include <utility>
#include <vector>

#include "godeaux/field.hpp"
#include "godeaux/monomial.hpp"
#include "godeaux/order.hpp"

namespace godeaux::algebra {

// Coefficient of a ring monomial: a polynomial in the ring's named
// parameters over the base field. Terms sorted descending by deglex.
// The zero element has no terms and carries no field of its own.
class ParamPoly {
 public:
  ParamPoly() = default;

  static ParamPoly constant(const Scalar& c);
  static ParamPoly param(int index, const Field& f);
  // from raw terms in any order; combines duplicates, drops zeros
  static ParamPoly make(std::vector<std::pair<Monomial, Scalar>> raw);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_unit()); }
  Scalar constant_value(const Field& f) const;

  const std::vector<std::pair<Monomial, Scalar>>& terms() const { return terms_; }
  long degree() const { return terms_.empty() ? -1 : terms_[0].first.total_degree(); }

  ParamPoly operator+(const ParamPoly& o) const;
  ParamPoly operator-(const ParamPoly& o) const;
  ParamPoly operator*(const ParamPoly& o) const;
  ParamPoly operator-() const;
  ParamPoly scale(const Scalar& c) const;
  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const ParamPoly& o) const { return !(*this == o); }

  // full evaluation; values indexed by parameter slot
  Scalar evaluate(const std::vector<Scalar>& values, const Field& f) const;
  // partial substitution of one parameter
  ParamPoly substitute(int index, const Scalar& value) const;

  // exact multivariate division; throws MathError when not divisible
  ParamPoly divide_exact(const ParamPoly& d, const Field& f) const;

  std::string str(const std::vector<std::string>& names) const;

 private:
  std::vector<std::pair<Monomial, Scalar>> terms_;
};

}  // namespace godeaux::algebra
