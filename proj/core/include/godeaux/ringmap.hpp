#pragma once

#include <vector>

#include "godeaux/poly.hpp"

namespace godeaux::algebra {

// Ring homomorphism given by images of the source variables and parameters.
// Coefficients move by the obvious field map (QQ to QQ, QQ reduced mod p,
// F_p to the same F_p); anything else is rejected.
class RingMap {
 public:
  RingMap(RingPtr src, RingPtr dst, std::vector<Polynomial> var_images,
          std::vector<Polynomial> param_images = {});

  const RingPtr& src() const { return src_; }
  const RingPtr& dst() const { return dst_; }

  Polynomial apply(const Polynomial& p) const;
  std::vector<Polynomial> apply(const std::vector<Polynomial>& v) const;

 private:
  RingPtr src_, dst_;
  std::vector<Polynomial> var_images_, param_images_;
};

// Move p into dst by matching names: source variables must name dst
// variables; source parameters may name dst variables (flattening) or dst
// parameters. A source variable or parameter actually present in p but
// missing from dst is an error.
Polynomial transport(const Polynomial& p, const RingPtr& dst);
std::vector<Polynomial> transport(const std::vector<Polynomial>& v, const RingPtr& dst);

Scalar convert_scalar(const Scalar& s, const Field& f);

}  // namespace godeaux::algebra
