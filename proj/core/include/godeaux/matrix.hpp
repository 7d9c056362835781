#pragma once

#include <vector>

#include "godeaux/poly.hpp"

namespace godeaux::algebra {

using PolyMatrix = std::vector<std::vector<Polynomial>>;

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b);
PolyMatrix mat_neg(const PolyMatrix& a);
PolyMatrix mat_transpose(const PolyMatrix& a);
bool mat_is_zero(const PolyMatrix& a);
std::vector<Polynomial> mat_apply(const PolyMatrix& a, const std::vector<Polynomial>& v);

// determinant by Laplace expansion over column subsets; fine for small k
Polynomial poly_det(const PolyMatrix& a);

}  // namespace godeaux::algebra
