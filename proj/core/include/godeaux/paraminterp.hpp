#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "godeaux/matrix.hpp"
#include "godeaux/poly.hpp"

namespace godeaux::interp {

using algebra::Field;
using algebra::Monomial;
using algebra::ParamPoly;
using algebra::PolyMatrix;
using algebra::Polynomial;
using algebra::RingPtr;
using algebra::Scalar;

// Dense univariate coefficients of the unique interpolant through the given
// (point, value) pairs, constant term first, trailing zeros trimmed.
// Degree < number of pairs. Duplicate points throw.
std::vector<Scalar> lagrange_coeffs(const std::vector<std::pair<Scalar, Scalar>>& pairs,
                                    const Field& f);

// Same fit packaged as a polynomial in one ring variable (default: the first).
Polynomial lagrange_reconstruct(const std::vector<std::pair<Scalar, Scalar>>& pairs,
                                const RingPtr& ring, int var = 0);

// Horner evaluation of a dense coefficient vector.
Scalar eval_coeffs(const std::vector<Scalar>& coeffs, const Scalar& t, const Field& f);

// Rebuild a matrix whose entries depend polynomially on one parameter from
// black-box runs at fixed values of it. The returned matrix equals the true
// solution times `correction`, so a run whose honest answer carries a
// denominator in the parameter still fits once the correction clears it.
struct InterpolationJob {
  // run the computation with the parameter pinned to one value
  std::function<PolyMatrix(const Scalar&)> specialize;
  RingPtr result_ring;         // carries `parameter`; other params pass through
  std::string parameter;       // name of the parameter being rebuilt
  std::vector<Scalar> points;  // pairwise distinct; degree_bound + 3 or more
  long degree_bound = 0;       // max parameter degree of any coefficient
  // univariate polynomial in the parameter, multiplied into every specialized
  // run before fitting; default-constructed (null ring) means 1
  Polynomial correction;
};

struct InterpolationReport {
  std::vector<Scalar> fit_points;      // the degree_bound + 1 points fitted
  std::vector<Scalar> checked_points;  // held out, re-substituted exactly
  long max_degree_seen = -1;           // largest parameter degree that survived
};

// Fit on the first degree_bound + 1 points, then re-substitute every held-out
// point; any mismatch throws, it is never a warning.
PolyMatrix interpolate_solution(const InterpolationJob& job,
                                InterpolationReport* report = nullptr);

// One specialized run for coefficient_recovery: the parameter values used and
// the relation the run produced (fully specialized, constant coefficients).
struct Observation {
  std::vector<Scalar> values;  // one per parameter of the slots' ring
  Polynomial relation;
};

// Recover unknown coefficients c_i, polynomials in the ring parameters
// supported on `ansatz`, from specialized observations of the combination
//   sum_i c_i * slots[i].
// Every observation must be reproduced exactly; a rank-deficient or
// inconsistent linear system throws instead of best-fitting.
std::vector<ParamPoly> coefficient_recovery(const std::vector<Polynomial>& slots,
                                            const std::vector<Monomial>& ansatz,
                                            const std::vector<Observation>& observations);

// Small positive integers usable as parameter sample points: 2, 3, 4, ...
// skipping roots of `correction`. 0 and +-1 never appear; the fixture
// families degenerate there.
std::vector<Scalar> default_points(int count, const Field& f,
                                   const Polynomial& correction = Polynomial());

// The first `count` primes >= `from` as field elements, pairwise distinct in
// the field. Multi-parameter specializations use these so distinct parameters
// stay distinguishable in the observed numbers.
std::vector<Scalar> prime_points(int count, const Field& f, std::uint64_t from = 11);

}  // namespace godeaux::interp
