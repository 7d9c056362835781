#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "godeaux/groebner.hpp"

namespace godeaux::gb {

// Hilbert series data of R/I for a homogeneous ideal in a weighted ring,
// read off the leading-term ideal: series numerator N with
// HS(t) = N(t) / prod_i (1 - t^{w_i}), a finite table of graded dimensions,
// and the projective dimension / degree of V(I).
struct HilbertData {
  long dimension = -1;  // projective; -1 when V(I) is empty
  mpq_class degree = 0; // N_red(1) / prod of weights, integral in weight-1 rings
  std::map<long, mpz_class> hilbert_function;
  std::vector<mpz_class> series_numerator;  // dense, index = power of t

  std::string numerator_str() const;
};

HilbertData hilbert_data(const Ideal& I, long prefix_len, const GBOptions& opts = {});

struct DimDeg {
  long dim = -1;
  mpq_class deg = 0;
};

DimDeg dimension_degree(const Ideal& I, const GBOptions& opts = {});

}  // namespace godeaux::gb
