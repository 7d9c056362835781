#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "godeaux/budget.hpp"
#include "godeaux/matrix.hpp"
#include "godeaux/poly.hpp"

namespace godeaux::gb {

using algebra::Monomial;
using algebra::Order;
using algebra::ParamPoly;
using algebra::PolyMatrix;
using algebra::Polynomial;
using algebra::Ring;
using algebra::RingPtr;
using algebra::Scalar;

class GBCache;

// A reduced basis for one ideal under one order. degree_cap >= 0 marks a
// truncated run: correct for membership questions up to that weighted degree
// only (homogeneous input assumed by the caller).
struct GroebnerBasis {
  RingPtr ring;
  Order order{Order::wgrevlex()};
  long degree_cap = -1;
  std::vector<Polynomial> elems;
};

struct GBOptions {
  Budget budget;
  long degree_cap = -1;     // -1 = full basis
  ProgressFn progress;      // optional heartbeat
  GBCache* cache = nullptr; // optional content-addressed disk cache
};

// Generators plus a shared per-ideal basis cache. Copies share the cache.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  // In-memory cache, keyed by (order, degree_cap).
  std::optional<GroebnerBasis> cached(const Order& o, long cap) const;
  void remember(const GroebnerBasis& b) const;

 private:
  struct CacheBox {
    std::mutex mu;
    std::map<std::tuple<int, int, long>, GroebnerBasis> bases;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<CacheBox> box_;
};

GroebnerBasis groebner_basis(const Ideal& I, const Order& order,
                             const GBOptions& opts = {});

// Remainder after full reduction. No term of the result is divisible by a
// leading monomial of the basis. When every used divisor has a unit leading
// coefficient the defining identity f - result in <B> holds on the nose;
// reductions against parameter-valued leading coefficients fall back to
// cross-multiplication, which preserves ideal membership of the new element
// but rescales the identity (see the engine notes).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& B);

// Membership of f in the ideal of B (normal form vanishes).
bool reduces_to_zero(const Polynomial& f, const GroebnerBasis& B);

// I together with extra generators.
Ideal ideal_sum(const Ideal& I, const std::vector<Polynomial>& extra);

// I cap (subring without the dropped variables); the result lives in a fresh
// ring holding the surviving variables. A degree cap in opts truncates the
// block-order run, valid for homogeneous input.
Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop,
                const GBOptions& opts = {});

Ideal intersect(const Ideal& I, const Ideal& J, const GBOptions& opts = {});

// (I : f) and (I : J).
Ideal ideal_quotient_single(const Ideal& I, const Polynomial& f,
                            const GBOptions& opts = {});
Ideal ideal_quotient(const Ideal& I, const Ideal& J,
                     const GBOptions& opts = {});

// (I : f^inf), by iterating the colon until two successive results agree.
Ideal saturate(const Ideal& I, const Polynomial& f, const GBOptions& opts = {});

bool ideal_contains(const Ideal& I, const Ideal& J, const GBOptions& opts = {});
bool ideal_equal(const Ideal& I, const Ideal& J, const GBOptions& opts = {});

// Greedy redundancy removal: keep a generator only if it is not already in
// the ideal of the kept ones. Candidates are visited lowest degree first.
Ideal trim_generators(const Ideal& I, const GBOptions& opts = {});

// Exact division f / g; throws MathError when g does not divide f.
Polynomial poly_divide_exact(const Polynomial& f, const Polynomial& g);

// Element of a free module R^rank. twists records graded shifts per position
// for bookkeeping; the algorithms ignore it.
struct FreeModuleVector {
  std::vector<Polynomial> entries;
  std::vector<long> twists;
};

// Generating set for { v : sum v_i * gens_i = 0 }.
std::vector<FreeModuleVector> syzygies(const std::vector<FreeModuleVector>& gens,
                                       const Order& order,
                                       const GBOptions& opts = {});

// Solves P * N = H column by column; throws MathError("no solution...") when
// a column of H is outside the column module of P. The product is re-checked
// exactly before returning.
PolyMatrix lift_matrix_solution(const PolyMatrix& P, const PolyMatrix& H,
                                const Order& order, const GBOptions& opts = {});

// Canonical cache key: hash of ring layout, generators in canonical text,
// order, characteristic, and degree cap.
std::string gb_cache_key(const Ideal& I, const Order& order, long degree_cap);

}  // namespace godeaux::gb
