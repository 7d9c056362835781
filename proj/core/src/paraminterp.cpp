#include "godeaux/paraminterp.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "godeaux/scalarmat.hpp"
#include "godeaux/ringmap.hpp"

namespace godeaux::interp {

using algebra::kMaxVars;
using algebra::Order;
using algebra::ScalarMat;
using algebra::SolveStatus;
using algebra::Term;
using algebra::transport;

namespace {

void require_distinct(const std::vector<Scalar>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (pts[i] == pts[j]) throw UsageError("duplicate interpolation point " + pts[i].str());
}

// value of a parameter monomial at a full assignment
Scalar mono_eval(const Monomial& m, const std::vector<Scalar>& vals, const Field& f) {
  Scalar r = Scalar::one(f);
  for (int i = 0; i < kMaxVars; ++i) {
    if (!m.e[i]) continue;
    if (i >= static_cast<int>(vals.size()))
      throw UsageError("monomial uses a parameter with no assigned value");
    r = r * vals[i].pow(m.e[i]);
  }
  return r;
}

Scalar correction_value(const Polynomial& correction, const Scalar& pt, const Field& f) {
  if (!correction.ring()) return Scalar::one(f);
  if (correction.ring()->nvars() != 1 || correction.ring()->nparams() != 0)
    throw UsageError("correction must be univariate with plain coefficients");
  if (!(correction.ring()->field() == f))
    throw UsageError("correction lives over the wrong field");
  return correction.evaluate({pt});
}

}  // namespace

std::vector<Scalar> lagrange_coeffs(const std::vector<std::pair<Scalar, Scalar>>& pairs,
                                    const Field& f) {
  if (pairs.empty()) throw UsageError("interpolation needs at least one pair");
  const std::size_t n = pairs.size();
  std::vector<Scalar> xs, d;
  xs.reserve(n);
  d.reserve(n);
  for (const auto& [x, y] : pairs) {
    xs.push_back(x);
    d.push_back(y);
  }
  require_distinct(xs);

  // divided differences, then expand the Newton form
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - k]);

  std::vector<Scalar> c{d[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    c.insert(c.begin(), Scalar::zero(f));
    for (std::size_t k = 0; k + 1 < c.size(); ++k) c[k] = c[k] - xs[i] * c[k + 1];
    c[0] = c[0] + d[i];
  }
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  return c;
}

Polynomial lagrange_reconstruct(const std::vector<std::pair<Scalar, Scalar>>& pairs,
                                const RingPtr& ring, int var) {
  if (!ring) throw UsageError("interpolation needs a ring for the result");
  if (var < 0 || var >= ring->nvars()) throw UsageError("no such ring variable");
  auto c = lagrange_coeffs(pairs, ring->field());
  std::vector<Term> raw;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k].is_zero()) continue;
    raw.push_back({Monomial::var(var, static_cast<std::uint16_t>(k)), ParamPoly::constant(c[k])});
  }
  return Polynomial::from_terms(ring, Order::wgrevlex(), std::move(raw));
}

Scalar eval_coeffs(const std::vector<Scalar>& coeffs, const Scalar& t, const Field& f) {
  Scalar r = Scalar::zero(f);
  for (std::size_t k = coeffs.size(); k-- > 0;) r = r * t + coeffs[k];
  return r;
}

PolyMatrix interpolate_solution(const InterpolationJob& job, InterpolationReport* report) {
  if (!job.specialize) throw UsageError("interpolation job has no computation to run");
  if (!job.result_ring) throw UsageError("interpolation job has no result ring");
  if (job.degree_bound < 0) throw UsageError("degree bound must be nonnegative");
  const RingPtr& R = job.result_ring;
  const Field f = R->field();
  const int ai = R->param_index(job.parameter);
  if (ai < 0)
    throw UsageError("parameter " + job.parameter + " is not a parameter of the result ring");

  require_distinct(job.points);
  const std::size_t nfit = static_cast<std::size_t>(job.degree_bound) + 1;
  if (job.points.size() < nfit + 2)
    throw UsageError("need at least degree bound + 3 points (two are held out for checking)");

  std::vector<Scalar> cvals;
  for (const auto& pt : job.points) {
    Scalar cv = correction_value(job.correction, pt, f);
    if (cv.is_zero()) throw UsageError("correction vanishes at sample point " + pt.str());
    cvals.push_back(cv);
  }

  // run every specialization, scaling by the correction as we go
  std::vector<PolyMatrix> runs;
  for (std::size_t k = 0; k < job.points.size(); ++k) {
    PolyMatrix m;
    try {
      m = job.specialize(job.points[k]);
    } catch (const std::exception& e) {
      throw MathError("specialization at point " + job.points[k].str() + " failed: " + e.what());
    }
    for (auto& row : m)
      for (auto& p : row) p = p.scale(cvals[k]);
    runs.push_back(std::move(m));
  }

  const std::size_t rows = runs[0].size();
  const std::size_t cols = rows ? runs[0][0].size() : 0;
  RingPtr spec_ring;
  for (const auto& m : runs) {
    if (m.size() != rows) throw UsageError("specialized runs disagree on the matrix shape");
    for (const auto& row : m) {
      if (row.size() != cols) throw UsageError("specialized runs disagree on the matrix shape");
      for (const auto& p : row) {
        if (!p.ring()) throw UsageError("specialized entries must carry a ring");
        if (!spec_ring)
          spec_ring = p.ring();
        else
          algebra::require_same_ring(spec_ring, p.ring());
      }
    }
  }
  if (!spec_ring) spec_ring = R;  // empty matrix; nothing to fit

  // the specialized ring must look like the result ring minus the parameter
  if (!(spec_ring->field() == f) || spec_ring->vars() != R->vars() ||
      spec_ring->weights() != R->weights())
    throw UsageError("specialized runs live in an unexpected ring: " + spec_ring->describe());
  std::array<int, kMaxVars> pmap{};
  for (int i = 0; i < spec_ring->nparams(); ++i) {
    const std::string& name = spec_ring->params()[i];
    if (name == job.parameter)
      throw UsageError("specialized runs still carry the parameter " + name);
    int j = R->param_index(name);
    if (j < 0) throw UsageError("specialized parameter " + name + " missing from the result ring");
    pmap[i] = j;
  }

  // cell = (entry, ring monomial, pass-through parameter monomial); collect the
  // observed scalar at every point, zero where the term is absent
  struct CellKey {
    std::size_t i, j;
    Monomial m, q;
    bool operator<(const CellKey& o) const {
      return std::tie(i, j, m.e, q.e) < std::tie(o.i, o.j, o.m.e, o.q.e);
    }
  };
  std::map<CellKey, std::vector<Scalar>> cells;
  const std::vector<Scalar> zeros(job.points.size(), Scalar::zero(f));
  for (std::size_t k = 0; k < runs.size(); ++k)
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        for (const auto& term : runs[k][i][j].terms())
          for (const auto& [qm, s] : term.c.terms()) {
            Monomial q;
            for (int t = 0; t < spec_ring->nparams(); ++t)
              q.e[pmap[t]] = qm.e[t];
            auto [it, fresh] = cells.try_emplace(CellKey{i, j, term.m, q}, zeros);
            (void)fresh;
            it->second[k] = s;
          }

  // fit on the first degree_bound + 1 points, then re-substitute the rest
  std::map<CellKey, std::vector<Scalar>> fits;
  long max_deg = -1;
  for (const auto& [key, vals] : cells) {
    std::vector<std::pair<Scalar, Scalar>> pairs;
    for (std::size_t k = 0; k < nfit; ++k) pairs.push_back({job.points[k], vals[k]});
    auto coeffs = lagrange_coeffs(pairs, f);
    for (std::size_t k = nfit; k < job.points.size(); ++k)
      if (eval_coeffs(coeffs, job.points[k], f) != vals[k])
        throw MathError("verification failed at held-out point " + job.points[k].str() +
                        ": degree bound too low or denominators hit");
    if (!coeffs.empty()) max_deg = std::max(max_deg, static_cast<long>(coeffs.size()) - 1);
    fits.emplace(key, std::move(coeffs));
  }

  PolyMatrix out(rows, std::vector<Polynomial>(cols, Polynomial::zero(R)));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      std::map<std::array<std::uint16_t, kMaxVars>, std::vector<std::pair<Monomial, Scalar>>> by_m;
      for (const auto& [key, coeffs] : fits) {
        if (key.i != i || key.j != j) continue;
        for (std::size_t t = 0; t < coeffs.size(); ++t) {
          if (coeffs[t].is_zero()) continue;
          Monomial q = key.q;
          q.e[ai] = static_cast<std::uint16_t>(q.e[ai] + t);
          by_m[key.m.e].push_back({q, coeffs[t]});
        }
      }
      std::vector<Term> raw;
      for (auto& [me, pairs] : by_m) {
        Monomial m;
        m.e = me;
        raw.push_back({m, ParamPoly::make(std::move(pairs))});
      }
      out[i][j] = Polynomial::from_terms(R, Order::wgrevlex(), std::move(raw));
    }

  if (report) {
    report->fit_points.assign(job.points.begin(), job.points.begin() + nfit);
    report->checked_points.assign(job.points.begin() + nfit, job.points.end());
    report->max_degree_seen = max_deg;
  }
  return out;
}

std::vector<ParamPoly> coefficient_recovery(const std::vector<Polynomial>& slots,
                                            const std::vector<Monomial>& ansatz,
                                            const std::vector<Observation>& observations) {
  if (slots.empty()) throw UsageError("coefficient recovery needs template slots");
  if (ansatz.empty()) throw UsageError("coefficient recovery needs an ansatz");
  if (observations.empty()) throw UsageError("coefficient recovery needs observations");
  RingPtr R = slots[0].ring();
  if (!R) throw UsageError("template slots must carry a ring");
  for (const auto& s : slots) algebra::require_same_ring(R, s.ring());
  const Field f = R->field();
  const int np = R->nparams();
  for (std::size_t a = 0; a < ansatz.size(); ++a) {
    for (int i = np; i < kMaxVars; ++i)
      if (ansatz[a].e[i]) throw UsageError("ansatz monomial uses a parameter the ring lacks");
    for (std::size_t b = a + 1; b < ansatz.size(); ++b)
      if (ansatz[a] == ansatz[b]) throw UsageError("duplicate ansatz monomial");
  }

  // specialize the slots and normalize the observed relations into R
  std::vector<std::vector<Polynomial>> spec(observations.size());
  std::vector<Polynomial> obs(observations.size());
  for (std::size_t k = 0; k < observations.size(); ++k) {
    const auto& o = observations[k];
    if (static_cast<int>(o.values.size()) != np)
      throw UsageError("observation needs one value per ring parameter");
    for (const auto& s : slots) spec[k].push_back(s.specialize_params(o.values));
    if (!o.relation.ring()) throw UsageError("observed relation must carry a ring");
    obs[k] = transport(o.relation, R);
    for (const auto& term : obs[k].terms())
      if (!term.c.is_constant())
        throw UsageError("observed relation must be fully specialized");
  }

  // one unknown per (slot, ansatz monomial); one equation per ring monomial
  // per observation
  const std::size_t nu = slots.size() * ansatz.size();
  std::vector<std::vector<Scalar>> arows;
  std::vector<Scalar> b;
  for (std::size_t k = 0; k < observations.size(); ++k) {
    std::set<std::array<std::uint16_t, kMaxVars>> monos;
    for (const auto& p : spec[k])
      for (const auto& term : p.terms()) monos.insert(term.m.e);
    for (const auto& term : obs[k].terms()) monos.insert(term.m.e);
    std::vector<Scalar> avals;
    for (const auto& am : ansatz) avals.push_back(mono_eval(am, observations[k].values, f));
    for (const auto& me : monos) {
      Monomial m;
      m.e = me;
      std::vector<Scalar> row(nu, Scalar::zero(f));
      for (std::size_t i = 0; i < slots.size(); ++i) {
        Scalar sc = spec[k][i].coeff_of(m).constant_value(f);
        if (sc.is_zero()) continue;
        for (std::size_t j = 0; j < ansatz.size(); ++j)
          row[i * ansatz.size() + j] = sc * avals[j];
      }
      arows.push_back(std::move(row));
      b.push_back(obs[k].coeff_of(m).constant_value(f));
    }
  }

  ScalarMat A(0, nu, f);
  for (const auto& row : arows) A.append_row(row);
  auto sol = A.solve(b, /*require_unique=*/true);
  if (sol.status == SolveStatus::underdetermined)
    throw MathError("under-determined coefficient system: rank " + std::to_string(A.rank()) +
                    " with " + std::to_string(nu) + " unknowns; add specializations");
  if (sol.status == SolveStatus::inconsistent)
    throw MathError("inconsistent observations: no exact coefficient assignment exists");

  std::vector<ParamPoly> out;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    std::vector<std::pair<Monomial, Scalar>> raw;
    for (std::size_t j = 0; j < ansatz.size(); ++j)
      raw.push_back({ansatz[j], sol.x[i * ansatz.size() + j]});
    out.push_back(ParamPoly::make(std::move(raw)));
  }

  // solved means re-checkable: every observation must reproduce on the nose
  for (std::size_t k = 0; k < observations.size(); ++k) {
    Polynomial acc = Polynomial::zero(R);
    for (std::size_t i = 0; i < slots.size(); ++i)
      acc = acc + spec[k][i].scale(out[i].evaluate(observations[k].values, f));
    if (acc.str() != obs[k].str())
      throw MathError("inconsistent observations: no exact coefficient assignment exists");
  }
  return out;
}

std::vector<Scalar> default_points(int count, const Field& f, const Polynomial& correction) {
  if (count < 0) throw UsageError("point count must be nonnegative");
  std::vector<Scalar> out;
  std::set<std::string> seen;
  const Scalar one = Scalar::one(f);
  for (long k = 2; static_cast<int>(out.size()) < count; ++k) {
    if (k > 1000000) throw ResourceError("field exhausted while picking sample points");
    Scalar pt = Scalar::from_int(k, f);
    if (pt.is_zero() || pt == one || pt == -one) continue;
    if (!seen.insert(pt.str()).second) continue;
    if (correction.ring() && correction_value(correction, pt, f).is_zero()) continue;
    out.push_back(pt);
  }
  return out;
}

std::vector<Scalar> prime_points(int count, const Field& f, std::uint64_t from) {
  if (count < 0) throw UsageError("point count must be nonnegative");
  std::vector<Scalar> out;
  std::set<std::string> seen;
  for (std::uint64_t n = from < 2 ? 2 : from; static_cast<int>(out.size()) < count; ++n) {
    if (n > 1000000000ull) throw ResourceError("field exhausted while picking prime points");
    if (!algebra::is_prime_u64(n)) continue;
    Scalar pt = Scalar::from_int(static_cast<long>(n), f);
    if (pt.is_zero()) continue;
    if (!seen.insert(pt.str()).second) continue;
    out.push_back(pt);
  }
  return out;
}

}  // namespace godeaux::interp
