#include "godeaux/hilbert.hpp"

#include <algorithm>

namespace godeaux::gb {

using algebra::kMaxVars;

namespace {

using ZPoly = std::vector<mpz_class>;  // dense in one formal variable

ZPoly zp_one() { return {mpz_class(1)}; }

void zp_trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

ZPoly zp_add_shifted(const ZPoly& a, const ZPoly& b, long shift) {
  ZPoly r = a;
  if (r.size() < b.size() + shift) r.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] += b[i];
  zp_trim(r);
  return r;
}

// multiply by (1 - t^d)
ZPoly zp_mul_one_minus(const ZPoly& a, long d) {
  ZPoly r = a;
  r.resize(a.size() + d, 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i + d] -= a[i];
  zp_trim(r);
  return r;
}

// exact division by (1 - t); throws if inexact
ZPoly zp_div_one_minus_t(const ZPoly& a) {
  if (a.empty()) return {};
  ZPoly q(a.size() - 1, 0);
  mpz_class carry = 0;
  // a = (1-t) q  =>  q_i = a_i + q_{i-1}
  for (std::size_t i = 0; i + 1 < a.size(); ++i) {
    carry += a[i];
    q[i] = carry;
  }
  if (carry + a.back() != 0) throw MathError("Hilbert numerator not divisible by 1-t");
  zp_trim(q);
  return q;
}

mpz_class zp_eval_one(const ZPoly& a) {
  mpz_class s = 0;
  for (const auto& c : a) s += c;
  return s;
}

struct MonIdeal {
  std::vector<Monomial> gens;  // minimal generators
  const Ring* ring;
};

std::string key_of(const std::vector<Monomial>& gens) {
  std::vector<std::string> parts;
  parts.reserve(gens.size());
  for (const Monomial& m : gens) {
    std::string s;
    for (int i = 0; i < kMaxVars; ++i) s += std::to_string(m.e[i]) + ",";
    parts.push_back(std::move(s));
  }
  std::sort(parts.begin(), parts.end());
  std::string k;
  for (auto& p : parts) k += p + ";";
  return k;
}

void minimalize(std::vector<Monomial>& gens) {
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    return a.total_degree() < b.total_degree();
  });
  std::vector<Monomial> out;
  for (const Monomial& m : gens) {
    bool covered = false;
    for (const Monomial& kept : out)
      if (kept.divides(m)) {
        covered = true;
        break;
      }
    if (!covered) out.push_back(m);
  }
  gens = std::move(out);
}

// numerator of the Hilbert series of R/<gens>, by splitting on the most
// shared variable: N(I) = N(I + x) + t^w * N(I : x)
ZPoly numerator(const Ring& R, std::vector<Monomial> gens,
                std::map<std::string, ZPoly>& memo, BudgetClock& clock) {
  clock.count_step();
  minimalize(gens);
  if (gens.empty()) return zp_one();
  if (gens.size() == 1 && gens[0].is_unit()) return {};  // R/<1> = 0

  std::string key = key_of(gens);
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  int best = -1, best_freq = 0;
  for (int j = 0; j < R.nvars(); ++j) {
    int freq = 0;
    for (const Monomial& m : gens)
      if (m.e[j]) ++freq;
    if (freq > best_freq) {
      best_freq = freq;
      best = j;
    }
  }

  ZPoly result;
  if (best_freq <= 1) {
    // supports are disjoint: the generators form a regular sequence
    result = zp_one();
    for (const Monomial& m : gens) result = zp_mul_one_minus(result, R.degree(m));
  } else {
    std::vector<Monomial> plus;  // gens not involving x_best, plus x_best itself
    plus.push_back(Monomial::var(best, 1));
    std::vector<Monomial> colon;
    for (const Monomial& m : gens) {
      if (!m.e[best]) plus.push_back(m);
      Monomial q = m;
      if (q.e[best]) --q.e[best];
      colon.push_back(q);
    }
    ZPoly a = numerator(R, std::move(plus), memo, clock);
    ZPoly b = numerator(R, std::move(colon), memo, clock);
    result = zp_add_shifted(a, b, R.weight(best));
  }
  memo.emplace(std::move(key), result);
  return result;
}

// Krull dimension of R/<gens>: the largest variable set containing no
// generator's support (complement is a vertex cover of the supports)
int krull_dimension(const Ring& R, const std::vector<Monomial>& gens) {
  int n = R.nvars();
  std::vector<unsigned> supports;
  for (const Monomial& m : gens) {
    unsigned s = 0;
    for (int i = 0; i < n; ++i)
      if (m.e[i]) s |= 1u << i;
    if (s == 0) return -1;  // unit generator, empty scheme
    supports.push_back(s);
  }
  int bestsz = -1;
  for (unsigned S = 0; S < (1u << n); ++S) {
    int sz = __builtin_popcount(S);
    if (sz <= bestsz) continue;
    bool ok = true;
    for (unsigned s : supports)
      if ((s & ~S) == 0) {
        ok = false;
        break;
      }
    if (ok) bestsz = sz;
  }
  return bestsz;
}

}  // namespace

std::string HilbertData::numerator_str() const {
  if (series_numerator.empty()) return "0";
  std::string s;
  bool first = true;
  for (std::size_t i = 0; i < series_numerator.size(); ++i) {
    const mpz_class& c = series_numerator[i];
    if (c == 0) continue;
    mpz_class abs = c < 0 ? mpz_class(-c) : c;
    if (first) {
      if (c < 0) s += "-";
      first = false;
    } else {
      s += c < 0 ? "-" : "+";
    }
    std::string body;
    if (i == 0) {
      body = abs.get_str();
    } else {
      if (abs != 1) body = abs.get_str() + "*";
      body += "t";
      if (i > 1) body += "^" + std::to_string(i);
    }
    s += body;
  }
  return first ? "0" : s;
}

HilbertData hilbert_data(const Ideal& I, long prefix_len, const GBOptions& opts) {
  const Ring& R = *I.ring();
  for (const Polynomial& g : I.gens())
    if (!g.is_homogeneous())
      throw UsageError("hilbert_data needs a homogeneous ideal");

  GroebnerBasis B = groebner_basis(I, Order::wgrevlex(), opts);
  std::vector<Monomial> lts;
  lts.reserve(B.elems.size());
  for (const Polynomial& g : B.elems) lts.push_back(g.leading_monomial());

  HilbertData out;
  BudgetClock clock(opts.budget);
  std::map<std::string, ZPoly> memo;
  ZPoly N = numerator(R, lts, memo, clock);
  out.series_numerator = N;

  int krull = krull_dimension(R, lts);
  out.dimension = krull - 1;  // projective convention; -2 never occurs (krull >= -1)
  if (krull < 0) out.dimension = -1;

  // degree: strip the (1-t) factors down to the pole order, evaluate at 1
  if (N.empty()) {
    out.degree = 0;
  } else {
    ZPoly red = N;
    for (int i = 0; i < R.nvars() - std::max(krull, 0); ++i)
      red = zp_div_one_minus_t(red);
    mpz_class wprod = 1;
    for (int i = 0; i < R.nvars(); ++i) wprod *= R.weight(i);
    out.degree = mpq_class(zp_eval_one(red)) / mpq_class(wprod);
    out.degree.canonicalize();
  }

  // graded dimensions: expand N / prod (1 - t^{w_i}) as a power series
  if (prefix_len >= 0) {
    std::vector<mpz_class> c(prefix_len + 1, 0);
    for (std::size_t i = 0; i < N.size() && i <= static_cast<std::size_t>(prefix_len); ++i)
      c[i] = N[i];
    for (int v = 0; v < R.nvars(); ++v) {
      long w = R.weight(v);
      for (long k = w; k <= prefix_len; ++k) c[k] += c[k - w];
    }
    for (long n = 0; n <= prefix_len; ++n) out.hilbert_function[n] = c[n];
  }
  return out;
}

DimDeg dimension_degree(const Ideal& I, const GBOptions& opts) {
  HilbertData h = hilbert_data(I, -1, opts);
  return {h.dimension, h.degree};
}

}  // namespace godeaux::gb
