#include "godeaux/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "godeaux/gbcache.hpp"
#include "godeaux/parse.hpp"
#include "godeaux/ringmap.hpp"
#include "godeaux/sha256.hpp"

namespace godeaux::gb {

using algebra::Field;
using algebra::require_same_ring;
using algebra::Term;
using algebra::transport;

namespace {

// ---------------------------------------------------------------------------
// The engine works on elements of a free module R^rank so that ideals
// (rank 1), syzygy computations and matrix lifts all run through one
// Buchberger loop. Positions below `split` dominate positions above it;
// elements supported entirely on the tail block therefore encode relations
// among the head block, which is what the syzygy and lift embeddings use.

struct MTerm {
  int pos;
  Monomial m;
  ParamPoly c;
};

struct MVec {
  std::vector<MTerm> t;  // sorted descending
  bool zero() const { return t.empty(); }
  const MTerm& lead() const { return t.front(); }
};

struct Ctx {
  RingPtr ring;
  Order ord;
  int split = 1;
  bool rank1 = true;  // enables the coprime pair criterion (invalid for modules)

  int cmp(const MTerm& a, const MTerm& b) const {
    int ba = a.pos < split ? 0 : 1, bb = b.pos < split ? 0 : 1;
    if (ba != bb) return ba < bb ? 1 : -1;
    if (a.pos != b.pos) return a.pos < b.pos ? 1 : -1;
    return ord.cmp(a.m, b.m, *ring);
  }
};

MVec mv_sub(const Ctx& cx, const MVec& a, const MVec& b) {
  MVec r;
  r.t.reserve(a.t.size() + b.t.size());
  std::size_t i = 0, j = 0;
  while (i < a.t.size() && j < b.t.size()) {
    int c = cx.cmp(a.t[i], b.t[j]);
    if (c > 0) {
      r.t.push_back(a.t[i++]);
    } else if (c < 0) {
      r.t.push_back({b.t[j].pos, b.t[j].m, -b.t[j].c});
      ++j;
    } else {
      ParamPoly d = a.t[i].c - b.t[j].c;
      if (!d.is_zero()) r.t.push_back({a.t[i].pos, a.t[i].m, std::move(d)});
      ++i;
      ++j;
    }
  }
  for (; i < a.t.size(); ++i) r.t.push_back(a.t[i]);
  for (; j < b.t.size(); ++j) r.t.push_back({b.t[j].pos, b.t[j].m, -b.t[j].c});
  return r;
}

MVec mv_mul_term(const MVec& a, const Monomial& mono, const ParamPoly& c) {
  MVec r;
  r.t.reserve(a.t.size());
  for (const auto& t : a.t) r.t.push_back({t.pos, t.m * mono, t.c * c});
  return r;
}

MVec mv_scale(const MVec& a, const ParamPoly& c) {
  MVec r;
  r.t.reserve(a.t.size());
  for (const auto& t : a.t) r.t.push_back({t.pos, t.m, t.c * c});
  return r;
}

// scale so the leading coefficient is 1 (constant case) or has leading
// parameter coefficient 1; keeps printed bases canonical
void mv_make_canonical(const Ctx& cx, MVec& v) {
  if (v.zero()) return;
  const Field& F = cx.ring->field();
  const ParamPoly& lc = v.lead().c;
  Scalar u = lc.is_constant() ? lc.constant_value(F).inverse()
                              : lc.terms().front().second.inverse();
  if (u == Scalar::one(F)) return;
  for (auto& t : v.t) t.c = t.c.scale(u);
}

// Full reduction. Exact coefficient division is used whenever it succeeds;
// against a parameter-valued leading coefficient that does not divide, the
// allow_pseudo path cross-multiplies the whole work element (valid over the
// parameter fraction field, and the produced element still lies in the
// module). With allow_pseudo off such a step throws instead, which is what
// matrix lifting wants.
MVec mv_normal_form(const Ctx& cx, MVec f, const std::vector<MVec>& basis,
                    const std::vector<char>* usable, bool allow_pseudo,
                    bool* pseudo_used, BudgetClock* clock) {
  const Field& F = cx.ring->field();
  MVec rem;
  while (!f.zero()) {
    if (clock) clock->count_step();
    const MTerm lt = f.lead();
    const MVec* g = nullptr;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (usable && !(*usable)[k]) continue;
      if (basis[k].zero()) continue;
      const MTerm& cl = basis[k].lead();
      if (cl.pos == lt.pos && cl.m.divides(lt.m)) {
        g = &basis[k];
        break;
      }
    }
    if (!g) {
      rem.t.push_back(lt);
      f.t.erase(f.t.begin());
      continue;
    }
    Monomial shift = lt.m.div(g->lead().m);
    const ParamPoly& gc = g->lead().c;
    if (gc.is_constant()) {
      ParamPoly q = lt.c.scale(gc.constant_value(F).inverse());
      f = mv_sub(cx, f, mv_mul_term(*g, shift, q));
      continue;
    }
    bool exact = true;
    ParamPoly q;
    try {
      q = lt.c.divide_exact(gc, F);
    } catch (const MathError&) {
      exact = false;
    }
    if (exact) {
      f = mv_sub(cx, f, mv_mul_term(*g, shift, q));
    } else if (allow_pseudo) {
      if (pseudo_used) *pseudo_used = true;
      f = mv_sub(cx, mv_scale(f, gc), mv_mul_term(*g, shift, lt.c));
      if (!rem.zero()) rem = mv_scale(rem, gc);
    } else {
      throw MathError("no solution: coefficient division by a parameter-valued leading term");
    }
  }
  return rem;
}

MVec mv_spair(const Ctx& cx, const MVec& f, const MVec& g) {
  const MTerm& lf = f.lead();
  const MTerm& lg = g.lead();
  Monomial L = lf.m.lcm(lg.m);
  return mv_sub(cx, mv_mul_term(f, L.div(lf.m), lg.c),
                mv_mul_term(g, L.div(lg.m), lf.c));
}

struct Pair {
  int i, j;
  Monomial lcm;
  long deg;
};

std::vector<MVec> mv_buchberger(const Ctx& cx, std::vector<MVec> input,
                                const GBOptions& opts, bool* pseudo_used) {
  BudgetClock clock(opts.budget);
  const Ring& R = *cx.ring;
  std::vector<MVec> basis;
  std::vector<char> alive;
  std::vector<Pair> pairs;

  // Gebauer-Moller pair update for a freshly added element h.
  auto update = [&](int h) {
    const MTerm& lh = basis[h].lead();

    struct Cand {
      int g;
      Monomial l;
      bool coprime;
    };
    std::vector<Cand> cands;
    for (int g = 0; g < h; ++g) {
      if (!alive[g] || basis[g].zero()) continue;
      const MTerm& lg = basis[g].lead();
      if (lg.pos != lh.pos) continue;
      cands.push_back({g, lg.m.lcm(lh.m), cx.rank1 && lg.m.coprime(lh.m)});
    }

    // keep a candidate unless another candidate's lcm divides its lcm;
    // coprime candidates still act as blockers, then drop at the end
    std::vector<int> kept;
    std::vector<char> pending(cands.size(), 1);
    for (std::size_t i = 0; i < cands.size(); ++i) {
      pending[i] = 0;
      bool kill = false;
      if (!cands[i].coprime) {
        for (std::size_t j = 0; j < cands.size() && !kill; ++j) {
          if (j == i) continue;
          bool active = pending[j] ||
                        std::find(kept.begin(), kept.end(), static_cast<int>(j)) != kept.end();
          if (active && cands[j].l.divides(cands[i].l)) kill = true;
        }
      }
      if (!kill) kept.push_back(static_cast<int>(i));
    }

    // chain criterion against the existing queue
    std::vector<Pair> survivors;
    survivors.reserve(pairs.size() + kept.size());
    for (const Pair& p : pairs) {
      bool drop = basis[p.i].lead().pos == lh.pos && lh.m.divides(p.lcm) &&
                  basis[p.i].lead().m.lcm(lh.m) != p.lcm &&
                  basis[p.j].lead().m.lcm(lh.m) != p.lcm;
      if (!drop) survivors.push_back(p);
    }
    for (int idx : kept) {
      if (cands[idx].coprime) continue;
      survivors.push_back({cands[idx].g, h, cands[idx].l, R.degree(cands[idx].l)});
    }
    pairs = std::move(survivors);

    // retire elements whose lead becomes divisible; they stay as reducers
    for (int g = 0; g < h; ++g) {
      if (!alive[g] || basis[g].zero()) continue;
      const MTerm& lg = basis[g].lead();
      if (lg.pos == lh.pos && lh.m.divides(lg.m)) alive[g] = 0;
    }
  };

  for (MVec& v : input) {
    if (v.zero()) continue;
    mv_make_canonical(cx, v);
    basis.push_back(std::move(v));
    alive.push_back(1);
    clock.count_basis(basis.size());
    update(static_cast<int>(basis.size()) - 1);
  }

  std::uint64_t done = 0;
  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs.size(); ++k) {
      const Pair& a = pairs[k];
      const Pair& b = pairs[best];
      bool better = a.deg != b.deg ? a.deg < b.deg
                    : a.i != b.i   ? a.i < b.i
                                   : a.j < b.j;
      if (better) best = k;
    }
    Pair p = pairs[best];
    pairs.erase(pairs.begin() + best);
    if (opts.degree_cap >= 0 && p.deg > opts.degree_cap) continue;
    clock.count_pair();
    ++done;
    if (opts.progress && (done & 63) == 0) opts.progress("spairs", done, pairs.size());

    MVec r = mv_normal_form(cx, mv_spair(cx, basis[p.i], basis[p.j]), basis,
                            nullptr, true, pseudo_used, &clock);
    if (r.zero()) continue;
    mv_make_canonical(cx, r);
    basis.push_back(std::move(r));
    alive.push_back(1);
    clock.count_basis(basis.size());
    update(static_cast<int>(basis.size()) - 1);
  }

  // minimalize: smallest leads first, drop anything an earlier lead divides
  std::vector<int> idx;
  for (std::size_t k = 0; k < basis.size(); ++k)
    if (!basis[k].zero()) idx.push_back(static_cast<int>(k));
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    int c = cx.cmp(basis[a].lead(), basis[b].lead());
    if (c != 0) return c < 0;
    return a < b;
  });
  std::vector<MVec> minimal;
  for (int k : idx) {
    const MTerm& lk = basis[k].lead();
    bool covered = false;
    for (const MVec& kept : minimal) {
      const MTerm& lm = kept.lead();
      if (lm.pos == lk.pos && lm.m.divides(lk.m)) {
        covered = true;
        break;
      }
    }
    if (!covered) minimal.push_back(basis[k]);
  }

  // tail-reduce each element against the others
  std::vector<char> mask(minimal.size(), 1);
  for (std::size_t k = 0; k < minimal.size(); ++k) {
    mask[k] = 0;
    MVec red = mv_normal_form(cx, minimal[k], minimal, &mask, true, pseudo_used, &clock);
    mask[k] = 1;
    if (!red.zero()) {
      mv_make_canonical(cx, red);
      minimal[k] = std::move(red);
    }
  }

  std::sort(minimal.begin(), minimal.end(), [&](const MVec& a, const MVec& b) {
    return cx.cmp(a.lead(), b.lead()) < 0;
  });
  return minimal;
}

MVec to_mvec(const Ctx& cx, const std::vector<std::pair<int, const Polynomial*>>& parts) {
  MVec v;
  for (const auto& [pos, poly] : parts)
    for (const Term& t : poly->terms()) v.t.push_back({pos, t.m, t.c});
  std::sort(v.t.begin(), v.t.end(),
            [&](const MTerm& a, const MTerm& b) { return cx.cmp(a, b) > 0; });
  return v;
}

Polynomial slice(const Ctx& cx, const MVec& v, int pos) {
  std::vector<Term> raw;
  for (const MTerm& t : v.t)
    if (t.pos == pos) raw.push_back({t.m, t.c});
  return Polynomial::from_terms(cx.ring, cx.ord, std::move(raw));
}

std::vector<MVec> basis_to_mvecs(const Ctx& cx, const GroebnerBasis& B) {
  std::vector<MVec> out;
  out.reserve(B.elems.size());
  for (const Polynomial& g : B.elems) out.push_back(to_mvec(cx, {{0, &g}}));
  return out;
}

std::string fresh_var_name(const Ring& R, const std::string& stem) {
  for (int k = 0;; ++k) {
    std::string name = stem + std::to_string(k);
    if (R.var_index(name) < 0 && R.param_index(name) < 0) return name;
  }
}

}  // namespace

// ---------------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens)
    : ring_(std::move(ring)), box_(std::make_shared<CacheBox>()) {
  if (!ring_) throw UsageError("ideal needs a ring");
  for (Polynomial& g : gens) {
    if (g.is_zero()) continue;
    require_same_ring(ring_, g.ring());
    gens_.push_back(std::move(g));
  }
}

std::optional<GroebnerBasis> Ideal::cached(const Order& o, long cap) const {
  if (!box_) return std::nullopt;
  std::lock_guard<std::mutex> lock(box_->mu);
  auto it = box_->bases.find({static_cast<int>(o.kind), o.front, cap});
  if (it == box_->bases.end()) return std::nullopt;
  return it->second;
}

void Ideal::remember(const GroebnerBasis& b) const {
  if (!box_) return;
  std::lock_guard<std::mutex> lock(box_->mu);
  box_->bases.emplace(std::tuple{static_cast<int>(b.order.kind), b.order.front, b.degree_cap}, b);
}

std::string gb_cache_key(const Ideal& I, const Order& order, long degree_cap) {
  std::string s = I.ring()->describe();
  s += "\norder " + order.str();
  s += "\ncap " + std::to_string(degree_cap);
  for (const Polynomial& g : I.gens()) s += "\n" + g.str();
  return sha256_hex(s);
}

GroebnerBasis groebner_basis(const Ideal& I, const Order& order, const GBOptions& opts) {
  if (!I.ring()) throw UsageError("groebner_basis needs an ideal with a ring");
  if (auto hit = I.cached(order, opts.degree_cap)) return *hit;

  std::string key;
  if (opts.cache) {
    key = gb_cache_key(I, order, opts.degree_cap);
    if (auto lines = opts.cache->load(key)) {
      GroebnerBasis B{I.ring(), order, opts.degree_cap, {}};
      for (const std::string& line : *lines)
        B.elems.push_back(algebra::parse_polynomial(I.ring(), line).reorder(order));
      I.remember(B);
      return B;
    }
  }

  Ctx cx{I.ring(), order, 1, true};
  std::vector<MVec> in;
  in.reserve(I.gens().size());
  for (const Polynomial& g : I.gens()) in.push_back(to_mvec(cx, {{0, &g}}));
  bool pseudo = false;
  std::vector<MVec> out = mv_buchberger(cx, std::move(in), opts, &pseudo);

  GroebnerBasis B{I.ring(), order, opts.degree_cap, {}};
  B.elems.reserve(out.size());
  for (const MVec& v : out) B.elems.push_back(slice(cx, v, 0));
  I.remember(B);
  if (opts.cache) {
    std::vector<std::string> lines;
    lines.reserve(B.elems.size());
    for (const Polynomial& g : B.elems) lines.push_back(g.str());
    opts.cache->store(key, lines);
  }
  return B;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& B) {
  if (!B.ring) throw UsageError("normal_form needs a basis with a ring");
  require_same_ring(B.ring, f.ring());
  Ctx cx{B.ring, B.order, 1, true};
  std::vector<MVec> basis = basis_to_mvecs(cx, B);
  MVec rem = mv_normal_form(cx, to_mvec(cx, {{0, &f}}), basis, nullptr, true,
                            nullptr, nullptr);
  return slice(cx, rem, 0);
}

bool reduces_to_zero(const Polynomial& f, const GroebnerBasis& B) {
  return normal_form(f, B).is_zero();
}

Ideal ideal_sum(const Ideal& I, const std::vector<Polynomial>& extra) {
  std::vector<Polynomial> gens = I.gens();
  for (const Polynomial& g : extra) gens.push_back(g);
  return Ideal(I.ring(), std::move(gens));
}

Ideal eliminate(const Ideal& I, const std::vector<std::string>& drop,
                const GBOptions& opts) {
  const Ring& R = *I.ring();
  std::set<int> dropped;
  for (const std::string& name : drop) {
    int vi = R.var_index(name);
    if (vi < 0) throw UsageError("eliminate: unknown variable " + name);
    dropped.insert(vi);
  }
  if (dropped.empty()) return I;
  if (static_cast<int>(dropped.size()) == R.nvars())
    throw UsageError("eliminate: cannot drop every variable");

  std::vector<std::string> vars2;
  std::vector<long> w2;
  for (int i = 0; i < R.nvars(); ++i)
    if (dropped.count(i)) {
      vars2.push_back(R.vars()[i]);
      w2.push_back(R.weight(i));
    }
  int front = static_cast<int>(vars2.size());
  std::vector<std::string> back_vars;
  std::vector<long> back_w;
  for (int i = 0; i < R.nvars(); ++i)
    if (!dropped.count(i)) {
      vars2.push_back(R.vars()[i]);
      w2.push_back(R.weight(i));
      back_vars.push_back(R.vars()[i]);
      back_w.push_back(R.weight(i));
    }

  RingPtr big = algebra::make_ring(R.field(), vars2, w2, R.params());
  Ideal J(big, transport(I.gens(), big));
  GroebnerBasis B = groebner_basis(J, Order::elim(front), opts);

  RingPtr sub = algebra::make_ring(R.field(), back_vars, back_w, R.params());
  std::vector<Polynomial> kept;
  for (const Polynomial& e : B.elems) {
    bool touches = false;
    for (const Term& t : e.terms())
      for (int i = 0; i < front && !touches; ++i)
        if (t.m.e[i]) touches = true;
    if (!touches) kept.push_back(transport(e, sub));
  }
  return Ideal(sub, std::move(kept));
}

Ideal intersect(const Ideal& I, const Ideal& J, const GBOptions& opts) {
  require_same_ring(I.ring(), J.ring());
  if (I.is_zero()) return I;
  if (J.is_zero()) return J;
  const Ring& R = *I.ring();

  std::string tname = fresh_var_name(R, "t");
  std::vector<std::string> vars2{tname};
  std::vector<long> w2{1};
  for (int i = 0; i < R.nvars(); ++i) {
    vars2.push_back(R.vars()[i]);
    w2.push_back(R.weight(i));
  }
  RingPtr big = algebra::make_ring(R.field(), vars2, w2, R.params());
  Polynomial t = Polynomial::variable(big, 0);
  Polynomial one_minus_t = Polynomial::from_int(big, 1) - t;

  std::vector<Polynomial> gens;
  for (const Polynomial& g : I.gens()) gens.push_back(t * transport(g, big));
  for (const Polynomial& h : J.gens()) gens.push_back(one_minus_t * transport(h, big));

  GroebnerBasis B = groebner_basis(Ideal(big, std::move(gens)), Order::elim(1), opts);
  std::vector<Polynomial> kept;
  for (const Polynomial& e : B.elems) {
    bool touches = false;
    for (const Term& term : e.terms())
      if (term.m.e[0]) touches = true;
    if (!touches) kept.push_back(transport(e, I.ring()));
  }
  return Ideal(I.ring(), std::move(kept));
}

Polynomial poly_divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw MathError("division by the zero polynomial");
  require_same_ring(f.ring(), g.ring());
  const Field& F = f.ring()->field();
  Order ord = g.order();
  Polynomial r = f.order() == ord ? f : f.reorder(ord);
  Polynomial q(f.ring(), ord);
  const Monomial& gm = g.leading_monomial();
  const ParamPoly& gc = g.leading_coeff();
  while (!r.is_zero()) {
    const Term& lt = r.leading_term();
    if (!gm.divides(lt.m)) throw MathError("inexact polynomial division");
    ParamPoly qc = gc.is_constant() ? lt.c.scale(gc.constant_value(F).inverse())
                                    : lt.c.divide_exact(gc, F);
    Monomial shift = lt.m.div(gm);
    q = q + Polynomial::monomial(f.ring(), shift, qc);
    r = r - g.mul_term(shift, qc);
  }
  return q;
}

Ideal ideal_quotient_single(const Ideal& I, const Polynomial& f, const GBOptions& opts) {
  if (f.is_zero()) throw UsageError("ideal quotient by the zero polynomial");
  require_same_ring(I.ring(), f.ring());
  if (f.degree() == 0) return I;  // unit (generically in the parameters)
  Ideal meet = intersect(I, Ideal(I.ring(), {f}), opts);
  std::vector<Polynomial> gens;
  gens.reserve(meet.gens().size());
  for (const Polynomial& g : meet.gens()) gens.push_back(poly_divide_exact(g, f));
  return Ideal(I.ring(), std::move(gens));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J, const GBOptions& opts) {
  require_same_ring(I.ring(), J.ring());
  if (J.is_zero()) {
    // (I : 0) is everything
    return Ideal(I.ring(), {Polynomial::from_int(I.ring(), 1)});
  }
  bool first = true;
  Ideal acc;
  for (const Polynomial& f : J.gens()) {
    Ideal q = ideal_quotient_single(I, f, opts);
    acc = first ? q : intersect(acc, q, opts);
    first = false;
  }
  return acc;
}

bool ideal_contains(const Ideal& I, const Ideal& J, const GBOptions& opts) {
  require_same_ring(I.ring(), J.ring());
  GroebnerBasis B = groebner_basis(I, Order::wgrevlex(), opts);
  for (const Polynomial& g : J.gens())
    if (!reduces_to_zero(g, B)) return false;
  return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GBOptions& opts) {
  return ideal_contains(I, J, opts) && ideal_contains(J, I, opts);
}

Ideal saturate(const Ideal& I, const Polynomial& f, const GBOptions& opts) {
  if (f.is_zero()) throw UsageError("saturation by the zero polynomial");
  BudgetClock clock(opts.budget);
  Ideal cur = I;
  for (;;) {
    clock.count_step();
    Ideal nxt = ideal_quotient_single(cur, f, opts);
    if (ideal_contains(cur, nxt, opts)) return cur;  // cur grows monotonically
    cur = nxt;
  }
}

Ideal trim_generators(const Ideal& I, const GBOptions& opts) {
  std::vector<Polynomial> gens = I.gens();
  std::stable_sort(gens.begin(), gens.end(), [](const Polynomial& a, const Polynomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.str() < b.str();
  });
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gens) {
    if (kept.empty()) {
      kept.push_back(g);
      continue;
    }
    GroebnerBasis B = groebner_basis(Ideal(I.ring(), kept), Order::wgrevlex(), opts);
    if (!reduces_to_zero(g, B)) kept.push_back(g);
  }
  return Ideal(I.ring(), std::move(kept));
}

// ---------------------------------------------------------------------------
// module layer

namespace {

// shared layout for syzygies and lifts: rank head positions carry the data,
// one tail position per input generator carries its tag
struct Embedding {
  Ctx cx;
  std::vector<MVec> vecs;
  int rank;
  int count;
};

Embedding embed(const RingPtr& ring, const Order& order, int rank,
                const std::vector<std::vector<const Polynomial*>>& columns) {
  Embedding e;
  e.cx = Ctx{ring, order, rank, false};
  e.rank = rank;
  e.count = static_cast<int>(columns.size());
  ParamPoly one = ParamPoly::constant(Scalar::one(ring->field()));
  for (int j = 0; j < e.count; ++j) {
    std::vector<std::pair<int, const Polynomial*>> parts;
    for (int p = 0; p < rank; ++p)
      if (columns[j][p] && !columns[j][p]->is_zero()) parts.push_back({p, columns[j][p]});
    MVec v = to_mvec(e.cx, parts);
    MTerm tag{rank + j, Monomial::unit(), one};
    // tags sit in the tail block, strictly below every head term
    v.t.push_back(tag);
    e.vecs.push_back(std::move(v));
  }
  return e;
}

}  // namespace

std::vector<FreeModuleVector> syzygies(const std::vector<FreeModuleVector>& gens,
                                       const Order& order, const GBOptions& opts) {
  if (gens.empty()) return {};
  std::size_t rank = gens.front().entries.size();
  if (rank == 0) throw UsageError("syzygies of rank-0 vectors");
  RingPtr ring;
  for (const auto& g : gens) {
    if (g.entries.size() != rank)
      throw UsageError("syzygies: all vectors must share one rank");
    for (const Polynomial& p : g.entries)
      if (p.ring()) {
        if (!ring) ring = p.ring();
        require_same_ring(ring, p.ring());
      }
  }
  if (!ring) throw UsageError("syzygies: no ring (all entries empty)");

  std::vector<std::vector<const Polynomial*>> columns;
  for (const auto& g : gens) {
    std::vector<const Polynomial*> col;
    for (const Polynomial& p : g.entries) col.push_back(&p);
    columns.push_back(std::move(col));
  }
  Embedding e = embed(ring, order, static_cast<int>(rank), columns);
  bool pseudo = false;
  std::vector<MVec> out = mv_buchberger(e.cx, std::move(e.vecs), opts, &pseudo);

  std::vector<FreeModuleVector> syz;
  for (const MVec& v : out) {
    if (v.zero() || v.lead().pos < e.rank) continue;  // head survives: not a syzygy
    FreeModuleVector s;
    for (int j = 0; j < e.count; ++j) s.entries.push_back(slice(e.cx, v, e.rank + j));
    syz.push_back(std::move(s));
  }
  return syz;
}

PolyMatrix lift_matrix_solution(const PolyMatrix& P, const PolyMatrix& H,
                                const Order& order, const GBOptions& opts) {
  if (P.empty() || H.empty()) throw UsageError("lift needs nonempty matrices");
  std::size_t rows = P.size();
  if (H.size() != rows) throw UsageError("lift: row counts differ");
  std::size_t k = P.front().size(), c = H.front().size();
  RingPtr ring;
  auto note_ring = [&](const Polynomial& p) {
    if (!p.ring()) throw UsageError("lift: matrix entry without a ring");
    if (!ring) ring = p.ring();
    require_same_ring(ring, p.ring());
  };
  for (const auto& row : P) {
    if (row.size() != k) throw UsageError("lift: ragged matrix");
    for (const auto& p : row) note_ring(p);
  }
  for (const auto& row : H) {
    if (row.size() != c) throw UsageError("lift: ragged matrix");
    for (const auto& p : row) note_ring(p);
  }

  std::vector<std::vector<const Polynomial*>> columns(k);
  for (std::size_t j = 0; j < k; ++j) {
    columns[j].resize(rows);
    for (std::size_t i = 0; i < rows; ++i) columns[j][i] = &P[i][j];
  }
  Embedding e = embed(ring, order, static_cast<int>(rows), columns);
  bool pseudo = false;
  std::vector<MVec> basis = mv_buchberger(e.cx, std::move(e.vecs), opts, &pseudo);

  Polynomial zero = Polynomial::zero(ring);
  PolyMatrix N(k, std::vector<Polynomial>(c, zero));
  BudgetClock clock(opts.budget);
  for (std::size_t col = 0; col < c; ++col) {
    std::vector<std::pair<int, const Polynomial*>> parts;
    for (std::size_t i = 0; i < rows; ++i)
      if (!H[i][col].is_zero()) parts.push_back({static_cast<int>(i), &H[i][col]});
    MVec rem = mv_normal_form(e.cx, to_mvec(e.cx, parts), basis, nullptr,
                              /*allow_pseudo=*/false, nullptr, &clock);
    for (const MTerm& t : rem.t)
      if (t.pos < e.rank)
        throw MathError("no solution: column " + std::to_string(col) +
                        " is outside the span of the matrix columns");
    for (std::size_t j = 0; j < k; ++j)
      N[j][col] = -slice(e.cx, rem, e.rank + static_cast<int>(j));
  }

  // defining property, checked on the nose
  PolyMatrix check = algebra::mat_add(algebra::mat_mul(P, N), algebra::mat_neg(H));
  if (!algebra::mat_is_zero(check)) throw MathError("lift verification failed");
  return N;
}

}  // namespace godeaux::gb
