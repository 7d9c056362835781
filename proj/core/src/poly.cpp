#include "godeaux/poly.hpp"

#include <algorithm>

namespace godeaux::algebra {

Polynomial Polynomial::constant(RingPtr ring, const Scalar& c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({Monomial::unit(), ParamPoly::constant(c)});
  return p;
}

Polynomial Polynomial::from_int(RingPtr ring, long n) {
  Scalar c = Scalar::from_int(n, ring->field());
  return constant(std::move(ring), c);
}

Polynomial Polynomial::variable(RingPtr ring, int i, int exp) {
  if (i < 0 || i >= ring->nvars()) throw UsageError("variable index out of range");
  Polynomial p(ring);
  if (exp > 0)
    p.terms_.push_back({Monomial::var(i, static_cast<std::uint16_t>(exp)),
                        ParamPoly::constant(Scalar::one(ring->field()))});
  else
    p.terms_.push_back({Monomial::unit(), ParamPoly::constant(Scalar::one(ring->field()))});
  return p;
}

Polynomial Polynomial::parameter(RingPtr ring, int i) {
  if (i < 0 || i >= ring->nparams()) throw UsageError("parameter index out of range");
  Polynomial p(ring);
  p.terms_.push_back({Monomial::unit(), ParamPoly::param(i, ring->field())});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, ParamPoly c) {
  Polynomial p(ring);
  if (!c.is_zero()) p.terms_.push_back({m, std::move(c)});
  return p;
}

Polynomial Polynomial::from_terms(RingPtr ring, Order order, std::vector<Term> raw) {
  const Ring& r = *ring;
  std::sort(raw.begin(), raw.end(),
            [&](const Term& a, const Term& b) { return order.cmp(a.m, b.m, r) > 0; });
  Polynomial p(std::move(ring), order);
  for (auto& t : raw) {
    if (!p.terms_.empty() && p.terms_.back().m == t.m) {
      ParamPoly s = p.terms_.back().c + t.c;
      if (s.is_zero())
        p.terms_.pop_back();
      else
        p.terms_.back().c = std::move(s);
    } else if (!t.c.is_zero()) {
      p.terms_.push_back(std::move(t));
    }
  }
  return p;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw MathError("leading term of zero");
  return terms_[0];
}

long Polynomial::degree() const {
  long d = -1;
  for (auto& t : terms_) d = std::max(d, ring_->degree(t.m));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  long d = ring_->degree(terms_[0].m);
  for (auto& t : terms_)
    if (ring_->degree(t.m) != d) return false;
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero()) return o.order_ == order_ ? o : o.reorder(order_);
  if (o.is_zero()) return *this;
  const Polynomial& rhs = o.order_ == order_ ? o : o.reorder(order_);
  Polynomial r(ring_, order_);
  const Ring& R = *ring_;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = order_.cmp(terms_[i].m, rhs.terms_[j].m, R);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(rhs.terms_[j++]);
    } else {
      ParamPoly s = terms_[i].c + rhs.terms_[j].c;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].m, std::move(s)});
      ++i, ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < rhs.terms_.size()) r.terms_.push_back(rhs.terms_[j++]);
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m, -t.c});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return Polynomial(ring_, order_);
  std::vector<Term> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) raw.push_back({a.m * b.m, a.c * b.c});
  return from_terms(ring_, order_, std::move(raw));
}

Polynomial Polynomial::scale(const Scalar& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.m, t.c.scale(c)});
  return r;
}

Polynomial Polynomial::scale(const ParamPoly& c) const {
  if (c.is_zero()) return Polynomial(ring_, order_);
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) {
    ParamPoly p = t.c * c;
    if (!p.is_zero()) r.terms_.push_back({t.m, std::move(p)});
  }
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& mono, const ParamPoly& coeff) const {
  if (coeff.is_zero()) return Polynomial(ring_, order_);
  Polynomial r(ring_, order_);
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) {
    ParamPoly p = t.c * coeff;
    if (!p.is_zero()) r.terms_.push_back({t.m * mono, std::move(p)});
  }
  return r;
}

Polynomial Polynomial::pow(int e) const {
  if (e < 0) throw UsageError("negative polynomial power");
  Polynomial r = from_int(ring_, 1);
  r = r.reorder(order_);
  Polynomial b = *this;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!ring_ || !o.ring_) return is_zero() && o.is_zero();
  if (!ring_->same(*o.ring_)) return false;
  if (order_ == o.order_) return terms_ == o.terms_;
  return terms_ == o.reorder(order_).terms_;
}

Polynomial Polynomial::reorder(Order order) const {
  if (order == order_) return *this;
  return from_terms(ring_, order, terms_);
}

ParamPoly Polynomial::coeff_of(const Monomial& m) const {
  for (auto& t : terms_)
    if (t.m == m) return t.c;
  return {};
}

Polynomial Polynomial::substitute_param(int index, const Scalar& value) const {
  std::vector<Term> raw;
  raw.reserve(terms_.size());
  for (auto& t : terms_) raw.push_back({t.m, t.c.substitute(index, value)});
  return from_terms(ring_, order_, std::move(raw));
}

Polynomial Polynomial::specialize_params(const std::vector<Scalar>& values) const {
  Polynomial r = *this;
  for (std::size_t i = 0; i < values.size(); ++i) r = r.substitute_param(static_cast<int>(i), values[i]);
  return r;
}

Polynomial Polynomial::substitute_var(int index, const Polynomial& q) const {
  require_same_ring(ring_, q.ring_);
  Polynomial acc(ring_, order_);
  for (auto& t : terms_) {
    Monomial rest = t.m;
    int e = rest.e[index];
    rest.e[index] = 0;
    Polynomial piece = Polynomial::monomial(ring_, rest, t.c).reorder(order_);
    if (e) piece = piece * q.pow(e);
    acc = acc + piece;
  }
  return acc;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point,
                            const std::vector<Scalar>& param_values) const {
  const Field& f = ring_->field();
  if (static_cast<int>(point.size()) != ring_->nvars())
    throw UsageError("evaluation point has wrong arity");
  Scalar acc = Scalar::zero(f);
  for (auto& t : terms_) {
    Scalar c = param_values.empty() ? t.c.constant_value(f) : t.c.evaluate(param_values, f);
    for (int i = 0; i < ring_->nvars(); ++i)
      for (int k = 0; k < t.m.e[i]; ++k) c = c * point[i];
    acc = acc + c;
  }
  return acc;
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  const Polynomial& p = order_ == Order::wgrevlex() ? *this : reorder(Order::wgrevlex());
  std::string s;
  bool first = true;
  for (auto& t : p.terms_) {
    // coefficient text and its sign handling
    std::string cs;
    bool neg = false;
    bool paren = false;
    if (t.c.is_constant()) {
      cs = t.c.constant_value(ring_->field()).str();
      if (!cs.empty() && cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
    } else if (t.c.terms().size() == 1) {
      cs = t.c.str(ring_->params());
      if (!cs.empty() && cs[0] == '-') {
        neg = true;
        cs = cs.substr(1);
      }
    } else {
      cs = "(" + t.c.str(ring_->params()) + ")";
      paren = true;
    }
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < ring_->nvars(); ++i) {
      if (!t.m.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += ring_->vars()[i];
      if (t.m.e[i] > 1) mono += "^" + std::to_string(t.m.e[i]);
    }
    if (mono.empty()) {
      s += cs;
    } else if (cs == "1" && !paren) {
      s += mono;
    } else {
      s += cs + "*" + mono;
    }
  }
  return s;
}

}  // namespace godeaux::algebra
