#include "godeaux/parampoly.hpp"

#include <algorithm>

#include "godeaux/error.hpp"

namespace godeaux::algebra {

ParamPoly ParamPoly::constant(const Scalar& c) {
  ParamPoly r;
  if (!c.is_zero()) r.terms_.push_back({Monomial::unit(), c});
  return r;
}

ParamPoly ParamPoly::param(int index, const Field& f) {
  ParamPoly r;
  r.terms_.push_back({Monomial::var(index), Scalar::one(f)});
  return r;
}

ParamPoly ParamPoly::make(std::vector<std::pair<Monomial, Scalar>> raw) {
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return param_cmp(a.first, b.first) > 0; });
  ParamPoly r;
  for (auto& t : raw) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      Scalar s = r.terms_.back().second + t.second;
      if (s.is_zero())
        r.terms_.pop_back();
      else
        r.terms_.back().second = s;
    } else if (!t.second.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

Scalar ParamPoly::constant_value(const Field& f) const {
  if (terms_.empty()) return Scalar::zero(f);
  if (terms_.size() != 1 || !terms_[0].first.is_unit())
    throw MathError("coefficient is not constant in the parameters");
  return terms_[0].second;
}

ParamPoly ParamPoly::operator+(const ParamPoly& o) const {
  ParamPoly r;
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = param_cmp(terms_[i].first, o.terms_[j].first);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].second + o.terms_[j].second;
      if (!s.is_zero()) r.terms_.push_back({terms_[i].first, s});
      ++i, ++j;
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

ParamPoly ParamPoly::operator-() const {
  ParamPoly r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.first, -t.second});
  return r;
}

ParamPoly ParamPoly::operator-(const ParamPoly& o) const { return *this + (-o); }

ParamPoly ParamPoly::operator*(const ParamPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::pair<Monomial, Scalar>> raw;
  raw.reserve(terms_.size() * o.terms_.size());
  for (auto& a : terms_)
    for (auto& b : o.terms_) raw.push_back({a.first * b.first, a.second * b.second});
  return make(std::move(raw));
}

ParamPoly ParamPoly::scale(const Scalar& c) const {
  if (c.is_zero()) return {};
  ParamPoly r;
  r.terms_.reserve(terms_.size());
  for (auto& t : terms_) r.terms_.push_back({t.first, t.second * c});
  return r;
}

Scalar ParamPoly::evaluate(const std::vector<Scalar>& values, const Field& f) const {
  Scalar acc = Scalar::zero(f);
  for (auto& t : terms_) {
    Scalar v = t.second;
    for (int i = 0; i < kMaxVars; ++i)
      for (int k = 0; k < t.first.e[i]; ++k) {
        if (i >= static_cast<int>(values.size()))
          throw UsageError("missing parameter value in evaluation");
        v = v * values[i];
      }
    acc = acc + v;
  }
  return acc;
}

ParamPoly ParamPoly::substitute(int index, const Scalar& value) const {
  std::vector<std::pair<Monomial, Scalar>> raw;
  raw.reserve(terms_.size());
  for (auto& t : terms_) {
    Monomial m = t.first;
    Scalar c = t.second;
    int e = m.e[index];
    m.e[index] = 0;
    for (int k = 0; k < e; ++k) c = c * value;
    raw.push_back({m, c});
  }
  return make(std::move(raw));
}

ParamPoly ParamPoly::divide_exact(const ParamPoly& d, const Field& f) const {
  if (d.is_zero()) throw MathError("division by zero coefficient");
  ParamPoly rem = *this;
  std::vector<std::pair<Monomial, Scalar>> qr;
  const Monomial& lm = d.terms_[0].first;
  const Scalar& lc = d.terms_[0].second;
  while (!rem.is_zero()) {
    const Monomial& rm = rem.terms_[0].first;
    if (!lm.divides(rm)) throw MathError("inexact coefficient division");
    Monomial q = rm.div(lm);
    Scalar c = rem.terms_[0].second / lc;
    qr.push_back({q, c});
    ParamPoly step;
    step.terms_.push_back({q, c});
    rem = rem - step * d;
  }
  (void)f;
  return make(std::move(qr));
}

std::string ParamPoly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto& t : terms_) {
    std::string cs = t.second.str();
    bool neg = !cs.empty() && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    std::string mono;
    for (int i = 0; i < kMaxVars; ++i) {
      if (!t.first.e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += i < static_cast<int>(names.size()) ? names[i] : "p" + std::to_string(i);
      if (t.first.e[i] > 1) mono += "^" + std::to_string(t.first.e[i]);
    }
    if (mono.empty()) {
      s += cs;
    } else if (cs == "1") {
      s += mono;
    } else {
      s += cs + "*" + mono;
    }
  }
  return s;
}

}  // namespace godeaux::algebra
