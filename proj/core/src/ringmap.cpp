#include "godeaux/ringmap.hpp"

namespace godeaux::algebra {

Scalar convert_scalar(const Scalar& s, const Field& f) {
  if (!s.is_fp()) return f.is_prime_field() ? Scalar::from_mpq(s.rat(), f) : s;
  if (f.is_prime_field() && f.p == s.fp_modulus()) return s;
  throw UsageError("unsupported coefficient field conversion");
}

RingMap::RingMap(RingPtr src, RingPtr dst, std::vector<Polynomial> var_images,
                 std::vector<Polynomial> param_images)
    : src_(std::move(src)),
      dst_(std::move(dst)),
      var_images_(std::move(var_images)),
      param_images_(std::move(param_images)) {
  if (static_cast<int>(var_images_.size()) != src_->nvars())
    throw UsageError("ring map needs one image per source variable");
  if (param_images_.empty()) {
    // default: parameters map by name
    for (auto& name : src_->params()) {
      int pi = dst_->param_index(name);
      if (pi < 0) throw UsageError("ring map has no image for parameter " + name);
      param_images_.push_back(Polynomial::parameter(dst_, pi));
    }
  }
  if (static_cast<int>(param_images_.size()) != src_->nparams())
    throw UsageError("ring map needs one image per source parameter");
  for (auto& g : var_images_) require_same_ring(g.ring(), dst_);
  for (auto& g : param_images_) require_same_ring(g.ring(), dst_);
}

Polynomial RingMap::apply(const Polynomial& p) const {
  require_same_ring(p.ring(), src_);
  const Field& f = dst_->field();
  Polynomial acc = Polynomial::zero(dst_);
  for (auto& t : p.terms()) {
    // image of the coefficient
    Polynomial cimg = Polynomial::zero(dst_);
    for (auto& pt : t.c.terms()) {
      Polynomial piece = Polynomial::constant(dst_, convert_scalar(pt.second, f));
      for (int i = 0; i < src_->nparams(); ++i)
        for (int k = 0; k < pt.first.e[i]; ++k) piece = piece * param_images_[i];
      cimg = cimg + piece;
    }
    for (int i = 0; i < src_->nvars(); ++i)
      if (t.m.e[i]) cimg = cimg * var_images_[i].pow(t.m.e[i]);
    acc = acc + cimg;
  }
  return acc;
}

std::vector<Polynomial> RingMap::apply(const std::vector<Polynomial>& v) const {
  std::vector<Polynomial> out;
  out.reserve(v.size());
  for (auto& p : v) out.push_back(apply(p));
  return out;
}

Polynomial transport(const Polynomial& p, const RingPtr& dst) {
  const RingPtr& src = p.ring();
  const Field& f = dst->field();
  // resolve name targets lazily; -1 unknown, encode var as i, param as ~i
  std::vector<int> vmap(src->nvars(), kMaxVars + 1);
  std::vector<int> pmap(src->nparams(), kMaxVars + 1);
  auto var_target = [&](int i) {
    if (vmap[i] == kMaxVars + 1) {
      int vi = dst->var_index(src->vars()[i]);
      if (vi < 0) throw UsageError("target ring lacks variable " + src->vars()[i]);
      vmap[i] = vi;
    }
    return vmap[i];
  };
  auto param_target = [&](int i, bool& is_var) {
    if (pmap[i] == kMaxVars + 1) {
      int vi = dst->var_index(src->params()[i]);
      if (vi >= 0) {
        pmap[i] = vi;
      } else {
        int pi = dst->param_index(src->params()[i]);
        if (pi < 0) throw UsageError("target ring lacks parameter " + src->params()[i]);
        pmap[i] = ~pi;
      }
    }
    is_var = pmap[i] >= 0;
    return pmap[i] >= 0 ? pmap[i] : ~pmap[i];
  };

  std::vector<Term> raw;
  for (auto& t : p.terms()) {
    Monomial base;
    for (int i = 0; i < src->nvars(); ++i)
      if (t.m.e[i]) {
        int j = var_target(i);
        std::uint32_t s = std::uint32_t(base.e[j]) + t.m.e[i];
        if (s > 0xffff) throw MathError("monomial exponent overflow");
        base.e[j] = static_cast<std::uint16_t>(s);
      }
    for (auto& pt : t.c.terms()) {
      Monomial m = base;
      Monomial pm;
      for (int i = 0; i < src->nparams(); ++i)
        if (pt.first.e[i]) {
          bool is_var = false;
          int j = param_target(i, is_var);
          auto& slot = is_var ? m.e[j] : pm.e[j];
          std::uint32_t s = std::uint32_t(slot) + pt.first.e[i];
          if (s > 0xffff) throw MathError("monomial exponent overflow");
          slot = static_cast<std::uint16_t>(s);
        }
      ParamPoly c = ParamPoly::make({{pm, convert_scalar(pt.second, f)}});
      raw.push_back({m, std::move(c)});
    }
  }
  return Polynomial::from_terms(dst, Order::wgrevlex(), std::move(raw));
}

std::vector<Polynomial> transport(const std::vector<Polynomial>& v, const RingPtr& dst) {
  std::vector<Polynomial> out;
  out.reserve(v.size());
  for (auto& p : v) out.push_back(transport(p, dst));
  return out;
}

}  // namespace godeaux::algebra
