#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "godeaux/error.hpp"
#include "godeaux/field.hpp"
#include "godeaux/monomial.hpp"

namespace godeaux::algebra {

// A weighted polynomial ring k[x_1..x_n] whose coefficients may themselves
// carry named parameters (handled at the coefficient layer, never as ring
// variables). Rings are immutable and shared by pointer.
class Ring {
 public:
  Ring(Field field, std::vector<std::string> vars, std::vector<long> weights,
       std::vector<std::string> params = {})
      : field_(field), vars_(std::move(vars)), params_(std::move(params)) {
    if (vars_.empty() || vars_.size() > kMaxVars)
      throw UsageError("ring needs between 1 and " + std::to_string(kMaxVars) + " variables");
    if (weights.size() != vars_.size()) throw UsageError("one weight per variable required");
    weights_.fill(1);
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (weights[i] < 1 || weights[i] > 0xffff) throw UsageError("weights must be in [1, 65535]");
      weights_[i] = static_cast<std::uint16_t>(weights[i]);
    }
    for (std::size_t i = vars_.size(); i < kMaxVars; ++i) weights_[i] = 0;
    check_distinct();
  }

  const Field& field() const { return field_; }
  int nvars() const { return static_cast<int>(vars_.size()); }
  int nparams() const { return static_cast<int>(params_.size()); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::array<std::uint16_t, kMaxVars>& weights() const { return weights_; }
  long weight(int i) const { return weights_[i]; }

  int var_index(const std::string& name) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i] == name) return static_cast<int>(i);
    return -1;
  }
  int param_index(const std::string& name) const {
    for (std::size_t i = 0; i < params_.size(); ++i)
      if (params_[i] == name) return static_cast<int>(i);
    return -1;
  }

  long degree(const Monomial& m) const { return m.weighted_degree(weights_); }

  bool same(const Ring& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && params_ == o.params_ &&
           weights_ == o.weights_;
  }

  std::string describe() const {
    std::string s = field_.describe() + "[";
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (i) s += ",";
      s += vars_[i];
      if (weights_[i] != 1) s += "(" + std::to_string(weights_[i]) + ")";
    }
    s += "]";
    if (!params_.empty()) {
      s += " params ";
      for (std::size_t i = 0; i < params_.size(); ++i) {
        if (i) s += ",";
        s += params_[i];
      }
    }
    return s;
  }

 private:
  void check_distinct() const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (vars_[i] == vars_[j]) throw UsageError("duplicate variable " + vars_[i]);
    for (std::size_t i = 0; i < params_.size(); ++i) {
      for (std::size_t j = i + 1; j < params_.size(); ++j)
        if (params_[i] == params_[j]) throw UsageError("duplicate parameter " + params_[i]);
      if (var_index(params_[i]) >= 0)
        throw UsageError("name " + params_[i] + " used as both variable and parameter");
    }
  }

  Field field_;
  std::vector<std::string> vars_;
  std::vector<std::string> params_;
  std::array<std::uint16_t, kMaxVars> weights_{};
};

using RingPtr = std::shared_ptr<const Ring>;

inline RingPtr make_ring(Field field, std::vector<std::string> vars, std::vector<long> weights,
                         std::vector<std::string> params = {}) {
  return std::make_shared<const Ring>(field, std::move(vars), std::move(weights),
                                      std::move(params));
}

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() == b.get()) return;
  if (!a || !b || !a->same(*b)) throw UsageError("operands live in different rings");
}

}  // namespace godeaux::algebra
