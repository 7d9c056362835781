#pragma once

#include "godeaux/monomial.hpp"
#include "godeaux/ring.hpp"

namespace godeaux::algebra {

enum class OrderKind { wgrevlex, lex, block };

// Monomial order relative to a ring's weights. `block` is an elimination
// order: the first `front` variables dominate, so a Groebner basis under it
// intersects cleanly with the back variables.
struct Order {
  OrderKind kind = OrderKind::wgrevlex;
  int front = 0;

  static Order wgrevlex() { return Order{OrderKind::wgrevlex, 0}; }
  static Order lex() { return Order{OrderKind::lex, 0}; }
  static Order elim(int front_vars) { return Order{OrderKind::block, front_vars}; }

  bool operator==(const Order&) const = default;

  // three-way compare: positive when a > b
  int cmp(const Monomial& a, const Monomial& b, const Ring& r) const;

  bool less(const Monomial& a, const Monomial& b, const Ring& r) const {
    return cmp(a, b, r) < 0;
  }
  bool greater(const Monomial& a, const Monomial& b, const Ring& r) const {
    return cmp(a, b, r) > 0;
  }

  std::string str() const {
    switch (kind) {
      case OrderKind::wgrevlex: return "wgrevlex";
      case OrderKind::lex: return "lex";
      case OrderKind::block: return "elim" + std::to_string(front);
    }
    return "?";
  }
};

// deglex on parameter exponents, shared by the coefficient layer
int param_cmp(const Monomial& a, const Monomial& b);

}  // namespace godeaux::algebra
