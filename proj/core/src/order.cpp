#include "godeaux/order.hpp"

namespace godeaux::algebra {

namespace {

// weighted grevlex restricted to vars [lo, hi)
int wgrevlex_range(const Monomial& a, const Monomial& b, const Ring& r, int lo, int hi) {
  long da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += long(a.e[i]) * r.weights()[i];
    db += long(b.e[i]) * r.weights()[i];
  }
  if (da != db) return da < db ? -1 : 1;
  // rightmost differing exponent: smaller exponent there means larger monomial
  for (int i = hi - 1; i >= lo; --i) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  }
  return 0;
}

int lex_range(const Monomial& a, const Monomial& b, int lo, int hi) {
  for (int i = lo; i < hi; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace

int Order::cmp(const Monomial& a, const Monomial& b, const Ring& r) const {
  int n = r.nvars();
  switch (kind) {
    case OrderKind::wgrevlex:
      return wgrevlex_range(a, b, r, 0, n);
    case OrderKind::lex:
      return lex_range(a, b, 0, n);
    case OrderKind::block: {
      int c = wgrevlex_range(a, b, r, 0, front);
      if (c) return c;
      return wgrevlex_range(a, b, r, front, n);
    }
  }
  return 0;
}

int param_cmp(const Monomial& a, const Monomial& b) {
  long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db ? -1 : 1;
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

}  // namespace godeaux::algebra
