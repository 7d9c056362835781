#include "godeaux/matrix.hpp"

namespace godeaux::algebra {

namespace {
void check_rect(const PolyMatrix& a) {
  if (a.empty()) throw UsageError("empty matrix");
  for (auto& r : a)
    if (r.size() != a[0].size()) throw UsageError("ragged matrix");
}
}  // namespace

PolyMatrix mat_mul(const PolyMatrix& a, const PolyMatrix& b) {
  check_rect(a);
  check_rect(b);
  if (a[0].size() != b.size()) throw UsageError("matrix shape mismatch");
  const RingPtr& ring = a[0][0].ring();
  PolyMatrix c(a.size(), std::vector<Polynomial>(b[0].size(), Polynomial::zero(ring)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j)
        c[i][j] = c[i][j] + a[i][k] * b[k][j];
    }
  return c;
}

PolyMatrix mat_add(const PolyMatrix& a, const PolyMatrix& b) {
  check_rect(a);
  check_rect(b);
  if (a.size() != b.size() || a[0].size() != b[0].size())
    throw UsageError("matrix shape mismatch");
  PolyMatrix c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

PolyMatrix mat_neg(const PolyMatrix& a) {
  PolyMatrix c = a;
  for (auto& row : c)
    for (auto& p : row) p = -p;
  return c;
}

PolyMatrix mat_transpose(const PolyMatrix& a) {
  check_rect(a);
  PolyMatrix c(a[0].size(), std::vector<Polynomial>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) c[j][i] = a[i][j];
  return c;
}

bool mat_is_zero(const PolyMatrix& a) {
  for (auto& row : a)
    for (auto& p : row)
      if (!p.is_zero()) return false;
  return true;
}

std::vector<Polynomial> mat_apply(const PolyMatrix& a, const std::vector<Polynomial>& v) {
  check_rect(a);
  if (a[0].size() != v.size()) throw UsageError("matrix shape mismatch");
  std::vector<Polynomial> out;
  out.reserve(a.size());
  for (auto& row : a) {
    Polynomial s = Polynomial::zero(row[0].ring());
    for (std::size_t j = 0; j < v.size(); ++j) s = s + row[j] * v[j];
    out.push_back(std::move(s));
  }
  return out;
}

Polynomial poly_det(const PolyMatrix& a) {
  check_rect(a);
  std::size_t n = a.size();
  if (a[0].size() != n) throw UsageError("determinant of non-square matrix");
  if (n > 12) throw UsageError("determinant size too large");
  const RingPtr& ring = a[0][0].ring();
  // D[S] = minor over rows [0, popcount(S)) and column set S
  std::vector<Polynomial> d(std::size_t(1) << n, Polynomial::zero(ring));
  d[0] = Polynomial::from_int(ring, 1);
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int row = __builtin_popcount(s) - 1;
    Polynomial acc = Polynomial::zero(ring);
    int sign = (row % 2 == 0) ? 1 : -1;  // Laplace along row `row`
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      if (!a[row][j].is_zero() && !d[s ^ (1u << j)].is_zero()) {
        Polynomial t = a[row][j] * d[s ^ (1u << j)];
        acc = sign > 0 ? acc + t : acc - t;
      }
      sign = -sign;
    }
    d[s] = std::move(acc);
  }
  return d[(std::size_t(1) << n) - 1];
}

}  // namespace godeaux::algebra
