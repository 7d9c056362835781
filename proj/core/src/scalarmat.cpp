#include "godeaux/scalarmat.hpp"

#include "godeaux/error.hpp"

namespace godeaux::algebra {

void ScalarMat::append_row(const std::vector<Scalar>& row) {
  if (row.size() != cols_) throw UsageError("row length mismatch");
  a_.insert(a_.end(), row.begin(), row.end());
  ++rows_;
}

std::vector<std::size_t> ScalarMat::rref() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t sel = rows_;
    for (std::size_t i = r; i < rows_; ++i)
      if (!at(i, c).is_zero()) {
        sel = i;
        break;
      }
    if (sel == rows_) continue;
    if (sel != r)
      for (std::size_t j = c; j < cols_; ++j) std::swap(at(r, j), at(sel, j));
    Scalar inv = at(r, c).inverse();
    for (std::size_t j = c; j < cols_; ++j) at(r, j) = at(r, j) * inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || at(i, c).is_zero()) continue;
      Scalar f = at(i, c);
      for (std::size_t j = c; j < cols_; ++j) at(i, j) = at(i, j) - f * at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t ScalarMat::rank() const {
  ScalarMat m = *this;
  return m.rref().size();
}

std::vector<std::vector<Scalar>> ScalarMat::kernel() const {
  ScalarMat m = *this;
  std::vector<std::size_t> pivots = m.rref();
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free_c = 0; free_c < cols_; ++free_c) {
    if (is_pivot[free_c]) continue;
    std::vector<Scalar> v(cols_, Scalar::zero(f_));
    v[free_c] = Scalar::one(f_);
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) v[pivots[pr]] = -m.at(pr, free_c);
    basis.push_back(std::move(v));
  }
  return basis;
}

SolveResult ScalarMat::solve(const std::vector<Scalar>& b, bool require_unique) const {
  if (b.size() != rows_) throw UsageError("rhs length mismatch");
  ScalarMat aug(rows_, cols_ + 1, f_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, cols_) = b[i];
  }
  std::vector<std::size_t> pivots = aug.rref();
  if (!pivots.empty() && pivots.back() == cols_) return {SolveStatus::inconsistent, {}};
  std::vector<Scalar> x(cols_, Scalar::zero(f_));
  for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug.at(pr, cols_);
  if (require_unique && pivots.size() < cols_) return {SolveStatus::underdetermined, std::move(x)};
  return {SolveStatus::ok, std::move(x)};
}

}  // namespace godeaux::algebra
