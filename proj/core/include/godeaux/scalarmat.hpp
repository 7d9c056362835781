#pragma once

#include <vector>

#include "godeaux/field.hpp"

namespace godeaux::algebra {

enum class SolveStatus { ok, inconsistent, underdetermined };

struct SolveResult {
  SolveStatus status;
  std::vector<Scalar> x;  // valid when status != inconsistent
};

// Dense matrix over the base field with exact row reduction. Used for
// graded-piece kernels, ansatz solving and point fitting.
class ScalarMat {
 public:
  ScalarMat(std::size_t rows, std::size_t cols, const Field& f)
      : rows_(rows), cols_(cols), f_(f), a_(rows * cols, Scalar::zero(f)) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return f_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void append_row(const std::vector<Scalar>& row);

  // in-place reduced row echelon form; returns pivot column per pivot row
  std::vector<std::size_t> rref();
  std::size_t rank() const;

  // basis of the right kernel (each vector has cols() entries)
  std::vector<std::vector<Scalar>> kernel() const;

  // solve A x = b; free variables are set to zero unless require_unique
  SolveResult solve(const std::vector<Scalar>& b, bool require_unique = false) const;

 private:
  std::size_t rows_, cols_;
  Field f_;
  std::vector<Scalar> a_;
};

}  // namespace godeaux::algebra
