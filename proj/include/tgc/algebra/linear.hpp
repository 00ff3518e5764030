#pragma once

#include <cassert>
#include <vector>

#include "tgc/algebra/polynomial.hpp"
#include "tgc/algebra/rational_function.hpp"
#include "tgc/algebra/univariate.hpp"

namespace tgc {

/// Row-major dense matrix of ring elements.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }

  T& operator()(int r, int c) {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[r * cols_ + c];
  }
  const T& operator()(int r, int c) const {
    assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
    return data_[r * cols_ + c];
  }

  void swapRows(int a, int b) {
    for (int c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

/// Cofactor expansion for side <= 3, fraction-free Bareiss elimination otherwise.
Polynomial determinant(const Matrix<Polynomial>& m);
Polynomial bareissDeterminant(Matrix<Polynomial> m);

/// Rows are cleared of denominators, the polynomial determinant is taken and
/// the row multipliers are divided back out.
HomRationalFunction determinant(const Matrix<HomRationalFunction>& m);

/// Gaussian elimination over the field of rational functions in z.
UniRational determinant(Matrix<UniRational> m);

GaussianRational determinant(Matrix<GaussianRational> m);
int rank(Matrix<GaussianRational> m);

/// Solution of A x = b over Gaussian rationals, or nullopt when inconsistent.
/// A may be rectangular; free variables are set to zero.
std::optional<std::vector<GaussianRational>> solveLinear(Matrix<GaussianRational> a, std::vector<GaussianRational> b);

/// Fraction-free solve of A X = B over the polynomial ring: returns det(A)
/// and the Cramer numerators N with A N = det(A) B, computed by one Bareiss
/// elimination shared across all right-hand sides. det is zero (and N
/// empty) when A is singular.
struct FractionFreeSolution {
  Polynomial det;
  Matrix<Polynomial> numerators;
};
FractionFreeSolution fractionFreeSolve(Matrix<Polynomial> a, Matrix<Polynomial> b);

}  // namespace tgc
