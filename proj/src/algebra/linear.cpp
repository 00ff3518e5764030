#include "tgc/algebra/linear.hpp"

#include <stdexcept>

namespace tgc {

namespace {

Polynomial exactQuotient(const Polynomial& a, const Polynomial& b) {
  auto q = a.divideExact(b);
  if (!q) throw std::logic_error("fraction-free elimination: inexact division");
  return std::move(*q);
}

// Index of the nonzero entry in column `col` at or below `from` with the
// fewest terms, or -1.
int choosePivot(const Matrix<Polynomial>& m, int col, int from) {
  int best = -1;
  for (int r = from; r < m.rows(); ++r) {
    if (m(r, col).isZero()) continue;
    if (best < 0 || m(r, col).termCount() < m(best, col).termCount()) best = r;
  }
  return best;
}

}  // namespace

Polynomial bareissDeterminant(Matrix<Polynomial> m) {
  if (!m.isSquare()) throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) return Polynomial::constant(0, 1);
  int nv = m(0, 0).numVars();
  Polynomial prev = Polynomial::constant(nv, 1);
  bool negate = false;
  for (int k = 0; k < n - 1; ++k) {
    int p = choosePivot(m, k, k);
    if (p < 0) return Polynomial(nv);
    if (p != k) {
      m.swapRows(p, k);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        m(i, j) = exactQuotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
      }
      m(i, k) = Polynomial(nv);
    }
    prev = m(k, k);
  }
  Polynomial det = m(n - 1, n - 1);
  return negate ? -det : det;
}

Polynomial determinant(const Matrix<Polynomial>& m) {
  if (!m.isSquare()) throw std::invalid_argument("determinant of a non-square matrix");
  switch (m.rows()) {
    case 1:
      return m(0, 0);
    case 2:
      return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    case 3:
      return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
             m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
             m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
    default:
      return bareissDeterminant(m);
  }
}

HomRationalFunction determinant(const Matrix<HomRationalFunction>& m) {
  if (!m.isSquare()) throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows();
  if (n == 0) throw std::invalid_argument("determinant of an empty matrix");
  int nv = m(0, 0).numVars();
  Matrix<Polynomial> cleared(n, n, Polynomial(nv));
  Polynomial multiplier = Polynomial::constant(nv, 1);
  int conventionalDegree = 0;
  for (int r = 0; r < n; ++r) {
    conventionalDegree += m(r, r).homDegree();
    std::vector<Polynomial> dens;
    Polynomial rowDen = Polynomial::constant(nv, 1);
    for (int c = 0; c < n; ++c) {
      const Polynomial& d = m(r, c).den().poly();
      if (m(r, c).isZero() || d.isConstant()) continue;
      bool seen = false;
      for (const auto& e : dens) seen = seen || e == d;
      if (!seen) {
        dens.push_back(d);
        rowDen = rowDen * d;
      }
    }
    for (int c = 0; c < n; ++c) {
      const HomRationalFunction& e = m(r, c);
      if (e.isZero()) continue;
      cleared(r, c) = e.num().poly() * exactQuotient(rowDen, e.den().poly());
    }
    multiplier = multiplier * rowDen;
  }
  Polynomial det = determinant(cleared);
  if (det.isZero()) return HomRationalFunction::zero(nv, conventionalDegree);
  return {HomogeneousPolynomial(std::move(det)), HomogeneousPolynomial(std::move(multiplier))};
}

UniRational determinant(Matrix<UniRational> m) {
  if (!m.isSquare()) throw std::invalid_argument("determinant of a non-square matrix");
  int n = m.rows();
  UniRational det(UniPolynomial(1));
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int r = k; r < n; ++r) {
      if (!m(r, k).isZero()) {
        p = r;
        break;
      }
    }
    if (p < 0) return {};
    if (p != k) {
      m.swapRows(p, k);
      det = -det;
    }
    det = det * m(k, k);
    for (int i = k + 1; i < n; ++i) {
      if (m(i, k).isZero()) continue;
      UniRational f = m(i, k) / m(k, k);
      for (int j = k + 1; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
  return det;
}

namespace {

// Row-reduces in place; returns the rank and flips `sign` per row swap.
int rowReduce(Matrix<GaussianRational>& m, bool& negate) {
  int rank = 0;
  for (int c = 0; c < m.cols() && rank < m.rows(); ++c) {
    int p = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (!m(r, c).isZero()) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    if (p != rank) {
      m.swapRows(p, rank);
      negate = !negate;
    }
    for (int r = rank + 1; r < m.rows(); ++r) {
      if (m(r, c).isZero()) continue;
      GaussianRational f = m(r, c) / m(rank, c);
      for (int j = c; j < m.cols(); ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

GaussianRational determinant(Matrix<GaussianRational> m) {
  if (!m.isSquare()) throw std::invalid_argument("determinant of a non-square matrix");
  bool negate = false;
  if (rowReduce(m, negate) < m.rows()) return {};
  GaussianRational det(1);
  for (int i = 0; i < m.rows(); ++i) det *= m(i, i);
  return negate ? -det : det;
}

int rank(Matrix<GaussianRational> m) {
  bool negate = false;
  return rowReduce(m, negate);
}

std::optional<std::vector<GaussianRational>> solveLinear(Matrix<GaussianRational> a, std::vector<GaussianRational> b) {
  int rows = a.rows();
  int cols = a.cols();
  if (static_cast<int>(b.size()) != rows) throw std::invalid_argument("solveLinear: dimension mismatch");
  Matrix<GaussianRational> aug(rows, cols + 1, GaussianRational());
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) aug(r, c) = a(r, c);
    aug(r, cols) = b[r];
  }
  bool negate = false;
  rowReduce(aug, negate);
  std::vector<GaussianRational> x(cols);
  for (int r = rows - 1; r >= 0; --r) {
    int lead = -1;
    for (int c = 0; c < cols; ++c) {
      if (!aug(r, c).isZero()) {
        lead = c;
        break;
      }
    }
    if (lead < 0) {
      if (!aug(r, cols).isZero()) return std::nullopt;
      continue;
    }
    GaussianRational s = aug(r, cols);
    for (int c = lead + 1; c < cols; ++c) s -= aug(r, c) * x[c];
    x[lead] = s / aug(r, lead);
  }
  return x;
}

FractionFreeSolution fractionFreeSolve(Matrix<Polynomial> a, Matrix<Polynomial> b) {
  if (!a.isSquare() || a.rows() != b.rows()) throw std::invalid_argument("fractionFreeSolve: dimension mismatch");
  int n = a.rows();
  int m = b.cols();
  int nv = a(0, 0).numVars();
  Matrix<Polynomial> aug(n, n + m, Polynomial(nv));
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = a(r, c);
    for (int c = 0; c < m; ++c) aug(r, n + c) = b(r, c);
  }
  Polynomial prev = Polynomial::constant(nv, 1);
  bool negate = false;
  for (int k = 0; k < n; ++k) {
    int p = choosePivot(aug, k, k);
    if (p < 0) return {Polynomial(nv), {}};
    if (p != k) {
      aug.swapRows(p, k);
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n + m; ++j) {
        aug(i, j) = exactQuotient(aug(k, k) * aug(i, j) - aug(i, k) * aug(k, j), prev);
      }
      aug(i, k) = Polynomial(nv);
    }
    prev = aug(k, k);
  }
  // Upper-triangular system with det' = aug(n-1, n-1); back substitution on
  // X = det' * x keeps every quotient exact by Cramer's rule.
  const Polynomial detPrime = aug(n - 1, n - 1);
  Matrix<Polynomial> x(n, m, Polynomial(nv));
  for (int c = 0; c < m; ++c) {
    for (int i = n - 1; i >= 0; --i) {
      Polynomial s = detPrime * aug(i, n + c);
      for (int j = i + 1; j < n; ++j) s -= aug(i, j) * x(j, c);
      x(i, c) = exactQuotient(s, aug(i, i));
    }
  }
  if (negate) {
    for (int i = 0; i < n; ++i) {
      for (int c = 0; c < m; ++c) x(i, c) = -x(i, c);
    }
  }
  return {negate ? -detPrime : detPrime, std::move(x)};
}

}  // namespace tgc
