#include "cwres/matrix.hpp"

#include <algorithm>

#include "cwres/errors.hpp"

namespace cwres {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(),
                     [](const Rational& x) { return x.is_zero(); });
}

std::vector<Rational> Matrix::column(int c) const {
  std::vector<Rational> v(rows_);
  for (int r = 0; r < rows_; ++r) v[r] = at(r, c);
  return v;
}

Echelon reduce(const Matrix& m, const Field& f) {
  Echelon e;
  e.rref = m;
  e.pivot_row_of_col.assign(m.cols(), -1);
  Matrix& a = e.rref;
  int next_row = 0;
  for (int col = 0; col < a.cols() && next_row < a.rows(); ++col) {
    int piv = -1;
    for (int r = next_row; r < a.rows(); ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != next_row)
      for (int c = 0; c < a.cols(); ++c)
        std::swap(a.at(piv, c), a.at(next_row, c));
    const Rational scale = f.inv(a.at(next_row, col));
    for (int c = col; c < a.cols(); ++c)
      a.at(next_row, c) = f.mul(a.at(next_row, c), scale);
    for (int r = 0; r < a.rows(); ++r) {
      if (r == next_row || a.at(r, col).is_zero()) continue;
      const Rational factor = a.at(r, col);
      for (int c = col; c < a.cols(); ++c)
        a.at(r, c) = f.sub(a.at(r, c), f.mul(factor, a.at(next_row, c)));
    }
    e.pivot_cols.push_back(col);
    e.pivot_row_of_col[col] = next_row;
    ++next_row;
  }
  return e;
}

int rank(const Matrix& m, const Field& f) { return reduce(m, f).rank(); }

Matrix multiply(const Matrix& a, const Matrix& b, const Field& f) {
  if (a.cols() != b.rows())
    throw Error("DimensionMismatch", "matrix product shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols(); ++j) {
        if (b.at(k, j).is_zero()) continue;
        c.at(i, j) = f.add(c.at(i, j), f.mul(a.at(i, k), b.at(k, j)));
      }
    }
  return c;
}

std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v,
                            const Field& f) {
  if (static_cast<int>(v.size()) != m.cols())
    throw Error("DimensionMismatch", "matrix-vector shape mismatch");
  std::vector<Rational> out(m.rows());
  for (int c = 0; c < m.cols(); ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < m.rows(); ++r) {
      if (m.at(r, c).is_zero()) continue;
      out[r] = f.add(out[r], f.mul(m.at(r, c), v[c]));
    }
  }
  return out;
}

std::optional<std::vector<Rational>> solve_in_span(
    const Matrix& m, const std::vector<Rational>& v, const Field& f) {
  if (static_cast<int>(v.size()) != m.rows())
    throw Error("DimensionMismatch", "rhs length != matrix rows");
  Matrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug.at(r, c) = m.at(r, c);
    aug.at(r, m.cols()) = v[r];
  }
  Echelon e = reduce(aug, f);
  if (e.pivot_row_of_col[m.cols()] >= 0) return std::nullopt;  // inconsistent
  std::vector<Rational> x(m.cols());
  for (int c = 0; c < m.cols(); ++c) {
    int pr = e.pivot_row_of_col[c];
    if (pr >= 0) x[c] = e.rref.at(pr, m.cols());
  }
  return x;
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m,
                                                const Field& f) {
  Echelon e = reduce(m, f);
  std::vector<std::vector<Rational>> basis;
  for (int c = 0; c < m.cols(); ++c) {
    if (e.pivot_row_of_col[c] >= 0) continue;
    std::vector<Rational> v(m.cols());
    v[c] = f.from_int(1);
    for (int p = 0; p < c; ++p) {
      int pr = e.pivot_row_of_col[p];
      if (pr >= 0) v[p] = f.neg(e.rref.at(pr, c));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<int> independent_columns(const Matrix& m, const Field& f) {
  return reduce(m, f).pivot_cols;
}

}  // namespace cwres
