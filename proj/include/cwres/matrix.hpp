#ifndef CWRES_MATRIX_HPP
#define CWRES_MATRIX_HPP

#include <optional>
#include <vector>

#include "cwres/field.hpp"

namespace cwres {

// Dense matrix of field scalars. Fixtures in this problem domain are
// desk-scale (a few hundred rows at most), so no sparse path is kept.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const {
    return a_[static_cast<size_t>(r) * cols_ + c];
  }

  Matrix transposed() const;
  bool is_zero() const;
  std::vector<Rational> column(int c) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Row-reduced echelon form with its pivot bookkeeping. Elimination is
// deterministic: columns are processed left to right and the pivot is the
// smallest-index row with a nonzero entry, so every downstream basis
// (kernels, homology representatives, incidence signs) is reproducible.
struct Echelon {
  Matrix rref;
  std::vector<int> pivot_cols;         // increasing
  std::vector<int> pivot_row_of_col;   // -1 for free columns
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

Echelon reduce(const Matrix& m, const Field& f);
int rank(const Matrix& m, const Field& f);
Matrix multiply(const Matrix& a, const Matrix& b, const Field& f);
std::vector<Rational> apply(const Matrix& m, const std::vector<Rational>& v,
                            const Field& f);

// Coefficients c with M c = v, or nullopt when v is outside the column span.
// Free variables are set to zero. Throws DimensionMismatch.
std::optional<std::vector<Rational>> solve_in_span(
    const Matrix& m, const std::vector<Rational>& v, const Field& f);

// Basis of the null space; each vector has +1 in its highest nonzero slot.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m,
                                                const Field& f);

// Lexicographically first maximal independent column set.
std::vector<int> independent_columns(const Matrix& m, const Field& f);

}  // namespace cwres

#endif
