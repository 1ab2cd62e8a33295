#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "twistcoh/int_matrix.hpp"
#include "twistcoh/scalar.hpp"

namespace twistcoh {

using Vector = std::vector<Scalar>;

// Collects non-fatal numerical notes (conditioning, near-trivial characters).
struct Diagnostics {
  std::vector<std::string> warnings;
  void warn(std::string message);
};

// Dense row-major matrix whose entries all share one numeric mode.
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const NumericMode& mode);
  // Throws ModeMismatch if an entry is not in `mode`, InvalidArgument on ragged rows.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, const NumericMode& mode);
  static Matrix from_integers(const IntMatrix& m, const NumericMode& mode);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const NumericMode& mode() const { return mode_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  // Writes must keep the matrix mode; set() enforces it.
  void set(std::size_t i, std::size_t j, Scalar value);

 private:
  std::size_t rows_;
  std::size_t cols_;
  NumericMode mode_;
  std::vector<Scalar> entries_;
};

Vector multiply(const Matrix& m, const Vector& v);

// Row echelon form plus the pivot column of each non-zero row.
struct Echelon {
  Matrix form;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const { return pivot_columns.size(); }
};

// Exact modes: fraction-free (Bareiss) elimination. Approx mode: partial pivoting by
// magnitude; a column without an entry above the tolerance has no pivot, and pivots in
// [eps, 1000 eps] raise a conditioning warning.
Echelon row_echelon(const Matrix& m, Diagnostics* diag = nullptr);

std::size_t rank(const Matrix& m, Diagnostics* diag = nullptr);

// Basis of the right null space. One vector per free column f: 1 at f, 0 at the other
// free columns, pivot columns solved by back substitution.
std::vector<Vector> kernel_basis(const Matrix& m, Diagnostics* diag = nullptr);

// Rank over Q of an integer matrix.
std::size_t rational_rank(const IntMatrix& m);

// Integer polynomial, coefficients from the constant term upwards.
using IntPolynomial = std::vector<mpz_class>;

// det(sI - N) via Faddeev-LeVerrier; monic of degree N.rows.
IntPolynomial characteristic_polynomial(const IntMatrix& n);

inline constexpr std::size_t kMaxEigenSize = 8;

// Strictly positive real eigenvalues of a small integer matrix, distinct, ascending.
//
// Size 1 and 2 return exact Rational or Quadratic(d) values (complex pairs give nothing).
// Larger sizes isolate roots of the square-free characteristic polynomial with Sturm
// sequences and refine by bisection to width below `eps`, returning Approx values.
// Throws SizeLimitExceeded above kMaxEigenSize.
std::vector<Scalar> positive_real_eigenvalues(const IntMatrix& n, double eps = kDefaultTolerance);

}  // namespace twistcoh
