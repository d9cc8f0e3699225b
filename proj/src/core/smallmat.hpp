#pragma once

// Dense linear algebra for small matrices (dimension <= ~10).  Everything the
// curvature code needs: products, LU determinants, Cholesky, and a Jacobi
// eigensolver for symmetric matrices.  No attempt at BLAS-level performance.

#include <cstddef>
#include <vector>

namespace hrsurf {

using Vec = std::vector<double>;

double dot(const Vec& a, const Vec& b);
double norm2(const Vec& a);  // squared Euclidean norm

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  double& operator()(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);
Vec operator*(const Matrix& a, const Vec& v);

Matrix transpose(const Matrix& a);
double trace(const Matrix& a);
double max_abs(const Matrix& a);
double frobenius_norm(const Matrix& a);

bool is_symmetric(const Matrix& a, double rel_tol);
Matrix symmetrized(const Matrix& a);  // (A + A^T)/2

// Determinant by LU with partial pivoting (destroys a local copy).
double determinant(Matrix a);

// Lower Cholesky factor of a symmetric positive definite matrix.
// Throws NumericError if a pivot is not positive.
Matrix cholesky_lower(const Matrix& a);

// Solves L X = B for lower triangular L.
Matrix solve_lower(const Matrix& l, const Matrix& b);

struct SymEigen {
  Vec values;      // ascending
  Matrix vectors;  // column i pairs with values[i], orthonormal
};

// Cyclic Jacobi iteration; input is symmetrized first.
SymEigen sym_eigen(const Matrix& a);

// Exact for every n, r that fits in a double (n <= 60 here).
double binomial(int n, int r);

}  // namespace hrsurf
