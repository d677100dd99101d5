#pragma once

#include <cstddef>
#include <vector>

namespace dgsum {

/// Dense row-major matrix of doubles. Everything in this project is
/// desk-scale (n <= ~5000) and the solver touches all entries anyway, so
/// there is no sparse storage.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<size_t>(r) * static_cast<size_t>(c), 0.0) {}
  Matrix(int r, int c, std::vector<double> d);

  double& operator()(int i, int j) { return data[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<size_t>(i) * cols + j]; }

  bool same_shape(const Matrix& o) const { return rows == o.rows && cols == o.cols; }

  static Matrix identity(int n);
  static Matrix ones(int r, int c);
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

Matrix transpose(const Matrix& a);
/// a^T * b without materializing the transpose.
Matrix mul_tn(const Matrix& a, const Matrix& b);
/// a * b^T without materializing the transpose.
Matrix mul_nt(const Matrix& a, const Matrix& b);

/// Entrywise max(x, 0) and max(-x, 0); x == pos_part(x) - neg_part(x).
Matrix pos_part(const Matrix& m);
Matrix neg_part(const Matrix& m);

/// Sum of squared entries (squared Frobenius norm).
double frobenius_sq(const Matrix& m);
/// tr(a * b), computed without the product.
double trace_prod(const Matrix& a, const Matrix& b);
double trace(const Matrix& a);
double max_abs(const Matrix& m);
bool all_finite(const Matrix& m);

}  // namespace dgsum
