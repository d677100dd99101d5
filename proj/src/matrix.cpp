#include "dgsum/matrix.hpp"

#include <cmath>
#include <stdexcept>

namespace dgsum {

Matrix::Matrix(int r, int c, std::vector<double> d) : rows(r), cols(c), data(std::move(d)) {
  if (data.size() != static_cast<size_t>(r) * static_cast<size_t>(c)) {
    throw std::invalid_argument("matrix data length does not match dimensions");
  }
}

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::ones(int r, int c) {
  Matrix m(r, c);
  for (double& x : m.data) x = 1.0;
  return m;
}

static void check_mul(int an, int bm, const char* what) {
  if (an != bm) throw std::invalid_argument(std::string("dimension mismatch in ") + what);
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  check_mul(a.cols, b.rows, "matrix product");
  Matrix c(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    const double* arow = &a.data[static_cast<size_t>(i) * a.cols];
    double* crow = &c.data[static_cast<size_t>(i) * c.cols];
    for (int k = 0; k < a.cols; ++k) {
      double aik = arow[k];
      if (aik == 0.0) continue;
      const double* brow = &b.data[static_cast<size_t>(k) * b.cols];
      for (int j = 0; j < b.cols; ++j) crow[j] += aik * brow[j];
    }
  }
  return c;
}

Matrix mul_tn(const Matrix& a, const Matrix& b) {
  check_mul(a.rows, b.rows, "transposed product");
  Matrix c(a.cols, b.cols);
  for (int k = 0; k < a.rows; ++k) {
    const double* arow = &a.data[static_cast<size_t>(k) * a.cols];
    const double* brow = &b.data[static_cast<size_t>(k) * b.cols];
    for (int i = 0; i < a.cols; ++i) {
      double aki = arow[i];
      if (aki == 0.0) continue;
      double* crow = &c.data[static_cast<size_t>(i) * c.cols];
      for (int j = 0; j < b.cols; ++j) crow[j] += aki * brow[j];
    }
  }
  return c;
}

Matrix mul_nt(const Matrix& a, const Matrix& b) {
  check_mul(a.cols, b.cols, "product with transpose");
  Matrix c(a.rows, b.rows);
  for (int i = 0; i < a.rows; ++i) {
    const double* arow = &a.data[static_cast<size_t>(i) * a.cols];
    double* crow = &c.data[static_cast<size_t>(i) * c.cols];
    for (int j = 0; j < b.rows; ++j) {
      const double* brow = &b.data[static_cast<size_t>(j) * b.cols];
      double s = 0.0;
      for (int k = 0; k < a.cols; ++k) s += arow[k] * brow[k];
      crow[j] = s;
    }
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("dimension mismatch in matrix sum");
  Matrix c = a;
  for (size_t i = 0; i < c.data.size(); ++i) c.data[i] += b.data[i];
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b)) throw std::invalid_argument("dimension mismatch in matrix difference");
  Matrix c = a;
  for (size_t i = 0; i < c.data.size(); ++i) c.data[i] -= b.data[i];
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c = a;
  for (double& x : c.data) x *= s;
  return c;
}

Matrix transpose(const Matrix& a) {
  Matrix t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

Matrix pos_part(const Matrix& m) {
  Matrix p = m;
  for (double& x : p.data) x = x > 0.0 ? x : 0.0;
  return p;
}

Matrix neg_part(const Matrix& m) {
  Matrix p = m;
  for (double& x : p.data) x = x < 0.0 ? -x : 0.0;
  return p;
}

double frobenius_sq(const Matrix& m) {
  double s = 0.0;
  for (double x : m.data) s += x * x;
  return s;
}

double trace_prod(const Matrix& a, const Matrix& b) {
  check_mul(a.cols, b.rows, "trace of product");
  if (a.rows != b.cols) throw std::invalid_argument("trace of non-square product");
  double s = 0.0;
  for (int i = 0; i < a.rows; ++i)
    for (int k = 0; k < a.cols; ++k) s += a(i, k) * b(k, i);
  return s;
}

double trace(const Matrix& a) {
  double s = 0.0;
  int n = a.rows < a.cols ? a.rows : a.cols;
  for (int i = 0; i < n; ++i) s += a(i, i);
  return s;
}

double max_abs(const Matrix& m) {
  double s = 0.0;
  for (double x : m.data) {
    double a = std::fabs(x);
    if (a > s) s = a;
  }
  return s;
}

bool all_finite(const Matrix& m) {
  for (double x : m.data)
    if (!std::isfinite(x)) return false;
  return true;
}

}  // namespace dgsum
