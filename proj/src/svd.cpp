#include "dgsum/svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "dgsum/util.hpp"

namespace dgsum {

namespace {

constexpr int kMaxSweeps = 10000;
constexpr double kRotationTol = 1e-12;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double norm2(const std::vector<double>& a) { return std::sqrt(dot(a, a)); }

// Orthogonalize w against cols[0..count) (two passes), normalize in place.
// Returns the remaining norm before normalization.
double orthonormalize(std::vector<double>& w, const std::vector<std::vector<double>>& cols, int count) {
  for (int pass = 0; pass < 2; ++pass) {
    for (int j = 0; j < count; ++j) {
      double c = dot(w, cols[static_cast<size_t>(j)]);
      for (size_t i = 0; i < w.size(); ++i) w[i] -= c * cols[static_cast<size_t>(j)][i];
    }
  }
  double n = norm2(w);
  if (n > 0.0)
    for (double& x : w) x /= n;
  return n;
}

std::vector<double> apply(const Matrix& b, const std::vector<double>& v) {
  std::vector<double> w(static_cast<size_t>(b.rows), 0.0);
  for (int i = 0; i < b.rows; ++i) {
    double s = 0.0;
    const double* row = &b.data[static_cast<size_t>(i) * b.cols];
    for (int j = 0; j < b.cols; ++j) s += row[j] * v[static_cast<size_t>(j)];
    w[static_cast<size_t>(i)] = s;
  }
  return w;
}

void sign_normalize(std::vector<double>& u, std::vector<double>& v) {
  size_t arg = 0;
  double best = 0.0;
  for (size_t i = 0; i < u.size(); ++i) {
    double a = std::fabs(u[i]);
    if (a > best) {
      best = a;
      arg = i;
    }
  }
  if (u[arg] < 0.0) {
    for (double& x : u) x = -x;
    for (double& x : v) x = -x;
  }
}

}  // namespace

void jacobi_eigen_sym(const Matrix& h, std::vector<double>& values, Matrix& vectors) {
  int n = h.rows;
  Matrix a = h;
  Matrix e = Matrix::identity(n);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-28 * std::max(1.0, frobenius_sq(a))) break;
    for (int p = 0; p < n; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (std::fabs(a(p, q)) < 1e-300) continue;
        double theta = 0.5 * std::atan2(2.0 * a(p, q), a(q, q) - a(p, p));
        double c = std::cos(theta), s = std::sin(theta);
        for (int r = 0; r < n; ++r) {
          double arp = a(r, p), arq = a(r, q);
          a(r, p) = c * arp - s * arq;
          a(r, q) = s * arp + c * arq;
        }
        for (int r = 0; r < n; ++r) {
          double apr = a(p, r), aqr = a(q, r);
          a(p, r) = c * apr - s * aqr;
          a(q, r) = s * apr + c * aqr;
        }
        for (int r = 0; r < n; ++r) {
          double erp = e(r, p), erq = e(r, q);
          e(r, p) = c * erp - s * erq;
          e(r, q) = s * erp + c * erq;
        }
      }
    }
  }
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });
  values.assign(static_cast<size_t>(n), 0.0);
  vectors = Matrix(n, n);
  for (int j = 0; j < n; ++j) {
    values[static_cast<size_t>(j)] = a(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]);
    for (int i = 0; i < n; ++i) vectors(i, j) = e(i, order[static_cast<size_t>(j)]);
  }
}

std::vector<SvdTriplet> truncated_svd(const Matrix& m, int k, std::uint64_t seed) {
  int rows = m.rows, cols = m.cols;
  if (k < 1 || k > std::min(rows, cols)) {
    throw std::invalid_argument("truncated_svd: k out of range");
  }
  Matrix b = mul_tn(m, m);  // cols x cols, symmetric PSD
  double bscale = max_abs(b);

  Rng rng(seed);
  std::vector<std::vector<double>> v(static_cast<size_t>(k));
  for (int j = 0; j < k; ++j) {
    auto& col = v[static_cast<size_t>(j)];
    col.resize(static_cast<size_t>(cols));
    do {
      for (double& x : col) x = rng.uniform(-1.0, 1.0);
    } while (orthonormalize(col, v, j) < 1e-8);
  }

  // Subspace iteration. A column whose image under b collapses (null
  // direction) keeps its previous value so the rotation measure can settle.
  for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
    double rotation = 0.0;
    std::vector<std::vector<double>> nv(static_cast<size_t>(k));
    for (int j = 0; j < k; ++j) {
      std::vector<double> w = apply(b, v[static_cast<size_t>(j)]);
      double rem = orthonormalize(w, nv, j);
      if (rem <= 1e-14 * std::max(1.0, bscale)) {
        w = v[static_cast<size_t>(j)];
        rem = orthonormalize(w, nv, j);
        if (rem <= 1e-10) {
          // Deterministic probe of coordinate directions.
          for (int p = 0; p < cols && rem <= 1e-10; ++p) {
            w.assign(static_cast<size_t>(cols), 0.0);
            w[static_cast<size_t>(p)] = 1.0;
            rem = orthonormalize(w, nv, j);
          }
        }
      }
      double align = std::fabs(dot(w, v[static_cast<size_t>(j)]));
      rotation = std::max(rotation, 1.0 - align);
      nv[static_cast<size_t>(j)] = std::move(w);
    }
    v = std::move(nv);
    if (rotation < kRotationTol) break;
    if (sweep == kMaxSweeps - 1) {
      // Fall through; the residual gate below decides whether to fail.
      break;
    }
  }

  // Rayleigh-Ritz on the converged subspace.
  Matrix vm(cols, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < cols; ++i) vm(i, j) = v[static_cast<size_t>(j)][static_cast<size_t>(i)];
  Matrix h = mul_tn(vm, b * vm);
  for (int p = 0; p < k; ++p)
    for (int q = p + 1; q < k; ++q) {
      double avg = 0.5 * (h(p, q) + h(q, p));
      h(p, q) = h(q, p) = avg;
    }
  std::vector<double> lambda;
  Matrix e;
  jacobi_eigen_sym(h, lambda, e);
  Matrix vr = vm * e;

  std::vector<SvdTriplet> out(static_cast<size_t>(k));
  double sigma1 = std::sqrt(std::max(lambda.empty() ? 0.0 : lambda[0], 0.0));
  for (int j = 0; j < k; ++j) {
    SvdTriplet& t = out[static_cast<size_t>(j)];
    t.sigma = std::sqrt(std::max(lambda[static_cast<size_t>(j)], 0.0));
    t.v.resize(static_cast<size_t>(cols));
    for (int i = 0; i < cols; ++i) t.v[static_cast<size_t>(i)] = vr(i, j);
    std::vector<double> mv(static_cast<size_t>(rows), 0.0);
    for (int i = 0; i < rows; ++i) {
      double s = 0.0;
      for (int c = 0; c < cols; ++c) s += m(i, c) * t.v[static_cast<size_t>(c)];
      mv[static_cast<size_t>(i)] = s;
    }
    if (t.sigma > 1e-12 * std::max(1.0, sigma1)) {
      t.u = mv;
      for (double& x : t.u) x /= t.sigma;
    } else {
      // Null direction: any unit vector orthogonal to the previous u's
      // satisfies the triplet contract since ||m v|| ~ 0.
      std::vector<std::vector<double>> prev;
      for (int p = 0; p < j; ++p) prev.push_back(out[static_cast<size_t>(p)].u);
      std::vector<double> u(static_cast<size_t>(rows), 0.0);
      double rem = 0.0;
      for (int p = 0; p < rows && rem <= 1e-10; ++p) {
        u.assign(static_cast<size_t>(rows), 0.0);
        u[static_cast<size_t>(p)] = 1.0;
        rem = orthonormalize(u, prev, j);
      }
      t.u = u;
    }
    sign_normalize(t.u, t.v);

    // mv may have been flipped together with u; recompute against the final v.
    double res = 0.0;
    for (int i = 0; i < rows; ++i) {
      double s = 0.0;
      for (int c = 0; c < cols; ++c) s += m(i, c) * t.v[static_cast<size_t>(c)];
      double d = s - t.sigma * t.u[static_cast<size_t>(i)];
      res += d * d;
    }
    res = std::sqrt(res);
    // Dual residual ||m^T u - sigma v|| is the one that actually certifies
    // convergence (the primal one is zero by construction of u).
    double dres = 0.0;
    if (t.sigma > 1e-12 * std::max(1.0, sigma1)) {
      for (int c = 0; c < cols; ++c) {
        double s = 0.0;
        for (int i = 0; i < rows; ++i) s += m(i, c) * t.u[static_cast<size_t>(i)];
        double d = s - t.sigma * t.v[static_cast<size_t>(c)];
        dres += d * d;
      }
      dres = std::sqrt(dres);
    }
    double bound = 1e-8 * std::max(1.0, sigma1);
    if (res > bound || dres > bound) {
      throw std::runtime_error("truncated_svd: no convergence, achieved residual " +
                               fmt_double(std::max(res, dres)));
    }
  }
  return out;
}

}  // namespace dgsum
