#ifndef OPENBC_TYPES_HPP_
#define OPENBC_TYPES_HPP_

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace openbc {

using Vec = std::vector<double>;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error {
  using Error::Error;
};

struct NonConvergence : Error {
  using Error::Error;
};

struct SingularPivot : Error {
  using Error::Error;
};

struct SNotSquare : Error {
  using Error::Error;
};

struct GridTooSmall : Error {
  using Error::Error;
};

struct ShapeMismatch : Error {
  using Error::Error;
};

struct ConfigError : Error {
  ConfigError(const std::string& msg, int line = 0, int col = 0)
      : Error(msg), line(line), col(col) {}
  int line;
  int col;
};

struct SolverBlowup : Error {
  SolverBlowup(const std::string& msg, double t, std::int64_t step)
      : Error(msg), t(t), step(step) {}
  double t;
  std::int64_t step;
};

// ---------------------------------------------------------------------------
// Dense row-major matrix. Sized for small operator algebra (boundary blocks,
// transformations), not for grid-scale data; grid fields live in Field.
// ---------------------------------------------------------------------------

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, fill) {
    if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix dimension");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }

  static Mat diag(const Vec& d) {
    Mat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
    for (int i = 0; i < m.rows(); ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  const std::vector<double>& data() const { return a_; }
  std::vector<double>& data() { return a_; }

  Mat transpose() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  double max_abs() const {
    double m = 0.0;
    for (double v : a_) m = std::max(m, std::abs(v));
    return m;
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> a_;
};

inline Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape mismatch");
  Mat c(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

inline Vec operator*(const Mat& a, const Vec& x) {
  if (a.cols() != static_cast<int>(x.size()))
    throw DimensionMismatch("matrix-vector shape mismatch");
  Vec y(static_cast<std::size_t>(a.rows()), 0.0);
  for (int i = 0; i < a.rows(); ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols(); ++j) s += a(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

inline Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix difference shape mismatch");
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

inline Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix sum shape mismatch");
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

inline Mat operator*(double s, const Mat& a) {
  Mat c(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) c(i, j) = s * a(i, j);
  return c;
}

inline double dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("dot of unequal vectors");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2_sq(const Vec& a) { return dot(a, a); }

inline double norm2(const Vec& a) { return std::sqrt(norm2_sq(a)); }

inline Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector difference shape mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

inline Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector sum shape mismatch");
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline Vec operator*(double s, const Vec& a) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

// ---------------------------------------------------------------------------
// Symmetric matrix with an explicit symmetry invariant. Construction
// symmetrizes by averaging and records the asymmetry residual; inputs whose
// residual exceeds 1e-12 * max|entry| are rejected.
// ---------------------------------------------------------------------------

class SymMatrix {
 public:
  // State dimension is capped at 64; the extra headroom admits the stacked
  // 2n x 2n viscous boundary blocks.
  static constexpr int kMaxDim = 128;
  static constexpr double kAsymTol = 1e-12;

  SymMatrix() = default;

  explicit SymMatrix(const Mat& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("SymMatrix requires a square matrix");
    if (m.rows() < 1 || m.rows() > kMaxDim)
      throw DimensionMismatch("SymMatrix dimension out of range");
    n_ = m.rows();
    a_ = Mat(n_, n_);
    double asym = 0.0;
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        a_(i, j) = 0.5 * (m(i, j) + m(j, i));
        asym = std::max(asym, std::abs(m(i, j) - m(j, i)));
      }
    asym_residual_ = asym;
    const double scale = m.max_abs();
    if (asym > kAsymTol * std::max(1.0, scale))
      throw DimensionMismatch("input matrix is not symmetric to tolerance");
  }

  static SymMatrix from_diag(const Vec& d) { return SymMatrix(Mat::diag(d)); }

  int n() const { return n_; }
  double operator()(int i, int j) const { return a_(i, j); }
  const Mat& mat() const { return a_; }
  double asym_residual() const { return asym_residual_; }
  double max_abs() const { return a_.max_abs(); }

  double quad_form(const Vec& u) const {
    if (static_cast<int>(u.size()) != n_) throw DimensionMismatch("quad_form shape mismatch");
    double s = 0.0;
    for (int i = 0; i < n_; ++i) {
      double r = 0.0;
      for (int j = 0; j < n_; ++j) r += a_(i, j) * u[static_cast<std::size_t>(j)];
      s += u[static_cast<std::size_t>(i)] * r;
    }
    return s;
  }

 private:
  int n_ = 0;
  Mat a_;
  double asym_residual_ = 0.0;
};

}  // namespace openbc

#endif  // OPENBC_TYPES_HPP_
