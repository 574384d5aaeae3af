#include "openbc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace openbc::linalg {

namespace {

// Sort lambda descending (ties keep the lower original index first), permute
// the columns of T / rows of T_inv to match, and classify entries.
void sort_and_classify(DiagonalSplit& s) {
  const int n = s.n();
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int i, int j) {
    return s.lambda[static_cast<std::size_t>(i)] > s.lambda[static_cast<std::size_t>(j)];
  });

  Vec lam(static_cast<std::size_t>(n));
  Mat t(n, n), tinv(n, n);
  for (int k = 0; k < n; ++k) {
    const int src = perm[static_cast<std::size_t>(k)];
    lam[static_cast<std::size_t>(k)] = s.lambda[static_cast<std::size_t>(src)];
    for (int i = 0; i < n; ++i) {
      t(i, k) = s.T(i, src);
      tinv(k, i) = s.T_inv(src, i);
    }
  }
  s.lambda = std::move(lam);
  s.T = std::move(t);
  s.T_inv = std::move(tinv);

  double max_abs = 0.0;
  for (double v : s.lambda) max_abs = std::max(max_abs, std::abs(v));
  const double tol = zero_tol(max_abs);

  s.pos_idx.clear();
  s.zero_idx.clear();
  s.neg_idx.clear();
  for (int i = 0; i < n; ++i) {
    const double v = s.lambda[static_cast<std::size_t>(i)];
    if (std::abs(v) <= tol)
      s.zero_idx.push_back(i);
    else if (v > 0.0)
      s.pos_idx.push_back(i);
    else
      s.neg_idx.push_back(i);
  }
}

double off_diag_max(const Mat& a) {
  double m = 0.0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (i != j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

}  // namespace

DiagonalSplit eig_sym(const SymMatrix& sym) {
  const int n = sym.n();
  Mat a = sym.mat();
  Mat t = Mat::identity(n);

  const double scale = std::max(sym.max_abs(), 1.0);
  const double stop = 5e-15 * scale;

  int sweep = 0;
  while (off_diag_max(a) > stop) {
    if (++sweep > kJacobiMaxSweeps)
      throw NonConvergence("jacobi diagonalization exceeded sweep budget");
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= stop) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double tn = (theta >= 0.0 ? 1.0 : -1.0) /
                          (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(tn * tn + 1.0);
        const double s = tn * c;

        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double tkp = t(k, p), tkq = t(k, q);
          t(k, p) = c * tkp - s * tkq;
          t(k, q) = s * tkp + c * tkq;
        }
        // keep the pivot pair exactly symmetric against drift
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  DiagonalSplit out;
  out.orthogonal = true;
  out.lambda.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.lambda[static_cast<std::size_t>(i)] = a(i, i);
  out.T_inv = t.transpose();
  out.T = std::move(t);
  sort_and_classify(out);
  return out;
}

DiagonalSplit congruence_diag(const SymMatrix& sym) {
  const int n = sym.n();
  Mat a = sym.mat();
  Mat t = Mat::identity(n);
  Mat tinv = Mat::identity(n);

  auto remaining_max = [&](int k, bool diag_only) {
    double m = 0.0;
    for (int i = k; i < n; ++i)
      for (int j = (diag_only ? i : k); j <= (diag_only ? i : n - 1); ++j)
        m = std::max(m, std::abs(a(i, j)));
    return m;
  };

  for (int k = 0; k < n; ++k) {
    // largest remaining diagonal pivot
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, i)) > std::abs(a(piv, piv))) piv = i;

    const double block_max = remaining_max(k, false);
    const double tol = zero_tol(std::max(sym.max_abs(), block_max));
    if (std::abs(a(piv, piv)) <= tol) {
      if (block_max <= tol) break;  // remaining block is numerically zero
      throw SingularPivot("no admissible diagonal pivot; off-diagonal mass remains");
    }

    if (piv != k) {
      // symmetric swap of rows/cols k and piv; T gets the column swap
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      for (int i = 0; i < n; ++i) std::swap(a(i, k), a(i, piv));
      for (int i = 0; i < n; ++i) std::swap(t(i, k), t(i, piv));
      for (int j = 0; j < n; ++j) std::swap(tinv(k, j), tinv(piv, j));
    }

    const double d = a(k, k);
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) / d;
      if (f == 0.0) continue;
      // A <- E^T A E with E = I - f e_k e_i^T; accumulate T <- T E
      for (int j = 0; j < n; ++j) a(i, j) -= f * a(k, j);
      for (int j = 0; j < n; ++j) a(j, i) -= f * a(j, k);
      for (int j = 0; j < n; ++j) t(j, i) -= f * t(j, k);
      for (int j = 0; j < n; ++j) tinv(k, j) += f * tinv(i, j);
    }
  }

  DiagonalSplit out;
  out.orthogonal = false;
  out.lambda.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) out.lambda[static_cast<std::size_t>(i)] = a(i, i);
  out.T = std::move(t);
  out.T_inv = std::move(tinv);
  sort_and_classify(out);
  return out;
}

DiagonalSplit diagonalize(const SymMatrix& a, Transformation tr) {
  if (tr == Transformation::kEig) return eig_sym(a);
  try {
    return congruence_diag(a);
  } catch (const SingularPivot&) {
    return eig_sym(a);
  }
}

Inertia inertia(const SymMatrix& a) {
  const DiagonalSplit s = eig_sym(a);
  return Inertia{static_cast<int>(s.pos_idx.size()), static_cast<int>(s.zero_idx.size()),
                 static_cast<int>(s.neg_idx.size())};
}

CertResult is_psd(const SymMatrix& a, bool strict) {
  if (a.n() == 0) return CertResult{true, std::numeric_limits<double>::infinity(), {}};
  const DiagonalSplit s = eig_sym(a);
  const double min_eig = s.lambda.back();
  CertResult r;
  r.margin = min_eig;
  r.ok = strict ? (min_eig > kPsdTol) : (min_eig >= -kPsdTol);
  if (!r.ok) {
    const int n = s.n();
    r.witness.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) r.witness[static_cast<std::size_t>(i)] = s.T(i, n - 1);
  }
  return r;
}

bool neumann_valid(const SymMatrix& m) {
  if (m.n() == 0) return true;
  const DiagonalSplit s = eig_sym(m);
  double rho = 0.0;
  for (double v : s.lambda) rho = std::max(rho, std::abs(v));
  return rho < 1.0 - kPsdTol;
}

Vec to_characteristic(const DiagonalSplit& split, const Vec& u) {
  return split.T_inv * u;
}

Mat lu_solve(const Mat& a, const Mat& rhs) {
  if (a.rows() != a.cols()) throw DimensionMismatch("lu_solve needs a square matrix");
  if (a.rows() != rhs.rows()) throw DimensionMismatch("lu_solve rhs shape mismatch");
  const int n = a.rows();
  Mat lu = a;
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);

  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(lu(i, k)) > std::abs(lu(piv, k))) piv = i;
    if (lu(piv, k) == 0.0) throw SingularPivot("singular matrix in lu_solve");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(lu(k, j), lu(piv, j));
      std::swap(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(piv)]);
    }
    for (int i = k + 1; i < n; ++i) {
      lu(i, k) /= lu(k, k);
      const double f = lu(i, k);
      for (int j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
    }
  }

  Mat x(n, rhs.cols());
  for (int c = 0; c < rhs.cols(); ++c) {
    Vec y(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      double s = rhs(p[static_cast<std::size_t>(i)], c);
      for (int j = 0; j < i; ++j) s -= lu(i, j) * y[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(i)] = s;
    }
    for (int i = n - 1; i >= 0; --i) {
      double s = y[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < n; ++j) s -= lu(i, j) * x(j, c);
      x(i, c) = s / lu(i, i);
    }
  }
  return x;
}

Mat inverse(const Mat& a) { return lu_solve(a, Mat::identity(a.rows())); }

}  // namespace openbc::linalg
