#ifndef OPENBC_LINALG_HPP_
#define OPENBC_LINALG_HPP_

#include <vector>

#include "openbc/types.hpp"

namespace openbc::linalg {

/// Relative threshold deciding which diagonal entries count as zero.
inline double zero_tol(double max_abs_lambda) {
  return 1e-10 * std::max(1.0, max_abs_lambda);
}

/// Absolute margin on the minimum eigenvalue for semidefiniteness checks.
constexpr double kPsdTol = 1e-10;

/// Sweep budget for the cyclic Jacobi diagonalization.
constexpr int kJacobiMaxSweeps = 30;

// ---------------------------------------------------------------------------
// Congruence diagonalization result: T^T A T = diag(lambda), with lambda
// sorted descending (ties by original position) and the index range split
// into positive / zero / negative classes. Zero entries are grouped with the
// positive part by every consumer.
// ---------------------------------------------------------------------------
struct DiagonalSplit {
  Mat T;      // nonsingular transformation, columns ordered like lambda
  Mat T_inv;  // its inverse (== T^T for the orthogonal eigenvector route)
  Vec lambda;
  std::vector<int> pos_idx;
  std::vector<int> zero_idx;
  std::vector<int> neg_idx;
  bool orthogonal = false;

  int n() const { return static_cast<int>(lambda.size()); }
};

struct Inertia {
  int n_pos = 0;
  int n_zero = 0;
  int n_neg = 0;

  bool operator==(const Inertia&) const = default;
};

/// Verdict of a positive-semidefiniteness check. On failure, witness is a
/// unit vector with witness^T A witness == margin < 0.
struct CertResult {
  bool ok = false;
  double margin = 0.0;
  Vec witness;
};

/// Orthogonal diagonalization by cyclic Jacobi rotations.
/// Throws NonConvergence if the sweep budget is exhausted.
DiagonalSplit eig_sym(const SymMatrix& a);

/// Non-orthogonal congruence diagonalization via diagonal-pivot symmetric
/// Gaussian elimination. Throws SingularPivot when no admissible diagonal
/// pivot exists but the remaining block is nonzero (caller falls back to
/// eig_sym); by Sylvester's law the signature matches eig_sym either way.
DiagonalSplit congruence_diag(const SymMatrix& a);

enum class Transformation { kEig, kCongruence };

/// congruence_diag with automatic fallback to eig_sym on SingularPivot.
DiagonalSplit diagonalize(const SymMatrix& a, Transformation t);

Inertia inertia(const SymMatrix& a);

CertResult is_psd(const SymMatrix& a, bool strict = false);

/// True iff the spectral radius of M (symmetric PSD, typically R^T R) is
/// below 1 - kPsdTol, i.e. the geometric series for (I - M)^-1 converges.
bool neumann_valid(const SymMatrix& m);

/// Characteristic variables w = T^-1 u for a given split.
Vec to_characteristic(const DiagonalSplit& split, const Vec& u);

// Dense LU helpers (partial pivoting), used for the direct inverse in the
// data-scaling certificate and for norm-matrix inverses.
Mat lu_solve(const Mat& a, const Mat& rhs);
Mat inverse(const Mat& a);

}  // namespace openbc::linalg

#endif  // OPENBC_LINALG_HPP_
