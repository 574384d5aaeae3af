#ifndef OPENBC_BOUNDARY_HPP_
#define OPENBC_BOUNDARY_HPP_

#include <functional>
#include <utility>

#include "openbc/linalg.hpp"
#include "openbc/types.hpp"

namespace openbc::boundary {

// ---------------------------------------------------------------------------
// Split boundary operators. Given T^T A~ T = diag(lambda), the rows of
// A_plus are sqrt(lambda_i) * (row i of T^-1) over the nonnegative class and
// the rows of A_minus are sqrt(|lambda_i|) * (row i of T^-1) over the
// negative class, so that u^T A~ u = |A_plus u|^2 - |A_minus u|^2.
//
// Zero-classified rows are kept as explicit zero rows of A_plus, so
// n_plus + n_minus == n independently of zero-detection jitter.
// ---------------------------------------------------------------------------
struct SplitOperators {
  int n = 0;
  int n_plus = 0;
  int n_minus = 0;
  Mat A_plus;   // n_plus x n
  Mat A_minus;  // n_minus x n

  Vec w_plus(const Vec& u) const { return A_plus * u; }
  Vec w_minus(const Vec& u) const { return A_minus * u; }
};

SplitOperators build_split(const linalg::DiagonalSplit& split);

/// The boundary quadratic form u^T A~ u.
double boundary_form(const SymMatrix& a_tilde, const Vec& u);

/// Boundary data as a function of time.
using DataFn = std::function<Vec(double)>;

// ---------------------------------------------------------------------------
// A complete boundary operator set: the split, the coupling matrix R
// (n_minus x n_plus), the nonsingular data scaling S (n_minus x n_minus) and
// the data function G. The penalty matrix is derived, never stored.
// ---------------------------------------------------------------------------
struct BoundaryOperatorSet {
  SplitOperators split;
  Mat R;
  Mat S;
  DataFn G;

  /// Penalty matrix 2 (A_minus)^T S, recomputed on demand.
  Mat sigma_tilde() const { return 2.0 * (split.A_minus.transpose() * S); }
};

BoundaryOperatorSet make_operator_set(SplitOperators split, Mat R, Mat S, DataFn G);

struct CertFlag {
  bool ok = false;
  double margin = 0.0;
};

// Certification report against the admissibility conditions:
//   r_semi:   I - R^T R >= 0
//   r_strict: I - R^T R  > 0
//   s_cond:   I - S^T S - (R^T S)^T (I - R^T R)^-1 (R^T S) >= 0,
//             evaluated with a direct inverse, gated on Neumann validity
//             (spectral radius of R^T R < 1).
// Case flags: strong/weak homogeneous need r_semi; strong/weak
// inhomogeneous need r_strict and s_cond.
struct CertReport {
  CertFlag r_semi;
  CertFlag r_strict;
  CertFlag s_cond;
  bool neumann_ok = false;
  bool case_strong_homogeneous = false;
  bool case_strong_inhomogeneous = false;
  bool case_weak_homogeneous = false;
  bool case_weak_inhomogeneous = false;
  Vec r_witness;  // unit direction violating the coupling bound, if any
};

CertReport certify(const Mat& R, const Mat& S, int n_plus, int n_minus);

/// Incoming characteristic content enforced by the strong condition:
/// w_minus = R w_plus + S g.
Vec strong_bc_solve(const BoundaryOperatorSet& ops, const Vec& w_plus, const Vec& g);

/// Boundary term after strong imposition: |w_plus|^2 - |R w_plus + S g|^2.
double strong_boundary_energy(const BoundaryOperatorSet& ops, const Vec& w_plus,
                              const Vec& g);

/// Weak penalty surface density 2 (A_minus)^T ((A_minus - R A_plus) U - S g),
/// handed to the discrete lifting.
Vec weak_penalty(const BoundaryOperatorSet& ops, const Vec& u, const Vec& g);

/// Symmetric matrix M over the stacked variables (w_plus, w_minus, g) such
/// that the weakly imposed boundary integrand plus |g|^2 equals the quadratic
/// form of M:  M = [[I, -R^T, 0], [-R, I, -S], [0, -S^T, I]].
SymMatrix weak_boundary_quadratic(const Mat& R, const Mat& S);

/// Weakly imposed boundary integrand
/// |w+|^2 + |w-|^2 - 2 w-^T R w+ - 2 w-^T S g evaluated on a trace state.
double weak_boundary_integrand(const BoundaryOperatorSet& ops, const Vec& u, const Vec& g);

// ---------------------------------------------------------------------------
// Viscous extension: boundary terms with first-derivative fluxes are
// rewritten over the stacked state (U, eps*F~) with the 2n x 2n block
// [[A~, -I], [-I, 0]], whose inertia is (n, 0, n) for every symmetric A~.
// The split/certify machinery then applies unchanged to the block.
// ---------------------------------------------------------------------------
struct ViscousBoundaryBlock {
  SymMatrix base;   // n x n
  SymMatrix block;  // 2n x 2n
};

ViscousBoundaryBlock viscous_block(const SymMatrix& a_tilde);

}  // namespace openbc::boundary

#endif  // OPENBC_BOUNDARY_HPP_
