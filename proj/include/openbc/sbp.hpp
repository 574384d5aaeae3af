#ifndef OPENBC_SBP_HPP_
#define OPENBC_SBP_HPP_

#include <cstdint>
#include <vector>

#include "openbc/types.hpp"

namespace openbc::sbp {

enum class Side { kLeft, kRight };

// ---------------------------------------------------------------------------
// Diagonal-norm summation-by-parts first-derivative pair on [0, 1]:
// D1 = Pnorm^-1 Q with Q + Q^T = diag(-1, 0, ..., 0, 1).
//
// Q and the norm weights are stored as rational coefficients; the right
// closure is the negated mirror of the left one, so the summation-by-parts
// identity holds exactly in floating point. D1 is never materialized at
// grid scale; kernels consume the stencil view below.
// ---------------------------------------------------------------------------
struct SbpOperator {
  int order = 0;        // interior accuracy (2 or 4)
  std::int64_t N = 0;   // grid points
  double h = 0.0;       // spacing 1/(N-1)

  int depth = 0;   // closure rows per side
  int width = 0;   // nodes touched by a closure row
  int half = 0;    // interior stencil half-width

  std::vector<double> q_closure;   // depth x width block of Q (left side)
  std::vector<double> q_interior;  // 2*half+1 antisymmetric interior row
  std::vector<double> p_weights;   // boundary norm weights (unit interior)

  std::vector<double> d1_closure;   // q_closure row j divided by p_weights[j]
  std::vector<double> d1_interior;  // equals q_interior (unit weight)

  double x(std::int64_t j) const { return static_cast<double>(j) * h; }

  /// Norm weight at node j, including the h factor.
  double pnorm(std::int64_t j) const {
    if (j < depth) return h * p_weights[static_cast<std::size_t>(j)];
    if (j >= N - depth) return h * p_weights[static_cast<std::size_t>(N - 1 - j)];
    return h;
  }

  // Dense views for operator-level tests; O(N^2), test scale only.
  Mat dense_q() const;
  Mat dense_d1() const;
  Vec dense_pnorm() const;
};

/// Builds the operator pair for interior order 2 or 4.
/// Throws GridTooSmall when N < 2 * closure width and ConfigError for an
/// unsupported order.
SbpOperator make_sbp(int order, std::int64_t N);

// ---------------------------------------------------------------------------
// Grid field: N nodes, n components, node-major storage.
// ---------------------------------------------------------------------------
struct Field {
  std::int64_t N = 0;
  int n = 0;
  std::vector<double> a;

  Field() = default;
  Field(std::int64_t N_, int n_) : N(N_), n(n_), a(static_cast<std::size_t>(N_) * n_, 0.0) {}

  double* node(std::int64_t j) { return a.data() + static_cast<std::size_t>(j) * n; }
  const double* node(std::int64_t j) const { return a.data() + static_cast<std::size_t>(j) * n; }

  Vec node_vec(std::int64_t j) const {
    return Vec(node(j), node(j) + n);
  }
};

/// Discrete lifting at one boundary node: the SAT row scaling.
struct Lifting {
  std::int64_t idx = 0;
  double inv_weight = 0.0;  // 1 / Pnorm[idx]
};

Lifting make_lifting(const SbpOperator& op, Side side);

/// Full SAT field for a boundary penalty density: zero except at the
/// boundary row, which carries -(1 / Pnorm[idx]) * density. Adding this to
/// dU/dt contributes exactly -U_b^T density to the discrete energy rate.
Field sat_term(const SbpOperator& op, Side side, const Vec& penalty_density);

/// In-place variant used by the solver: field.node(idx) += scale * (-1/P_b) * density.
void add_sat(const SbpOperator& op, Side side, const Vec& penalty_density, Field& field,
             double scale = 1.0);

/// Discrete inner product sum_j Pnorm_j u_j . v_j (serial, fixed order).
double norm_dot(const SbpOperator& op, const Field& u, const Field& v);

}  // namespace openbc::sbp

#endif  // OPENBC_SBP_HPP_
