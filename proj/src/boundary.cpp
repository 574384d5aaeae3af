#include "openbc/boundary.hpp"

#include <cmath>
#include <limits>

namespace openbc::boundary {

namespace {

bool contains(const std::vector<int>& v, int x) {
  for (int e : v)
    if (e == x) return true;
  return false;
}

}  // namespace

SplitOperators build_split(const linalg::DiagonalSplit& split) {
  const int n = split.n();
  SplitOperators out;
  out.n = n;
  out.n_plus = static_cast<int>(split.pos_idx.size() + split.zero_idx.size());
  out.n_minus = static_cast<int>(split.neg_idx.size());
  out.A_plus = Mat(out.n_plus, n);
  out.A_minus = Mat(out.n_minus, n);

  // lambda is sorted descending, so the nonnegative class occupies rows
  // 0..n_plus-1 of sqrt(|Lambda|) T^-1 and the negative class the rest.
  for (int r = 0; r < out.n_plus; ++r) {
    if (contains(split.zero_idx, r)) continue;  // inert row stays exactly zero
    const double w = std::sqrt(split.lambda[static_cast<std::size_t>(r)]);
    for (int j = 0; j < n; ++j) out.A_plus(r, j) = w * split.T_inv(r, j);
  }
  for (int r = 0; r < out.n_minus; ++r) {
    const int src = out.n_plus + r;
    const double w = std::sqrt(-split.lambda[static_cast<std::size_t>(src)]);
    for (int j = 0; j < n; ++j) out.A_minus(r, j) = w * split.T_inv(src, j);
  }
  return out;
}

double boundary_form(const SymMatrix& a_tilde, const Vec& u) {
  return a_tilde.quad_form(u);
}

BoundaryOperatorSet make_operator_set(SplitOperators split, Mat R, Mat S, DataFn G) {
  if (R.rows() != split.n_minus || R.cols() != split.n_plus)
    throw DimensionMismatch("coupling matrix R must be n_minus x n_plus");
  if (S.rows() != split.n_minus || S.cols() != split.n_minus)
    throw SNotSquare("scaling matrix S must be n_minus x n_minus");

  if (S.rows() > 0) {
    // nonsingularity: smallest singular value above 1e-10 * largest
    const linalg::DiagonalSplit sv = linalg::eig_sym(SymMatrix(S.transpose() * S));
    const double smax = std::sqrt(std::max(sv.lambda.front(), 0.0));
    const double smin = std::sqrt(std::max(sv.lambda.back(), 0.0));
    if (!(smin > 1e-10 * smax))
      throw Error("scaling matrix S is numerically singular");
  }

  BoundaryOperatorSet ops;
  ops.split = std::move(split);
  ops.R = std::move(R);
  ops.S = std::move(S);
  ops.G = std::move(G);
  return ops;
}

CertReport certify(const Mat& R, const Mat& S, int n_plus, int n_minus) {
  if (R.rows() != n_minus || R.cols() != n_plus)
    throw DimensionMismatch("coupling matrix R must be n_minus x n_plus");
  if (S.rows() != S.cols()) throw SNotSquare("scaling matrix S must be square");
  if (S.rows() != n_minus) throw DimensionMismatch("scaling matrix S must be n_minus x n_minus");

  CertReport rep;

  if (n_plus == 0 && n_minus == 0) {
    rep.r_semi = {true, std::numeric_limits<double>::infinity()};
    rep.r_strict = rep.r_semi;
    rep.s_cond = rep.r_semi;
    rep.neumann_ok = true;
  } else {
    const Mat rtr = R.transpose() * R;  // n_plus x n_plus
    const Mat gap = Mat::identity(n_plus) - rtr;

    if (n_plus == 0) {
      // no outgoing content to couple back; only the data scaling matters
      rep.r_semi = {true, std::numeric_limits<double>::infinity()};
      rep.r_strict = rep.r_semi;
      rep.neumann_ok = true;
      const Mat k = Mat::identity(n_minus) - S.transpose() * S;
      const linalg::CertResult ks = linalg::is_psd(SymMatrix(k));
      rep.s_cond = {ks.ok, ks.margin};
    } else {
      const SymMatrix gap_sym(gap);
      const linalg::CertResult semi = linalg::is_psd(gap_sym);
      const linalg::CertResult strict = linalg::is_psd(gap_sym, true);
      rep.r_semi = {semi.ok, semi.margin};
      rep.r_strict = {strict.ok, strict.margin};
      if (!semi.ok) rep.r_witness = semi.witness;
      rep.neumann_ok = linalg::neumann_valid(SymMatrix(rtr));

      if (n_minus == 0) {
        rep.s_cond = {rep.r_strict.ok, std::numeric_limits<double>::infinity()};
      } else if (rep.neumann_ok && rep.r_strict.ok) {
        // direct inverse is legitimate exactly when the series converges
        const Mat rts = R.transpose() * S;  // n_plus x n_minus
        const Mat inv_gap = linalg::inverse(gap);
        const Mat k = Mat::identity(n_minus) - S.transpose() * S -
                      rts.transpose() * (inv_gap * rts);
        const linalg::CertResult ks = linalg::is_psd(SymMatrix(k));
        rep.s_cond = {ks.ok, ks.margin};
      } else {
        rep.s_cond = {false, -std::numeric_limits<double>::infinity()};
      }
    }
  }

  rep.case_strong_homogeneous = rep.r_semi.ok;
  rep.case_weak_homogeneous = rep.r_semi.ok;
  rep.case_strong_inhomogeneous = rep.r_strict.ok && rep.s_cond.ok;
  rep.case_weak_inhomogeneous = rep.case_strong_inhomogeneous;
  return rep;
}

Vec strong_bc_solve(const BoundaryOperatorSet& ops, const Vec& w_plus, const Vec& g) {
  return (ops.R * w_plus) + (ops.S * g);
}

double strong_boundary_energy(const BoundaryOperatorSet& ops, const Vec& w_plus,
                              const Vec& g) {
  const Vec w_minus = strong_bc_solve(ops, w_plus, g);
  return norm2_sq(w_plus) - norm2_sq(w_minus);
}

Vec weak_penalty(const BoundaryOperatorSet& ops, const Vec& u, const Vec& g) {
  if (static_cast<int>(u.size()) != ops.split.n)
    throw DimensionMismatch("weak_penalty state dimension mismatch");
  if (ops.split.n_minus == 0) return Vec(u.size(), 0.0);
  const Vec residual = (ops.split.w_minus(u) - (ops.R * ops.split.w_plus(u))) - (ops.S * g);
  Vec out = ops.split.A_minus.transpose() * residual;
  for (double& v : out) v *= 2.0;
  return out;
}

SymMatrix weak_boundary_quadratic(const Mat& R, const Mat& S) {
  if (S.rows() != S.cols()) throw SNotSquare("scaling matrix S must be square");
  if (S.rows() != R.rows()) throw DimensionMismatch("R and S row counts must agree");
  const int np = R.cols();
  const int nm = R.rows();
  const int n = np + nm + nm;
  Mat m = Mat::identity(n);
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < np; ++j) {
      m(np + i, j) = -R(i, j);
      m(j, np + i) = -R(i, j);
    }
  for (int i = 0; i < nm; ++i)
    for (int j = 0; j < nm; ++j) {
      m(np + i, np + nm + j) = -S(i, j);
      m(np + nm + j, np + i) = -S(i, j);
    }
  return SymMatrix(m);
}

double weak_boundary_integrand(const BoundaryOperatorSet& ops, const Vec& u, const Vec& g) {
  const Vec wp = ops.split.w_plus(u);
  const Vec wm = ops.split.w_minus(u);
  double v = norm2_sq(wp) + norm2_sq(wm);
  if (ops.split.n_minus > 0) {
    v -= 2.0 * dot(wm, ops.R * wp);
    v -= 2.0 * dot(wm, ops.S * g);
  }
  return v;
}

ViscousBoundaryBlock viscous_block(const SymMatrix& a_tilde) {
  const int n = a_tilde.n();
  Mat b(2 * n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = a_tilde(i, j);
    b(i, n + i) = -1.0;
    b(n + i, i) = -1.0;
  }
  return ViscousBoundaryBlock{a_tilde, SymMatrix(b)};
}

}  // namespace openbc::boundary
