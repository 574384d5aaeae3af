#include "openbc/sbp.hpp"

namespace openbc::sbp {

namespace {

SbpOperator base_order2() {
  SbpOperator op;
  op.order = 2;
  op.depth = 1;
  op.width = 2;
  op.half = 1;
  op.q_closure = {-1.0 / 2.0, 1.0 / 2.0};
  op.q_interior = {-1.0 / 2.0, 0.0, 1.0 / 2.0};
  op.p_weights = {1.0 / 2.0};
  return op;
}

SbpOperator base_order4() {
  SbpOperator op;
  op.order = 4;
  op.depth = 4;
  op.width = 6;
  op.half = 2;
  op.q_closure = {
      -1.0 / 2.0,  59.0 / 96.0, -1.0 / 12.0, -1.0 / 32.0, 0.0,         0.0,
      -59.0 / 96.0, 0.0,         59.0 / 96.0, 0.0,         0.0,         0.0,
      1.0 / 12.0,  -59.0 / 96.0, 0.0,         59.0 / 96.0, -1.0 / 12.0, 0.0,
      1.0 / 32.0,  0.0,         -59.0 / 96.0, 0.0,         2.0 / 3.0,   -1.0 / 12.0,
  };
  op.q_interior = {1.0 / 12.0, -2.0 / 3.0, 0.0, 2.0 / 3.0, -1.0 / 12.0};
  op.p_weights = {17.0 / 48.0, 59.0 / 48.0, 43.0 / 48.0, 49.0 / 48.0};
  return op;
}

}  // namespace

SbpOperator make_sbp(int order, std::int64_t N) {
  SbpOperator op;
  if (order == 2)
    op = base_order2();
  else if (order == 4)
    op = base_order4();
  else
    throw ConfigError("unsupported operator order (2 or 4)");

  if (N < 2 * op.width) throw GridTooSmall("grid too small for the boundary closure");

  op.N = N;
  op.h = 1.0 / static_cast<double>(N - 1);

  op.d1_closure.resize(op.q_closure.size());
  for (int r = 0; r < op.depth; ++r)
    for (int c = 0; c < op.width; ++c)
      op.d1_closure[static_cast<std::size_t>(r) * op.width + c] =
          op.q_closure[static_cast<std::size_t>(r) * op.width + c] /
          op.p_weights[static_cast<std::size_t>(r)];
  op.d1_interior = op.q_interior;
  return op;
}

Mat SbpOperator::dense_q() const {
  Mat q(static_cast<int>(N), static_cast<int>(N));
  for (std::int64_t i = depth; i < N - depth; ++i)
    for (int k = 0; k <= 2 * half; ++k)
      q(static_cast<int>(i), static_cast<int>(i - half + k)) =
          q_interior[static_cast<std::size_t>(k)];
  for (int r = 0; r < depth; ++r)
    for (int c = 0; c < width; ++c) {
      const double v = q_closure[static_cast<std::size_t>(r) * width + c];
      q(r, c) = v;
      q(static_cast<int>(N - 1 - r), static_cast<int>(N - 1 - c)) = -v;
    }
  return q;
}

Mat SbpOperator::dense_d1() const {
  Mat q = dense_q();
  Mat d(static_cast<int>(N), static_cast<int>(N));
  for (std::int64_t i = 0; i < N; ++i) {
    const double w = 1.0 / pnorm(i);
    for (std::int64_t j = 0; j < N; ++j)
      d(static_cast<int>(i), static_cast<int>(j)) = w * q(static_cast<int>(i), static_cast<int>(j));
  }
  return d;
}

Vec SbpOperator::dense_pnorm() const {
  Vec p(static_cast<std::size_t>(N));
  for (std::int64_t j = 0; j < N; ++j) p[static_cast<std::size_t>(j)] = pnorm(j);
  return p;
}

Lifting make_lifting(const SbpOperator& op, Side side) {
  const std::int64_t idx = side == Side::kLeft ? 0 : op.N - 1;
  return Lifting{idx, 1.0 / op.pnorm(idx)};
}

Field sat_term(const SbpOperator& op, Side side, const Vec& penalty_density) {
  Field f(op.N, static_cast<int>(penalty_density.size()));
  add_sat(op, side, penalty_density, f);
  return f;
}

void add_sat(const SbpOperator& op, Side side, const Vec& penalty_density, Field& field,
             double scale) {
  if (field.N != op.N || field.n != static_cast<int>(penalty_density.size()))
    throw ShapeMismatch("sat_term field shape mismatch");
  const Lifting lift = make_lifting(op, side);
  double* row = field.node(lift.idx);
  for (int c = 0; c < field.n; ++c)
    row[c] += scale * (-lift.inv_weight) * penalty_density[static_cast<std::size_t>(c)];
}

double norm_dot(const SbpOperator& op, const Field& u, const Field& v) {
  if (u.N != v.N || u.n != v.n || u.N != op.N) throw ShapeMismatch("norm_dot shape mismatch");
  double s = 0.0;
  for (std::int64_t j = 0; j < u.N; ++j) {
    const double w = op.pnorm(j);
    const double* a = u.node(j);
    const double* b = v.node(j);
    double nodal = 0.0;
    for (int c = 0; c < u.n; ++c) nodal += a[c] * b[c];
    s += w * nodal;
  }
  return s;
}

}  // namespace openbc::sbp
