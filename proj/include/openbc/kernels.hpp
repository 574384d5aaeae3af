#ifndef OPENBC_KERNELS_HPP_
#define OPENBC_KERNELS_HPP_

#include <cstdint>

#include "openbc/sbp.hpp"

// Grid-level hot loops. Every kernel exists in two lanes: a serial reference
// (kept for testing) and an OpenMP lane. The parallel lane uses static
// scheduling over elementwise writes only — no reductions — so its output is
// bit-identical to the serial lane for any thread count.

namespace openbc::kernels {

/// Grids below this size run the parallel lane's loops serially (the `if`
/// clause); per-element arithmetic is identical either way.
constexpr std::int64_t kParMinN = 4096;

// ---------------------------------------------------------------------------
// D1 application: out = D1 u, componentwise over node-major fields.
// ---------------------------------------------------------------------------

namespace detail {

inline void d1_node(const sbp::SbpOperator& op, const double* u, double* out, int nc,
                    std::int64_t j) {
  const double inv_h = 1.0 / op.h;
  if (j < op.depth) {
    const double* row = op.d1_closure.data() + static_cast<std::size_t>(j) * op.width;
    for (int c = 0; c < nc; ++c) {
      double s = 0.0;
      for (int k = 0; k < op.width; ++k)
        s += row[k] * u[static_cast<std::size_t>(k) * nc + c];
      out[static_cast<std::size_t>(j) * nc + c] = inv_h * s;
    }
  } else if (j >= op.N - op.depth) {
    const std::int64_t r = op.N - 1 - j;
    const double* row = op.d1_closure.data() + static_cast<std::size_t>(r) * op.width;
    for (int c = 0; c < nc; ++c) {
      double s = 0.0;
      for (int k = 0; k < op.width; ++k)
        s += row[k] * u[static_cast<std::size_t>(op.N - 1 - k) * nc + c];
      out[static_cast<std::size_t>(j) * nc + c] = -inv_h * s;
    }
  } else {
    const int w = 2 * op.half + 1;
    const double* base = u + static_cast<std::size_t>(j - op.half) * nc;
    for (int c = 0; c < nc; ++c) {
      double s = 0.0;
      for (int k = 0; k < w; ++k)
        s += op.d1_interior[static_cast<std::size_t>(k)] * base[static_cast<std::size_t>(k) * nc + c];
      out[static_cast<std::size_t>(j) * nc + c] = inv_h * s;
    }
  }
}

}  // namespace detail

namespace serial {

inline void apply_d1(const sbp::SbpOperator& op, const double* u, double* out, int nc) {
  for (std::int64_t j = 0; j < op.N; ++j) detail::d1_node(op, u, out, nc, j);
}

/// Runs fn(j) for every node, in index order.
template <class Fn>
inline void for_each_node(std::int64_t N, Fn&& fn) {
  for (std::int64_t j = 0; j < N; ++j) fn(j);
}

}  // namespace serial

namespace par {

inline void apply_d1(const sbp::SbpOperator& op, const double* u, double* out, int nc) {
  const std::int64_t N = op.N;
#pragma omp parallel for schedule(static) if (N >= kParMinN)
  for (std::int64_t j = 0; j < N; ++j) detail::d1_node(op, u, out, nc, j);
}

/// Runs fn(j) for every node; fn(j) may only write node j's outputs.
template <class Fn>
inline void for_each_node(std::int64_t N, Fn&& fn) {
#pragma omp parallel for schedule(static) if (N >= kParMinN)
  for (std::int64_t j = 0; j < N; ++j) fn(j);
}

}  // namespace par

inline void apply_d1(const sbp::SbpOperator& op, const sbp::Field& u, sbp::Field& out) {
  par::apply_d1(op, u.a.data(), out.a.data(), u.n);
}

}  // namespace openbc::kernels

#endif  // OPENBC_KERNELS_HPP_
