#ifndef OPENBC_MODEL_HPP_
#define OPENBC_MODEL_HPP_

#include <memory>
#include <string>

#include "openbc/types.hpp"

namespace openbc::model {

// ---------------------------------------------------------------------------
// Pluggable description of a system in skew form:
//
//   P U_t + (A(U) U)_x + A(U)^T U_x + C(U) U = eps (D(U, U_x))_x + forcing
//
// with C + C^T = 0 and U_x^T D >= 0, so the energy rate depends on boundary
// terms only. Instances are immutable and shareable across threads.
// ---------------------------------------------------------------------------
class SkewModel {
 public:
  virtual ~SkewModel() = default;

  virtual std::string name() const = 0;
  virtual int n() const = 0;
  virtual const SymMatrix& P() const = 0;
  virtual Mat eval_A(const Vec& u) const = 0;
  virtual Mat eval_C(const Vec& u) const = 0;
  virtual Vec eval_D(const Vec& u, const Vec& ux) const = 0;
  virtual double epsilon() const = 0;

  /// Manufactured-solution forcing; zero unless the instance was built in
  /// manufactured mode.
  virtual Vec forcing(double x, double t) const { return Vec(static_cast<std::size_t>(n()), 0.0); }

  virtual bool manufactured() const { return false; }

  /// Exact solution value and spatial derivative at (x, t); only valid in
  /// manufactured mode.
  virtual void exact(double x, double t, Vec& u, Vec& ux) const {
    throw Error("model '" + name() + "' has no manufactured solution");
  }
};

using ModelPtr = std::shared_ptr<const SkewModel>;

/// Scalar Burgers in skew split form: A(u) = u/3, D = u_x.
/// Manufactured solution u*(x,t) = sin(2 pi (x - t)).
ModelPtr make_burgers(double epsilon, bool manufactured);

/// Constant-coefficient symmetric 2x2 wave system: A = [[0,1],[1,0]],
/// D = (u1_x, u2_x). Manufactured solution is the exact standing wave
/// (cos 2pi x cos 4pi t, sin 2pi x sin 4pi t).
ModelPtr make_linear_sym(double epsilon, bool manufactured);

/// Model lookup by config name ("burgers" | "linear_sym").
ModelPtr make_model(const std::string& name, double epsilon, bool manufactured);

/// Symmetric part of normal * A(U) at a boundary trace state.
SymMatrix boundary_matrix(const SkewModel& m, const Vec& u_boundary, int normal);

/// Registration checks: P is PSD, C(U) + C(U)^T == 0 and U_x^T D >= 0 on
/// sampled states. Throws Error on violation. Called by the factories.
void validate_model(const SkewModel& m);

}  // namespace openbc::model

#endif  // OPENBC_MODEL_HPP_
