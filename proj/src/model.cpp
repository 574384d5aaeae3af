#include "openbc/model.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "openbc/linalg.hpp"

namespace openbc::model {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class BurgersModel final : public SkewModel {
 public:
  BurgersModel(double eps, bool mms)
      : eps_(eps), mms_(mms), p_(SymMatrix::from_diag({1.0})) {}

  std::string name() const override { return "burgers"; }
  int n() const override { return 1; }
  const SymMatrix& P() const override { return p_; }
  double epsilon() const override { return eps_; }
  bool manufactured() const override { return mms_; }

  Mat eval_A(const Vec& u) const override {
    Mat a(1, 1);
    a(0, 0) = u[0] / 3.0;
    return a;
  }

  Mat eval_C(const Vec&) const override { return Mat(1, 1); }

  Vec eval_D(const Vec&, const Vec& ux) const override { return ux; }

  Vec forcing(double x, double t) const override {
    if (!mms_) return Vec{0.0};
    // strong form of u* = sin(2 pi (x - t)):
    //   f = u*_t + u* u*_x - eps u*_xx
    const double th = kTwoPi * (x - t);
    const double s = std::sin(th), c = std::cos(th);
    return Vec{-kTwoPi * c + kTwoPi * s * c + eps_ * kTwoPi * kTwoPi * s};
  }

  void exact(double x, double t, Vec& u, Vec& ux) const override {
    if (!mms_) SkewModel::exact(x, t, u, ux);
    const double th = kTwoPi * (x - t);
    u = Vec{std::sin(th)};
    ux = Vec{kTwoPi * std::cos(th)};
  }

 private:
  double eps_;
  bool mms_;
  SymMatrix p_;
};

class LinearSymModel final : public SkewModel {
 public:
  LinearSymModel(double eps, bool mms)
      : eps_(eps), mms_(mms), p_(SymMatrix::from_diag({1.0, 1.0})) {
    a_ = Mat(2, 2);
    a_(0, 1) = 1.0;
    a_(1, 0) = 1.0;
  }

  std::string name() const override { return "linear_sym"; }
  int n() const override { return 2; }
  const SymMatrix& P() const override { return p_; }
  double epsilon() const override { return eps_; }
  bool manufactured() const override { return mms_; }

  Mat eval_A(const Vec&) const override { return a_; }
  Mat eval_C(const Vec&) const override { return Mat(2, 2); }
  Vec eval_D(const Vec&, const Vec& ux) const override { return ux; }

  Vec forcing(double x, double t) const override {
    if (!mms_ || eps_ == 0.0) return Vec{0.0, 0.0};
    // the standing wave solves the inviscid system exactly; only the
    // viscous part needs compensation: f = -eps U*_xx = 4 pi^2 eps U*
    Vec u, ux;
    exact(x, t, u, ux);
    return Vec{kTwoPi * kTwoPi * eps_ * u[0], kTwoPi * kTwoPi * eps_ * u[1]};
  }

  void exact(double x, double t, Vec& u, Vec& ux) const override {
    if (!mms_) SkewModel::exact(x, t, u, ux);
    const double cx = std::cos(kTwoPi * x), sx = std::sin(kTwoPi * x);
    const double ct = std::cos(2.0 * kTwoPi * t), st = std::sin(2.0 * kTwoPi * t);
    u = Vec{cx * ct, sx * st};
    ux = Vec{-kTwoPi * sx * ct, kTwoPi * cx * st};
  }

 private:
  double eps_;
  bool mms_;
  SymMatrix p_;
  Mat a_;
};

}  // namespace

void validate_model(const SkewModel& m) {
  if (m.n() < 1 || m.n() > 64) throw Error("model dimension out of range [1, 64]");
  if (m.epsilon() < 0.0) throw Error("model epsilon must be non-negative");

  const linalg::CertResult p_ok = linalg::is_psd(m.P());
  if (!p_ok.ok) throw Error("model norm matrix P is not positive semidefinite");

  std::mt19937_64 rng(0x5eed0);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  const int n = m.n();
  for (int trial = 0; trial < 100; ++trial) {
    Vec u(static_cast<std::size_t>(n)), ux(static_cast<std::size_t>(n));
    for (double& v : u) v = unif(rng);
    for (double& v : ux) v = unif(rng);

    const Mat c = m.eval_C(u);
    double skew_defect = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) skew_defect = std::max(skew_defect, std::abs(c(i, j) + c(j, i)));
    if (skew_defect > 1e-12 * std::max(1.0, c.max_abs()))
      throw Error("model rotation term violates C + C^T = 0");

    const Vec d = m.eval_D(u, ux);
    if (dot(ux, d) < -1e-12) throw Error("model viscous flux violates U_x^T D >= 0");
  }
}

ModelPtr make_burgers(double epsilon, bool manufactured) {
  auto m = std::make_shared<BurgersModel>(epsilon, manufactured);
  validate_model(*m);
  return m;
}

ModelPtr make_linear_sym(double epsilon, bool manufactured) {
  auto m = std::make_shared<LinearSymModel>(epsilon, manufactured);
  validate_model(*m);
  return m;
}

ModelPtr make_model(const std::string& name, double epsilon, bool manufactured) {
  if (name == "burgers") return make_burgers(epsilon, manufactured);
  if (name == "linear_sym") return make_linear_sym(epsilon, manufactured);
  throw ConfigError("unknown model '" + name + "'");
}

SymMatrix boundary_matrix(const SkewModel& m, const Vec& u_boundary, int normal) {
  if (normal != 1 && normal != -1) throw Error("boundary normal must be +1 or -1");
  const Mat a = m.eval_A(u_boundary);
  const int n = m.n();
  Mat sym(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) sym(i, j) = 0.5 * normal * (a(i, j) + a(j, i));
  return SymMatrix(sym);
}

}  // namespace openbc::model
