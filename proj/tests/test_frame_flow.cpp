#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "nlslab/field_eval.hpp"
#include "nlslab/frame_flow.hpp"

using namespace nlslab;

namespace {

std::vector<cplx> samples(double x0, double h, std::size_t n, auto&& f) {
  std::vector<cplx> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = f(x0 + double(i) * h);
  return u;
}

double circle_error(double kappa, std::size_t n) {
  const double L = 2.0, h = L / double(n - 1);
  const auto u = samples(0.0, h, n, [&](double) { return cplx(kappa, 0.0); });
  const Curve c = curve_from_tangent(transport_x(u, 0.0, h, Frame{}));
  double err = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double s = double(i) * h;
    const Vec3 exact(std::sin(kappa * s) / kappa, (1 - std::cos(kappa * s)) / kappa, 0.0);
    err = std::max(err, (c.points[i] - exact).norm());
  }
  return err;
}

}  // namespace

TEST(Frame, OrthonormalOverTenThousandSteps) {
  const std::size_t n = 10001;
  const double h = 1e-3;
  const auto u = samples(-5.0, h, n, [](double x) {
    return cplx(std::cos(3 * x) + 0.5, std::sin(x * x));
  });
  const FrameField f = transport_x(u, -5.0, h, Frame{});
  EXPECT_LE(f.max_orthonormality_defect(), 1e-12);
}

TEST(Frame, CircleReconstructionIsSecondOrder) {
  const double e1 = circle_error(2.0, 101);
  const double e2 = circle_error(2.0, 201);
  const double e3 = circle_error(2.0, 401);
  EXPECT_GE(std::log2(e1 / e2), 1.9);
  EXPECT_GE(std::log2(e2 / e3), 1.9);
}

TEST(Frame, ZeroFieldGivesStraightLine) {
  const std::vector<cplx> u(50, cplx(0.0, 0.0));
  const Curve c = curve_from_tangent(transport_x(u, 0.0, 0.1, Frame{}));
  for (std::size_t i = 0; i < u.size(); ++i) {
    EXPECT_NEAR(c.points[i].x(), 0.1 * double(i), 1e-13);
    EXPECT_NEAR(c.points[i].y(), 0.0, 1e-15);
  }
  EXPECT_LE(c.arclength_defect(), 1e-12);
}

TEST(Frame, HelixHasConstantCurvatureAndTorsion) {
  const double kappa = 1.3, torsion = 0.7, h = 1e-3;
  const auto u = samples(0.0, h, 4001, [&](double x) { return kappa * expi(torsion * x); });
  const HasimotoDiagnostics d = hasimoto_diagnostics(u, h);
  for (std::size_t i = 0; i < u.size(); i += 400) {
    EXPECT_NEAR(d.curvature[i], kappa, 1e-12);
    EXPECT_NEAR(d.torsion[i], torsion, 1e-9);
  }
  // a helix: constant |chi_xx| = kappa and equal spacing
  const FrameField f = transport_x(u, 0.0, h, Frame{});
  for (std::size_t i = 1; i + 1 < u.size(); i += 500) {
    const Vec3 tx = (f.frames[i + 1].T - f.frames[i - 1].T) / (2 * h);
    EXPECT_NEAR(tx.norm(), kappa, 1e-5);
  }
}

TEST(Frame, TangentIsGaugeInvariant) {
  const double phi = 0.9, h = 2e-3;
  const auto u = samples(0.0, h, 1001, [](double x) { return cplx(std::sin(x), 0.3 * x); });
  std::vector<cplx> v(u);
  for (auto& c : v) c *= expi(phi);
  Frame seed2;
  seed2.e1 = std::cos(phi) * seed2.e1 - std::sin(phi) * Frame{}.e2;
  seed2.e2 = std::sin(phi) * Frame{}.e1 + std::cos(phi) * Frame{}.e2;
  const FrameField a = transport_x(u, 0.0, h, Frame{});
  const FrameField b = transport_x(v, 0.0, h, seed2);
  for (std::size_t i = 0; i < u.size(); ++i) EXPECT_LE((a.frames[i].T - b.frames[i].T).norm(), 1e-12);
}

TEST(Frame, TimeGeneratorIsAntisymmetric) {
  Frame f;
  const Frame d = transport_t(f, cplx(0.3, -0.2), cplx(1.1, 0.4), 0.5);
  // d/dt <X, Y> = <dX, Y> + <X, dY> = 0 for every pair
  EXPECT_NEAR(d.T.dot(f.e1) + f.T.dot(d.e1), 0.0, 1e-15);
  EXPECT_NEAR(d.T.dot(f.e2) + f.T.dot(d.e2), 0.0, 1e-15);
  EXPECT_NEAR(d.e1.dot(f.e2) + f.e1.dot(d.e2), 0.0, 1e-15);
  const Frame g = advance_t(f, cplx(0.3, -0.2), cplx(1.1, 0.4), 0.5, 0.7);
  EXPECT_LE(g.orthonormality_defect(), 1e-14);
}

// For the self-similar solution, moving in x then t lands on the same frame
// as moving in t then x, up to the discretisation error of the two steps.
TEST(Frame, MixedTransportCommutes) {
  const double c0 = 0.6, x0 = 0.4, t0 = 0.3;
  auto u = [&](double x, double t) { return self_similar(c0, x, t); };
  auto ux = [&](double x, double t) { return imag_unit * x / (2 * t) * u(x, t); };
  auto gauge = [&](double t) { return c0 * c0 / t; };
  auto x_step = [&](const Frame& f, double x, double t, double h) {
    const std::vector<cplx> s = {u(x, t), u(x + h, t)};
    return transport_x(s, x, h, f).frames.back();
  };
  auto t_step = [&](const Frame& f, double x, double t, double k) {
    const double tm = t + 0.5 * k;
    return advance_t(f, u(x, tm), ux(x, tm), gauge(tm), k);
  };
  std::vector<double> defect;
  for (double eps : {0.02, 0.01, 0.005}) {
    const Frame a = t_step(x_step(Frame{}, x0, t0, eps), x0 + eps, t0, eps);
    const Frame b = x_step(t_step(Frame{}, x0, t0, eps), x0, t0 + eps, eps);
    defect.push_back((a.rows() - b.rows()).norm());
  }
  EXPECT_GE(std::log2(defect[0] / defect[1]), 1.8);
  EXPECT_GE(std::log2(defect[1] / defect[2]), 1.8);
}

TEST(Corner, SelfSimilarAngleRecovered) {
  for (double theta : {pi / 3, pi / 4}) {
    const double c0 = c_from_angle(theta), t = 1e-3;
    const std::size_t n = 160001;
    const double x0 = -2.0, h = 4.0 / double(n - 1);
    const auto u = samples(x0, h, n, [&](double x) { return self_similar(c0, x, t); });
    const FrameField f = transport_x(u, x0, h, Frame{}, t);
    const CornerMeasurement m = measure_corner(f);
    EXPECT_NEAR(m.theta, theta, 0.02 * theta);
    EXPECT_LE(curve_from_tangent(f).arclength_defect(), 1e-6);
  }
}

TEST(Differentiate, SpectralIsExactOnTrigPolynomial) {
  const std::size_t n = 32;
  const double h = 2 * pi / double(n);
  const auto u = samples(0.0, h, n, [](double x) { return expi(3 * x); });
  const auto d = differentiate(u, h, DerivativeScheme::spectral);
  for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(std::abs(d[i] - 3.0 * imag_unit * u[i]), 0.0, 1e-12);
  const auto c = differentiate(u, h, DerivativeScheme::centered);
  EXPECT_NEAR(std::abs(c[5] - 3.0 * imag_unit * u[5]), 0.0, 0.5);
}
