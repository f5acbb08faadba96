#include "nlslab/frame_flow.hpp"

#include <algorithm>
#include <cmath>

#include "nlslab/spectral.hpp"

namespace nlslab {

namespace {

// exp(K) for antisymmetric K (Rodrigues).
Eigen::Matrix3d antisymmetric_exp(const Eigen::Matrix3d& k) {
  const double theta = std::sqrt(k(0, 1) * k(0, 1) + k(0, 2) * k(0, 2) + k(1, 2) * k(1, 2));
  const Eigen::Matrix3d k2 = k * k;
  double a, b;
  if (theta < 1e-4) {
    const double t2 = theta * theta;
    a = 1.0 - t2 / 6.0 + t2 * t2 / 120.0;
    b = 0.5 - t2 / 24.0 + t2 * t2 / 720.0;
  } else {
    a = std::sin(theta) / theta;
    b = (1.0 - std::cos(theta)) / (theta * theta);
  }
  return Eigen::Matrix3d::Identity() + a * k + b * k2;
}

// Generator acting on the rows (T, e1, e2) for the x-transport.
Eigen::Matrix3d x_generator(cplx u) {
  const double a = u.real(), b = u.imag();
  Eigen::Matrix3d g;
  g << 0.0, a, b,
      -a, 0.0, 0.0,
      -b, 0.0, 0.0;
  return g;
}

// Generator for the t-transport. The T row is T_t = -b_x e1 + a_x e2; the T
// components of e1_t and e2_t are the ones that keep the generator
// antisymmetric, i.e. that keep the frame orthonormal.
Eigen::Matrix3d t_generator(cplx u, cplx u_x, double gauge) {
  const double ax = u_x.real(), bx = u_x.imag();
  const double g = std::norm(u) - gauge;
  Eigen::Matrix3d m;
  m << 0.0, -bx, ax,
      bx, 0.0, g,
      -ax, -g, 0.0;
  return m;
}

}  // namespace

Eigen::Matrix3d Frame::rows() const {
  Eigen::Matrix3d m;
  m.row(0) = T.transpose();
  m.row(1) = e1.transpose();
  m.row(2) = e2.transpose();
  return m;
}

Frame Frame::from_rows(const Eigen::Matrix3d& m) {
  return {m.row(0).transpose(), m.row(1).transpose(), m.row(2).transpose()};
}

double Frame::orthonormality_defect() const {
  const Eigen::Matrix3d r = rows();
  const double gram = (r * r.transpose() - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff();
  return std::max(gram, std::abs(r.determinant() - 1.0));
}

double FrameField::max_orthonormality_defect() const {
  double d = 0.0;
  for (const Frame& f : frames) d = std::max(d, f.orthonormality_defect());
  return d;
}

double Curve::arclength_defect() const {
  double d = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i)
    d = std::max(d, std::abs((points[i + 1] - points[i]).norm() - h) / h);
  return d;
}

FrameField transport_x(std::span<const cplx> u_samples, double x0, double h, const Frame& seed,
                       double t) {
  require(h > 0.0, "transport_x: grid step must be positive");
  require(!u_samples.empty(), "transport_x: no samples");
  require(seed.orthonormality_defect() <= 1e-10, "transport_x: seed frame is not orthonormal");
  FrameField field{x0, h, t, {}};
  field.frames.reserve(u_samples.size());
  field.frames.push_back(seed);
  Eigen::Matrix3d f = seed.rows();
  for (std::size_t i = 0; i + 1 < u_samples.size(); ++i) {
    const cplx mid = 0.5 * (u_samples[i] + u_samples[i + 1]);
    f = antisymmetric_exp(h * x_generator(mid)) * f;
    field.frames.push_back(Frame::from_rows(f));
  }
  return field;
}

Frame transport_t(const Frame& frame, cplx u, cplx u_x, double gauge) {
  return Frame::from_rows(t_generator(u, u_x, gauge) * frame.rows());
}

Frame advance_t(const Frame& frame, cplx u, cplx u_x, double gauge, double dt) {
  return Frame::from_rows(antisymmetric_exp(dt * t_generator(u, u_x, gauge)) * frame.rows());
}

Curve curve_from_tangent(const FrameField& field, const Vec3& basepoint) {
  Curve c;
  c.h = field.h;
  c.points.reserve(field.frames.size());
  if (field.frames.empty()) return c;
  c.points.push_back(basepoint);
  for (std::size_t i = 0; i + 1 < field.frames.size(); ++i)
    c.points.push_back(c.points.back() + 0.5 * field.h * (field.frames[i].T + field.frames[i + 1].T));
  return c;
}

HasimotoDiagnostics hasimoto_diagnostics(std::span<const cplx> u_samples, double h) {
  require(h > 0.0, "hasimoto_diagnostics: grid step must be positive");
  HasimotoDiagnostics d;
  const std::size_t n = u_samples.size();
  d.curvature.reserve(n);
  d.phase.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    d.curvature.push_back(std::abs(u_samples[i]));
    double ph = std::arg(u_samples[i]);
    if (i > 0) ph = d.phase.back() + std::remainder(ph - d.phase.back(), two_pi);
    d.phase.push_back(ph);
  }
  d.torsion.resize(n, 0.0);
  if (n >= 2) {
    for (std::size_t i = 1; i + 1 < n; ++i) d.torsion[i] = (d.phase[i + 1] - d.phase[i - 1]) / (2.0 * h);
    d.torsion[0] = (d.phase[1] - d.phase[0]) / h;
    d.torsion[n - 1] = (d.phase[n - 1] - d.phase[n - 2]) / h;
  }
  return d;
}

std::vector<cplx> differentiate(std::span<const cplx> samples, double h, DerivativeScheme scheme) {
  const std::size_t n = samples.size();
  require(n >= 2 && h > 0.0, "differentiate: need at least two samples and h > 0");
  std::vector<cplx> out(n);
  if (scheme == DerivativeScheme::spectral) {
    std::vector<cplx> buf(samples.begin(), samples.end());
    Fft1d fft(n);
    fft.forward(buf);
    const double length = h * static_cast<double>(n);
    for (std::size_t k = 0; k < n; ++k) {
      long freq = fft_frequency(k, n);
      if (n % 2 == 0 && k == n / 2) freq = 0;  // Nyquist mode has no odd derivative
      buf[k] *= imag_unit * (two_pi * static_cast<double>(freq) / length) / static_cast<double>(n);
    }
    fft.backward(buf);
    return buf;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) out[i] = (samples[i + 1] - samples[i - 1]) / (2.0 * h);
  out[0] = (samples[1] - samples[0]) / h;
  out[n - 1] = (samples[n - 1] - samples[n - 2]) / h;
  return out;
}

CornerMeasurement measure_corner(const FrameField& field, double fraction) {
  require(fraction > 0.0 && fraction < 0.5, "measure_corner: fraction must lie in (0, 1/2)");
  const std::size_t n = field.frames.size();
  const auto width = static_cast<std::size_t>(std::max(1.0, fraction * static_cast<double>(n)));
  require(2 * width <= n, "measure_corner: grid too short");
  CornerMeasurement m;
  m.tangent_minus.setZero();
  m.tangent_plus.setZero();
  for (std::size_t i = 0; i < width; ++i) {
    m.tangent_minus += field.frames[i].T;
    m.tangent_plus += field.frames[n - 1 - i].T;
  }
  m.tangent_minus.normalize();
  m.tangent_plus.normalize();
  // rays leave the corner along +T_plus and -T_minus
  const double c = std::clamp(-m.tangent_plus.dot(m.tangent_minus), -1.0, 1.0);
  m.theta = 0.5 * std::acos(c);
  return m;
}

}  // namespace nlslab
