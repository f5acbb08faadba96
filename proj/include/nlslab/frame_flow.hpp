#ifndef NLSLAB_FRAME_FLOW_HPP
#define NLSLAB_FRAME_FLOW_HPP

#include <span>
#include <vector>

#include <Eigen/Dense>

#include "nlslab/common.hpp"

namespace nlslab {

using Vec3 = Eigen::Vector3d;

/// Parallel frame (T, e1, e2).
struct Frame {
  Vec3 T = Vec3::UnitX();
  Vec3 e1 = Vec3::UnitY();
  Vec3 e2 = Vec3::UnitZ();

  /// Rows T, e1, e2.
  Eigen::Matrix3d rows() const;
  static Frame from_rows(const Eigen::Matrix3d& m);

  /// Largest deviation of the Gram matrix from the identity, together with
  /// |det - 1|.
  double orthonormality_defect() const;
};

/// Frames on a uniform grid x_i = x0 + i h at time t.
struct FrameField {
  double x0 = 0.0;
  double h = 1.0;
  double t = 0.0;
  std::vector<Frame> frames;

  double x(std::size_t i) const { return x0 + static_cast<double>(i) * h; }
  double max_orthonormality_defect() const;
};

struct Curve {
  std::vector<Vec3> points;
  double h = 1.0;

  /// max_i | |chi_{i+1} - chi_i| - h | / h.
  double arclength_defect() const;
};

/// Integrates T_x = a e1 + b e2, e1_x = -a T, e2_x = -b T with u = a + ib
/// from the seed at u_samples[0]. Each step applies the exact rotation
/// exp(h A(u_mid)) with u_mid the average of the two end samples, so the
/// frames stay orthonormal to rounding and the scheme is second order in h.
FrameField transport_x(std::span<const cplx> u_samples, double x0, double h, const Frame& seed,
                       double t = 0.0);

/// Time derivative of the frame:
///   T_t  = -b_x e1 + a_x e2
///   e1_t = -a_x T + (|u|^2 - M) e2
///   e2_t = -b_x T - (|u|^2 - M) e1
Frame transport_t(const Frame& frame, cplx u, cplx u_x, double gauge);

/// Advances a frame over a time interval dt holding (u, u_x, gauge) fixed,
/// by the exact exponential of the antisymmetric generator above.
Frame advance_t(const Frame& frame, cplx u, cplx u_x, double gauge, double dt);

/// chi_x = T by the composite trapezoid rule.
Curve curve_from_tangent(const FrameField& field, const Vec3& basepoint = Vec3::Zero());

struct HasimotoDiagnostics {
  std::vector<double> curvature;
  /// Unwrapped arg u.
  std::vector<double> phase;
  /// Centered differences of the phase (one-sided at the ends).
  std::vector<double> torsion;
};

HasimotoDiagnostics hasimoto_diagnostics(std::span<const cplx> u_samples, double h);

/// First derivative of uniform samples: centered differences, or spectral
/// differentiation when the samples cover exactly one period.
enum class DerivativeScheme { centered, spectral };
std::vector<cplx> differentiate(std::span<const cplx> samples, double h, DerivativeScheme scheme);

/// Average of T over the outer `fraction` of the grid on each side.
struct CornerMeasurement {
  Vec3 tangent_minus;
  Vec3 tangent_plus;
  /// Half the opening angle between the two rays leaving the corner.
  double theta = 0.0;
};
CornerMeasurement measure_corner(const FrameField& field, double fraction = 0.1);

}  // namespace nlslab

#endif  // NLSLAB_FRAME_FLOW_HPP
