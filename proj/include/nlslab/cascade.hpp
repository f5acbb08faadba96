#ifndef NLSLAB_CASCADE_HPP
#define NLSLAB_CASCADE_HPP

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "nlslab/coeff_state.hpp"
#include "nlslab/frame_flow.hpp"
#include "nlslab/integrator.hpp"

namespace nlslab {

struct CascadeOptions {
  /// Coefficient window |j| <= N.
  int truncation = 16;
  /// R = 0 is imposed at t = 1/tau_start and the system is integrated back
  /// to each t.
  double tau_start = 2000.0;
  IntegratorOptions integrator{};
  /// x runs over [-half_window, half_window].
  double half_window = 16.0;
  /// Grid points per shortest local wavelength of u.
  double oversample = 4.0;
  /// Cosine taper on this fraction of the window at each end.
  double taper_fraction = 0.1;
  /// Frequency samples across each ball B(+-1/t, sqrt t).
  int ball_samples = 33;
};

/// Sampled tangent derivative T_x = a e1 + b e2 on a uniform grid.
struct TangentDerivative {
  double x0 = 0.0;
  double h = 1.0;
  std::vector<std::array<double, 3>> values;
  double frame_defect = 0.0;
};

/// Takes a field-convention state (see field_state). Evaluates u(., 1/tau) on [-X, X], transports the parallel frame and
/// returns T_x. The step resolves the local frequency of u up to |x| + N.
TangentDerivative tangent_derivative(const CoefficientState& state, const CascadeOptions& options);

/// sum over the three components of |int w(x) T_x e^{-i xi x} dx|^2, with w the
/// cosine taper.
double tangent_spectrum(const TangentDerivative& td, double xi, double taper_fraction);

struct CascadeRow {
  double t = 0.0;
  double sup_plus = 0.0;
  double sup_minus = 0.0;
  /// max of the two.
  double sup = 0.0;
  /// sup over the same balls of 4 pi |omega(xi, t)|^2, the transform of T_x
  /// when the frame is frozen (|hat u|^2 for the constant-free kernel).
  double linear_sup = 0.0;
  /// The same sup with half the spatial window, for window sensitivity.
  double sup_half_window = 0.0;
  double half_window = 0.0;
  std::size_t grid_points = 0;
  double frame_defect = 0.0;
};

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_stderr = 0.0;
};

/// Least squares y = intercept + slope x with the usual slope standard error.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

struct CascadeReport {
  std::vector<CascadeRow> rows;
  /// sup against |log t|.
  LinearFit fit;
  /// sup - linear_sup against |log t|.
  LinearFit excess_fit;
  /// Largest relative drop of the sup from one t to the next smaller one.
  double worst_dip = 0.0;
};

/// For each t (strictly decreasing, positive): integrates the coefficients
/// of the data to tau = 1/t, rebuilds T_x and takes the sup of |hat(T_x)|^2
/// over B(+-1/t, sqrt t).
CascadeReport cascade_diagnostic(const LineData& a, std::span<const double> t_list,
                                 const CascadeOptions& options = {});

struct DensityRow {
  int n = 0;
  /// int_{2 pi n}^{2 pi (n+1)} |hat(T_x)|^2 d xi on the tapered window.
  double window_integral = 0.0;
  /// The same, divided by 2 pi int w^2 dx so that it is a per-unit-length
  /// density comparable across window sizes.
  double normalized = 0.0;
};

struct DensityReport {
  /// int_0^{2 pi} |V|^2 dy = 2 pi cl1.
  double left_side = 0.0;
  std::vector<DensityRow> rows;
};

DensityReport density_identity_check(const CoefficientState& state, std::span<const int> n_list,
                                     const CascadeOptions& options = {});

}  // namespace nlslab

#endif  // NLSLAB_CASCADE_HPP
