#include "nlslab/cascade.hpp"

#include <algorithm>
#include <cmath>

#include "nlslab/coeff_dynamics.hpp"
#include "nlslab/field_eval.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

namespace {

double taper(std::size_t i, std::size_t n, double fraction) {
  if (fraction <= 0.0 || n < 2) return 1.0;
  const double s = static_cast<double>(std::min(i, n - 1 - i)) / static_cast<double>(n - 1);
  if (s >= fraction) return 1.0;
  return 0.5 * (1.0 - std::cos(pi * s / fraction));
}

double grid_step(double t, const CascadeOptions& options) {
  const double reach = options.half_window + options.truncation + 1.0;
  return 4.0 * pi * t / (reach * options.oversample);
}

}  // namespace

TangentDerivative tangent_derivative(const CoefficientState& state, const CascadeOptions& options) {
  require(state.mode() == Mode::line, "tangent_derivative: line mode only");
  require(options.half_window > 0.0 && options.oversample >= 1.0,
          "tangent_derivative: invalid window or oversampling");
  const double t = 1.0 / state.tau();
  const double h = grid_step(t, options);
  const auto n = static_cast<std::size_t>(std::ceil(2.0 * options.half_window / h)) + 1;
  const double x0 = -options.half_window;

  std::vector<cplx> u(n);
  for (std::size_t i = 0; i < n; ++i) u[i] = u_from_state(state, x0 + static_cast<double>(i) * h);
  const FrameField field = transport_x(u, x0, h, Frame{}, t);

  TangentDerivative td;
  td.x0 = x0;
  td.h = h;
  td.frame_defect = field.max_orthonormality_defect();
  td.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Frame& f = field.frames[i];
    const Vec3 tx = u[i].real() * f.e1 + u[i].imag() * f.e2;
    td.values[i] = {tx.x(), tx.y(), tx.z()};
  }
  return td;
}

double tangent_spectrum(const TangentDerivative& td, double xi, double taper_fraction) {
  const std::size_t n = td.values.size();
  std::array<cplx, 3> acc{};
  cplx rot = expi(-xi * td.x0);
  const cplx step = expi(-xi * td.h);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = taper(i, n, taper_fraction);
    for (int c = 0; c < 3; ++c) acc[c] += w * td.values[i][c] * rot;
    rot *= step;
  }
  double s = 0.0;
  for (const cplx& a : acc) s += std::norm(a * td.h);
  return s;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  require(x.size() == y.size() && x.size() >= 3, "fit_line: need at least three points");
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  require(sxx > 0.0, "fit_line: abscissae are all equal");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ssr = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double r = y[i] - fit.intercept - fit.slope * x[i];
    ssr += r * r;
  }
  fit.slope_stderr = std::sqrt(ssr / (n - 2.0) / sxx);
  return fit;
}

namespace {

double ball_sup(const TangentDerivative& td, double center, double radius,
                const CascadeOptions& options) {
  double best = 0.0;
  const int m = std::max(options.ball_samples, 2);
  for (int i = 0; i < m; ++i) {
    const double xi = center - radius + 2.0 * radius * i / (m - 1);
    best = std::max(best, tangent_spectrum(td, xi, options.taper_fraction));
  }
  return best;
}

CascadeRow measure_row(const CoefficientState& state, const CascadeOptions& options) {
  const double t = 1.0 / state.tau();
  const double radius = std::sqrt(t);
  const double nyquist = pi / grid_step(t, options);
  if (1.0 / t + radius >= nyquist)
    throw ValidationError("cascade_diagnostic: frequency window too small for 1/t at t = " +
                          std::to_string(t));
  CascadeRow row;
  row.t = t;
  row.half_window = options.half_window;
  const TangentDerivative td = tangent_derivative(state, options);
  row.grid_points = td.values.size();
  row.frame_defect = td.frame_defect;
  row.sup_plus = ball_sup(td, 1.0 / t, radius, options);
  row.sup_minus = ball_sup(td, -1.0 / t, radius, options);
  row.sup = std::max(row.sup_plus, row.sup_minus);
  const int m = std::max(options.ball_samples, 2);
  for (double center : {1.0 / t, -1.0 / t})
    for (int i = 0; i < m; ++i) {
      const double xi = center - radius + 2.0 * radius * i / (m - 1);
      row.linear_sup = std::max(row.linear_sup, 4.0 * pi * std::norm(omega_eval(state, xi)));
    }

  CascadeOptions half = options;
  half.half_window = 0.5 * options.half_window;
  const TangentDerivative td_half = tangent_derivative(state, half);
  row.sup_half_window =
      std::max(ball_sup(td_half, 1.0 / t, radius, half), ball_sup(td_half, -1.0 / t, radius, half));
  return row;
}

}  // namespace

CascadeReport cascade_diagnostic(const LineData& a, std::span<const double> t_list,
                                 const CascadeOptions& options) {
  require(!t_list.empty(), "cascade_diagnostic: empty t list");
  for (std::size_t i = 0; i < t_list.size(); ++i) {
    require(t_list[i] > 0.0, "cascade_diagnostic: times must be positive");
    if (i > 0) require(t_list[i] < t_list[i - 1], "cascade_diagnostic: times must decrease");
  }
  require(a.max_index() <= options.truncation, "cascade_diagnostic: data exceed the window");
  require(1.0 / t_list.back() < options.tau_start,
          "cascade_diagnostic: tau_start must exceed 1/t for every t");

  const CoefficientSystem system(Mode::line, options.truncation, options.integrator.engine);
  CoefficientState state = state_from_data(a, 1.0 / options.tau_start, options.truncation);

  CascadeReport report;
  report.rows.resize(t_list.size());
  // smallest t first: that is the largest tau, nearest to tau_start
  for (std::size_t r = t_list.size(); r-- > 0;) {
    state = integrate(system, state, system_time(t_list[r]), options.integrator).state;
    report.rows[r] = measure_row(field_state(state), options);
    report.rows[r].t = t_list[r];
  }

  std::vector<double> xs, ys, excess;
  for (const CascadeRow& row : report.rows) {
    xs.push_back(std::abs(std::log(row.t)));
    ys.push_back(row.sup);
    excess.push_back(row.sup - row.linear_sup);
  }
  if (report.rows.size() >= 3) {
    report.fit = fit_line(xs, ys);
    report.excess_fit = fit_line(xs, excess);
  }
  for (std::size_t i = 1; i < report.rows.size(); ++i) {
    const double prev = report.rows[i - 1].sup;
    if (prev > 0.0)
      report.worst_dip = std::max(report.worst_dip, (prev - report.rows[i].sup) / prev);
  }
  return report;
}

DensityReport density_identity_check(const CoefficientState& state, std::span<const int> n_list,
                                     const CascadeOptions& options) {
  DensityReport report;
  report.left_side = two_pi * cl1(state);
  if (n_list.empty()) return report;
  const TangentDerivative td = tangent_derivative(state, options);
  const std::size_t n = td.values.size();
  const double h = td.h;
  const int n_max = *std::max_element(n_list.begin(), n_list.end());
  require(two_pi * (n_max + 1) < pi / h,
          "density_identity_check: frequency windows exceed the grid's Nyquist limit");

  const std::size_t len = good_fft_size(n);
  Fft1d fft(len);
  std::vector<double> power(len, 0.0);
  std::vector<cplx> buf(len);
  double w2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double w = taper(i, n, options.taper_fraction);
    w2 += w * w * h;
  }
  for (int c = 0; c < 3; ++c) {
    std::fill(buf.begin(), buf.end(), cplx{});
    for (std::size_t i = 0; i < n; ++i) buf[i] = taper(i, n, options.taper_fraction) * td.values[i][c];
    fft.forward(buf);
    for (std::size_t k = 0; k < len; ++k) power[k] += std::norm(buf[k] * h);
  }
  const double dxi = two_pi / (static_cast<double>(len) * h);
  for (int m : n_list) {
    DensityRow row;
    row.n = m;
    const double lo = two_pi * m, hi = two_pi * (m + 1);
    for (std::size_t k = 0; k < len; ++k) {
      const double xi = dxi * static_cast<double>(fft_frequency(k, len));
      if (xi >= lo && xi < hi) row.window_integral += power[k] * dxi;
    }
    row.normalized = w2 > 0.0 ? row.window_integral / (two_pi * w2) : 0.0;
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace nlslab
