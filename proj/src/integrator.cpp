#include "nlslab/integrator.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlslab/spectral.hpp"

namespace nlslab {

namespace {

class Rk4Stepper {
 public:
  explicit Rk4Stepper(const CoefficientSystem& system)
      : system_(system),
        n_(system.size()),
        k1_(n_), k2_(n_), k3_(n_), k4_(n_), tmp_(n_), f0_(n_), mid_(n_), full_(n_), half_(n_) {}

  std::size_t evaluations() const { return evaluations_; }

  // One step-doubled RK4 step of size h in sigma from (sigma, y).
  // Writes the corrected result into y_new and returns max_k |error_k|.
  double attempt(double sigma, std::span<const cplx> y, double h, std::span<cplx> y_new) {
    eval(sigma, y, f0_);
    single(sigma, y, f0_, h, full_);
    single(sigma, y, f0_, 0.5 * h, mid_);
    eval(sigma + 0.5 * h, mid_, k1_);
    single(sigma + 0.5 * h, mid_, k1_, 0.5 * h, half_);
    double err = 0.0;
    for (std::size_t i = 0; i < n_; ++i) {
      const cplx diff = (half_[i] - full_[i]) / 15.0;
      y_new[i] = half_[i] + diff;
      err = std::max(err, std::abs(diff));
    }
    return err;
  }

 private:
  void eval(double sigma, std::span<const cplx> y, std::span<cplx> out) {
    system_.derivative_log_tau(std::exp(sigma), y, out);
    ++evaluations_;
  }

  // Classical RK4 with the first stage f0 supplied.
  void single(double sigma, std::span<const cplx> y, std::span<const cplx> f0, double h,
              std::span<cplx> out) {
    for (std::size_t i = 0; i < n_; ++i) tmp_[i] = y[i] + 0.5 * h * f0[i];
    eval(sigma + 0.5 * h, tmp_, k2_);
    for (std::size_t i = 0; i < n_; ++i) tmp_[i] = y[i] + 0.5 * h * k2_[i];
    eval(sigma + 0.5 * h, tmp_, k3_);
    for (std::size_t i = 0; i < n_; ++i) tmp_[i] = y[i] + h * k3_[i];
    eval(sigma + h, tmp_, k4_);
    for (std::size_t i = 0; i < n_; ++i)
      out[i] = y[i] + (h / 6.0) * (f0[i] + 2.0 * k2_[i] + 2.0 * k3_[i] + k4_[i]);
  }

  const CoefficientSystem& system_;
  std::size_t n_;
  std::vector<cplx> k1_, k2_, k3_, k4_, tmp_, f0_, mid_, full_, half_;
  std::size_t evaluations_ = 0;
};

double sup_norm(std::span<const cplx> y) {
  double m = 0.0;
  for (const cplx& v : y) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

double IntegrationResult::cl1_drift() const { return std::abs(end.cl1 - start.cl1); }

double IntegrationResult::cl2_drift() const {
  require(start.cl2 && end.cl2, "cl2_drift: cl2 undefined for this mode");
  return std::abs(*end.cl2 - *start.cl2);
}

double IntegrationResult::cl3_drift() const {
  require(start.cl3 && end.cl3, "cl3_drift: cl3 undefined for this mode");
  return std::abs(*end.cl3 - *start.cl3);
}

IntegrationResult integrate(const CoefficientSystem& system, const CoefficientState& state,
                            double tau_end, const IntegratorOptions& options) {
  require(system.fits(state), "integrate: system layout does not match the state");
  require(tau_end > 0.0 && std::isfinite(tau_end), "integrate: tau_end must be positive");
  require(options.tol > 0.0, "integrate: tolerance must be positive");

  IntegrationResult result{state, {}, conserved(state), {}};
  CoefficientState& current = result.state;
  const double sigma_end = std::log(tau_end);
  double sigma = std::log(state.tau());
  const double direction = sigma_end >= sigma ? 1.0 : -1.0;

  Rk4Stepper stepper(system);
  std::vector<cplx> next(state.size());
  double h = std::min(options.initial_step, options.max_step);

  while (direction * (sigma_end - sigma) > 0.0) {
    if (result.stats.accepted + result.stats.rejected >= options.max_steps) {
      std::ostringstream os;
      os << "integrate: step budget of " << options.max_steps << " exhausted at tau = "
         << current.tau();
      throw IntegrationError(os.str(), current);
    }
    const double remaining = std::abs(sigma_end - sigma);
    const bool last = h >= remaining;
    const double step = last ? remaining : h;
    const double err = stepper.attempt(sigma, current.values(), direction * step, next);
    const double scale = std::max(sup_norm(current.values()), sup_norm(next));
    const double ratio = scale > 0.0 ? err / (options.tol * scale) : 0.0;
    if (ratio <= 1.0 && std::isfinite(ratio)) {
      sigma = last ? sigma_end : sigma + direction * step;
      std::copy(next.begin(), next.end(), current.values().begin());
      current.set_tau(last ? tau_end : std::exp(sigma));
      ++result.stats.accepted;
      result.stats.last_step = step;
      const double grow = ratio > 0.0 ? 0.9 * std::pow(ratio, -0.2) : 5.0;
      h = std::min(options.max_step, step * std::clamp(grow, 1.0, 5.0));
    } else {
      ++result.stats.rejected;
      const double shrink = std::isfinite(ratio) ? 0.9 * std::pow(ratio, -0.25) : 0.1;
      h = step * std::clamp(shrink, 0.1, 0.9);
      if (h < options.min_step) {
        std::ostringstream os;
        os << "integrate: step size underflow (h = " << h << ") at tau = " << current.tau();
        throw IntegrationError(os.str(), current);
      }
    }
  }
  result.stats.rhs_evaluations = stepper.evaluations();
  result.end = conserved(current);
  return result;
}

IntegrationResult integrate(const CoefficientState& state, double tau_end,
                            const IntegratorOptions& options) {
  const CoefficientSystem system(state, options.engine);
  return integrate(system, state, tau_end, options);
}

std::vector<CoefficientState> integrate_snapshots(const CoefficientSystem& system,
                                                  const CoefficientState& state,
                                                  std::span<const double> taus,
                                                  const IntegratorOptions& options) {
  std::vector<CoefficientState> out;
  out.reserve(taus.size());
  CoefficientState current = state;
  for (double tau : taus) {
    current = integrate(system, current, tau, options).state;
    out.push_back(current);
  }
  return out;
}

namespace {

// Nonlinear kick of the split-step scheme at frozen dispersive time tau_mid.
class CubicKick {
 public:
  explicit CubicKick(int truncation)
      : n_(truncation),
        fft_(good_fft_size(static_cast<std::size_t>(4 * truncation + 1))),
        grid_(fft_.size()) {}

  void apply(std::span<cplx> b, double tau_mid, double log_ratio) {
    const std::size_t len = grid_.size();
    std::fill(grid_.begin(), grid_.end(), cplx{});
    for (int j = -n_; j <= n_; ++j) {
      const double jj = static_cast<double>(j) * j;
      grid_[fft_bin(j, len)] = b[j + n_] * expi(tau_mid * jj);
    }
    fft_.backward(grid_);
    for (cplx& w : grid_) w *= expi(-std::norm(w) * log_ratio);
    fft_.forward(grid_);
    const double inv_len = 1.0 / static_cast<double>(len);
    for (int j = -n_; j <= n_; ++j) {
      const double jj = static_cast<double>(j) * j;
      b[j + n_] = grid_[fft_bin(j, len)] * inv_len * expi(-tau_mid * jj);
    }
  }

 private:
  int n_;
  Fft1d fft_;
  std::vector<cplx> grid_;
};

}  // namespace

IntegrationResult integrate_split_step(const CoefficientState& state, double tau_end,
                                       const SplitStepOptions& options) {
  require(state.mode() == Mode::line, "integrate_split_step: line mode only");
  require(tau_end > 0.0 && std::isfinite(tau_end), "integrate_split_step: tau_end must be positive");
  require(options.dtau > 0.0, "integrate_split_step: dtau must be positive");
  require(options.order == 2 || options.order == 4, "integrate_split_step: order must be 2 or 4");

  IntegrationResult result{state, {}, conserved(state), {}};
  CoefficientState& current = result.state;
  CubicKick kick(state.extent());
  const double span = tau_end - state.tau();
  const auto steps = static_cast<std::size_t>(std::ceil(std::abs(span) / options.dtau));
  if (steps > options.max_steps) {
    std::ostringstream os;
    os << "integrate_split_step: " << steps << " steps exceed the budget of " << options.max_steps;
    throw IntegrationError(os.str(), current);
  }
  const double cbrt2 = std::cbrt(2.0);
  const double w1 = 1.0 / (2.0 - cbrt2);
  const double w0 = -cbrt2 / (2.0 - cbrt2);
  const std::vector<double> weights =
      options.order == 2 ? std::vector<double>{1.0} : std::vector<double>{w1, w0, w1};

  double tau = state.tau();
  for (std::size_t s = 0; s < steps; ++s) {
    const double h = (s + 1 == steps) ? tau_end - tau : span / static_cast<double>(steps);
    for (double w : weights) {
      const double a = tau, b = tau + w * h;
      if (!(a > 0.0 && b > 0.0)) throw IntegrationError("integrate_split_step: tau left (0, inf)", current);
      kick.apply(current.values(), 0.5 * (a + b), std::log(b / a));
      tau = b;
    }
    ++result.stats.accepted;
    result.stats.rhs_evaluations += weights.size();
    result.stats.last_step = std::abs(h);
  }
  current.set_tau(tau_end);
  result.end = conserved(current);
  return result;
}

}  // namespace nlslab
