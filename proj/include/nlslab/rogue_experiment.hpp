#ifndef NLSLAB_ROGUE_EXPERIMENT_HPP
#define NLSLAB_ROGUE_EXPERIMENT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlslab/integrator.hpp"
#include "nlslab/linear_talbot.hpp"

namespace nlslab {

/// Even, nonnegative profile supported in [-1, 1] with psi(0) = 1.
struct BumpSpec {
  std::string name = "standard";
  std::function<double(double)> profile;

  /// e^{1 - 1/(1 - x^2)} inside (-1, 1), zero outside.
  static BumpSpec standard();
  double operator()(double x) const { return profile(x); }
  /// int_{-1}^{1} psi by Gauss-Legendre on the support.
  double integral() const;
};

struct RogueConfig {
  double eta = 0.1;
  std::int64_t p = 25;
  std::int64_t q = 27;
  double s = 0.6;
  double beta = -0.5;
  std::int64_t p_tilde = 1;
  std::int64_t q_tilde = 3;
  BumpSpec bump = BumpSpec::standard();

  /// Throws ValidationError on hard violations (ranges, parity, coprimality,
  /// the beta < 1/2 - 3s/2 inequality) and returns soft warnings for the
  /// "both times of size 1/2pi" ratio windows.
  std::vector<std::string> validate() const;
};

/// f(xi) = p^beta psi(p xi / (2 pi eta)).
double bump_profile(const RogueConfig& cfg, double xi);

/// alpha_k = (1/2pi) int f(xi) e^{-ik xi} d xi for |k| <= K, by the periodic
/// trapezoid rule on a grid with at least `min_support_points` samples inside
/// the bump (spectrally accurate for a smooth compactly supported f). Throws
/// NumericalError with a suggested K if max_{|k| > K} |alpha_k| exceeds
/// tail_tol * max|alpha|.
PeriodicSpectrum build_bump_coefficients(const RogueConfig& cfg, int K, double tail_tol = 1e-12,
                                         std::size_t min_support_points = 4096);

/// Smallest K for which the tail condition of build_bump_coefficients holds.
int suggest_bump_truncation(const RogueConfig& cfg, double tail_tol = 1e-12);

struct RogueReport {
  double amp_at_0_tpq = 0.0;
  double amp_max_tpq = 0.0;
  double amp_at_0_tilde = 0.0;
  double zero_region_max_tpq = 0.0;
  double period_check = 0.0;
  double remainder_estimate = 0.0;

  /// The closed-form predictions the measurements are compared with.
  double predicted_amp_stated = 0.0;        // p^beta / sqrt(q)
  double predicted_amp_kernel = 0.0;        // gain * p^beta
  double predicted_amp_tilde_stated = 0.0;  // p^beta / sqrt(q_tilde)
  double predicted_amp_tilde_ptilde = 0.0;  // p_tilde^{beta - 1/2}
  double oracle_agreement = 0.0;  // max |closed - oracle| / max |oracle| at t_pq
  double oracle_agreement_tilde = 0.0;
  double dichotomy_ratio = 0.0;   // amp_at_0_tilde / amp_max_tpq
  bool dichotomy = false;
  std::vector<std::string> warnings;

  std::vector<double> grid_tpq, profile_tpq;
  std::vector<double> grid_tilde, profile_tilde;
};

struct LinearRunOptions {
  /// Grid over one unit cell [0, 1) at t_pq; raised to 8 q and 32 q_tilde.
  std::size_t grid = 512;
  /// Points across [-1/(2 q_tilde), 1/(2 q_tilde)] at t_tilde.
  std::size_t tilde_grid = 1025;
  PropagatorNorm norm = PropagatorNorm::constant_free;
};

RogueReport run_linear(const RogueConfig& cfg, const PeriodicSpectrum& spectrum,
                       const LinearRunOptions& options = {});

struct NonlinearRunOptions {
  /// alpha is rescaled to this l1 norm before the run (<= 0 keeps it).
  double target_l1 = 0.05;
  /// Modes |k| <= window evolve nonlinearly; the rest keep A_k = e^{-i Phi_k} alpha_k.
  int window = 128;
  /// R = 0 imposed at t = 1/tau_start.
  double tau_start = 2.0 * pi * 1e3;
  SplitStepOptions stepper{0.02, 4, 50'000'000};
  /// Also rerun from 2 tau_start and report the change.
  bool tau_start_sensitivity = true;
  LinearRunOptions linear{};
};

struct NonlinearReport {
  RogueReport linear;
  RogueReport nonlinear;
  double l1_norm = 0.0;
  double l2s_norm = 0.0;
  double scale = 1.0;
  /// ||u_nl - u_lin||_inf / ||u_lin||_inf at t_pq and at t_tilde.
  double relative_change_tpq = 0.0;
  double relative_change_tilde = 0.0;
  /// ||u_nl - u_lin||_inf sqrt(t) / ||alpha||_{l2,s}^3 at t_pq.
  double perturbative_ratio = 0.0;
  /// max_k |R_k(t_pq)|.
  double max_remainder = 0.0;
  std::optional<double> tau_start_sensitivity;
  bool smallness_warning = false;
  IntegrationStats stats;
};

NonlinearReport run_nonlinear(const RogueConfig& cfg, const PeriodicSpectrum& spectrum,
                              const NonlinearRunOptions& options = {});

}  // namespace nlslab

#endif  // NLSLAB_ROGUE_EXPERIMENT_HPP
