#ifndef NLSLAB_INTEGRATOR_HPP
#define NLSLAB_INTEGRATOR_HPP

#include <cstddef>
#include <span>
#include <vector>

#include "nlslab/coeff_dynamics.hpp"

namespace nlslab {

struct IntegratorOptions {
  /// Target local error per step, relative to max_k |B_k|.
  double tol = 1e-10;
  std::size_t max_steps = 20'000'000;
  /// Steps are measured in sigma = log tau.
  double initial_step = 1e-3;
  double max_step = 0.05;
  double min_step = 1e-13;
  RhsEngine engine = RhsEngine::automatic;
};

struct IntegrationStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  std::size_t rhs_evaluations = 0;
  double last_step = 0.0;
};

struct IntegrationResult {
  CoefficientState state;
  IntegrationStats stats;
  ConservedReport start;
  ConservedReport end;

  /// |cl1(end) - cl1(start)|, and the analogous drifts where defined.
  double cl1_drift() const;
  double cl2_drift() const;
  double cl3_drift() const;
};

/// Raised when the step size underflows or the step budget is exhausted;
/// carries the last accepted state.
class IntegrationError : public NumericalError {
 public:
  IntegrationError(const std::string& what, CoefficientState last_good)
      : NumericalError(what), last_good_(std::move(last_good)) {}
  const CoefficientState& last_good() const { return last_good_; }

 private:
  CoefficientState last_good_;
};

/// Advances the coefficient system from state.tau() to tau_end (forward or
/// backward) with classical RK4 in sigma = log tau. The local error is
/// estimated by step doubling; the accepted value is the Richardson-corrected
/// two-half-step result.
IntegrationResult integrate(const CoefficientState& state, double tau_end,
                            const IntegratorOptions& options = {});

/// Same, reusing a prebuilt system (the triad table is the expensive part).
IntegrationResult integrate(const CoefficientSystem& system, const CoefficientState& state,
                            double tau_end, const IntegratorOptions& options = {});

/// Snapshots at each requested tau, visited in the given order.
std::vector<CoefficientState> integrate_snapshots(const CoefficientSystem& system,
                                                  const CoefficientState& state,
                                                  std::span<const double> taus,
                                                  const IntegratorOptions& options = {});

struct SplitStepOptions {
  /// Uniform step in tau (the sign is taken from the direction of travel).
  double dtau = 0.01;
  /// 2: Strang splitting; 4: Yoshida triple-jump composition of Strang steps.
  int order = 4;
  std::size_t max_steps = 50'000'000;
};

/// Line-mode alternative to the RK4 path for wide windows and long tau
/// ranges. The cubic sum of the coefficient system is the full cubic
/// convolution, so W(y) = sum_j B_j e^{i tau j^2} e^{ijy} solves
///   i W_tau = W_yy + (1/tau) |W|^2 W
/// projected onto |j| <= N. Both sub-flows are solved exactly: the dispersive
/// one leaves B unchanged, the nonlinear one multiplies W pointwise by
/// exp(-i |W|^2 log(tau_b / tau_a)). No step has to resolve the e^{-i tau w}
/// oscillations, which is what makes tau ranges of thousands affordable.
/// Each kick is projected back onto the window, which drops whatever mass it
/// pushed beyond |j| = N: keep the data well inside the window.
IntegrationResult integrate_split_step(const CoefficientState& state, double tau_end,
                                       const SplitStepOptions& options = {});

}  // namespace nlslab

#endif  // NLSLAB_INTEGRATOR_HPP
