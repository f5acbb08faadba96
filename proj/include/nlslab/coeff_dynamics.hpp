#ifndef NLSLAB_COEFF_DYNAMICS_HPP
#define NLSLAB_COEFF_DYNAMICS_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "nlslab/coeff_state.hpp"
#include "nlslab/common.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

/// w = k^2 - j1^2 + j2^2 - j3^2 with j3 = k - j1 + j2, which factors as
/// 2 (k - j1)(j1 - j2). Zero exactly on the resonant set.
std::int64_t resonance_weight(std::int64_t k, std::int64_t j1, std::int64_t j2);

/// How the cubic sum of the coefficient system is evaluated.
///   triad_table: sparse table of non-resonant triads with their w, built once
///                (O(N^3) entries); the reference engine.
///   spectral:    line mode only; uses the factorisation
///                e^{-i tau w} = e^{-i tau k^2} e^{i tau (j1^2 - j2^2 + j3^2)}
///                and evaluates the full cubic convolution with FFTs.
///   automatic:   triad_table for small windows, spectral otherwise.
enum class RhsEngine { triad_table, spectral, automatic };

/// The right-hand side
///   i dB_k/dtau = (1/tau) [ sum_{NR_k} e^{-i tau w} B_j1 conj(B_j2) B_j3
///                           + (2 m0 - |B_k|^2) B_k ]
/// for a fixed layout.
///
/// Line mode keeps triads whose three indices stay in |j| <= N. Periodic mode
/// parametrises triads by offsets a = k - j1, b = j1 - j2 taken from a
/// symmetric residue set of Z_M, so (j1, j2, j3) = (k-a, k-a-b, k-b) mod M and
/// w = 2ab; for even M the two representatives +-M/2 carry weight 1/2 each.
/// That choice keeps the system translation invariant and makes the
/// per-period mass an exact invariant.
///
/// Evaluation uses internal scratch space: one system per thread.
class CoefficientSystem {
 public:
  CoefficientSystem(Mode mode, int extent, RhsEngine engine = RhsEngine::triad_table);
  explicit CoefficientSystem(const CoefficientState& layout,
                             RhsEngine engine = RhsEngine::triad_table)
      : CoefficientSystem(layout.mode(), layout.extent(), engine) {}

  Mode mode() const { return mode_; }
  int extent() const { return extent_; }
  std::size_t size() const { return size_; }
  RhsEngine engine() const { return engine_; }
  std::size_t triad_count() const { return triads_.size(); }
  bool fits(const CoefficientState& state) const {
    return state.mode() == mode_ && state.extent() == extent_;
  }

  /// dB/dtau at the given tau.
  void derivative(double tau, std::span<const cplx> b, std::span<cplx> out) const;
  /// dB/dsigma with sigma = log tau, i.e. tau * dB/dtau.
  void derivative_log_tau(double tau, std::span<const cplx> b, std::span<cplx> out) const;

 private:
  struct Triad {
    std::uint32_t j1, j2, j3;
    std::uint32_t phase_index;
  };

  // Writes sum_{NR_k} (...) + (2 m0 - |B_k|^2) B_k into out (no 1/tau, no -i).
  void cubic_triads(double tau, std::span<const cplx> b, std::span<cplx> out) const;
  void cubic_spectral(double tau, std::span<const cplx> b, std::span<cplx> out) const;

  Mode mode_;
  int extent_;
  std::size_t size_;
  RhsEngine engine_;

  std::vector<Triad> triads_;
  // per-triad weights; empty when every weight is 1 (line mode, odd M)
  std::vector<double> weights_;
  std::vector<std::size_t> k_offsets_;
  std::vector<std::int64_t> distinct_w_;
  mutable std::vector<cplx> phases_;

  std::unique_ptr<Fft1d> fft_;
  mutable std::vector<cplx> grid_;
};

/// dB/dtau for every stored index.
std::vector<cplx> rhs(const CoefficientState& state, RhsEngine engine = RhsEngine::triad_table);

/// sum_j c(j)|B_j|^2 for c = 1 (cl1), c = j (cl2), c = 1 over one period
/// (cl3) and c = j^2 (moment2).
struct ConservedReport {
  double tau = 0.0;
  double cl1 = 0.0;
  std::optional<double> cl2;
  std::optional<double> cl3;
  std::optional<double> moment2;
  std::optional<double> energy;
  double m0 = 0.0;
};

double cl1(const CoefficientState& state);
double cl2(const CoefficientState& state);
double cl3(const CoefficientState& state);
double moment2(const CoefficientState& state);

/// Field W(y) = sum_j B_j e^{i tau j^2} e^{ijy}: the coefficients with the
/// free phase restored, which solves i W_tau = W_yy + (1/tau)|W|^2 W.
std::vector<cplx> energy_field_samples(const CoefficientState& state, std::size_t n);

/// E(tau) = int_0^{2pi} |W_y|^2 - (1/(2 tau)) (|W|^2 - m)^2 dy with m = m0 by
/// default, where |W_y|^2 integrates spectrally to 2 pi sum j^2 |B_j|^2 and the
/// quartic term uses trapezoidal quadrature on an 8x oversampled grid (exact
/// for the trigonometric polynomial). Line mode only.
double energy_E(const CoefficientState& state, std::optional<double> m = std::nullopt);

/// dE/dtau = (1/(2 tau^2)) int_0^{2pi} (|W|^2 - m)^2 dy.
double energy_flux(const CoefficientState& state, std::optional<double> m = std::nullopt);

/// cl1, and cl2/moment2/energy where defined (line mode) or cl3 (periodic).
ConservedReport conserved(const CoefficientState& state);

/// B_j(tau) = conj(A_j(1/tau)) e^{-i tau j^2 / 4} with tau = 1/t.
CoefficientState b_from_a(const LineData& a, double t, int truncation);
CoefficientState b_from_a(const LineData& a, double t);

/// Inverse of b_from_a: A_j(t) = conj(B_j) e^{-i tau j^2 / 4}.
/// Periodic states return the representatives j = 0..M-1.
LineData a_from_b(const CoefficientState& state);

enum class LogPhaseConvention { self_phase, mass_corrected };

/// a_j with the logarithmic phase of the nonlinear ansatz:
///   self_phase:     a_j exp(i |a_j|^2 log(t) / (8 pi))
///   mass_corrected: a_j exp(i (|a_j|^2 - 2 sum_k |a_k|^2) log t)
LineData log_phase_coefficients(const LineData& a, double t, LogPhaseConvention convention);

// ---- dynamics <-> field bridge ---------------------------------------------
//
// b_from_a / a_from_b implement the relation used to evaluate u from V. The
// coefficient system itself is written in interaction variables: the free
// flow leaves its unknowns constant. Projecting |u|^2 u onto the translates
// e^{it d_xx} delta_k shows that A_k(t) = B_k(sigma) with sigma = 1/(4t)
// solves the system exactly (focusing sign, constant-free kernel), up to the
// modes the window drops. The functions below use that identification.

/// sigma = 1/(4t), the slow time at which the system carries A(t).
double system_time(double t);
/// t = 1/(4 sigma).
double physical_time(double sigma);

/// Line state holding A_k(t) at sigma = 1/(4t).
CoefficientState system_state(const LineData& amplitudes, double t, int truncation);
/// A_k(t) read off a system state (line mode), t = 1/(4 sigma).
LineData amplitudes(const CoefficientState& system);
/// The same instant in the field convention: b_from_a(amplitudes, t).
CoefficientState field_state(const CoefficientState& system);

/// Phase the resonant part of the system generates over (t, t_ref):
/// A_k picks up e^{-i Phi_k(t)} with Phi_k the mass_corrected phase.
LineData resonant_phase(const LineData& a, double t);

/// System state at t_start with R = 0 there: A = a e^{-i Phi(t_start)}.
CoefficientState state_from_data(const LineData& a, double t_start, int truncation);

/// R_k(t) = e^{i Phi_k(t)} A_k(t) - a_k for a system state.
LineData remainder_from_state(const CoefficientState& system, const LineData& a);

}  // namespace nlslab

#endif  // NLSLAB_COEFF_DYNAMICS_HPP
