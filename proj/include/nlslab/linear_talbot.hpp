#ifndef NLSLAB_LINEAR_TALBOT_HPP
#define NLSLAB_LINEAR_TALBOT_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "nlslab/common.hpp"

namespace nlslab {

/// t = (1/2pi) (p/q) with gcd(p, q) = 1.
struct RationalTime {
  std::int64_t p = 1;
  std::int64_t q = 1;

  RationalTime() = default;
  /// Reduces nothing: a non-coprime pair is rejected.
  RationalTime(std::int64_t p, std::int64_t q);

  double value() const { return static_cast<double>(p) / (two_pi * static_cast<double>(q)); }
  bool odd_q() const { return q % 2 != 0; }
};

/// Coefficients alpha_k of u0 = sum_k alpha_k delta(x - k), with
/// hat(u0)(xi) = sum_k alpha_k e^{-ik xi}.
struct PeriodicSpectrum {
  std::map<int, cplx> coeffs;

  cplx operator()(int k) const;
  int max_index() const;
  double l1() const;
  /// alpha_k = alpha_{-k} and real, within tol * max|alpha|.
  bool even_real(double tol = 0.0) const;

  /// hat(u0)(xi) = sum_k alpha_k e^{-ik xi}.
  cplx hat(double xi) const;
  /// sum_k alpha_k e^{+ik xi}; equals hat(xi) for even real spectra.
  cplx f(double xi) const;
};

/// Point masses inside one period cell [0, period).
struct DeltaTrain {
  struct Entry {
    double support;
    cplx weight;
  };
  std::vector<Entry> entries;
  double period = 1.0;
};

/// Normalisation of the free kernel e^{it d_xx} delta_j.
///   constant_free: (it)^{-1/2} e^{i(x-j)^2/4t}
///   physical:      (4 pi i t)^{-1/2} e^{i(x-j)^2/4t}
/// The two differ by the constant factor sqrt(4 pi).
enum class PropagatorNorm { constant_free, physical };

/// Ratio of the chosen kernel to the physical one (1 or sqrt(4 pi)).
double propagator_gain(PropagatorNorm norm);

/// e^{it d_xx} delta(x - j) at x; principal branch of (it)^{-1/2}.
cplx free_propagator_delta(double x, double t, std::int64_t j,
                           PropagatorNorm norm = PropagatorNorm::constant_free);

/// e^{it d_xx} (sum_k delta_k) at t = p/(2 pi q): q point masses at m/q with
/// weights G(-p, m, q)/q (times the propagator gain relative to the physical
/// kernel).
DeltaTrain dirac_comb_revival(const RationalTime& t,
                              PropagatorNorm norm = PropagatorNorm::physical);

/// sum_k alpha_k e^{it d_xx} delta_k (x), the truncated-sum oracle.
cplx linear_evolve_direct(const PeriodicSpectrum& spec, double t, double x,
                          PropagatorNorm norm = PropagatorNorm::constant_free);

/// Same at a rational time. The k^2 part of the phase, pi q k^2 / (2p), is
/// reduced modulo 2 pi in integer arithmetic, so large |k| lose no accuracy.
cplx linear_evolve_direct(const PeriodicSpectrum& spec, const RationalTime& t, double x,
                          PropagatorNorm norm = PropagatorNorm::constant_free);

/// Oracle on a whole grid of x values.
std::vector<double> linear_evolve_modulus(const PeriodicSpectrum& spec, const RationalTime& t,
                                          std::span<const double> xs,
                                          PropagatorNorm norm = PropagatorNorm::constant_free);

/// xi_x = (pi q / p) d(x, Z/q).
double xi_x(double x, const RationalTime& t);

/// Distance from x to the lattice Z/q.
double lattice_distance(double x, std::int64_t q);

/// Closed-form modulus of the linear evolution at t = p/(2 pi q), q odd, for
/// spectra concentrated in [-2 pi eta/p, 2 pi eta/p] mod 2 pi with eta < 1/4:
///   |u(x)| = gain * |hat(u0)(xi_x)|,  zero when d(x, Z/q) > 2 eta / q.
/// Evaluating the revival sum against the concentrated spectrum gives
/// gain = sqrt(q)/(2p) for the physical kernel, hence sqrt(pi q)/p for the
/// constant-free one.
class TalbotClosedForm {
 public:
  /// Checks the concentration of the spectrum once (sampling hat(u0) off the
  /// support) and throws ValidationError when it fails.
  TalbotClosedForm(PeriodicSpectrum spec, const RationalTime& t, double eta,
                   PropagatorNorm norm = PropagatorNorm::constant_free);

  double operator()(double x) const;
  /// q^{-1/2} |hat(u0)(xi_x)| on the same support: the envelope without the
  /// kernel's Jacobian factor.
  double envelope(double x) const;
  double gain() const { return gain_; }

 private:
  PeriodicSpectrum spec_;
  RationalTime t_;
  double eta_;
  double gain_;
};

double talbot_closed_form(const PeriodicSpectrum& spec, const RationalTime& t, double x,
                          double eta, PropagatorNorm norm = PropagatorNorm::constant_free);

/// max over xi outside [-2 pi eta/p, 2 pi eta/p] (mod 2 pi) of |hat(u0)(xi)|,
/// sampled on n points, relative to max |hat(u0)|.
double concentration_defect(const PeriodicSpectrum& spec, std::int64_t p, double eta,
                            std::size_t n = 4096);

/// sum_{k=1}^{K} (e^{itk^2} - 1)/k^2.
cplx riemann_function(double t, std::int64_t K);

/// e^{2 pi i turns}, exact at multiples of a quarter turn.
cplx expi_turns(double turns);

}  // namespace nlslab

#endif  // NLSLAB_LINEAR_TALBOT_HPP
