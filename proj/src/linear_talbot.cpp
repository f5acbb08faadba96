#include "nlslab/linear_talbot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "nlslab/gauss_sums.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

RationalTime::RationalTime(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
  require(p_ >= 1 && q_ >= 1, "RationalTime: p and q must be positive");
  require(gcd(p_, q_) == 1, "RationalTime: p and q must be coprime");
}

cplx PeriodicSpectrum::operator()(int k) const {
  const auto it = coeffs.find(k);
  return it == coeffs.end() ? cplx{} : it->second;
}

int PeriodicSpectrum::max_index() const {
  int m = 0;
  for (const auto& [k, a] : coeffs) m = std::max(m, std::abs(k));
  return m;
}

double PeriodicSpectrum::l1() const {
  double s = 0.0;
  for (const auto& [k, a] : coeffs) s += std::abs(a);
  return s;
}

bool PeriodicSpectrum::even_real(double tol) const {
  double scale = 0.0;
  for (const auto& [k, a] : coeffs) scale = std::max(scale, std::abs(a));
  const double bound = tol * scale;
  for (const auto& [k, a] : coeffs) {
    if (std::abs(a.imag()) > bound) return false;
    if (std::abs(a - (*this)(-k)) > bound) return false;
  }
  return true;
}

cplx PeriodicSpectrum::hat(double xi) const {
  cplx s{};
  for (const auto& [k, a] : coeffs) s += a * expi(-static_cast<double>(k) * xi);
  return s;
}

cplx PeriodicSpectrum::f(double xi) const { return hat(-xi); }

double propagator_gain(PropagatorNorm norm) {
  return norm == PropagatorNorm::physical ? 1.0 : std::sqrt(4.0 * pi);
}

namespace {

// (it)^{-1/2} or (4 pi i t)^{-1/2}, principal branch.
cplx kernel_prefactor(double t, PropagatorNorm norm) {
  const double scale = norm == PropagatorNorm::physical ? 4.0 * pi * t : t;
  return expi(-pi / 4.0) / std::sqrt(scale);
}

}  // namespace

cplx free_propagator_delta(double x, double t, std::int64_t j, PropagatorNorm norm) {
  require(t > 0.0 && std::isfinite(t), "free_propagator_delta: t must be positive");
  const double d = x - static_cast<double>(j);
  return kernel_prefactor(t, norm) * expi(d * d / (4.0 * t));
}

DeltaTrain dirac_comb_revival(const RationalTime& t, PropagatorNorm norm) {
  DeltaTrain train;
  train.period = 1.0;
  const double gain = propagator_gain(norm) / static_cast<double>(t.q);
  train.entries.reserve(static_cast<std::size_t>(t.q));
  for (std::int64_t m = 0; m < t.q; ++m) {
    const cplx g = gauss_sum({-t.p, m, t.q});
    train.entries.push_back({static_cast<double>(m) / static_cast<double>(t.q), gain * g});
  }
  return train;
}

cplx linear_evolve_direct(const PeriodicSpectrum& spec, double t, double x,
                          PropagatorNorm norm) {
  require(t > 0.0 && std::isfinite(t), "linear_evolve_direct: t must be positive");
  cplx s{};
  for (const auto& [k, a] : spec.coeffs) {
    const double d = x - k;
    s += a * expi(d * d / (4.0 * t));
  }
  return kernel_prefactor(t, norm) * s;
}

cplx linear_evolve_direct(const PeriodicSpectrum& spec, const RationalTime& t, double x,
                          PropagatorNorm norm) {
  // (x-k)^2 / 4t = (pi q / 2p) (k^2 - 2xk + x^2)
  const std::int64_t four_p = 4 * t.p;
  const double c = pi * static_cast<double>(t.q) / (2.0 * static_cast<double>(t.p));
  const double lin = -pi * static_cast<double>(t.q) * x / static_cast<double>(t.p);
  cplx s{};
  for (const auto& [k, a] : spec.coeffs) {
    const std::int64_t kr = mod_floor(k, four_p);
    const std::int64_t quad = mod_floor(kr * kr % four_p * (t.q % four_p), four_p);
    const double phase = pi * static_cast<double>(quad) / (2.0 * static_cast<double>(t.p)) +
                         lin * static_cast<double>(k);
    s += a * expi(phase);
  }
  return kernel_prefactor(t.value(), norm) * s * expi(c * x * x);
}

std::vector<double> linear_evolve_modulus(const PeriodicSpectrum& spec, const RationalTime& t,
                                          std::span<const double> xs, PropagatorNorm norm) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(std::abs(linear_evolve_direct(spec, t, x, norm)));
  return out;
}

double lattice_distance(double x, std::int64_t q) {
  require(q >= 1, "lattice_distance: q must be positive");
  const double y = x * static_cast<double>(q);
  return std::abs(y - std::nearbyint(y)) / static_cast<double>(q);
}

double xi_x(double x, const RationalTime& t) {
  return pi * static_cast<double>(t.q) / static_cast<double>(t.p) * lattice_distance(x, t.q);
}

double concentration_defect(const PeriodicSpectrum& spec, std::int64_t p, double eta,
                            std::size_t n) {
  require(p >= 1, "concentration_defect: p must be positive");
  const std::size_t len =
      good_fft_size(std::max(n, static_cast<std::size_t>(2 * spec.max_index() + 1)));
  std::vector<cplx> grid(len);
  for (const auto& [k, a] : spec.coeffs) grid[fft_bin(k, len)] += a;
  Fft1d(len).forward(grid);  // grid[m] = hat(2 pi m / len)
  const double half_width = two_pi * eta / static_cast<double>(p);
  double inside = 0.0, outside = 0.0;
  for (std::size_t m = 0; m < len; ++m) {
    const double xi = two_pi * static_cast<double>(fft_frequency(m, len)) / static_cast<double>(len);
    const double v = std::abs(grid[m]);
    if (std::abs(xi) <= half_width)
      inside = std::max(inside, v);
    else
      outside = std::max(outside, v);
  }
  if (inside == 0.0) return outside == 0.0 ? 0.0 : INFINITY;
  return outside / inside;
}

TalbotClosedForm::TalbotClosedForm(PeriodicSpectrum spec, const RationalTime& t, double eta,
                                   PropagatorNorm norm)
    : spec_(std::move(spec)), t_(t), eta_(eta) {
  require(t.odd_q(), "talbot_closed_form: q must be odd");
  require(eta > 0.0 && eta < 0.25, "talbot_closed_form: eta must lie in (0, 1/4)");
  require(concentration_defect(spec_, t.p, eta) <= 1e-8,
          "talbot_closed_form: spectrum is not concentrated in [-2 pi eta/p, 2 pi eta/p]");
  const double p = static_cast<double>(t.p), q = static_cast<double>(t.q);
  gain_ = propagator_gain(norm) * std::sqrt(q) / (2.0 * p);
}

double TalbotClosedForm::operator()(double x) const {
  if (lattice_distance(x, t_.q) > 2.0 * eta_ / static_cast<double>(t_.q)) return 0.0;
  return gain_ * std::abs(spec_.hat(xi_x(x, t_)));
}

double TalbotClosedForm::envelope(double x) const {
  if (lattice_distance(x, t_.q) > 2.0 * eta_ / static_cast<double>(t_.q)) return 0.0;
  return std::abs(spec_.hat(xi_x(x, t_))) / std::sqrt(static_cast<double>(t_.q));
}

double talbot_closed_form(const PeriodicSpectrum& spec, const RationalTime& t, double x,
                          double eta, PropagatorNorm norm) {
  return TalbotClosedForm(spec, t, eta, norm)(x);
}

cplx expi_turns(double turns) {
  double frac = turns - std::floor(turns);
  if (frac == 0.0) return {1.0, 0.0};
  if (frac == 0.25) return {0.0, 1.0};
  if (frac == 0.5) return {-1.0, 0.0};
  if (frac == 0.75) return {0.0, -1.0};
  return expi(two_pi * frac);
}

cplx riemann_function(double t, std::int64_t K) {
  require(K >= 1, "riemann_function: K must be positive");
  require(std::isfinite(t), "riemann_function: t must be finite");
  const double r = t / two_pi;
  cplx s{};
  // small terms first so the tail does not drown in the leading ones
  for (std::int64_t k = K; k >= 1; --k) {
    const double kk = static_cast<double>(k) * static_cast<double>(k);
    const double hi = r * kk;
    const double lo = std::fma(r, kk, -hi);
    const double whole = std::floor(hi);
    const cplx e = expi_turns((hi - whole) + lo);
    s += (e - 1.0) / kk;
  }
  return s;
}

}  // namespace nlslab
