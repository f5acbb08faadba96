#include "nlslab/rogue_experiment.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nlslab/coeff_dynamics.hpp"
#include "nlslab/gauss_sums.hpp"
#include "nlslab/spectral.hpp"

namespace nlslab {

BumpSpec BumpSpec::standard() {
  BumpSpec b;
  b.name = "standard";
  b.profile = [](double x) {
    if (std::abs(x) >= 1.0) return 0.0;
    return std::exp(1.0 - 1.0 / (1.0 - x * x));
  };
  return b;
}

double BumpSpec::integral() const {
  // composite 16-point Gauss-Legendre on 64 panels; the profile is smooth
  static constexpr double nodes[8] = {0.0950125098376374, 0.2816035507792589,
                                      0.4580167776572274, 0.6178762444026438,
                                      0.7554044083550030, 0.8656312023878318,
                                      0.9445750230732326, 0.9894009349916499};
  static constexpr double weights[8] = {0.1894506104550685, 0.1826034150449236,
                                        0.1691565193950025, 0.1495959888165767,
                                        0.1246289712555339, 0.0951585116824928,
                                        0.0622535239386479, 0.0271524594117541};
  const int panels = 64;
  const double width = 2.0 / panels;
  double sum = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double mid = -1.0 + (i + 0.5) * width;
    for (int j = 0; j < 8; ++j) {
      const double dx = 0.5 * width * nodes[j];
      sum += weights[j] * (profile(mid - dx) + profile(mid + dx));
    }
  }
  return 0.5 * width * sum;
}

std::vector<std::string> RogueConfig::validate() const {
  require(static_cast<bool>(bump.profile), "RogueConfig: bump profile missing");
  require(eta > 0.0 && eta < 0.25, "RogueConfig: eta must lie in (0, 1/4)");
  require(p >= 1 && q >= 1, "RogueConfig: p and q must be positive");
  require(q % 2 == 1, "RogueConfig: q must be odd");
  require(gcd(p, q) == 1, "RogueConfig: p and q must be coprime");
  require(s > 0.5, "RogueConfig: s must exceed 1/2");
  require(beta < 0.5 - 1.5 * s, "RogueConfig: beta must satisfy beta < 1/2 - 3s/2");
  require(p_tilde >= 1 && q_tilde >= 1, "RogueConfig: p_tilde and q_tilde must be positive");
  require(q_tilde % 2 == 1, "RogueConfig: q_tilde must be odd");
  require(gcd(p_tilde, q_tilde) == 1, "RogueConfig: p_tilde and q_tilde must be coprime");
  require(p_tilde < q_tilde, "RogueConfig: p_tilde must be smaller than q_tilde");
  require(p_tilde <= p, "RogueConfig: p_tilde must not exceed p");
  std::vector<std::string> warnings;
  const double r = static_cast<double>(p) / static_cast<double>(q);
  if (std::abs(r - 1.0) > 0.2) warnings.push_back("p/q is outside the +-20% window around 1");
  const double rt = static_cast<double>(p_tilde) / static_cast<double>(q_tilde);
  if (std::abs(rt - 1.0) > 0.5)
    warnings.push_back("p_tilde/q_tilde is outside the +-50% window around 1");
  return warnings;
}

double bump_profile(const RogueConfig& cfg, double xi) {
  const double scale = static_cast<double>(cfg.p) / (two_pi * cfg.eta);
  return std::pow(static_cast<double>(cfg.p), cfg.beta) * cfg.bump(scale * xi);
}

namespace {

struct BumpSamples {
  std::vector<double> alpha;  // alpha_k for 0 <= k < len/2 (even, so alpha_{-k} = alpha_k)
  double peak = 0.0;
};

BumpSamples bump_samples(const RogueConfig& cfg, int K, std::size_t min_support_points) {
  const double half_width = two_pi * cfg.eta / static_cast<double>(cfg.p);
  const auto support_len = static_cast<std::size_t>(
      std::ceil(static_cast<double>(min_support_points) * pi / half_width));
  std::size_t len = 1 << 16;
  while (len < support_len || len < 4 * static_cast<std::size_t>(K + 1)) len <<= 1;

  std::vector<cplx> grid(len);
  for (std::size_t n = 0; n < len; ++n) {
    const double xi = two_pi * static_cast<double>(fft_frequency(n, len)) / static_cast<double>(len);
    grid[n] = bump_profile(cfg, xi);
  }
  Fft1d(len).forward(grid);
  BumpSamples out;
  out.alpha.resize(len / 2);
  const double inv = 1.0 / static_cast<double>(len);
  for (std::size_t k = 0; k < len / 2; ++k) {
    // f is even and real: average the two mirror bins and drop the rounding
    // residue in the imaginary part
    const cplx a = grid[k], b = grid[(len - k) % len];
    out.alpha[k] = 0.5 * (a.real() + b.real()) * inv;
    out.peak = std::max(out.peak, std::abs(out.alpha[k]));
  }
  return out;
}

int first_quiet_index(const BumpSamples& b, double tail_tol) {
  const double bound = tail_tol * b.peak;
  int k = static_cast<int>(b.alpha.size()) - 1;
  while (k > 0 && std::abs(b.alpha[static_cast<std::size_t>(k)]) <= bound) --k;
  return k;
}

}  // namespace

int suggest_bump_truncation(const RogueConfig& cfg, double tail_tol) {
  int K = 1024;
  for (;;) {
    const BumpSamples b = bump_samples(cfg, K, 4096);
    const int k = first_quiet_index(b, tail_tol);
    if (k < static_cast<int>(b.alpha.size()) / 2) return k;
    K *= 2;
    if (K > (1 << 24)) throw NumericalError("suggest_bump_truncation: tail does not decay");
  }
}

PeriodicSpectrum build_bump_coefficients(const RogueConfig& cfg, int K, double tail_tol,
                                         std::size_t min_support_points) {
  cfg.validate();
  require(K >= 1, "build_bump_coefficients: K must be positive");
  const BumpSamples b = bump_samples(cfg, K, min_support_points);
  const int last_loud = first_quiet_index(b, tail_tol);
  if (last_loud > K) {
    std::ostringstream os;
    os << "build_bump_coefficients: |alpha_k| above " << tail_tol
       << " of the peak up to |k| = " << last_loud << "; use K >= " << last_loud;
    throw NumericalError(os.str());
  }
  PeriodicSpectrum spec;
  for (int k = -K; k <= K; ++k) spec.coeffs[k] = b.alpha[static_cast<std::size_t>(std::abs(k))];
  return spec;
}

namespace {

std::vector<double> unit_grid(std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<double>(i) / static_cast<double>(n);
  return xs;
}

std::vector<double> centered_grid(double half, std::size_t n) {
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n; ++i)
    xs[i] = -half + 2.0 * half * static_cast<double>(i) / static_cast<double>(n - 1);
  return xs;
}

double max_of(const std::vector<double>& v) {
  return v.empty() ? 0.0 : *std::max_element(v.begin(), v.end());
}

std::vector<cplx> field_on(const PeriodicSpectrum& spec, const RationalTime& t,
                           const std::vector<double>& xs, PropagatorNorm norm) {
  std::vector<cplx> out;
  out.reserve(xs.size());
  for (double x : xs) out.push_back(linear_evolve_direct(spec, t, x, norm));
  return out;
}

std::vector<double> moduli(const std::vector<cplx>& v) {
  std::vector<double> out;
  out.reserve(v.size());
  for (const cplx& z : v) out.push_back(std::abs(z));
  return out;
}

// Quantities at t_pq and t_tilde measured from sampled fields; the closed form
// fills in its own values on top of these.
void measure_fields(const RogueConfig& cfg, const PeriodicSpectrum& spec,
                    const LinearRunOptions& options, RogueReport& r,
                    std::vector<cplx>* u_tpq = nullptr, std::vector<cplx>* u_tilde = nullptr) {
  const RationalTime t(cfg.p, cfg.q), tt(cfg.p_tilde, cfg.q_tilde);
  const std::size_t n = std::max({options.grid, static_cast<std::size_t>(8 * cfg.q),
                                   static_cast<std::size_t>(32 * cfg.q_tilde)});
  r.grid_tpq = unit_grid(n);
  const std::vector<cplx> field = field_on(spec, t, r.grid_tpq, options.norm);
  r.profile_tpq = moduli(field);
  const double peak = max_of(r.profile_tpq);

  std::vector<double> shifted = r.grid_tpq;
  for (double& x : shifted) x += 1.0 / static_cast<double>(cfg.q);
  const std::vector<double> shifted_mod = moduli(field_on(spec, t, shifted, options.norm));
  double defect = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    defect = std::max(defect, std::abs(shifted_mod[i] - r.profile_tpq[i]));
  r.period_check = peak > 0.0 ? defect / peak : 0.0;

  double zero_max = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    if (lattice_distance(r.grid_tpq[i], cfg.q) > 2.0 * cfg.eta / static_cast<double>(cfg.q))
      zero_max = std::max(zero_max, r.profile_tpq[i]);
  r.zero_region_max_tpq = zero_max;

  const std::size_t nt = std::max<std::size_t>(options.tilde_grid, 33);
  r.grid_tilde = centered_grid(0.5 / static_cast<double>(cfg.q_tilde), nt);
  const std::vector<cplx> field_tilde = field_on(spec, tt, r.grid_tilde, options.norm);
  r.profile_tilde = moduli(field_tilde);

  if (u_tpq) *u_tpq = field;
  if (u_tilde) *u_tilde = field_tilde;
}

void fill_predictions(const RogueConfig& cfg, double gain, RogueReport& r) {
  const double pb = std::pow(static_cast<double>(cfg.p), cfg.beta);
  r.predicted_amp_stated = pb / std::sqrt(static_cast<double>(cfg.q));
  r.predicted_amp_kernel = gain * pb;
  r.predicted_amp_tilde_stated = pb / std::sqrt(static_cast<double>(cfg.q_tilde));
  r.predicted_amp_tilde_ptilde = std::pow(static_cast<double>(cfg.p_tilde), cfg.beta - 0.5);
}

double relative_sup_difference(const std::vector<double>& a, const std::vector<double>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  const double scale = max_of(b);
  return scale > 0.0 ? d / scale : d;
}

}  // namespace

RogueReport run_linear(const RogueConfig& cfg, const PeriodicSpectrum& spectrum,
                       const LinearRunOptions& options) {
  RogueReport r;
  r.warnings = cfg.validate();
  const RationalTime t(cfg.p, cfg.q), tt(cfg.p_tilde, cfg.q_tilde);
  const TalbotClosedForm closed(spectrum, t, cfg.eta, options.norm);
  // the datum is supported in |xi| <= 2 pi eta / p = 2 pi eta_tilde / p_tilde
  const double eta_tilde = cfg.eta * static_cast<double>(cfg.p_tilde) / static_cast<double>(cfg.p);
  const TalbotClosedForm closed_tilde(spectrum, tt, eta_tilde, options.norm);

  measure_fields(cfg, spectrum, options, r);

  std::vector<double> cf(r.grid_tpq.size());
  for (std::size_t i = 0; i < cf.size(); ++i) cf[i] = closed(r.grid_tpq[i]);
  r.oracle_agreement = relative_sup_difference(cf, r.profile_tpq);
  std::vector<double> cft(r.grid_tilde.size());
  for (std::size_t i = 0; i < cft.size(); ++i) cft[i] = closed_tilde(r.grid_tilde[i]);
  r.oracle_agreement_tilde = relative_sup_difference(cft, r.profile_tilde);

  r.amp_at_0_tpq = closed(0.0);
  r.amp_max_tpq = max_of(cf);
  r.amp_at_0_tilde = closed_tilde(0.0);
  fill_predictions(cfg, closed.gain(), r);
  r.dichotomy_ratio = r.amp_max_tpq > 0.0 ? r.amp_at_0_tilde / r.amp_max_tpq : 0.0;
  r.dichotomy = r.dichotomy_ratio >= 2.5 && r.zero_region_max_tpq <= 1e-10 * r.amp_max_tpq;
  return r;
}

namespace {

struct NonlinearFields {
  std::vector<cplx> tpq, tilde;
  double max_remainder = 0.0;
  IntegrationStats stats;
};

// A_k at t for every k of the spectrum: window modes from the integrated
// state, the rest with the resonant phase only.
PeriodicSpectrum assemble_amplitudes(const PeriodicSpectrum& alpha, const CoefficientState& state,
                                     double total_mass) {
  const double log_t = std::log(physical_time(state.tau()));
  PeriodicSpectrum out;
  for (const auto& [k, a] : alpha.coeffs) {
    if (state.in_window(k)) continue;
    out.coeffs[k] = a * expi(-(std::norm(a) - 2.0 * total_mass) * log_t);
  }
  for (const auto& [k, a] : amplitudes(state).coeffs) out.coeffs[k] = a;
  return out;
}

NonlinearFields nonlinear_fields(const RogueConfig& cfg, const PeriodicSpectrum& alpha,
                                 const NonlinearRunOptions& options, double tau_start,
                                 const RogueReport& grids) {
  const RationalTime t(cfg.p, cfg.q), tt(cfg.p_tilde, cfg.q_tilde);
  const int window = std::min(options.window, alpha.max_index());
  LineData data;
  double total_mass = 0.0;
  for (const auto& [k, a] : alpha.coeffs) {
    total_mass += std::norm(a);
    if (std::abs(k) <= window) data.coeffs[k] = a;
  }
  const double tau_pq = system_time(t.value());
  const double tau_tilde = system_time(tt.value());
  require(tau_start > 1.0 / std::min(t.value(), tt.value()),
          "run_nonlinear: tau_start must exceed 1/t");

  NonlinearFields out;
  CoefficientState state = state_from_data(data, 1.0 / tau_start, window);
  // visit the larger tau (earlier time) first
  const bool tilde_first = tau_tilde > tau_pq;
  const double first = tilde_first ? tau_tilde : tau_pq;
  const double second = tilde_first ? tau_pq : tau_tilde;
  IntegrationResult r1 = integrate_split_step(state, first, options.stepper);
  const CoefficientState s1 = r1.state;
  IntegrationResult r2 = integrate_split_step(s1, second, options.stepper);
  const CoefficientState s2 = r2.state;
  out.stats = r1.stats;
  out.stats.accepted += r2.stats.accepted;
  out.stats.rhs_evaluations += r2.stats.rhs_evaluations;

  const CoefficientState& at_pq = tilde_first ? s2 : s1;
  const CoefficientState& at_tilde = tilde_first ? s1 : s2;
  for (const auto& [k, rk] : remainder_from_state(at_pq, data).coeffs)
    out.max_remainder = std::max(out.max_remainder, std::abs(rk));

  const PeriodicSpectrum amp_pq = assemble_amplitudes(alpha, at_pq, total_mass);
  const PeriodicSpectrum amp_tilde = assemble_amplitudes(alpha, at_tilde, total_mass);
  out.tpq = field_on(amp_pq, t, grids.grid_tpq, options.linear.norm);
  out.tilde = field_on(amp_tilde, tt, grids.grid_tilde, options.linear.norm);
  return out;
}

double relative_complex_change(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    d = std::max(d, std::abs(a[i] - b[i]));
    scale = std::max(scale, std::abs(b[i]));
  }
  return scale > 0.0 ? d / scale : d;
}

}  // namespace

NonlinearReport run_nonlinear(const RogueConfig& cfg, const PeriodicSpectrum& spectrum,
                              const NonlinearRunOptions& options) {
  NonlinearReport rep;
  cfg.validate();
  const double l1 = spectrum.l1();
  rep.scale = (options.target_l1 > 0.0 && l1 > 0.0) ? options.target_l1 / l1 : 1.0;
  PeriodicSpectrum alpha;
  for (const auto& [k, a] : spectrum.coeffs) alpha.coeffs[k] = rep.scale * a;
  rep.l1_norm = alpha.l1();
  LineData as_line;
  as_line.coeffs = alpha.coeffs;
  rep.l2s_norm = as_line.l2s(cfg.s);
  rep.smallness_warning = rep.l1_norm > 0.1;

  rep.linear = run_linear(cfg, alpha, options.linear);
  std::vector<cplx> lin_tpq, lin_tilde;
  {
    RogueReport scratch;
    measure_fields(cfg, alpha, options.linear, scratch, &lin_tpq, &lin_tilde);
  }

  const RationalTime t(cfg.p, cfg.q);
  if (rep.l1_norm == 0.0) {
    rep.nonlinear = rep.linear;
    return rep;
  }

  const NonlinearFields nl = nonlinear_fields(cfg, alpha, options, options.tau_start, rep.linear);
  rep.stats = nl.stats;
  rep.max_remainder = nl.max_remainder;
  rep.relative_change_tpq = relative_complex_change(nl.tpq, lin_tpq);
  rep.relative_change_tilde = relative_complex_change(nl.tilde, lin_tilde);
  double sup_diff = 0.0;
  for (std::size_t i = 0; i < nl.tpq.size(); ++i)
    sup_diff = std::max(sup_diff, std::abs(nl.tpq[i] - lin_tpq[i]));
  rep.perturbative_ratio =
      rep.l2s_norm > 0.0 ? sup_diff * std::sqrt(t.value()) / std::pow(rep.l2s_norm, 3) : 0.0;

  RogueReport& r = rep.nonlinear;
  r.warnings = rep.linear.warnings;
  if (rep.smallness_warning) r.warnings.push_back("l1 norm of alpha exceeds 0.1");
  r.grid_tpq = rep.linear.grid_tpq;
  r.grid_tilde = rep.linear.grid_tilde;
  r.profile_tpq = moduli(nl.tpq);
  r.profile_tilde = moduli(nl.tilde);
  r.amp_at_0_tpq = r.profile_tpq.front();
  r.amp_max_tpq = max_of(r.profile_tpq);
  r.amp_at_0_tilde = r.profile_tilde[r.profile_tilde.size() / 2];
  double zero_max = 0.0;
  for (std::size_t i = 0; i < r.grid_tpq.size(); ++i)
    if (lattice_distance(r.grid_tpq[i], cfg.q) > 2.0 * cfg.eta / static_cast<double>(cfg.q))
      zero_max = std::max(zero_max, r.profile_tpq[i]);
  r.zero_region_max_tpq = zero_max;
  r.remainder_estimate = nl.max_remainder;
  r.predicted_amp_stated = rep.linear.predicted_amp_stated;
  r.predicted_amp_kernel = rep.linear.predicted_amp_kernel;
  r.predicted_amp_tilde_stated = rep.linear.predicted_amp_tilde_stated;
  r.predicted_amp_tilde_ptilde = rep.linear.predicted_amp_tilde_ptilde;
  r.dichotomy_ratio = r.amp_max_tpq > 0.0 ? r.amp_at_0_tilde / r.amp_max_tpq : 0.0;
  r.dichotomy = r.dichotomy_ratio >= 2.5;

  if (options.tau_start_sensitivity) {
    const NonlinearFields nl2 =
        nonlinear_fields(cfg, alpha, options, 2.0 * options.tau_start, rep.linear);
    rep.tau_start_sensitivity = relative_complex_change(nl2.tpq, nl.tpq) *
                                max_of(moduli(nl.tpq)) / std::max(max_of(moduli(lin_tpq)), 1e-300);
  }
  return rep;
}

}  // namespace nlslab
