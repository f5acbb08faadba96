#include "nlslab/coeff_dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_map>

#include "nlslab/gauss_sums.hpp"

namespace nlslab {

namespace {

// Windows up to this size use the triad table under RhsEngine::automatic.
constexpr int kAutomaticTriadLimit = 24;

double mass(std::span<const cplx> b) {
  double m = 0.0;
  for (const cplx& c : b) m += std::norm(c);
  return m;
}

}  // namespace

std::int64_t resonance_weight(std::int64_t k, std::int64_t j1, std::int64_t j2) {
  return 2 * (k - j1) * (j1 - j2);
}

CoefficientSystem::CoefficientSystem(Mode mode, int extent, RhsEngine engine)
    : mode_(mode), extent_(extent), engine_(engine) {
  require(extent >= (mode == Mode::line ? 0 : 1), "CoefficientSystem: invalid window extent");
  size_ = mode == Mode::line ? static_cast<std::size_t>(2 * extent + 1)
                             : static_cast<std::size_t>(extent);
  if (engine_ == RhsEngine::automatic)
    engine_ = (mode == Mode::line && extent > kAutomaticTriadLimit) ? RhsEngine::spectral
                                                                    : RhsEngine::triad_table;
  require(!(engine_ == RhsEngine::spectral && mode == Mode::periodic),
          "CoefficientSystem: the spectral engine is only defined in line mode");

  if (engine_ == RhsEngine::spectral) {
    // cubic products live in |j| <= 3N; a grid of length >= 4N+1 keeps the
    // aliases out of the window
    fft_ = std::make_unique<Fft1d>(good_fft_size(static_cast<std::size_t>(4 * extent + 1)));
    grid_.resize(fft_->size());
    return;
  }

  std::unordered_map<std::int64_t, std::uint32_t> w_index;
  auto phase_slot = [&](std::int64_t w) {
    auto [it, inserted] = w_index.try_emplace(w, static_cast<std::uint32_t>(distinct_w_.size()));
    if (inserted) distinct_w_.push_back(w);
    return it->second;
  };

  k_offsets_.reserve(size_ + 1);
  k_offsets_.push_back(0);
  if (mode == Mode::line) {
    const int n = extent;
    for (int k = -n; k <= n; ++k) {
      for (int j1 = -n; j1 <= n; ++j1) {
        for (int j2 = -n; j2 <= n; ++j2) {
          const int j3 = k - j1 + j2;
          if (std::abs(j3) > n) continue;
          const std::int64_t w = resonance_weight(k, j1, j2);
          if (w == 0) continue;
          triads_.push_back({static_cast<std::uint32_t>(j1 + n), static_cast<std::uint32_t>(j2 + n),
                             static_cast<std::uint32_t>(j3 + n), phase_slot(w)});
        }
      }
      k_offsets_.push_back(triads_.size());
    }
  } else {
    const int m = extent;
    std::vector<std::pair<int, double>> offsets;
    if (m % 2 == 1) {
      for (int a = -(m - 1) / 2; a <= (m - 1) / 2; ++a) offsets.emplace_back(a, 1.0);
    } else {
      for (int a = -m / 2; a <= m / 2; ++a)
        offsets.emplace_back(a, std::abs(a) == m / 2 ? 0.5 : 1.0);
    }
    for (int k = 0; k < m; ++k) {
      for (const auto& [a, wa] : offsets) {
        for (const auto& [b, wb] : offsets) {
          if (a == 0 || b == 0) continue;
          const auto j1 = static_cast<std::uint32_t>(mod_floor(k - a, m));
          const auto j2 = static_cast<std::uint32_t>(mod_floor(k - a - b, m));
          const auto j3 = static_cast<std::uint32_t>(mod_floor(k - b, m));
          triads_.push_back({j1, j2, j3, phase_slot(2 * static_cast<std::int64_t>(a) * b)});
          if (m % 2 == 0) weights_.push_back(wa * wb);
        }
      }
      k_offsets_.push_back(triads_.size());
    }
  }
  phases_.resize(distinct_w_.size());
}

void CoefficientSystem::cubic_triads(double tau, std::span<const cplx> b,
                                     std::span<cplx> out) const {
  for (std::size_t i = 0; i < distinct_w_.size(); ++i)
    phases_[i] = expi(-tau * static_cast<double>(distinct_w_[i]));
  const double m0 = mass(b);
  // spelled out in real arithmetic: std::complex products go through the
  // Annex G NaN-recovery path and dominate the O(N^3) loop otherwise
  const bool weighted = !weights_.empty();
  for (std::size_t k = 0; k < size_; ++k) {
    double acc_re = 0.0, acc_im = 0.0;
    for (std::size_t t = k_offsets_[k]; t < k_offsets_[k + 1]; ++t) {
      const Triad& tr = triads_[t];
      const double ar = b[tr.j1].real(), ai = b[tr.j1].imag();
      const double br = b[tr.j2].real(), bi = -b[tr.j2].imag();
      const double cr = b[tr.j3].real(), ci = b[tr.j3].imag();
      const double pr = ar * br - ai * bi, pi_ = ar * bi + ai * br;
      double qr = pr * cr - pi_ * ci, qi = pr * ci + pi_ * cr;
      if (weighted) {
        qr *= weights_[t];
        qi *= weights_[t];
      }
      const double er = phases_[tr.phase_index].real(), ei = phases_[tr.phase_index].imag();
      acc_re += er * qr - ei * qi;
      acc_im += er * qi + ei * qr;
    }
    out[k] = cplx{acc_re, acc_im} + (2.0 * m0 - std::norm(b[k])) * b[k];
  }
}

void CoefficientSystem::cubic_spectral(double tau, std::span<const cplx> b,
                                       std::span<cplx> out) const {
  const std::size_t len = grid_.size();
  const int n = extent_;
  std::fill(grid_.begin(), grid_.end(), cplx{});
  for (int j = -n; j <= n; ++j) {
    const double jj = static_cast<double>(j) * j;
    grid_[fft_bin(j, len)] = b[j + n] * expi(tau * jj);
  }
  fft_->backward(grid_);
  for (cplx& v : grid_) v *= std::norm(v);
  fft_->forward(grid_);
  const double inv_len = 1.0 / static_cast<double>(len);
  for (int k = -n; k <= n; ++k) {
    const double kk = static_cast<double>(k) * k;
    out[k + n] = grid_[fft_bin(k, len)] * inv_len * expi(-tau * kk);
  }
}

void CoefficientSystem::derivative(double tau, std::span<const cplx> b,
                                   std::span<cplx> out) const {
  require(tau > 0.0, "rhs: tau must be positive");
  require(b.size() == size_ && out.size() == size_, "rhs: state does not match the system layout");
  if (engine_ == RhsEngine::spectral)
    cubic_spectral(tau, b, out);
  else
    cubic_triads(tau, b, out);
  const cplx factor = -imag_unit / tau;
  for (cplx& v : out) v *= factor;
}

void CoefficientSystem::derivative_log_tau(double tau, std::span<const cplx> b,
                                           std::span<cplx> out) const {
  derivative(tau, b, out);
  for (cplx& v : out) v *= tau;
}

std::vector<cplx> rhs(const CoefficientState& state, RhsEngine engine) {
  const CoefficientSystem system(state, engine);
  std::vector<cplx> out(state.size());
  system.derivative(state.tau(), state.values(), out);
  return out;
}

double cl1(const CoefficientState& state) { return mass(state.values()); }

double cl2(const CoefficientState& state) {
  require(state.mode() == Mode::line, "cl2: the first moment diverges in periodic mode");
  double s = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) s += state.index(i) * std::norm(state.values()[i]);
  return s;
}

double cl3(const CoefficientState& state) {
  require(state.mode() == Mode::periodic, "cl3: defined for periodic states only");
  return mass(state.values());
}

double moment2(const CoefficientState& state) {
  require(state.mode() == Mode::line, "moment2: the second moment diverges in periodic mode");
  double s = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double j = state.index(i);
    s += j * j * std::norm(state.values()[i]);
  }
  return s;
}

std::vector<cplx> energy_field_samples(const CoefficientState& state, std::size_t n) {
  require(state.mode() == Mode::line, "energy: defined for line-mode states only");
  const int big_n = state.extent();
  require(n >= static_cast<std::size_t>(2 * big_n + 1), "energy: grid too coarse for the window");
  std::vector<cplx> grid(n);
  for (int j = -big_n; j <= big_n; ++j) {
    const double jj = static_cast<double>(j) * j;
    grid[fft_bin(j, n)] = state(j) * expi(state.tau() * jj);
  }
  Fft1d(n).backward(grid);
  return grid;
}

namespace {

double quartic_integral(const CoefficientState& state, double m) {
  const std::size_t n = good_fft_size(static_cast<std::size_t>(8 * (2 * state.extent() + 1)));
  const std::vector<cplx> w = energy_field_samples(state, n);
  double acc = 0.0;
  for (const cplx& v : w) {
    const double d = std::norm(v) - m;
    acc += d * d;
  }
  return acc * two_pi / static_cast<double>(n);
}

}  // namespace

double energy_E(const CoefficientState& state, std::optional<double> m) {
  const double mm = m.value_or(cl1(state));
  return two_pi * moment2(state) - quartic_integral(state, mm) / (2.0 * state.tau());
}

double energy_flux(const CoefficientState& state, std::optional<double> m) {
  const double mm = m.value_or(cl1(state));
  const double tau = state.tau();
  return quartic_integral(state, mm) / (2.0 * tau * tau);
}

ConservedReport conserved(const CoefficientState& state) {
  ConservedReport r;
  r.tau = state.tau();
  r.cl1 = cl1(state);
  r.m0 = r.cl1;
  if (state.mode() == Mode::line) {
    r.cl2 = cl2(state);
    r.moment2 = moment2(state);
    r.energy = energy_E(state);
  } else {
    r.cl3 = cl3(state);
  }
  return r;
}

CoefficientState b_from_a(const LineData& a, double t, int truncation) {
  require(t > 0.0, "b_from_a: t must be positive");
  require(a.max_index() <= truncation, "b_from_a: data support exceeds the truncation window");
  const double tau = 1.0 / t;
  std::map<int, cplx> b;
  for (const auto& [j, aj] : a.coeffs) {
    const double jj = static_cast<double>(j) * j;
    b[j] = std::conj(aj) * expi(-tau * jj / 4.0);
  }
  return CoefficientState::line(tau, truncation, b);
}

CoefficientState b_from_a(const LineData& a, double t) { return b_from_a(a, t, a.max_index()); }

LineData a_from_b(const CoefficientState& state) {
  LineData a;
  const double tau = state.tau();
  for (std::size_t i = 0; i < state.size(); ++i) {
    const int j = state.index(i);
    const double jj = static_cast<double>(j) * j;
    a.coeffs[j] = std::conj(state.values()[i]) * expi(-tau * jj / 4.0);
  }
  return a;
}

LineData log_phase_coefficients(const LineData& a, double t, LogPhaseConvention convention) {
  require(t > 0.0, "log_phase_coefficients: t must be positive");
  const double log_t = std::log(t);
  const double total = a.l2_squared();
  LineData out;
  for (const auto& [j, aj] : a.coeffs) {
    const double phase = convention == LogPhaseConvention::self_phase
                             ? std::norm(aj) * log_t / (8.0 * pi)
                             : (std::norm(aj) - 2.0 * total) * log_t;
    out.coeffs[j] = aj * expi(phase);
  }
  return out;
}

double system_time(double t) {
  require(t > 0.0, "system_time: t must be positive");
  return 0.25 / t;
}

double physical_time(double sigma) {
  require(sigma > 0.0, "physical_time: sigma must be positive");
  return 0.25 / sigma;
}

CoefficientState system_state(const LineData& amplitudes, double t, int truncation) {
  require(amplitudes.max_index() <= truncation,
          "system_state: data support exceeds the truncation window");
  return CoefficientState::line(system_time(t), truncation, amplitudes.coeffs);
}

LineData amplitudes(const CoefficientState& system) {
  require(system.mode() == Mode::line, "amplitudes: line mode only");
  LineData a;
  for (std::size_t i = 0; i < system.size(); ++i) a.coeffs[system.index(i)] = system.values()[i];
  return a;
}

CoefficientState field_state(const CoefficientState& system) {
  return b_from_a(amplitudes(system), physical_time(system.tau()), system.extent());
}

LineData resonant_phase(const LineData& a, double t) {
  require(t > 0.0, "resonant_phase: t must be positive");
  const double log_t = std::log(t);
  const double total = a.l2_squared();
  LineData out;
  for (const auto& [j, aj] : a.coeffs) out.coeffs[j] = aj * expi(-(std::norm(aj) - 2.0 * total) * log_t);
  return out;
}

CoefficientState state_from_data(const LineData& a, double t_start, int truncation) {
  return system_state(resonant_phase(a, t_start), t_start, truncation);
}

LineData remainder_from_state(const CoefficientState& system, const LineData& a) {
  const double log_t = std::log(physical_time(system.tau()));
  const double total = a.l2_squared();
  LineData r;
  for (const auto& [j, aj] : amplitudes(system).coeffs) {
    const cplx data = a(j);
    r.coeffs[j] = aj * expi((std::norm(data) - 2.0 * total) * log_t) - data;
  }
  return r;
}

}  // namespace nlslab
