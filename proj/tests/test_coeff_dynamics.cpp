#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "nlslab/coeff_dynamics.hpp"
#include "nlslab/field_eval.hpp"
#include "nlslab/integrator.hpp"

using namespace nlslab;

namespace {

std::vector<cplx> random_values(std::size_t n, double amp, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amp, amp);
  std::vector<cplx> v(n);
  for (auto& c : v) c = {u(rng), u(rng)};
  return v;
}

// i dB_k/dtau = (1/tau) sum_{k - j1 + j2 - j3 = 0} e^{-i tau w} B_j1 conj(B_j2) B_j3,
// with the w = 0 terms collected separately.
std::vector<cplx> naive_line_rhs(const CoefficientState& s) {
  const int N = s.extent();
  const double tau = s.tau();
  std::vector<cplx> out(s.size());
  for (int k = -N; k <= N; ++k) {
    cplx nonres = 0.0, res = 0.0;
    for (int j1 = -N; j1 <= N; ++j1)
      for (int j2 = -N; j2 <= N; ++j2)
        for (int j3 = -N; j3 <= N; ++j3) {
          if (k - j1 + j2 - j3 != 0) continue;
          const double w = double(k) * k - double(j1) * j1 + double(j2) * j2 - double(j3) * j3;
          const cplx term = s(j1) * std::conj(s(j2)) * s(j3);
          if (w == 0.0)
            res += term;
          else
            nonres += expi(-tau * w) * term;
        }
    out[s.slot(k)] = -imag_unit * (nonres + res) / tau;
  }
  return out;
}

std::vector<cplx> naive_periodic_rhs(const CoefficientState& s) {
  const int M = s.extent();
  const double tau = s.tau();
  std::vector<cplx> out(s.size());
  const int h = (M - 1) / 2;
  for (int k = 0; k < M; ++k) {
    cplx acc = 0.0;
    for (int a = -h; a <= h; ++a)
      for (int b = -h; b <= h; ++b)
        acc += expi(-tau * 2.0 * a * b) * s(k - a) * std::conj(s(k - a - b)) * s(k - b);
    out[std::size_t(k)] = -imag_unit * acc / tau;
  }
  return out;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST(ResonanceWeight, Factorises) {
  for (int k = -6; k <= 6; ++k)
    for (int j1 = -6; j1 <= 6; ++j1)
      for (int j2 = -6; j2 <= 6; ++j2) {
        const int j3 = k - j1 + j2;
        EXPECT_EQ(resonance_weight(k, j1, j2), k * k - j1 * j1 + j2 * j2 - j3 * j3);
        EXPECT_EQ(resonance_weight(k, j1, j2), 2 * (k - j1) * (j1 - j2));
      }
}

// d/dtau sum_j c(j)|B_j|^2 = 2 Re sum_j c(j) conj(B_j) dB_j/dtau vanishes
// for c = 1 and c = j because the bracket c(k) - c(j1) + c(j2) - c(j3)
// cancels on every quadruple.
TEST(WeightedSums, MassAndMomentumAreStationary) {
  for (int N : {3, 8, 12}) {
    const CoefficientState s =
        CoefficientState::line(1.3 + N, N, random_values(std::size_t(2 * N + 1), 0.4, 200 + N));
    const std::vector<cplx> d = rhs(s);
    double mass = 0.0, momentum = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const double x = 2.0 * std::real(std::conj(s.values()[i]) * d[i]);
      mass += x;
      momentum += s.index(i) * x;
      scale += std::abs(s.index(i)) * std::abs(x) + std::abs(x);
    }
    EXPECT_LE(std::abs(mass), 1e-14 * scale) << N;
    EXPECT_LE(std::abs(momentum), 1e-14 * scale) << N;
  }
}

TEST(Rhs, BothEnginesMatchBruteForceLine) {
  for (int N = 0; N <= 4; ++N) {
    const CoefficientState s =
        CoefficientState::line(1.7, N, random_values(std::size_t(2 * N + 1), 0.5, 11 + N));
    const std::vector<cplx> naive = naive_line_rhs(s);
    EXPECT_LE(max_diff(rhs(s, RhsEngine::triad_table), naive), 1e-14) << N;
    EXPECT_LE(max_diff(rhs(s, RhsEngine::spectral), naive), 1e-14) << N;
  }
}

TEST(Rhs, PeriodicMatchesBruteForceOddM) {
  for (int M : {1, 3, 5, 7}) {
    const CoefficientState s =
        CoefficientState::periodic(2.3, M, random_values(std::size_t(M), 0.4, 40 + M));
    EXPECT_LE(max_diff(rhs(s), naive_periodic_rhs(s)), 1e-14) << M;
  }
}

TEST(Rhs, SpectralEngineRejectsPeriodic) {
  const CoefficientState s = CoefficientState::periodic(1.0, 3, random_values(3, 0.3, 1));
  EXPECT_THROW(rhs(s, RhsEngine::spectral), ValidationError);
}

TEST(Rhs, SpectralMatchesTriadsOnWiderWindow) {
  const CoefficientState s = CoefficientState::line(5.5, 12, random_values(25, 0.2, 5));
  EXPECT_LE(max_diff(rhs(s, RhsEngine::triad_table), rhs(s, RhsEngine::spectral)), 1e-13);
}

TEST(Conservation, LineInvariantsHold) {
  const CoefficientState s = CoefficientState::line(1.0, 6, random_values(13, 0.3, 77));
  IntegratorOptions opt;
  opt.tol = 1e-11;
  const IntegrationResult r = integrate(s, 10.0, opt);
  EXPECT_LE(r.cl1_drift(), 1e-9 * r.start.cl1);
  EXPECT_LE(r.cl2_drift(), 1e-9 * r.start.cl1);
  EXPECT_NEAR(*r.end.moment2, *r.start.moment2, 0.5 * *r.start.moment2 + 1.0);
}

TEST(Conservation, PeriodicMassHoldsForEvenAndOddM) {
  for (int M : {2, 4, 5, 8}) {
    const CoefficientState s =
        CoefficientState::periodic(1.0, M, random_values(std::size_t(M), 0.3, 100 + M));
    const IntegrationResult r = integrate(s, 10.0);
    EXPECT_LE(r.cl3_drift(), 1e-9 * *r.start.cl3) << M;
  }
}

TEST(ConstantSolution, ModulusStaysConstant) {
  for (int M : {3, 5, 6}) {
    const double c = polygon_c(M);
    const CoefficientState s = CoefficientState::constant_periodic(1.0, M, c);
    const IntegrationResult r = integrate(s, 100.0);
    for (const cplx& b : r.state.values()) EXPECT_NEAR(std::abs(b), c, 1e-9) << M;
  }
}

TEST(Energy, CenteredDifferenceConvergesToFlux) {
  const CoefficientState s = CoefficientState::line(2.0, 4, random_values(9, 0.3, 9));
  const CoefficientSystem sys(s);
  IntegratorOptions opt;
  opt.tol = 1e-13;
  const double tau = 3.0;
  const CoefficientState mid = integrate(sys, s, tau, opt).state;
  const double flux = energy_flux(mid);
  std::vector<double> errs;
  for (double h : {0.02, 0.01, 0.005}) {
    const double ep = energy_E(integrate(sys, mid, tau + h, opt).state);
    const double em = energy_E(integrate(sys, mid, tau - h, opt).state);
    errs.push_back(std::abs((ep - em) / (2 * h) - flux));
  }
  EXPECT_GE(std::log2(errs[0] / errs[1]), 1.9);
  EXPECT_GE(std::log2(errs[1] / errs[2]), 1.9);
}

TEST(Energy, RejectsPeriodic) {
  const CoefficientState s = CoefficientState::constant_periodic(1.0, 3, 0.5);
  EXPECT_THROW(energy_E(s), ValidationError);
}

TEST(Conversion, BFromAExample) {
  LineData a;
  a.coeffs[2] = imag_unit;
  const CoefficientState b = b_from_a(a, 1.0, 2);
  // conj(i) e^{-i 4/4} = -i e^{-i}
  const cplx expected = -imag_unit * expi(-1.0);
  EXPECT_NEAR(std::abs(b(2) - expected), 0.0, 1e-15);
  EXPECT_NEAR(b.tau(), 1.0, 0.0);
}

TEST(Conversion, RoundTrip) {
  LineData a;
  const auto v = random_values(7, 1.0, 3);
  for (int j = -3; j <= 3; ++j) a.coeffs[j] = v[std::size_t(j + 3)];
  const LineData back = a_from_b(b_from_a(a, 0.37));
  for (int j = -3; j <= 3; ++j) EXPECT_NEAR(std::abs(back(j) - a(j)), 0.0, 1e-15);
  const LineData amp = amplitudes(system_state(a, 0.37, 3));
  for (int j = -3; j <= 3; ++j) EXPECT_EQ(amp(j), a(j));
  EXPECT_DOUBLE_EQ(physical_time(system_time(0.37)), 0.37);
}

TEST(Conversion, RejectsNonPositiveTime) {
  LineData a;
  a.coeffs[0] = 1.0;
  EXPECT_THROW(b_from_a(a, 0.0), ValidationError);
  EXPECT_THROW(b_from_a(a, -1.0), ValidationError);
}

TEST(LogPhase, ConventionsDiffer) {
  LineData a;
  a.coeffs[0] = 0.5;
  a.coeffs[1] = 0.2;
  const LineData p3 = log_phase_coefficients(a, 0.1, LogPhaseConvention::self_phase);
  const LineData p5 = log_phase_coefficients(a, 0.1, LogPhaseConvention::mass_corrected);
  EXPECT_NEAR(std::abs(p3(0)), 0.5, 1e-15);
  EXPECT_NEAR(std::abs(p5(1)), 0.2, 1e-15);
  EXPECT_GT(std::abs(p3(0) - p5(0)), 1e-3);
}

// The field built from the system at sigma = 1/(4t) solves
// u_t = i(u_xx + |u|^2 u) up to the cubic terms the window drops.
TEST(Bridge, FieldSolvesFocusingNls) {
  std::vector<cplx> v = {{0.3, 0.1}, {0.5, 0}, {0.2, -0.3}, {0.4, 0.2}, {0.1, 0.1}};
  const int N = 2;
  const double t = 0.1, x = 0.37, h = 1e-3, k = 1e-4;
  const CoefficientState s0 = CoefficientState::line(system_time(t), N, v);
  IntegratorOptions opt;
  opt.tol = 1e-13;
  auto state_at = [&](double tt) { return integrate(s0, system_time(tt), opt).state; };
  auto u_at = [&](double xx, double tt) { return u_from_state(field_state(state_at(tt)), xx); };
  const cplx u = u_at(x, t);
  const cplx ut = (u_at(x, t + k) - u_at(x, t - k)) / (2 * k);
  const cplx uxx = (u_at(x + h, t) - 2.0 * u + u_at(x - h, t)) / (h * h);

  const CoefficientState A = state_at(t);
  cplx dropped = 0.0;
  for (int m = -3 * N; m <= 3 * N; ++m) {
    if (std::abs(m) <= N) continue;
    cplx acc = 0.0;
    for (int j1 = -N; j1 <= N; ++j1)
      for (int j2 = -N; j2 <= N; ++j2) {
        const int j3 = m - j1 + j2;
        if (std::abs(j3) > N) continue;
        acc += expi(-double(resonance_weight(m, j1, j2)) / (4 * t)) * A(j1) * std::conj(A(j2)) * A(j3);
      }
    dropped += acc / t * std::pow(imag_unit * t, -0.5) * expi((x - m) * (x - m) / (4 * t));
  }
  const cplx focusing = ut - imag_unit * (uxx + std::norm(u) * u);
  const cplx defocusing = ut - imag_unit * (uxx - std::norm(u) * u);
  EXPECT_LT(std::abs(focusing + imag_unit * dropped), 1e-2);
  EXPECT_GT(std::abs(defocusing), 100 * std::abs(focusing + imag_unit * dropped));
}

TEST(Remainder, ScalesCubicallyInTheData) {
  std::vector<double> rem;
  for (double scale : {0.1, 0.05}) {
    LineData a;
    a.coeffs[-1] = 0.7 * scale;
    a.coeffs[0] = cplx(0.4, 0.2) * scale;
    a.coeffs[1] = 0.7 * scale;
    const CoefficientState s = state_from_data(a, 1e-3, 6);
    const CoefficientState e = integrate(s, system_time(0.1)).state;
    const LineData r = remainder_from_state(e, a);
    double m = 0.0;
    for (const auto& [j, c] : r.coeffs) m = std::max(m, std::abs(c));
    rem.push_back(m);
  }
  EXPECT_NEAR(std::log2(rem[0] / rem[1]), 3.0, 0.3);
}
