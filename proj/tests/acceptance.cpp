// Acceptance run: one PASS/FAIL line per criterion. Exits nonzero when any
// criterion fails; the numbers behind each verdict are printed beneath it.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "nlslab/cascade.hpp"
#include "nlslab/coeff_dynamics.hpp"
#include "nlslab/field_eval.hpp"
#include "nlslab/frame_flow.hpp"
#include "nlslab/gauss_sums.hpp"
#include "nlslab/integrator.hpp"
#include "nlslab/linear_talbot.hpp"
#include "nlslab/rogue_experiment.hpp"

using namespace nlslab;

namespace {

int failures = 0;

void verdict(int id, bool ok, const std::string& title) {
  std::printf("%s %d: %s\n", ok ? "PASS" : "FAIL", id, title.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

void note(const char* fmt, double a = 0, double b = 0, double c = 0, double d = 0) {
  std::printf("    ");
  std::printf(fmt, a, b, c, d);
  std::printf("\n");
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::vector<cplx> random_values(std::size_t n, double amp, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-amp, amp);
  std::vector<cplx> v(n);
  for (auto& c : v) c = {u(rng), u(rng)};
  return v;
}

PeriodicSpectrum bump_for(std::int64_t p, std::int64_t q) {
  RogueConfig cfg;
  cfg.p = p;
  cfg.q = q;
  return build_bump_coefficients(cfg, suggest_bump_truncation(cfg));
}

// 1 ---------------------------------------------------------------------------
void gauss_magnitude() {
  Stopwatch sw;
  double worst = 0.0;
  long count = 0;
  for (std::int64_t q = 1; q <= 199; q += 2) {
    const double root = std::sqrt(double(q));
    for (std::int64_t p = 1; p <= q; ++p) {
      if (gcd(p, q) != 1) continue;
      for (std::int64_t m = 0; m < q; ++m) {
        worst = std::max(worst, std::abs(std::abs(gauss_sum({-p, m, q})) - root) / root);
        ++count;
      }
    }
  }
  verdict(1, worst <= 1e-10, "Gauss sum modulus sqrt(q) for odd q <= 199");
  note("%.0f sums, worst relative deviation %.3g, %.1f s", double(count), worst, sw.seconds());
}

// 2 ---------------------------------------------------------------------------
void talbot_closed_form() {
  bool ok = true;
  for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 3}, {4, 5}, {25, 27}}) {
    const PeriodicSpectrum spec = bump_for(p, q);
    const RationalTime t(p, q);
    const TalbotClosedForm closed(spec, t, 0.1);
    std::vector<double> xs(512);
    for (std::size_t i = 0; i < xs.size(); ++i) xs[i] = double(i) / 512.0;
    const std::vector<double> oracle = linear_evolve_modulus(spec, t, xs);
    double peak = 0.0, err = 0.0, zero = 0.0, period = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      peak = std::max(peak, oracle[i]);
      err = std::max(err, std::abs(closed(xs[i]) - oracle[i]));
      if (lattice_distance(xs[i], q) > 0.2 / q) zero = std::max(zero, oracle[i]);
      const double shifted = std::abs(linear_evolve_direct(spec, t, xs[i] + 1.0 / q));
      period = std::max(period, std::abs(shifted - oracle[i]));
    }
    const bool here = err <= 1e-6 * peak && zero <= 1e-10 * peak && period <= 1e-8;
    ok = ok && here;
    note("(p,q)=(%.0f,%.0f): modulus error/peak %.3g, zero region/peak %.3g", p, q, err / peak,
         zero / peak);
    note("            1/q periodicity defect %.3g", period);
  }
  verdict(2, ok, "Talbot closed form against direct summation");
}

// 3 ---------------------------------------------------------------------------
void conservation() {
  Stopwatch sw;
  std::mt19937_64 rng(2024);
  IntegratorOptions opt;
  opt.tol = 1e-10;
  double worst_line = 0.0, worst_periodic = 0.0;
  const CoefficientSystem line_system(Mode::line, 16);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<cplx> v(33);
    const auto small = random_values(9, 0.1, rng);
    for (int j = -4; j <= 4; ++j) v[std::size_t(j + 16)] = small[std::size_t(j + 4)];
    const CoefficientState s = CoefficientState::line(1.0, 16, v);
    const IntegrationResult r = integrate(line_system, s, 10.0, opt);
    const double scale = r.start.cl1;
    worst_line = std::max({worst_line, r.cl1_drift() / scale, r.cl2_drift() / scale});
  }
  for (int trial = 0; trial < 10; ++trial) {
    const int M = 1 + trial % 8;
    const CoefficientState s =
        CoefficientState::periodic(1.0, M, random_values(std::size_t(M), 0.3, rng));
    const IntegrationResult r = integrate(s, 10.0, opt);
    worst_periodic = std::max(worst_periodic, r.cl3_drift() / *r.start.cl3);
  }
  verdict(3, worst_line <= 1e-8 && worst_periodic <= 1e-8, "conservation laws over tau in [1, 10]");
  note("line N=16: worst cl1/cl2 relative drift %.3g; periodic M<=8: worst cl3 drift %.3g", worst_line,
       worst_periodic);
  note("%.1f s", sw.seconds());
}

// 4 ---------------------------------------------------------------------------
void energy_law() {
  std::mt19937_64 rng(99);
  bool ok = true;
  for (int traj = 0; traj < 2; ++traj) {
    const int N = 4 + 2 * traj;
    const CoefficientState s =
        CoefficientState::line(2.0, N, random_values(std::size_t(2 * N + 1), 0.3, rng));
    const CoefficientSystem sys(s);
    IntegratorOptions opt;
    opt.tol = 1e-13;
    const double tau = 3.0 + traj;
    const CoefficientState mid = integrate(sys, s, tau, opt).state;
    const double flux = energy_flux(mid);
    std::vector<double> errs;
    for (double h : {0.02, 0.01, 0.005, 0.0025}) {
      const double ep = energy_E(integrate(sys, mid, tau + h, opt).state);
      const double em = energy_E(integrate(sys, mid, tau - h, opt).state);
      errs.push_back(std::abs((ep - em) / (2 * h) - flux));
    }
    double order = 1e9;
    for (std::size_t i = 0; i + 1 < errs.size(); ++i) order = std::min(order, std::log2(errs[i] / errs[i + 1]));
    ok = ok && order >= 1.9;
    note("trajectory %.0f: flux %.6g, centered-difference error %.3g (h=0.02) -> %.3g (h=0.0025)", traj, flux,
         errs.front(), errs.back());
    note("  worst observed order %.4f", order);
  }
  verdict(4, ok, "energy law dE/dtau against the flux formula");
}

// 5 ---------------------------------------------------------------------------
void constant_solution() {
  bool ok = true;
  for (int M : {3, 5, 6}) {
    const double c = polygon_c(M);
    const CoefficientState s = CoefficientState::constant_periodic(1.0, M, c);
    const CoefficientSystem sys(s);
    const std::vector<double> taus = {3.0, 10.0, 30.0, 100.0};
    double dev = 0.0;
    for (const CoefficientState& st : integrate_snapshots(sys, s, taus))
      for (const cplx& b : st.values()) dev = std::max(dev, std::abs(std::abs(b) - c));
    ok = ok && dev <= 1e-8;
    note("M=%.0f: c_M=%.10f, max ||B_j|-c_M| over tau in [1,100] = %.3g", M, c, dev);
  }
  verdict(5, ok, "explicit constant solution keeps its modulus");
}

// 6 ---------------------------------------------------------------------------
void brute_force_rhs() {
  std::mt19937_64 rng(6);
  double worst = 0.0;
  for (int N = 0; N <= 4; ++N) {
    const CoefficientState s =
        CoefficientState::line(1.9, N, random_values(std::size_t(2 * N + 1), 0.5, rng));
    const double tau = s.tau();
    std::vector<cplx> naive(s.size());
    for (int k = -N; k <= N; ++k) {
      cplx res = 0.0, nonres = 0.0;
      for (int j1 = -N; j1 <= N; ++j1)
        for (int j2 = -N; j2 <= N; ++j2)
          for (int j3 = -N; j3 <= N; ++j3) {
            if (k - j1 + j2 - j3 != 0) continue;
            const long w = long(k) * k - long(j1) * j1 + long(j2) * j2 - long(j3) * j3;
            const cplx term = s(j1) * std::conj(s(j2)) * s(j3);
            if (w == 0)
              res += term;
            else
              nonres += expi(-tau * double(w)) * term;
          }
      naive[s.slot(k)] = -imag_unit * (nonres + res) / tau;
    }
    for (RhsEngine e : {RhsEngine::triad_table, RhsEngine::spectral}) {
      const std::vector<cplx> fast = rhs(s, e);
      for (std::size_t i = 0; i < fast.size(); ++i) worst = std::max(worst, std::abs(fast[i] - naive[i]));
    }
  }
  verdict(6, worst <= 1e-14, "coefficient rhs against the naive quadruple loop, N <= 4");
  note("max abs difference (both engines) %.3g", worst);
}

// 7 ---------------------------------------------------------------------------
void frame_geometry() {
  // orthonormality over 1e4 steps
  const std::size_t n = 10001;
  const double h = 1e-3;
  std::vector<cplx> u(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -5.0 + double(i) * h;
    u[i] = cplx(std::cos(3 * x) + 0.5, std::sin(x * x));
  }
  const double ortho = transport_x(u, -5.0, h, Frame{}).max_orthonormality_defect();

  // circle of curvature 2
  auto circle = [](std::size_t m) {
    const double kappa = 2.0, hh = 2.0 / double(m - 1);
    const std::vector<cplx> v(m, cplx(kappa, 0.0));
    const Curve c = curve_from_tangent(transport_x(v, 0.0, hh, Frame{}));
    double err = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      const double s = double(i) * hh;
      const Vec3 exact(std::sin(kappa * s) / kappa, (1 - std::cos(kappa * s)) / kappa, 0.0);
      err = std::max(err, (c.points[i] - exact).norm());
    }
    return err;
  };
  const double e1 = circle(101), e2 = circle(201), e3 = circle(401);
  const double order = std::min(std::log2(e1 / e2), std::log2(e2 / e3));

  bool corners = true;
  for (double theta : {pi / 3, pi / 4}) {
    const double c0 = c_from_angle(theta), t = 1e-3;
    const std::size_t m = 160001;
    const double x0 = -2.0, hh = 4.0 / double(m - 1);
    std::vector<cplx> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = self_similar(c0, x0 + double(i) * hh, t);
    const FrameField f = transport_x(v, x0, hh, Frame{}, t);
    const double measured = measure_corner(f).theta;
    const double rel = std::abs(measured - theta) / theta;
    corners = corners && rel <= 0.02;
    note("corner: target %.6f, measured %.6f, relative error %.3g", theta, measured, rel);
  }
  const bool ok = ortho <= 1e-12 && order >= 1.9 && corners;
  verdict(7, ok, "frame orthonormality, circle reconstruction order, corner angle");
  note("orthonormality defect over 1e4 steps %.3g; circle errors %.3g %.3g %.3g", ortho, e1, e2, e3);
  note("observed circle order %.4f", order);
}

// 8 ---------------------------------------------------------------------------
void cascade() {
  Stopwatch sw;
  LineData a;
  a.coeffs[-1] = 0.2;
  a.coeffs[1] = 0.2;
  const std::vector<double> ts = {0.2, 0.1, 0.05, 0.02, 0.01};
  const CascadeReport r = cascade_diagnostic(a, ts);
  bool monotone = true;
  for (std::size_t i = 0; i < r.rows.size(); ++i) {
    const CascadeRow& row = r.rows[i];
    note("t=%.3g: sup %.6g, linear part 4 pi |omega|^2 sup %.6g, half-window sup %.6g", row.t, row.sup,
         row.linear_sup, row.sup_half_window);
    if (i > 0 && row.sup < 0.95 * r.rows[i - 1].sup) monotone = false;
  }
  const bool significant = r.fit.slope > 0.0 && r.fit.slope >= 2.0 * r.fit.slope_stderr;
  verdict(8, monotone && significant, "cascade sup nondecreasing as t decreases, positive slope at 2 sigma");
  note("slope %.4g +- %.4g vs |log t|, worst dip %.1f%%", r.fit.slope, r.fit.slope_stderr, 100 * r.worst_dip);
  note("slope of sup minus its linear part %.4g +- %.4g", r.excess_fit.slope, r.excess_fit.slope_stderr);
  note("The sup follows the frozen-frame term 4 pi |omega|^2 = 16 pi a^2 cos^2(xi), which oscillates as");
  note("the balls move with 1/t; over this t range that oscillation outweighs any growth. (%.0f s)",
       sw.seconds());
}

// 9 ---------------------------------------------------------------------------
void rogue() {
  Stopwatch sw;
  const RogueConfig cfg;
  const PeriodicSpectrum alpha = build_bump_coefficients(cfg, suggest_bump_truncation(cfg));
  // the linear parts use the data as given; the nonlinear run rescales them
  const RogueReport lin = run_linear(cfg, alpha);
  NonlinearRunOptions opt;
  opt.tau_start_sensitivity = false;
  const NonlinearReport rep = run_nonlinear(cfg, alpha, opt);

  const double rel = std::abs(lin.amp_at_0_tpq - lin.predicted_amp_stated) / lin.predicted_amp_stated;
  const bool a_ok = rel <= 1e-6;
  const bool b_ok = lin.dichotomy_ratio >= 2.5;
  const bool c_ok = rep.nonlinear.dichotomy_ratio >= 2.5 && rep.relative_change_tpq <= 0.1 &&
                    rep.relative_change_tilde <= 0.1;
  verdict(9, a_ok && b_ok && c_ok, "rogue dichotomy for the default config (parts a, b, c)");

  std::printf("  %s 9a: amp_at_0_tpq = p^beta/sqrt(q) within 1e-6\n", a_ok ? "PASS" : "FAIL");
  note("measured %.10f, p^beta/sqrt(q) = %.10f, relative gap %.4g", lin.amp_at_0_tpq,
       lin.predicted_amp_stated, rel);
  note("kernel-corrected prediction sqrt(pi q)/p * p^beta = %.10f (gap %.3g); oracle agreement %.3g",
       lin.predicted_amp_kernel,
       std::abs(lin.amp_at_0_tpq - lin.predicted_amp_kernel) / lin.predicted_amp_kernel,
       lin.oracle_agreement);

  std::printf("  %s 9b: amp_at_0_tilde / amp_max_tpq >= 2.5\n", b_ok ? "PASS" : "FAIL");
  note("ratio %.6f (sqrt(q/q~) = %.6f)", lin.dichotomy_ratio, std::sqrt(double(cfg.q) / cfg.q_tilde));

  std::printf("  %s 9c: dichotomy persists nonlinearly with profile change <= 10%% at ||alpha||_1 = 0.05\n",
              c_ok ? "PASS" : "FAIL");
  note("scaled to ||alpha||_1 = %.3g: relative change %.3g at t_pq, %.3g at t~", rep.l1_norm,
       rep.relative_change_tpq, rep.relative_change_tilde);
  note("nonlinear ratio %.6f, max |R_k| %.3g", rep.nonlinear.dichotomy_ratio, rep.max_remainder);
  note("%.0f s", sw.seconds());
}

// 10 --------------------------------------------------------------------------
void riemann() {
  bool ok = true;
  for (std::int64_t K : {10, 100, 1000, 10000, 100000}) {
    const double err = std::abs(riemann_function(pi, K) - cplx(-pi * pi / 4, 0.0));
    ok = ok && err <= 2.0 / double(K);
    note("K=%.0f: |R_K(pi) + pi^2/4| = %.4g (bound %.4g)", double(K), err, 2.0 / double(K));
  }
  const double z0 = std::abs(riemann_function(0.0, 100000));
  const double z2 = std::abs(riemann_function(2 * pi, 100000));
  ok = ok && z0 <= 1e-14 && z2 <= 1e-14;
  note("|R(0)| = %.3g, |R(2 pi)| = %.3g", z0, z2);
  verdict(10, ok, "Riemann function partial sums");
}

}  // namespace

int main() {
  const std::vector<void (*)()> checks = {gauss_magnitude,   talbot_closed_form, conservation, energy_law,
                                          constant_solution, brute_force_rhs,    frame_geometry, cascade,
                                          rogue,             riemann};
  for (auto check : checks) {
    try {
      check();
    } catch (const std::exception& e) {
      std::printf("FAIL (exception: %s)\n", e.what());
      ++failures;
    }
  }
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
