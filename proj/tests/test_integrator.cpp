#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "nlslab/integrator.hpp"

using namespace nlslab;

namespace {

CoefficientState random_line(double tau, int N, double amp, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-amp, amp);
  std::vector<cplx> v(std::size_t(2 * N + 1));
  for (auto& c : v) c = {u(rng), u(rng)};
  return CoefficientState::line(tau, N, v);
}

double max_diff(const CoefficientState& a, const CoefficientState& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a.values()[i] - b.values()[i]));
  return d;
}

// Data on |j| <= 3 inside a window of 16: the regime the split-step path
// is meant for.
CoefficientState concentrated(double tau, double amp, unsigned seed) {
  const CoefficientState small = random_line(tau, 3, amp, seed);
  std::map<int, cplx> m;
  for (int j = -3; j <= 3; ++j) m[j] = small(j);
  return CoefficientState::line(tau, 16, m);
}

}  // namespace

TEST(Integrator, ForwardThenBackwardReturns) {
  const CoefficientState s = random_line(1.0, 5, 0.3, 4);
  const CoefficientState f = integrate(s, 7.0).state;
  EXPECT_DOUBLE_EQ(f.tau(), 7.0);
  const CoefficientState b = integrate(f, 1.0).state;
  EXPECT_LE(max_diff(s, b), 1e-8);
}

TEST(Integrator, ToleranceControlsError) {
  const CoefficientState s = random_line(1.0, 4, 0.5, 8);
  IntegratorOptions ref;
  ref.tol = 1e-13;
  const CoefficientState exact = integrate(s, 5.0, ref).state;
  IntegratorOptions loose;
  loose.tol = 1e-6;
  const double e_loose = max_diff(integrate(s, 5.0, loose).state, exact);
  loose.tol = 1e-10;
  const double e_tight = max_diff(integrate(s, 5.0, loose).state, exact);
  EXPECT_LT(e_tight, e_loose);
  EXPECT_LT(e_tight, 1e-8);
}

TEST(Integrator, SnapshotsMatchSeparateRuns) {
  const CoefficientState s = random_line(1.0, 3, 0.3, 12);
  const CoefficientSystem sys(s);
  const std::vector<double> taus = {2.0, 3.0, 5.0};
  const auto snaps = integrate_snapshots(sys, s, taus);
  ASSERT_EQ(snaps.size(), 3u);
  for (std::size_t i = 0; i < taus.size(); ++i) {
    EXPECT_DOUBLE_EQ(snaps[i].tau(), taus[i]);
    EXPECT_LE(max_diff(snaps[i], integrate(sys, s, taus[i]).state), 1e-8);
  }
}

TEST(Integrator, StepBudgetFailureCarriesLastGoodState) {
  const CoefficientState s = random_line(1.0, 3, 0.3, 2);
  IntegratorOptions opt;
  opt.max_steps = 3;
  try {
    integrate(s, 50.0, opt);
    FAIL() << "expected IntegrationError";
  } catch (const IntegrationError& e) {
    EXPECT_GT(e.last_good().tau(), 1.0);
    EXPECT_LT(e.last_good().tau(), 50.0);
    EXPECT_TRUE(e.last_good().same_layout(s));
  }
}

TEST(Integrator, RejectsNonPositiveTau) {
  const CoefficientState s = random_line(1.0, 2, 0.3, 1);
  EXPECT_THROW(integrate(s, 0.0), ValidationError);
  EXPECT_THROW(integrate(s, -2.0), ValidationError);
}

TEST(SplitStep, AgreesWithRk4) {
  const CoefficientState s = concentrated(20.0, 0.05, 21);
  IntegratorOptions ref;
  ref.tol = 1e-13;
  const CoefficientState a = integrate(s, 30.0, ref).state;
  SplitStepOptions opt;
  opt.dtau = 0.01;
  const CoefficientState b = integrate_split_step(s, 30.0, opt).state;
  EXPECT_LE(max_diff(a, b), 1e-10);
}

TEST(SplitStep, FourthOrderBeatsStrang) {
  const CoefficientState s = concentrated(5.0, 0.1, 33);
  IntegratorOptions ref;
  ref.tol = 1e-13;
  const CoefficientState exact = integrate(s, 8.0, ref).state;
  SplitStepOptions o2{0.05, 2};
  SplitStepOptions o4{0.05, 4};
  EXPECT_LT(max_diff(integrate_split_step(s, 8.0, o4).state, exact),
            max_diff(integrate_split_step(s, 8.0, o2).state, exact));
}

TEST(SplitStep, MassLossStaysSmallForConcentratedData) {
  const CoefficientState s = concentrated(2.0, 0.1, 7);
  const IntegrationResult r = integrate_split_step(s, 12.0, {0.05, 4});
  EXPECT_LE(r.cl1_drift(), 1e-10 * r.start.cl1);
}
