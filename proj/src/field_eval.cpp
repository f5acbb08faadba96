#include "nlslab/field_eval.hpp"

#include <cmath>
#include <map>

#include "nlslab/coeff_dynamics.hpp"
#include "nlslab/linear_talbot.hpp"

namespace nlslab {

namespace {

void require_line(const CoefficientState& state, const char* who) {
  require(state.mode() == Mode::line,
          std::string(who) + ": needs a line-mode state (finitely many coefficients)");
}

}  // namespace

cplx v_eval(const CoefficientState& state, double y) {
  cplx s{};
  for (std::size_t i = 0; i < state.size(); ++i)
    s += state.values()[i] * expi(static_cast<double>(state.index(i)) * y);
  return s;
}

cplx u_from_state(const CoefficientState& state, double x) {
  require_line(state, "u_from_state");
  const double tau = state.tau();
  const double t = 1.0 / tau;
  const cplx prefactor = expi(-pi / 4.0) / std::sqrt(t) * expi(x * x * tau / 4.0);
  return prefactor * std::conj(v_eval(state, x * tau / 2.0));
}

cplx u_from_state_direct(const CoefficientState& state, double x) {
  require_line(state, "u_from_state_direct");
  const double t = 1.0 / state.tau();
  const LineData a = a_from_b(state);
  cplx s{};
  for (const auto& [j, aj] : a.coeffs) s += aj * free_propagator_delta(x, t, j);
  return s;
}

std::vector<FieldSample> u_on_grid(const CoefficientState& state, std::span<const double> xs) {
  std::vector<FieldSample> out;
  out.reserve(xs.size());
  const double t = 1.0 / state.tau();
  for (double x : xs) out.push_back({x, t, u_from_state(state, x)});
  return out;
}

cplx omega_eval(const CoefficientState& state, double xi) {
  require_line(state, "omega_eval");
  cplx s{};
  for (const auto& [j, aj] : a_from_b(state).coeffs) s += aj * expi(static_cast<double>(j) * xi);
  return s;
}

cplx u_M_eval(double c, double x, double t, std::int64_t K) {
  require(K >= 0, "u_M_eval: K must be nonnegative");
  cplx s{};
  for (std::int64_t k = -K; k <= K; ++k) {
    const double kd = static_cast<double>(k);
    s += expi(t * kd * kd + kd * x);
  }
  return c * s;
}

cplx self_similar(double c0, double x, double t) {
  require(t > 0.0, "self_similar: t must be positive");
  return c0 / std::sqrt(t) * expi(x * x / (4.0 * t));
}

cplx self_similar_rescaled(double c0, double lambda, double x, double t) {
  require(lambda > 0.0, "self_similar_rescaled: lambda must be positive");
  return lambda * self_similar(c0, lambda * x, lambda * lambda * t);
}

CoefficientState galilean_boost(const CoefficientState& state, double nu) {
  require_line(state, "galilean_boost");
  CoefficientState out = state;
  for (std::size_t i = 0; i < out.size(); ++i)
    out.values()[i] *= expi(-nu * static_cast<double>(out.index(i)));
  return out;
}

CoefficientState shift_coefficients(const CoefficientState& state, int shift) {
  require_line(state, "shift_coefficients");
  std::map<int, cplx> moved;
  for (std::size_t i = 0; i < state.size(); ++i) moved[state.index(i) + shift] = state.values()[i];
  return CoefficientState::line(state.tau(), state.extent() + std::abs(shift), moved);
}

double c_from_angle(double theta) {
  require(theta > 0.0 && theta <= pi / 2.0, "c_from_angle: theta must lie in (0, pi/2]");
  const double s = std::sin(theta);
  if (s >= 1.0) return 0.0;
  return std::sqrt(-(2.0 / pi) * std::log(s));
}

double angle_from_c(double c) {
  require(std::isfinite(c), "angle_from_c: c must be finite");
  const double s = std::exp(-pi * c * c / 2.0);
  require(s > 0.0, "angle_from_c: c too large, the angle underflows");
  return std::asin(s);
}

double polygon_c(int M) {
  require(M >= 3, "polygon_c: M must be at least 3");
  const double s = std::sin(two_pi / M);
  require(s > 0.0 && s <= 1.0, "polygon_c: sin(2 pi / M) must lie in (0, 1]");
  if (s >= 1.0) return 0.0;
  return std::sqrt(-(2.0 / pi) * std::log(s));
}

}  // namespace nlslab
