#include "nlslab/coeff_state.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "nlslab/gauss_sums.hpp"

namespace nlslab {

CoefficientState::CoefficientState(Mode mode, double tau, int extent, std::vector<cplx> values)
    : mode_(mode), tau_(tau), extent_(extent), values_(std::move(values)) {
  require(tau > 0.0 && std::isfinite(tau), "CoefficientState: tau must be positive and finite");
}

CoefficientState CoefficientState::line(double tau, int truncation, std::vector<cplx> values) {
  require(truncation >= 0, "CoefficientState: truncation N must be >= 0");
  require(values.size() == static_cast<std::size_t>(2 * truncation + 1),
          "CoefficientState: line mode needs 2N+1 coefficients");
  return {Mode::line, tau, truncation, std::move(values)};
}

CoefficientState CoefficientState::line(double tau, int truncation,
                                        const std::map<int, cplx>& coeffs) {
  require(truncation >= 0, "CoefficientState: truncation N must be >= 0");
  std::vector<cplx> values(2 * truncation + 1);
  for (const auto& [j, c] : coeffs) {
    require(std::abs(j) <= truncation,
            "CoefficientState: index " + std::to_string(j) + " outside the window |j| <= " +
                std::to_string(truncation));
    values[j + truncation] = c;
  }
  return {Mode::line, tau, truncation, std::move(values)};
}

CoefficientState CoefficientState::periodic(double tau, int period, std::vector<cplx> values) {
  require(period >= 1, "CoefficientState: period M must be >= 1");
  require(values.size() == static_cast<std::size_t>(period),
          "CoefficientState: periodic mode stores exactly M coefficients");
  return {Mode::periodic, tau, period, std::move(values)};
}

CoefficientState CoefficientState::constant_periodic(double tau, int period, cplx c) {
  require(period >= 1, "CoefficientState: period M must be >= 1");
  return periodic(tau, period, std::vector<cplx>(period, c));
}

void CoefficientState::set_tau(double tau) {
  require(tau > 0.0 && std::isfinite(tau), "CoefficientState: tau must be positive and finite");
  tau_ = tau;
}

int CoefficientState::index(std::size_t slot) const {
  return mode_ == Mode::line ? static_cast<int>(slot) - extent_ : static_cast<int>(slot);
}

bool CoefficientState::in_window(int j) const {
  return mode_ == Mode::periodic || std::abs(j) <= extent_;
}

std::size_t CoefficientState::slot(int j) const {
  if (mode_ == Mode::periodic) return static_cast<std::size_t>(mod_floor(j, extent_));
  require(std::abs(j) <= extent_, "CoefficientState: index outside the line window");
  return static_cast<std::size_t>(j + extent_);
}

cplx CoefficientState::operator()(int j) const {
  if (!in_window(j)) return {};
  return values_[slot(j)];
}

cplx LineData::operator()(int j) const {
  const auto it = coeffs.find(j);
  return it == coeffs.end() ? cplx{} : it->second;
}

int LineData::max_index() const {
  int m = 0;
  for (const auto& [j, c] : coeffs) m = std::max(m, std::abs(j));
  return m;
}

double LineData::l1() const {
  double s = 0.0;
  for (const auto& [j, c] : coeffs) s += std::abs(c);
  return s;
}

double LineData::l2_squared() const {
  double s = 0.0;
  for (const auto& [j, c] : coeffs) s += std::norm(c);
  return s;
}

double LineData::l2s(double s) const {
  double acc = 0.0;
  for (const auto& [j, c] : coeffs)
    if (j != 0) acc += std::pow(std::abs(j), 2.0 * s) * std::norm(c);
  return std::sqrt(acc);
}

}  // namespace nlslab
