#ifndef NLSLAB_COEFF_STATE_HPP
#define NLSLAB_COEFF_STATE_HPP

#include <cstddef>
#include <map>
#include <span>
#include <vector>

#include "nlslab/common.hpp"

namespace nlslab {

enum class Mode { line, periodic };

/// Fourier coefficients B_j of V(y, tau) = sum_j B_j e^{ijy} at slow time
/// tau = 1/t.
///
/// Line mode stores the window |j| <= N (slot j + N). Periodic mode stores one
/// period j = 0..M-1 and represents B_{j+M} = B_j; the periodic layout makes
/// that identity hold by construction for every stored state.
class CoefficientState {
 public:
  static CoefficientState line(double tau, int truncation, std::vector<cplx> values);
  static CoefficientState line(double tau, int truncation, const std::map<int, cplx>& coeffs);
  static CoefficientState periodic(double tau, int period, std::vector<cplx> values);
  /// Every coefficient equal to c (the explicit constant solution).
  static CoefficientState constant_periodic(double tau, int period, cplx c);

  double tau() const { return tau_; }
  void set_tau(double tau);
  Mode mode() const { return mode_; }
  /// N in line mode, M in periodic mode.
  int extent() const { return extent_; }
  std::size_t size() const { return values_.size(); }

  /// Integer index j held in a storage slot.
  int index(std::size_t slot) const;
  /// Storage slot of B_j; periodic indices wrap, line indices must be inside the window.
  std::size_t slot(int j) const;
  bool in_window(int j) const;
  /// B_j, zero outside the line window.
  cplx operator()(int j) const;

  std::span<const cplx> values() const { return values_; }
  std::span<cplx> values() { return values_; }

  bool same_layout(const CoefficientState& other) const {
    return mode_ == other.mode_ && extent_ == other.extent_;
  }
  bool operator==(const CoefficientState&) const = default;

 private:
  CoefficientState(Mode mode, double tau, int extent, std::vector<cplx> values);

  Mode mode_ = Mode::line;
  double tau_ = 1.0;
  int extent_ = 0;
  std::vector<cplx> values_;
};

/// The t -> 0 coefficient data a_j of the ansatz A_j(t) = a_j + R_j(t).
struct LineData {
  std::map<int, cplx> coeffs;

  cplx operator()(int j) const;
  int max_index() const;
  double l1() const;
  double l2_squared() const;
  /// Homogeneous weighted norm (sum_j |j|^{2s} |a_j|^2)^{1/2}.
  double l2s(double s) const;
};

}  // namespace nlslab

#endif  // NLSLAB_COEFF_STATE_HPP
