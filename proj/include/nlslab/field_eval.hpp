#ifndef NLSLAB_FIELD_EVAL_HPP
#define NLSLAB_FIELD_EVAL_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "nlslab/coeff_state.hpp"
#include "nlslab/common.hpp"

namespace nlslab {

struct FieldSample {
  double x = 0.0;
  double t = 0.0;
  cplx value{};
};

/// V(y) = sum_j B_j e^{ijy} by direct summation.
cplx v_eval(const CoefficientState& state, double y);

/// u(x, t) = (it)^{-1/2} e^{i x^2/4t} conj(V)(x/2t, 1/t) with t = 1/tau.
/// Line mode only: a periodic state stands for infinitely many coefficients.
cplx u_from_state(const CoefficientState& state, double x);

/// The same field assembled as sum_j A_j(t) e^{it d_xx} delta_j (x), with A_j
/// from a_from_b; an independent evaluation route.
cplx u_from_state_direct(const CoefficientState& state, double x);

std::vector<FieldSample> u_on_grid(const CoefficientState& state, std::span<const double> xs);

/// omega(xi, t) = sum_j A_j(t) e^{ij xi}. Line mode only.
cplx omega_eval(const CoefficientState& state, double xi);

/// c sum_{|k| <= K} e^{itk^2 + ikx}.
cplx u_M_eval(double c, double x, double t, std::int64_t K);

/// c0 t^{-1/2} e^{i x^2/4t}.
cplx self_similar(double c0, double x, double t);

/// lambda * u(lambda x, lambda^2 t) for the self-similar family.
cplx self_similar_rescaled(double c0, double lambda, double x, double t);

/// Galilean boost of the coefficient picture: A_j -> A_j e^{i nu j}, which
/// is B_j -> B_j e^{-i nu j}. The boosted field satisfies
/// |u_nu(x, t)| = |u(x - 2 nu t, t)|.
CoefficientState galilean_boost(const CoefficientState& state, double nu);

/// B_j -> B_{j - shift}; the window grows so no coefficient is dropped.
/// |u| is unchanged since V picks up the unimodular factor e^{i shift y}.
CoefficientState shift_coefficients(const CoefficientState& state, int shift);

/// c = sqrt(-(2/pi) ln sin theta) for theta in (0, pi/2].
double c_from_angle(double theta);
/// theta = asin(e^{-pi c^2 / 2}) in (0, pi/2].
double angle_from_c(double c);
/// c with sin(2 pi / M) = e^{-pi c^2 / 2}; needs sin(2 pi/M) > 0, i.e. M >= 3.
double polygon_c(int M);

}  // namespace nlslab

#endif  // NLSLAB_FIELD_EVAL_HPP
