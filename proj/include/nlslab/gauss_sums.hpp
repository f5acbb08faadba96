#ifndef NLSLAB_GAUSS_SUMS_HPP
#define NLSLAB_GAUSS_SUMS_HPP

#include <cstdint>

#include "nlslab/common.hpp"

namespace nlslab {

/// Quadratic Gauss sum G(a,b,c) = sum_{l=0}^{c-1} exp(2 pi i (a l^2 + b l) / c).
struct GaussSumParams {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t c = 1;
};

/// Upper bound on the modulus accepted by gauss_sum; the sum is O(c).
inline constexpr std::int64_t kDefaultGaussSumBound = 10'000'000;

/// Direct summation with exact integer reduction of the exponent and
/// Neumaier-compensated accumulation. Because the exponent is reduced modulo
/// c before any floating point is involved, G(a+c,b,c) and G(a,b+c,c) are
/// bit-identical to G(a,b,c), and G(-a,-b,c) is the exact conjugate.
cplx gauss_sum(const GaussSumParams& params,
               std::int64_t max_modulus = kDefaultGaussSumBound);

/// theta in (-pi, pi] with G(-p, m, q) = sqrt(q) e^{i theta}.
/// Requires q odd and gcd(p, q) = 1.
double gauss_phase(std::int64_t p, std::int64_t m, std::int64_t q);

std::int64_t gcd(std::int64_t a, std::int64_t b);

/// Reduces a into [0, m).
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// Maps an angle to (-pi, pi].
double wrap_angle(double theta);

}  // namespace nlslab

#endif  // NLSLAB_GAUSS_SUMS_HPP
