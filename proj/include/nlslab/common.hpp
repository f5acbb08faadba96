#ifndef NLSLAB_COMMON_HPP
#define NLSLAB_COMMON_HPP

#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace nlslab {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr double two_pi = 2.0 * std::numbers::pi;
inline constexpr cplx imag_unit{0.0, 1.0};

/// A caller-supplied value violates an operation's precondition.
/// Maps to exit status 2 in the command-line driver.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numerical procedure could not reach the requested accuracy.
/// Maps to exit status 3 in the command-line driver.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& what) {
  if (!cond) throw ValidationError(what);
}

/// exp(i*phase) with the phase given in radians.
inline cplx expi(double phase) { return {std::cos(phase), std::sin(phase)}; }

}  // namespace nlslab

#endif  // NLSLAB_COMMON_HPP
