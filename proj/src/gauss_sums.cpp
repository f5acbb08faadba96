#include "nlslab/gauss_sums.hpp"

#include <cmath>
#include <numeric>
#include <string>

namespace nlslab {

namespace {

// Neumaier variant of Kahan summation.
class CompensatedSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x))
      comp_ += (sum_ - t) + x;
    else
      comp_ += (x - t) + sum_;
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

__extension__ typedef __int128 wide_int;

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<wide_int>(a) * b % m);
}

}  // namespace

std::int64_t gcd(std::int64_t a, std::int64_t b) {
  return std::gcd(a, b);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

double wrap_angle(double theta) {
  double r = std::remainder(theta, two_pi);
  if (r <= -pi) r += two_pi;
  return r;
}

cplx gauss_sum(const GaussSumParams& params, std::int64_t max_modulus) {
  const std::int64_t c = params.c;
  if (c < 1) throw ValidationError("gauss_sum: modulus c must be >= 1, got " + std::to_string(c));
  if (c > max_modulus)
    throw ValidationError("gauss_sum: modulus " + std::to_string(c) +
                          " exceeds the summation bound " + std::to_string(max_modulus));

  const std::int64_t a = mod_floor(params.a, c);
  const std::int64_t b = mod_floor(params.b, c);
  CompensatedSum re, im;
  for (std::int64_t l = 0; l < c; ++l) {
    const std::int64_t quad = mul_mod(a, mul_mod(l, l, c), c);
    std::int64_t r = (quad + mul_mod(b, l, c)) % c;
    // symmetric residue in (-c/2, c/2] so that negated exponents give
    // exactly negated angles
    if (2 * r > c) r -= c;
    const double angle = two_pi * static_cast<double>(r) / static_cast<double>(c);
    re.add(std::cos(angle));
    im.add(std::sin(angle));
  }
  return {re.value(), im.value()};
}

double gauss_phase(std::int64_t p, std::int64_t m, std::int64_t q) {
  if (q < 1 || q % 2 == 0)
    throw ValidationError("gauss_phase: q must be a positive odd integer, got " + std::to_string(q));
  if (gcd(p, q) != 1)
    throw ValidationError("gauss_phase: gcd(p, q) must be 1 (p=" + std::to_string(p) +
                          ", q=" + std::to_string(q) + ")");
  const cplx g = gauss_sum({-p, m, q});
  return wrap_angle(std::arg(g));
}

}  // namespace nlslab
