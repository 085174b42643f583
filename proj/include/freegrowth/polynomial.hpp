// Exact-rational growth formulas: polynomials in the rank r with zero
// constant term, and exponential forms sum_j beta_j * j^r.

#ifndef FREEGROWTH_POLYNOMIAL_HPP_
#define FREEGROWTH_POLYNOMIAL_HPP_

#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "freegrowth/arith.hpp"

namespace freegrowth {

  class GrowthPolynomial {
   public:
    GrowthPolynomial() = default;

    // coefficients[j - 1] multiplies r^j; there is no constant term.
    explicit GrowthPolynomial(std::vector<Rational> coefficients);

    std::vector<Rational> const& coefficients() const noexcept {
      return _coeffs;
    }

    // Coefficient of r^j (zero for j = 0 or beyond the degree).
    Rational coefficient(std::size_t j) const;

    // Highest power with a non-zero coefficient; 0 for the zero polynomial.
    std::size_t degree() const noexcept;

    Rational leading_coefficient() const;

    // Throws InternalError if the value is not an integer.
    BigInt evaluate(BigInt const& r) const;

    // "7/2 r^2 - 3/2 r"
    std::string to_string() const;

    friend bool operator==(GrowthPolynomial const& a, GrowthPolynomial const& b);

   private:
    std::vector<Rational> _coeffs;
  };

  class ExponentialForm {
   public:
    ExponentialForm() = default;

    // betas[j - 1] multiplies j^r.
    explicit ExponentialForm(std::vector<Rational> betas);

    std::vector<Rational> const& betas() const noexcept {
      return _betas;
    }

    Rational beta(std::size_t j) const;

    // Throws InternalError if the value is not an integer.
    BigInt evaluate(std::size_t r) const;

    // "113/6*3^r - 38*2^r + 45/2"
    std::string to_string() const;

    friend bool operator==(ExponentialForm const&, ExponentialForm const&) = default;

   private:
    std::vector<Rational> _betas;
  };

  // Sum over k of c[k] / k! * r (r - 1) ... (r - k + 1), expanded in powers of
  // r with signed Stirling numbers of the first kind; c[0] must be zero.
  GrowthPolynomial polynomial_from_falling_factorials(std::vector<BigInt> const& c);

  // The unique polynomial of degree <= n through (0, 0) and (r, samples[r-1])
  // for r = 1..n, with n = samples.size().
  GrowthPolynomial interpolate_polynomial(std::vector<BigInt> const& samples);

}  // namespace freegrowth

#endif  // FREEGROWTH_POLYNOMIAL_HPP_
