#include "freegrowth/polynomial.hpp"

#include "freegrowth/errors.hpp"

namespace freegrowth {

  namespace {
    void trim_zeros(std::vector<Rational>& v) {
      while (!v.empty() && v.back() == 0) {
        v.pop_back();
      }
    }

    // Appends " + 7/2 r^2"-style terms: sign handling shared by both forms.
    void append_term(std::string& out, Rational const& c, std::string const& unit,
                     std::string const& separator) {
      bool const negative = c < 0;
      Rational   mag      = negative ? Rational(-c) : c;
      if (out.empty()) {
        out += negative ? "-" : "";
      } else {
        out += negative ? " - " : " + ";
      }
      if (unit.empty()) {
        out += freegrowth::to_string(mag);
      } else if (mag == 1) {
        out += unit;
      } else {
        out += freegrowth::to_string(mag) + separator + unit;
      }
    }
  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // GrowthPolynomial
  ////////////////////////////////////////////////////////////////////////

  GrowthPolynomial::GrowthPolynomial(std::vector<Rational> coefficients)
      : _coeffs(std::move(coefficients)) {
    trim_zeros(_coeffs);
  }

  Rational GrowthPolynomial::coefficient(std::size_t j) const {
    if (j == 0 || j > _coeffs.size()) {
      return 0;
    }
    return _coeffs[j - 1];
  }

  std::size_t GrowthPolynomial::degree() const noexcept {
    return _coeffs.size();
  }

  Rational GrowthPolynomial::leading_coefficient() const {
    return _coeffs.empty() ? Rational(0) : _coeffs.back();
  }

  BigInt GrowthPolynomial::evaluate(BigInt const& r) const {
    Rational acc = 0;
    for (std::size_t j = _coeffs.size(); j > 0; --j) {
      acc = (acc + _coeffs[j - 1]) * r;
    }
    if (!is_integer(acc)) {
      throw InternalError("polynomial " + to_string() + " at r = " + r.str()
                          + " is " + freegrowth::to_string(acc)
                          + ", not an integer");
    }
    return boost::multiprecision::numerator(acc);
  }

  std::string GrowthPolynomial::to_string() const {
    std::string out;
    for (std::size_t j = _coeffs.size(); j > 0; --j) {
      if (_coeffs[j - 1] == 0) {
        continue;
      }
      append_term(out, _coeffs[j - 1], j == 1 ? "r" : "r^" + std::to_string(j),
                  " ");
    }
    return out.empty() ? "0" : out;
  }

  bool operator==(GrowthPolynomial const& a, GrowthPolynomial const& b) {
    return a._coeffs == b._coeffs;
  }

  ////////////////////////////////////////////////////////////////////////
  // ExponentialForm
  ////////////////////////////////////////////////////////////////////////

  ExponentialForm::ExponentialForm(std::vector<Rational> betas)
      : _betas(std::move(betas)) {
    trim_zeros(_betas);
  }

  Rational ExponentialForm::beta(std::size_t j) const {
    if (j == 0 || j > _betas.size()) {
      return 0;
    }
    return _betas[j - 1];
  }

  BigInt ExponentialForm::evaluate(std::size_t r) const {
    Rational acc = 0;
    for (std::size_t j = 1; j <= _betas.size(); ++j) {
      acc += _betas[j - 1] * power(BigInt(j), r);
    }
    if (!is_integer(acc)) {
      throw InternalError("exponential form " + to_string() + " at r = "
                          + std::to_string(r) + " is "
                          + freegrowth::to_string(acc) + ", not an integer");
    }
    return boost::multiprecision::numerator(acc);
  }

  std::string ExponentialForm::to_string() const {
    std::string out;
    for (std::size_t j = _betas.size(); j > 0; --j) {
      if (_betas[j - 1] == 0) {
        continue;
      }
      append_term(out, _betas[j - 1],
                  j == 1 ? "" : std::to_string(j) + "^r", "*");
    }
    return out.empty() ? "0" : out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Constructions
  ////////////////////////////////////////////////////////////////////////

  GrowthPolynomial
  polynomial_from_falling_factorials(std::vector<BigInt> const& c) {
    if (!c.empty() && c[0] != 0) {
      throw Error("falling-factorial expansion must have no constant term");
    }
    std::size_t const     n = c.empty() ? 0 : c.size() - 1;
    std::vector<Rational> coeffs(n, 0);
    for (std::size_t k = 1; k <= n; ++k) {
      if (c[k] == 0) {
        continue;
      }
      Rational const scale(c[k], factorial(k));
      for (std::size_t j = 1; j <= k; ++j) {
        coeffs[j - 1] += scale * stirling1(k, j);
      }
    }
    return GrowthPolynomial(std::move(coeffs));
  }

  GrowthPolynomial interpolate_polynomial(std::vector<BigInt> const& samples) {
    std::size_t const n = samples.size();
    // Lagrange basis on the nodes 0, 1, ..., n; node 0 carries value 0.
    std::vector<Rational> total(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      std::vector<Rational> basis{1};  // coefficients, lowest power first
      Rational              denom = 1;
      for (std::size_t m = 0; m <= n; ++m) {
        if (m == i) {
          continue;
        }
        // basis *= (x - m)
        std::vector<Rational> next(basis.size() + 1, 0);
        for (std::size_t d = 0; d < basis.size(); ++d) {
          next[d + 1] += basis[d];
          next[d] -= basis[d] * m;
        }
        basis = std::move(next);
        denom *= Rational(static_cast<long long>(i) - static_cast<long long>(m));
      }
      Rational const scale = Rational(samples[i - 1]) / denom;
      for (std::size_t d = 0; d < basis.size(); ++d) {
        total[d] += basis[d] * scale;
      }
    }
    if (total[0] != 0) {
      throw InternalError("interpolated polynomial has a constant term");
    }
    return GrowthPolynomial(
        std::vector<Rational>(total.begin() + 1, total.end()));
  }

}  // namespace freegrowth
