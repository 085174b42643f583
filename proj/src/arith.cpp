#include "freegrowth/arith.hpp"

#include <mutex>  // for mutex, lock_guard

#include "freegrowth/errors.hpp"

namespace freegrowth {

  namespace {
    // Memoised triangle; the recurrences are cheap but Z-set and polynomial
    // code asks for the same rows many times.
    template <typename Step>
    class Triangle {
     public:
      explicit Triangle(Step step) : _step(step) {}

      BigInt get(std::size_t n, std::size_t k) {
        std::lock_guard<std::mutex> lock(_mtx);
        while (_rows.size() <= n) {
          std::size_t const    m = _rows.size();
          std::vector<BigInt> row(m + 1, 0);
          if (m == 0) {
            row[0] = 1;
          } else {
            for (std::size_t j = 1; j <= m; ++j) {
              BigInt const& left = _rows[m - 1][j - 1];
              BigInt const  up   = j <= m - 1 ? _rows[m - 1][j] : BigInt(0);
              row[j]             = _step(m, j, left, up);
            }
          }
          _rows.push_back(std::move(row));
        }
        return k <= n ? _rows[n][k] : BigInt(0);
      }

     private:
      Step                             _step;
      std::mutex                       _mtx;
      std::vector<std::vector<BigInt>> _rows;
    };

    auto first_kind_step = [](std::size_t m, std::size_t, BigInt const& left,
                              BigInt const& up) {
      // s(m,j) = s(m-1,j-1) - (m-1) s(m-1,j)
      return left - BigInt(m - 1) * up;
    };
    auto second_kind_step = [](std::size_t, std::size_t j, BigInt const& left,
                               BigInt const& up) {
      return left + BigInt(j) * up;
    };
  }  // namespace

  BigInt factorial(std::size_t n) {
    BigInt result = 1;
    for (std::size_t i = 2; i <= n; ++i) {
      result *= i;
    }
    return result;
  }

  BigInt binomial(BigInt const& n, std::size_t k) {
    if (n < 0 || BigInt(k) > n) {
      return 0;
    }
    BigInt result = 1;
    for (std::size_t i = 0; i < k; ++i) {
      result *= n - i;
      result /= i + 1;
    }
    return result;
  }

  BigInt binomial(std::int64_t n, std::size_t k) {
    return binomial(BigInt(n), k);
  }

  BigInt stirling1(std::size_t n, std::size_t k) {
    static Triangle<decltype(first_kind_step)> triangle(first_kind_step);
    return triangle.get(n, k);
  }

  BigInt stirling2(std::size_t n, std::size_t k) {
    static Triangle<decltype(second_kind_step)> triangle(second_kind_step);
    return triangle.get(n, k);
  }

  BigInt fibonacci(std::size_t n) {
    BigInt a = 0, b = 1;
    for (std::size_t i = 0; i < n; ++i) {
      BigInt next = a + b;
      a           = b;
      b           = next;
    }
    return a;
  }

  BigInt power(BigInt const& base, std::size_t exponent) {
    BigInt result = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
      result *= base;
    }
    return result;
  }

  std::string to_string(BigInt const& z) {
    return z.str();
  }

  std::string to_string(Rational const& q) {
    BigInt const num = boost::multiprecision::numerator(q);
    BigInt const den = boost::multiprecision::denominator(q);
    if (den == 1) {
      return num.str();
    }
    return num.str() + "/" + den.str();
  }

  bool is_integer(Rational const& q) {
    return boost::multiprecision::denominator(q) == 1;
  }

  Rational parse_rational(std::string const& text) {
    auto const slash = text.find('/');
    try {
      if (slash == std::string::npos) {
        return Rational(BigInt(text));
      }
      BigInt num(text.substr(0, slash));
      BigInt den(text.substr(slash + 1));
      if (den == 0) {
        throw Error("zero denominator in rational \"" + text + "\"");
      }
      if (den < 0) {
        num = -num;
        den = -den;
      }
      return Rational(num, den);
    } catch (std::runtime_error const&) {
      throw Error("cannot parse rational \"" + text + "\"");
    }
  }

}  // namespace freegrowth
