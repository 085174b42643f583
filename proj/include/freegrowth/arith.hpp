// Exact integer and rational arithmetic, plus the handful of combinatorial
// number families used across the project (binomials, factorials, Stirling
// numbers of both kinds, Fibonacci numbers).

#ifndef FREEGROWTH_ARITH_HPP_
#define FREEGROWTH_ARITH_HPP_

#include <cstddef>  // for size_t
#include <cstdint>  // for int64_t
#include <string>   // for string
#include <vector>   // for vector

#include <boost/multiprecision/cpp_int.hpp>

namespace freegrowth {

  using BigInt   = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  BigInt factorial(std::size_t n);

  // Zero when k > n, never throws.
  BigInt binomial(BigInt const& n, std::size_t k);
  BigInt binomial(std::int64_t n, std::size_t k);

  // Signed Stirling numbers of the first kind: x(x-1)...(x-n+1) = sum_k s(n,k) x^k.
  BigInt stirling1(std::size_t n, std::size_t k);

  // Stirling numbers of the second kind, via {n,k} = k{n-1,k} + {n-1,k-1}.
  BigInt stirling2(std::size_t n, std::size_t k);

  // F_1 = F_2 = 1.
  BigInt fibonacci(std::size_t n);

  BigInt power(BigInt const& base, std::size_t exponent);

  // "7/2", "-3", "0".
  std::string to_string(Rational const& q);
  std::string to_string(BigInt const& z);

  // Accepts "7/2", "-3/2", "12"; the result is normalised.
  Rational parse_rational(std::string const& text);

  // True iff q has denominator 1.
  bool is_integer(Rational const& q);

}  // namespace freegrowth

#endif  // FREEGROWTH_ARITH_HPP_
