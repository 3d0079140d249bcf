#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wojcik/walk.hpp"

namespace wojcik {

using Rational = boost::multiprecision::cpp_rational;

// Truncated formal power series in one variable with exact rational
// coefficients. coeffs[k] is the z^k coefficient, k = 0..order().
class PowerSeries {
 public:
  PowerSeries() : coeffs_(1) {}
  explicit PowerSeries(std::int64_t order);
  explicit PowerSeries(std::vector<Rational> coeffs);

  std::int64_t order() const {
    return static_cast<std::int64_t>(coeffs_.size()) - 1;
  }
  const Rational& operator[](std::int64_t k) const;
  Rational& operator[](std::int64_t k);
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  PowerSeries operator+(const PowerSeries& rhs) const;
  PowerSeries operator-(const PowerSeries& rhs) const;
  PowerSeries operator-() const;
  // Truncated to min(order(), rhs.order()).
  PowerSeries operator*(const PowerSeries& rhs) const;

  // (f(z) - f(0)) / z; the order drops by one. Requires a zero constant term
  // when `strict` is set.
  PowerSeries divide_by_z(bool strict = true) const;

  // The unique square root with constant term 1; requires f(0) = 1.
  PowerSeries sqrt() const;

  // f(z) -> f(z^k), truncated at the current order.
  PowerSeries substitute_power(int k) const;

  bool operator==(const PowerSeries& rhs) const = default;

 private:
  std::vector<Rational> coeffs_;
};

// sqrt(1 + z^4) through z^N.
PowerSeries sqrt1z4_series(std::int64_t N);

// sum_n r*_n z^n = (-1 - z^2 + sqrt(1 + z^4)) / z, through z^N (index 0 is 0).
PowerSeries rstar_series(std::int64_t N);

// r*_n from the closed form: -1 at n = 1, (-1)^{m-1} (2m-2)! /
// (2^{2m-1} (m-1)! m!) at n = 4m-1, zero otherwise. Domain n >= 1.
Rational rstar(std::int64_t n);

// Half-line first-return series r^{(inf,1)}(z) = (-1 + sqrt(1+z^4)) / z.
PowerSeries first_return_series(std::int64_t N);
// Mirror series s^{(-inf,-1)}(z) = (1 - sqrt(1+z^4)) / z.
PowerSeries first_return_series_left(std::int64_t N);

// Coefficients of a 2x2 matrix in the orthonormal basis {P, Q, R, S}.
struct PqrsCoefficients {
  Rational p, q, r, s;
};

inline constexpr std::int64_t kPathOracleMaxLength = 23;

// Brute-force sum over Hadamard paths that start at site 1, stay >= 1 until
// time n-1 and sit at 0 at time n. Returns its {P,Q,R,S} coordinates.
// Throws BudgetError outside 1 <= n <= kPathOracleMaxLength.
PqrsCoefficients path_oracle_first_return(std::int64_t n);

// r*_n read off a brute-force enumeration of all origin-to-origin first
// excursions of length n+1 (homogeneous Hadamard coin, omega = 1).
Rational path_oracle_rstar(std::int64_t n);

using Mat2 = std::array<std::array<Complex, 2>, 2>;

Mat2 mat_mul(const Mat2& a, const Mat2& b);
Spinor mat_apply(const Mat2& m, const Spinor& v);

// First-excursion weight matrix at time `time`.
struct TimedMatrix2 {
  std::int64_t time = 0;
  Mat2 m{};
};

// Xi*_n = (omega r*_{n-1} / 2) [[-1, 1], [-1, -1]] for even n; zero for odd n.
// Domain n >= 2.
TimedMatrix2 xi_star(std::int64_t n, double phi);

// Psi_{2n}(0) through the renewal recursion
// Psi_{2n}(0) = sum_{a=1}^{n} Xi*_{2a} Psi_{2(n-a)}(0).
Spinor psi_origin(std::int64_t n, const WalkParams& params);

// Psi_{2k}(0) for k = 0..n_max.
std::vector<Spinor> psi_origin_sequence(std::int64_t n_max,
                                        const WalkParams& params);

}  // namespace wojcik
