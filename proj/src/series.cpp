#include "wojcik/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wojcik/errors.hpp"

namespace wojcik {

namespace {

using IntMat = std::array<std::array<std::int64_t, 2>, 2>;

// sqrt2 * P, sqrt2 * Q, sqrt2 * R, sqrt2 * S.
constexpr IntMat kP{{{1, 1}, {0, 0}}};
constexpr IntMat kQ{{{0, 0}, {1, -1}}};
constexpr IntMat kR{{{1, -1}, {0, 0}}};
constexpr IntMat kS{{{0, 0}, {1, 1}}};

IntMat int_mul(const IntMat& a, const IntMat& b) {
  IntMat c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

IntMat int_add(const IntMat& a, const IntMat& b) {
  IntMat c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][j] + b[i][j];
  return c;
}

// tr(A^T B) for real integer matrices.
std::int64_t frobenius(const IntMat& a, const IntMat& b) {
  std::int64_t s = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) s += a[i][j] * b[i][j];
  return s;
}

// Sum of step products over paths from `pos` that must avoid 0 until the
// final step and land on 0 after exactly `remaining` steps. `acc` is the
// product of the steps taken so far (latest step leftmost).
void enumerate_to_origin(std::int64_t pos, std::int64_t remaining,
                         const IntMat& acc, IntMat& total) {
  const std::int64_t dist = pos < 0 ? -pos : pos;
  if (dist > remaining || (remaining - dist) % 2 != 0) return;
  if (remaining == 0) {
    if (pos == 0) total = int_add(total, acc);
    return;
  }
  for (int dir : {-1, +1}) {
    const std::int64_t next = pos + dir;
    if (next == 0 && remaining != 1) continue;
    const IntMat& m = dir < 0 ? kP : kQ;
    enumerate_to_origin(next, remaining - 1, int_mul(m, acc), total);
  }
}

// 2^{-k} as an exact rational.
Rational inv_pow2(std::int64_t k) {
  boost::multiprecision::cpp_int den = 1;
  den <<= static_cast<unsigned>(k);
  return Rational(1, den);
}

void check_path_budget(std::int64_t n, std::int64_t max_len,
                       const char* who) {
  if (n < 1 || n > max_len) {
    throw BudgetError(std::string(who) + ": n must lie in [1," +
                      std::to_string(max_len) + "], got " +
                      std::to_string(n));
  }
}

}  // namespace

PowerSeries::PowerSeries(std::int64_t order) {
  if (order < 0) throw DomainError("PowerSeries: order must be >= 0");
  coeffs_.assign(static_cast<std::size_t>(order + 1), Rational(0));
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.emplace_back(0);
}

const Rational& PowerSeries::operator[](std::int64_t k) const {
  return coeffs_.at(static_cast<std::size_t>(k));
}

Rational& PowerSeries::operator[](std::int64_t k) {
  return coeffs_.at(static_cast<std::size_t>(k));
}

PowerSeries PowerSeries::operator+(const PowerSeries& rhs) const {
  PowerSeries out(std::min(order(), rhs.order()));
  for (std::int64_t k = 0; k <= out.order(); ++k) out[k] = (*this)[k] + rhs[k];
  return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& rhs) const {
  return *this + (-rhs);
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& rhs) const {
  PowerSeries out(std::min(order(), rhs.order()));
  for (std::int64_t i = 0; i <= out.order(); ++i) {
    if ((*this)[i] == 0) continue;
    for (std::int64_t j = 0; i + j <= out.order(); ++j) {
      out[i + j] += (*this)[i] * rhs[j];
    }
  }
  return out;
}

PowerSeries PowerSeries::divide_by_z(bool strict) const {
  if (strict && (*this)[0] != 0) {
    throw DomainError("divide_by_z: constant term is nonzero");
  }
  if (order() == 0) return PowerSeries(0);
  return PowerSeries(std::vector<Rational>(coeffs_.begin() + 1, coeffs_.end()));
}

PowerSeries PowerSeries::sqrt() const {
  if ((*this)[0] != 1) {
    throw DomainError("PowerSeries::sqrt requires constant term 1");
  }
  // s^2 = f with s_0 = 1: 2 s_k = f_k - sum_{j=1}^{k-1} s_j s_{k-j}.
  PowerSeries s(order());
  s[0] = 1;
  for (std::int64_t k = 1; k <= order(); ++k) {
    Rational acc = (*this)[k];
    for (std::int64_t j = 1; j < k; ++j) acc -= s[j] * s[k - j];
    s[k] = acc / 2;
  }
  return s;
}

PowerSeries PowerSeries::substitute_power(int k) const {
  PowerSeries out(order());
  for (std::int64_t i = 0; i * k <= order(); ++i) out[i * k] = (*this)[i];
  return out;
}

PowerSeries sqrt1z4_series(std::int64_t N) {
  if (N < 0) throw DomainError("sqrt1z4_series: N must be >= 0");
  // sqrt(1+w) up to w^{N/4}, then w = z^4.
  PowerSeries one_plus_w(N / 4);
  one_plus_w[0] = 1;
  if (one_plus_w.order() >= 1) one_plus_w[1] = 1;
  PowerSeries root = one_plus_w.sqrt();
  PowerSeries out(N);
  for (std::int64_t i = 0; 4 * i <= N; ++i) out[4 * i] = root[i];
  return out;
}

PowerSeries rstar_series(std::int64_t N) {
  if (N < 0) throw DomainError("rstar_series: N must be >= 0");
  PowerSeries num = sqrt1z4_series(N + 1);
  num[0] -= 1;
  if (num.order() >= 2) num[2] -= 1;
  return num.divide_by_z();
}

Rational rstar(std::int64_t n) {
  if (n <= 0) throw DomainError("rstar: n must be >= 1");
  if (n == 1) return Rational(-1);
  if ((n + 1) % 4 != 0) return Rational(0);
  const std::int64_t m = (n + 1) / 4;
  // (2m-2)! / ((m-1)! m!) = C(2m-2, m-1) / m.
  boost::multiprecision::cpp_int binom = 1;
  for (std::int64_t i = 1; i <= m - 1; ++i) {
    binom = binom * (m - 1 + i) / i;
  }
  Rational value(binom, boost::multiprecision::cpp_int(m));
  value *= inv_pow2(2 * m - 1);
  return (m % 2 == 1) ? value : Rational(-value);
}

PowerSeries first_return_series(std::int64_t N) {
  if (N < 0) throw DomainError("first_return_series: N must be >= 0");
  PowerSeries num = sqrt1z4_series(N + 1);
  num[0] -= 1;
  return num.divide_by_z();
}

PowerSeries first_return_series_left(std::int64_t N) {
  return -first_return_series(N);
}

PqrsCoefficients path_oracle_first_return(std::int64_t n) {
  check_path_budget(n, kPathOracleMaxLength, "path_oracle_first_return");
  IntMat total{};
  enumerate_to_origin(1, n, IntMat{{{1, 0}, {0, 1}}}, total);
  // Xi = 2^{-n/2} total and each basis matrix carries 1/sqrt2, so every
  // coordinate is 2^{-(n+1)/2} tr(B'^T total). Paths exist only for odd n.
  PqrsCoefficients c{Rational(0), Rational(0), Rational(0), Rational(0)};
  if (n % 2 == 0) return c;
  const Rational scale = inv_pow2((n + 1) / 2);
  c.p = scale * frobenius(kP, total);
  c.q = scale * frobenius(kQ, total);
  c.r = scale * frobenius(kR, total);
  c.s = scale * frobenius(kS, total);
  return c;
}

Rational path_oracle_rstar(std::int64_t n) {
  check_path_budget(n, kPathOracleMaxLength, "path_oracle_rstar");
  if (n % 2 == 0) return Rational(0);
  // Excursions of length n+1: first step off the origin, then the walk must
  // avoid 0 until it lands there at the final step.
  IntMat total{};
  enumerate_to_origin(-1, n, kP, total);
  enumerate_to_origin(+1, n, kQ, total);
  // Xi*_{n+1} = 2^{-(n+1)/2} total = (r*_n / 2) [[-1,1],[-1,-1]].
  return 2 * inv_pow2((n + 1) / 2) * Rational(total[0][1]);
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

Spinor mat_apply(const Mat2& m, const Spinor& v) {
  return {m[0][0] * v.left + m[0][1] * v.right,
          m[1][0] * v.left + m[1][1] * v.right};
}

TimedMatrix2 xi_star(std::int64_t n, double phi) {
  if (n < 2) throw DomainError("xi_star: n must be >= 2");
  (void)coin_at(0, phi);  // phi domain check
  TimedMatrix2 out{n, {}};
  if (n % 2 != 0) return out;
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi * phi);
  const Complex k = omega * rstar(n - 1).convert_to<double>() / 2.0;
  out.m = Mat2{{{-k, k}, {-k, -k}}};
  return out;
}

std::vector<Spinor> psi_origin_sequence(std::int64_t n_max,
                                        const WalkParams& params) {
  if (n_max < 0) throw DomainError("psi_origin: n must be >= 0");
  params.validate(1e-9);
  // Every Xi*_{2a} is a scalar multiple of one fixed matrix M; keep the
  // scalars and apply M once per term.
  const Complex omega = std::polar(1.0, 2.0 * std::numbers::pi * params.phi);
  const PowerSeries rs = rstar_series(std::max<std::int64_t>(2 * n_max, 1));
  std::vector<Complex> weight(static_cast<std::size_t>(n_max + 1));
  for (std::int64_t a = 1; a <= n_max; ++a) {
    weight[a] = omega * rs[2 * a - 1].convert_to<double>() / 2.0;
  }
  std::vector<Spinor> psi(static_cast<std::size_t>(n_max + 1));
  psi[0] = Spinor{params.alpha, params.beta};
  for (std::int64_t n = 1; n <= n_max; ++n) {
    Complex l{}, r{};
    for (std::int64_t a = 1; a <= n; ++a) {
      if (weight[a] == Complex{}) continue;
      const Spinor& prev = psi[n - a];
      // M = [[-1, 1], [-1, -1]]
      l += weight[a] * (-prev.left + prev.right);
      r += weight[a] * (-prev.left - prev.right);
    }
    psi[n] = Spinor{l, r};
  }
  return psi;
}

Spinor psi_origin(std::int64_t n, const WalkParams& params) {
  return psi_origin_sequence(n, params).back();
}

}  // namespace wojcik
