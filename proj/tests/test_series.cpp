#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "wojcik/errors.hpp"
#include "wojcik/series.hpp"

using namespace wojcik;

namespace {

constexpr double kR = 1.0 / std::numbers::sqrt2;
const Complex kI{0.0, 1.0};

Complex omega(double phi) { return std::polar(1.0, 2.0 * std::numbers::pi * phi); }

Rational factorial(int k) {
  Rational f = 1;
  for (int j = 2; j <= k; ++j) f *= j;
  return f;
}

Rational pow2(int k) {
  Rational p = 1;
  for (int j = 0; j < k; ++j) p *= 2;
  return p;
}

// Sum of coin products over paths that leave the origin at time 0 and first
// come back at time n. The coin applied on each move is the one at the
// site being left.
Mat2 excursion_sum(int n, double phi) {
  Mat2 total{};
  const Complex w = omega(phi);
  struct Dfs {
    int n;
    Complex w;
    Mat2* total;
    void go(std::int64_t x, int t, const Mat2& acc) {
      if (t == n) {
        if (x == 0)
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) (*total)[i][j] += acc[i][j];
        return;
      }
      if (t > 0 && x == 0) return;
      if (std::abs(x) > n - t) return;
      const Complex c = (x == 0 ? w : Complex(1.0)) * kR;
      const Mat2 left{{{c, c}, {0.0, 0.0}}};
      const Mat2 right{{{0.0, 0.0}, {c, -c}}};
      go(x - 1, t + 1, mat_mul(left, acc));
      go(x + 1, t + 1, mat_mul(right, acc));
    }
  } dfs{n, w, &total};
  dfs.go(0, 0, Mat2{{{1.0, 0.0}, {0.0, 1.0}}});
  return total;
}

WalkParams random_state(double phi, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Complex a{g(rng), g(rng)}, b{g(rng), g(rng)};
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {phi, a / n, b / n};
}

}  // namespace

TEST_CASE("power series arithmetic") {
  PowerSeries a(std::vector<Rational>{1, 2, 3});
  PowerSeries b(std::vector<Rational>{0, 1, Rational(1, 2)});
  const PowerSeries c = a * b;
  CHECK(c.order() == 2);
  CHECK(c[0] == 0);
  CHECK(c[1] == 1);
  CHECK(c[2] == Rational(5, 2));
  CHECK((a - a) == PowerSeries(2));
  CHECK((-a)[2] == -3);
  CHECK((a + b)[2] == Rational(7, 2));
  const PowerSeries d = b.divide_by_z();
  CHECK(d.order() == 1);
  CHECK(d[0] == 1);
  CHECK(d[1] == Rational(1, 2));
  CHECK_THROWS_AS(a.divide_by_z(), DomainError);
  CHECK_THROWS_AS(b.sqrt(), DomainError);
  const PowerSeries s = PowerSeries(std::vector<Rational>{1, 1, 0, 0}).sqrt();
  CHECK(s[1] == Rational(1, 2));
  CHECK(s[2] == Rational(-1, 8));
  CHECK(s[3] == Rational(1, 16));
  CHECK(a.substitute_power(2)[2] == 2);
  CHECK(a.substitute_power(2)[1] == 0);
}

TEST_CASE("sqrt(1+z^4) coefficients") {
  const PowerSeries s = sqrt1z4_series(40);
  CHECK(s[0] == 1);
  CHECK(s[4] == Rational(1, 2));
  CHECK(s[8] == Rational(-1, 8));
  for (int k = 0; k <= 40; ++k) {
    if (k % 4) CHECK(s[k] == 0);
  }
  // Squaring oracle.
  const PowerSeries sq = s * s;
  for (int k = 0; k <= 40; ++k) {
    CHECK(sq[k] == Rational(k == 0 || k == 4 ? 1 : 0));
  }
}

TEST_CASE("rstar examples and domain") {
  CHECK(rstar(1) == -1);
  CHECK(rstar(3) == Rational(1, 2));
  CHECK(rstar(7) == Rational(-1, 8));
  for (int n : {2, 4, 5, 6}) CHECK(rstar(n) == 0);
  CHECK_THROWS_AS(rstar(0), DomainError);
  CHECK_THROWS_AS(rstar(-3), DomainError);
}

TEST_CASE("rstar triple equivalence through n = 23") {
  const PowerSeries gf = rstar_series(kPathOracleMaxLength);
  CHECK(gf[0] == 0);
  for (std::int64_t n = 1; n <= kPathOracleMaxLength; ++n) {
    CAPTURE(n);
    CHECK(rstar(n) == gf[n]);
    CHECK(path_oracle_rstar(n) == gf[n]);
  }
}

TEST_CASE("printed factorial form disagrees at n = 7") {
  // (-1)^{m-1} (2m-1)! / (2^{2m-1} (m-1)! m!) at m = 2.
  const int m = 2;
  const Rational printed = -factorial(2 * m - 1) / (pow2(2 * m - 1) * factorial(m - 1) * factorial(m));
  CHECK(printed == Rational(-3, 8));
  CHECK(printed != rstar(7));
  const Rational corrected = -factorial(2 * m - 2) / (pow2(2 * m - 1) * factorial(m - 1) * factorial(m));
  CHECK(corrected == rstar(7));
}

TEST_CASE("half-line first-return series against path enumeration") {
  const PowerSeries r = first_return_series(kPathOracleMaxLength);
  CHECK(r[3] == Rational(1, 2));
  CHECK(r[7] == Rational(-1, 8));
  CHECK(r[2] == 0);
  for (std::int64_t n = 1; n <= kPathOracleMaxLength; ++n) {
    CAPTURE(n);
    CHECK(path_oracle_first_return(n).r == r[n]);
  }
  const PqrsCoefficients one = path_oracle_first_return(1);
  CHECK(one.p == 1);
  CHECK(one.r == 0);
  CHECK(path_oracle_first_return(3).r == Rational(1, 2));
  CHECK(path_oracle_first_return(5).r == 0);
}

TEST_CASE("mirror series is the negation") {
  const PowerSeries r = first_return_series(31);
  const PowerSeries s = first_return_series_left(31);
  CHECK(s == -r);
}

TEST_CASE("path oracles enforce their budget") {
  CHECK_THROWS_AS(path_oracle_first_return(0), BudgetError);
  CHECK_THROWS_AS(path_oracle_first_return(kPathOracleMaxLength + 1), BudgetError);
  CHECK_THROWS_AS(path_oracle_rstar(kPathOracleMaxLength + 1), BudgetError);
}

TEST_CASE("xi_star examples") {
  const double phi = 0.3;
  const Complex w = omega(phi);
  const Mat2 two = xi_star(2, phi).m;
  CHECK(xi_star(2, phi).time == 2);
  CHECK(std::abs(two[0][0] - w / 2.0) < 1e-15);
  CHECK(std::abs(two[0][1] + w / 2.0) < 1e-15);
  CHECK(std::abs(two[1][0] - w / 2.0) < 1e-15);
  CHECK(std::abs(two[1][1] - w / 2.0) < 1e-15);
  for (int n : {3, 5, 6}) {
    const Mat2 z = xi_star(n, phi).m;
    for (auto& row : z)
      for (auto v : row) CHECK(v == Complex{});
  }
  CHECK_THROWS_AS(xi_star(1, phi), DomainError);
}

TEST_CASE("xi_star matches phased excursion enumeration") {
  for (double phi : {0.0, 0.17, 0.5, 0.83}) {
    for (int n = 2; n <= 16; ++n) {
      const Mat2 oracle = excursion_sum(n, phi);
      const Mat2 got = xi_star(n, phi).m;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) CHECK(std::abs(oracle[i][j] - got[i][j]) < 1e-13);
    }
  }
}

TEST_CASE("eigenvector property of the excursion matrix") {
  const Mat2 m{{{-1.0, 1.0}, {-1.0, -1.0}}};
  for (double eta : {1.0, -1.0}) {
    const Spinor v{1.0, eta * kI};
    const Spinor mv = mat_apply(m, v);
    const Complex lam{-1.0, eta};
    CHECK(mv.left == lam * v.left);
    CHECK(mv.right == lam * v.right);
  }
}

TEST_CASE("psi_origin examples") {
  const WalkParams p{0.4, Complex(0.6, 0.0), Complex(0.0, 0.8)};
  const Spinor z = psi_origin(0, p);
  CHECK(z.left == p.alpha);
  CHECK(z.right == p.beta);

  const double phi = 0.3;
  const WalkParams eta1 = WalkParams::preset(phi, 1);
  const Complex coeff = kR * -1.0 * (omega(phi) * Complex(-1.0, 1.0) / 2.0);
  const Spinor one = psi_origin(1, eta1);
  CHECK(std::abs(one.left - coeff) < 1e-15);
  CHECK(std::abs(one.right - coeff * kI) < 1e-15);
  const Spinor ev = evolve(eta1, 2).at(0);
  CHECK(std::abs(one.left - ev.left) < 1e-15);
  CHECK(std::abs(one.right - ev.right) < 1e-15);

  const Spinor two = psi_origin(2, p);
  const Spinor ev4 = evolve(p, 4).at(0);
  CHECK(std::abs(two.left - ev4.left) < 1e-12);
  CHECK(std::abs(two.right - ev4.right) < 1e-12);
}

TEST_CASE("renewal agrees with direct evolution for n <= 100") {
  std::mt19937_64 rng(2024);
  double worst = 0.0;
  for (double phi : {0.125, 1.0 / 3.0, 0.5, 0.9}) {
    for (int k = 0; k < 5; ++k) {
      const WalkParams p = random_state(phi, rng);
      const auto seq = psi_origin_sequence(100, p);
      REQUIRE(seq.size() == 101);
      Propagator prop(p, 200);
      for (int n = 0; n <= 100; ++n) {
        const Spinor a = prop.at(0);
        worst = std::max(worst, std::sqrt(std::norm(a.left - seq[n].left) +
                                          std::norm(a.right - seq[n].right)));
        if (n < 100) {
          prop.advance();
          prop.advance();
        }
      }
      const Spinor last = psi_origin(100, p);
      CHECK(std::abs(last.left - seq[100].left) < 1e-15);
    }
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("psi_origin rejects a non-normalized state") {
  CHECK_THROWS_AS(psi_origin(3, WalkParams{0.2, 1.0, 1.0}), DomainError);
}
