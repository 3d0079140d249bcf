#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "wojcik/errors.hpp"
#include "wojcik/walk.hpp"

using namespace wojcik;

namespace {

constexpr double kR = 1.0 / std::numbers::sqrt2;

Complex omega(double phi) { return std::polar(1.0, 2.0 * std::numbers::pi * phi); }

// Sum over all 2^n left/right move sequences; each move applies the
// corresponding row of the coin at the current site.
std::map<std::int64_t, Spinor> path_sum(double phi, Complex a0, Complex b0, int n) {
  std::map<std::int64_t, Spinor> out;
  struct Walker {
    double phi;
    std::map<std::int64_t, Spinor>* out;
    void go(std::int64_t x, Spinor v, int left) {
      if (left == 0) {
        auto& s = (*out)[x];
        s.left += v.left;
        s.right += v.right;
        return;
      }
      const Complex w = x == 0 ? omega(phi) : Complex(1.0);
      // row 0 of wH = w/sqrt2 [1, 1] moves left; row 1 = w/sqrt2 [1, -1] moves right
      go(x - 1, {w * kR * (v.left + v.right), 0.0}, left - 1);
      go(x + 1, {0.0, w * kR * (v.left - v.right)}, left - 1);
    }
  } walker{phi, &out};
  walker.go(0, {a0, b0}, n);
  return out;
}

WalkParams random_state(double phi, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  Complex a{g(rng), g(rng)}, b{g(rng), g(rng)};
  const double n = std::sqrt(std::norm(a) + std::norm(b));
  return {phi, a / n, b / n};
}

}  // namespace

TEST_CASE("coin_at: Hadamard away from the defect, phased at the origin") {
  const Unitary2 h = coin_at(5, 0.3);
  CHECK(std::abs(h.a - kR) < 1e-15);
  CHECK(std::abs(h.b - kR) < 1e-15);
  CHECK(std::abs(h.c - kR) < 1e-15);
  CHECK(std::abs(h.d + kR) < 1e-15);

  const Unitary2 h0 = coin_at(0, 0.0);
  CHECK(std::abs(h0.a - kR) < 1e-15);
  CHECK(std::abs(h0.d + kR) < 1e-15);

  const Unitary2 q = coin_at(0, 0.25);
  const Complex i{0.0, 1.0};
  CHECK(std::abs(q.a - i * kR) < 1e-15);
  CHECK(std::abs(q.b - i * kR) < 1e-15);
  CHECK(std::abs(q.c - i * kR) < 1e-15);
  CHECK(std::abs(q.d + i * kR) < 1e-15);

  for (double phi : {0.0, 0.1, 0.37, 0.999}) {
    CHECK(coin_at(0, phi).unitarity_defect() < 1e-12);
    CHECK(coin_at(-3, phi).unitarity_defect() < 1e-12);
  }
}

TEST_CASE("coin_at rejects phi outside [0,1)") {
  CHECK_THROWS_AS(coin_at(0, 1.0), DomainError);
  CHECK_THROWS_AS(coin_at(0, -0.1), DomainError);
  CHECK_THROWS_AS(coin_at(0, std::nan("")), DomainError);
}

TEST_CASE("params validation") {
  CHECK_NOTHROW(WalkParams::preset(0.3, 1).validate());
  CHECK_THROWS_AS((WalkParams{0.3, 1.0, 1.0}).validate(), DomainError);
  CHECK_THROWS_AS((WalkParams{1.2, 1.0, 0.0}).validate(), DomainError);
  CHECK_THROWS_AS(WalkParams::preset(0.3, 2), DomainError);
}

TEST_CASE("single step from the origin") {
  const double phi = 0.3;
  const Complex w = omega(phi);
  const WalkState s = step(initial_state({phi, 1.0, 0.0}), {phi, 1.0, 0.0});
  CHECK(s.time == 1);
  CHECK(std::abs(s.at(-1).left - w * kR) < 1e-15);
  CHECK(std::abs(s.at(-1).right) < 1e-15);
  CHECK(std::abs(s.at(1).left) < 1e-15);
  CHECK(std::abs(s.at(1).right - w * kR) < 1e-15);
  CHECK(measure(s).at(-1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(measure(s).at(1) == doctest::Approx(0.5).epsilon(1e-15));

  const Complex a{0.6, 0.0}, b{0.0, 0.8};
  const WalkParams p{phi, a, b};
  const WalkState t = step(initial_state(p), p);
  CHECK(std::abs(t.at(-1).left - w * kR * (a + b)) < 1e-15);
  CHECK(std::abs(t.at(1).right - w * kR * (a - b)) < 1e-15);
}

TEST_CASE("two steps from the symmetric state") {
  const WalkParams p = WalkParams::preset(0.3, 1);
  const WalkState s = evolve(p, 2);
  CHECK(std::abs(s.total_probability() - 1.0) < 1e-14);
  CHECK(measure(s).at(0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("evolve at n = 0 is the initial state") {
  const WalkParams p{0.4, Complex(0.6, 0.0), Complex(0.0, 0.8)};
  const WalkState s = evolve(p, 0);
  CHECK(s.time == 0);
  CHECK(s.at(0).left == p.alpha);
  CHECK(s.at(0).right == p.beta);
  CHECK(s.total_probability() == doctest::Approx(1.0));
}

TEST_CASE("evolve matches the path-sum oracle") {
  std::mt19937_64 rng(7);
  for (double phi : {0.0, 0.125, 0.3, 0.5, 0.9}) {
    const WalkParams p = random_state(phi, rng);
    for (int n = 0; n <= 10; ++n) {
      const auto oracle = path_sum(phi, p.alpha, p.beta, n);
      const WalkState s = evolve(p, n);
      for (std::int64_t x = -n - 1; x <= n + 1; ++x) {
        const auto it = oracle.find(x);
        const Spinor o = it == oracle.end() ? Spinor{} : it->second;
        CHECK(std::abs(s.at(x).left - o.left) < 1e-13);
        CHECK(std::abs(s.at(x).right - o.right) < 1e-13);
      }
    }
  }
}

TEST_CASE("four-step distribution against the closed P(X_4) formulas") {
  // Hadamard, E = 1.
  const Measure m = measure(evolve(WalkParams::preset(0.0, 1), 4));
  CHECK(m.at(4) == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(m.at(-4) == doctest::Approx(1.0 / 16).epsilon(1e-14));
  CHECK(m.at(2) == doctest::Approx(6.0 / 16).epsilon(1e-14));
  CHECK(m.at(-2) == doctest::Approx(6.0 / 16).epsilon(1e-14));
  CHECK(m.at(0) == doctest::Approx(2.0 / 16).epsilon(1e-14));

  // P(X4 = 0) = 2(3 - 2E)/16 with E = C + eta S.
  for (double phi : {0.125, 0.3, 0.6, 0.85}) {
    for (int eta : {1, -1}) {
      const double E = std::cos(2 * std::numbers::pi * phi) +
                       eta * std::sin(2 * std::numbers::pi * phi);
      const double got = return_probability(WalkParams::preset(phi, eta), 4);
      CHECK(got == doctest::Approx(2.0 * (3.0 - 2.0 * E) / 16.0).epsilon(1e-13));
    }
  }
  CHECK(return_probability(WalkParams::preset(0.125, 1), 4) ==
        doctest::Approx(2.0 * (3.0 - 2.0 * std::numbers::sqrt2) / 16.0).epsilon(1e-13));
}

TEST_CASE("Hadamard return probabilities") {
  const double expected[] = {0.5, 0.125, 0.125, 0.0703125, 0.0703125,
                             0.048828125, 0.048828125};
  const WalkParams p = WalkParams::preset(0.0, 1);
  for (int k = 0; k < 7; ++k) {
    CHECK(return_probability(p, 2 * (k + 1)) == doctest::Approx(expected[k]).epsilon(1e-12));
  }
  CHECK(return_probability(p, 3) == 0.0);
  CHECK(return_probability(WalkParams::preset(0.4, -1), 7) == 0.0);
}

TEST_CASE("unitarity up to 10^4 steps") {
  std::mt19937_64 rng(11);
  for (double phi : {0.0, 0.3, 0.75}) {
    const WalkParams p = random_state(phi, rng);
    Propagator prop(p, 10000);
    double worst = 0.0;
    for (int n = 1; n <= 10000; ++n) {
      prop.advance();
      if (n % 1000 == 0) {
        double total = 0.0;
        for (const auto& a : prop.window()) total += a.norm2();
        worst = std::max(worst, std::abs(total - 1.0));
      }
    }
    CHECK(worst <= 1e-9);
  }
}

TEST_CASE("parity and locality") {
  std::mt19937_64 rng(3);
  const WalkParams p = random_state(0.37, rng);
  for (int n = 0; n <= 30; ++n) {
    const Measure m = measure(evolve(p, n));
    for (std::int64_t x = -n - 3; x <= n + 3; ++x) {
      if (((x + n) % 2 + 2) % 2 == 1 || std::abs(x) > n) CHECK(m.at(x) == 0.0);
    }
  }
}

TEST_CASE("symmetric presets give symmetric Hadamard distributions") {
  for (int eta : {1, -1}) {
    const WalkParams p = WalkParams::preset(0.0, eta);
    Propagator prop(p, 200);
    double worst = 0.0;
    for (int n = 1; n <= 200; ++n) {
      prop.advance();
      for (std::int64_t x = 1; x <= n; ++x) {
        worst = std::max(worst, std::abs(prop.at(x).norm2() - prop.at(-x).norm2()));
      }
    }
    CHECK(worst <= 1e-12);
  }
}

TEST_CASE("global phase leaves the measure unchanged") {
  std::mt19937_64 rng(5);
  const WalkParams p = random_state(0.61, rng);
  const Complex g = std::polar(1.0, 1.234);
  const WalkParams q{p.phi, g * p.alpha, g * p.beta};
  const Measure a = measure(evolve(p, 60));
  const Measure b = measure(evolve(q, 60));
  for (std::int64_t x = -60; x <= 60; ++x) CHECK(std::abs(a.at(x) - b.at(x)) <= 1e-14);
}

TEST_CASE("time_average") {
  const WalkParams p = WalkParams::preset(0.3, 1);
  const Measure one = time_average(p, 1, 3);
  CHECK(one.at(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(one.at(1) == 0.0);
  CHECK(one.at(-3) == 0.0);

  // Direct average of instantaneous measures.
  const std::int64_t T = 40;
  const Measure m = time_average(p, T, 6);
  for (std::int64_t x = -6; x <= 6; ++x) {
    double acc = 0.0;
    for (std::int64_t n = 0; n < T; ++n) acc += measure(evolve(p, n)).at(x);
    CHECK(m.at(x) == doctest::Approx(acc / T).epsilon(1e-13));
    CHECK(m.at(x) >= 0.0);
  }

  const Measure half = time_average(WalkParams::preset(0.5, 1), 5000, 2);
  CHECK(std::abs(half.at(0) - 8.0 / 25.0) <= 1e-2);

  // Homogeneous walk: origin mass dies out.
  const Measure had = time_average(WalkParams::preset(0.0, 1), 5000, 0);
  CHECK(had.at(0) < 5e-3);
}

TEST_CASE("propagator budget") {
  Propagator prop(WalkParams::preset(0.2, 1), 3);
  prop.advance();
  prop.advance();
  prop.advance();
  CHECK(prop.time() == 3);
  CHECK_THROWS_AS(prop.advance(), BudgetError);
}
