#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace wojcik {

using Complex = std::complex<double>;

// Defect phase and initial coin state. The walker starts at the origin with
// coin state (alpha, beta); the coin at the origin is e^{2 pi i phi} H.
struct WalkParams {
  double phi = 0.0;
  Complex alpha{1.0, 0.0};
  Complex beta{0.0, 0.0};

  // Checks phi in [0,1) and |alpha|^2 + |beta|^2 = 1 within `tol`.
  // Throws DomainError otherwise.
  void validate(double tol = 1e-12) const;

  // (1/sqrt2, eta*i/sqrt2), the symmetric initial states; eta must be +1/-1.
  static WalkParams preset(double phi, int eta);
};

// Site coin U = [[a, b], [c, d]]. The first row moves the walker left, the
// second row moves it right.
struct Unitary2 {
  Complex a, b, c, d;

  // Max-entry deviation of U^dagger U from the identity.
  double unitarity_defect() const;
};

struct Spinor {
  Complex left;
  Complex right;

  double norm2() const { return std::norm(left) + std::norm(right); }
};

// Amplitudes on the contiguous window [offset, offset + amps.size()).
struct WalkState {
  std::int64_t offset = 0;
  std::vector<Spinor> amps;
  std::int64_t time = 0;

  // Amplitude at site x (zero outside the stored window).
  Spinor at(std::int64_t x) const;
  double total_probability() const;
};

// A nonnegative site function on [offset, offset + values.size()).
struct Measure {
  std::int64_t offset = 0;
  std::vector<double> values;

  double at(std::int64_t x) const;
  double sum() const;
};

Unitary2 hadamard();

// H away from the origin and e^{2 pi i phi} H at x = 0.
Unitary2 coin_at(std::int64_t x, double phi);

WalkState initial_state(const WalkParams& params);

// One application of Psi_{n+1}(x) = P_{x+1} Psi_n(x+1) + Q_{x-1} Psi_n(x-1).
WalkState step(const WalkState& state, const WalkParams& params);

WalkState evolve(const WalkParams& params, std::int64_t n);

Measure measure(const WalkState& state);

// mu_n(0); zero for odd n.
double return_probability(const WalkParams& params, std::int64_t n);

// (1/T) sum_{n=0}^{T-1} mu_n(x) on |x| <= xmax, in a single forward pass.
Measure time_average(const WalkParams& params, std::int64_t T,
                     std::int64_t xmax);

// Reusable in-place propagator for long runs. Keeps two buffers sized for
// the final time so each step is allocation-free.
class Propagator {
 public:
  Propagator(const WalkParams& params, std::int64_t max_time);

  void advance();
  std::int64_t time() const { return time_; }
  Spinor at(std::int64_t x) const;
  // Sites [-time, time], index 0 is x = -time.
  std::span<const Spinor> window() const;

 private:
  Unitary2 origin_coin_;
  Unitary2 bulk_coin_;
  std::int64_t capacity_;  // buffer covers x in [-capacity_, capacity_]
  std::int64_t time_ = 0;
  std::vector<Spinor> cur_;
  std::vector<Spinor> next_;
};

}  // namespace wojcik
