#include "wojcik/walk.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wojcik/errors.hpp"

namespace wojcik {

namespace {

void check_phi(double phi) {
  if (!(phi >= 0.0 && phi < 1.0)) {
    throw DomainError("phi must lie in [0,1), got " + std::to_string(phi));
  }
}

Complex defect_phase(double phi) {
  return std::polar(1.0, 2.0 * std::numbers::pi * phi);
}

Unitary2 scaled(const Unitary2& u, Complex s) {
  return {s * u.a, s * u.b, s * u.c, s * u.d};
}

// Moves `src` (sites [src_lo, src_lo + src.size())) one step into `dst`,
// which must cover [src_lo - 1, src_lo + src.size() + 1).
void propagate(std::span<const Spinor> src, std::int64_t src_lo,
               std::span<Spinor> dst, const Unitary2& bulk,
               const Unitary2& origin) {
  std::fill(dst.begin(), dst.end(), Spinor{});
  const auto n = static_cast<std::int64_t>(src.size());
  for (std::int64_t i = 0; i < n; ++i) {
    const Spinor& s = src[i];
    if (s.left == Complex{} && s.right == Complex{}) continue;
    const std::int64_t x = src_lo + i;
    const Unitary2& u = (x == 0) ? origin : bulk;
    // x -> x-1 through the first row, x -> x+1 through the second.
    dst[i].left += u.a * s.left + u.b * s.right;
    dst[i + 2].right += u.c * s.left + u.d * s.right;
  }
}

}  // namespace

void WalkParams::validate(double tol) const {
  check_phi(phi);
  const double n2 = std::norm(alpha) + std::norm(beta);
  if (std::abs(n2 - 1.0) > tol) {
    throw DomainError("initial coin state must satisfy |alpha|^2+|beta|^2=1, got " +
                      std::to_string(n2));
  }
}

WalkParams WalkParams::preset(double phi, int eta) {
  if (eta != 1 && eta != -1) {
    throw DomainError("eta must be +1 or -1, got " + std::to_string(eta));
  }
  const double r = 1.0 / std::numbers::sqrt2;
  return WalkParams{phi, Complex{r, 0.0}, Complex{0.0, eta * r}};
}

double Unitary2::unitarity_defect() const {
  // U^dagger U
  const Complex m00 = std::conj(a) * a + std::conj(c) * c;
  const Complex m01 = std::conj(a) * b + std::conj(c) * d;
  const Complex m11 = std::conj(b) * b + std::conj(d) * d;
  return std::max({std::abs(m00 - 1.0), std::abs(m01), std::abs(m11 - 1.0)});
}

Spinor WalkState::at(std::int64_t x) const {
  const std::int64_t i = x - offset;
  if (i < 0 || i >= static_cast<std::int64_t>(amps.size())) return {};
  return amps[static_cast<std::size_t>(i)];
}

double WalkState::total_probability() const {
  double s = 0.0;
  for (const auto& a : amps) s += a.norm2();
  return s;
}

double Measure::at(std::int64_t x) const {
  const std::int64_t i = x - offset;
  if (i < 0 || i >= static_cast<std::int64_t>(values.size())) return 0.0;
  return values[static_cast<std::size_t>(i)];
}

double Measure::sum() const {
  double s = 0.0;
  for (double v : values) s += v;
  return s;
}

Unitary2 hadamard() {
  const double r = 1.0 / std::numbers::sqrt2;
  return {Complex{r}, Complex{r}, Complex{r}, Complex{-r}};
}

Unitary2 coin_at(std::int64_t x, double phi) {
  check_phi(phi);
  if (x != 0) return hadamard();
  return scaled(hadamard(), defect_phase(phi));
}

WalkState initial_state(const WalkParams& params) {
  return WalkState{0, {Spinor{params.alpha, params.beta}}, 0};
}

WalkState step(const WalkState& state, const WalkParams& params) {
  const Unitary2 bulk = hadamard();
  const Unitary2 origin = coin_at(0, params.phi);
  WalkState out;
  out.offset = state.offset - 1;
  out.time = state.time + 1;
  out.amps.resize(state.amps.size() + 2);
  propagate(state.amps, state.offset, out.amps, bulk, origin);
  return out;
}

WalkState evolve(const WalkParams& params, std::int64_t n) {
  if (n < 0) throw DomainError("evolve: n must be >= 0");
  check_phi(params.phi);
  Propagator prop(params, n);
  for (std::int64_t t = 0; t < n; ++t) prop.advance();
  WalkState out;
  out.offset = -n;
  out.time = n;
  const auto w = prop.window();
  out.amps.assign(w.begin(), w.end());
  return out;
}

Measure measure(const WalkState& state) {
  Measure m;
  m.offset = state.offset;
  m.values.reserve(state.amps.size());
  for (const auto& a : state.amps) m.values.push_back(a.norm2());
  return m;
}

double return_probability(const WalkParams& params, std::int64_t n) {
  if (n < 0) throw DomainError("return_probability: n must be >= 0");
  if (n % 2 != 0) return 0.0;
  return evolve(params, n).at(0).norm2();
}

Measure time_average(const WalkParams& params, std::int64_t T,
                     std::int64_t xmax) {
  if (T < 1) throw DomainError("time_average: T must be >= 1");
  if (xmax < 0) throw DomainError("time_average: xmax must be >= 0");
  check_phi(params.phi);
  Measure acc;
  acc.offset = -xmax;
  acc.values.assign(static_cast<std::size_t>(2 * xmax + 1), 0.0);
  Propagator prop(params, T - 1);
  for (std::int64_t n = 0; n < T; ++n) {
    if (n > 0) prop.advance();
    const std::int64_t reach = std::min(n, xmax);
    for (std::int64_t x = -reach; x <= reach; ++x) {
      acc.values[static_cast<std::size_t>(x + xmax)] += prop.at(x).norm2();
    }
  }
  for (double& v : acc.values) v /= static_cast<double>(T);
  return acc;
}

Propagator::Propagator(const WalkParams& params, std::int64_t max_time)
    : origin_coin_(coin_at(0, params.phi)),
      bulk_coin_(hadamard()),
      capacity_(std::max<std::int64_t>(max_time, 0) + 1),
      cur_(static_cast<std::size_t>(2 * capacity_ + 1)),
      next_(cur_.size()) {
  cur_[static_cast<std::size_t>(capacity_)] = Spinor{params.alpha, params.beta};
}

void Propagator::advance() {
  if (time_ + 1 >= capacity_) {
    throw BudgetError("Propagator: advanced past its configured max_time");
  }
  // Occupied window is [-time_, time_]; write [-time_-1, time_+1].
  const std::int64_t lo = capacity_ - time_;
  const auto width = static_cast<std::size_t>(2 * time_ + 1);
  std::span<const Spinor> src(cur_.data() + lo, width);
  std::span<Spinor> dst(next_.data() + lo - 1, width + 2);
  propagate(src, -time_, dst, bulk_coin_, origin_coin_);
  std::swap(cur_, next_);
  ++time_;
}

Spinor Propagator::at(std::int64_t x) const {
  if (x < -time_ || x > time_) return {};
  return cur_[static_cast<std::size_t>(x + capacity_)];
}

std::span<const Spinor> Propagator::window() const {
  return {cur_.data() + (capacity_ - time_),
          static_cast<std::size_t>(2 * time_ + 1)};
}

}  // namespace wojcik
