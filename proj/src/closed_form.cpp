#include "wojcik/closed_form.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wojcik/errors.hpp"

namespace wojcik {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr Complex kI{0.0, 1.0};

void check_phi_half_open(double phi) {
  if (!(phi >= 0.0 && phi < 1.0)) {
    throw DomainError("phi must lie in [0,1), got " + std::to_string(phi));
  }
}

void check_phi_open(double phi) {
  if (!(phi > 0.0 && phi < 1.0)) {
    throw DomainError("phi must lie in (0,1), got " + std::to_string(phi));
  }
}

// (S -+ C)/|S -+ C| with the 0/0 case mapped to 0.
double sign_or_zero(double v) {
  if (std::abs(v) < 1e-14) return 0.0;
  return v > 0.0 ? 1.0 : -1.0;
}

WalkParams symmetric_state(StationaryBranch b, double phi) {
  return WalkParams::preset(phi, b == StationaryBranch::kBetaIAlpha ? 1 : -1);
}

}  // namespace

TrigPack TrigPack::from_phi(double phi) {
  TrigPack t;
  const double a = 2.0 * kPi * phi;
  t.C = std::cos(a);
  t.S = std::sin(a);
  t.E_plus = t.C + t.S;
  t.E_minus = t.C - t.S;
  t.C_plus = std::cos(a + kPi / 4.0);
  t.C_minus = std::cos(a - kPi / 4.0);
  return t;
}

double TrigPack::scaled_cos(Branch b) const {
  return b == Branch::kPlus ? E_minus : E_plus;
}

bool branch_active(Branch b, double phi) {
  return b == Branch::kPlus ? (phi > 0.0 && phi < 0.75)
                            : (phi > 0.25 && phi < 1.0);
}

double branch_weight(Branch b, Complex alpha, Complex beta) {
  return b == Branch::kPlus ? std::norm(alpha + kI * beta)
                            : std::norm(alpha - kI * beta);
}

double branch_amplitude(Branch b, double phi) {
  const double sc = TrigPack::from_phi(phi).scaled_cos(b);
  return (1.0 - sc) / (3.0 - 2.0 * sc);
}

double branch_decay(Branch b, double phi) {
  const double sc = TrigPack::from_phi(phi).scaled_cos(b);
  return 1.0 / (3.0 - 2.0 * sc);
}

double c_phi(double phi, int eta) {
  check_phi_half_open(phi);
  if (eta != 1 && eta != -1) throw DomainError("eta must be +1 or -1");
  const Branch b = eta == 1 ? Branch::kMinus : Branch::kPlus;
  if (!branch_active(b, phi)) return 0.0;
  const double amp = branch_amplitude(b, phi);
  return 4.0 * amp * amp;
}

double mu_inf_origin_branch(Branch b, double phi, Complex alpha,
                            Complex beta) {
  check_phi_half_open(phi);
  if (!branch_active(b, phi)) return 0.0;
  const double amp = branch_amplitude(b, phi);
  return amp * amp * branch_weight(b, alpha, beta);
}

double mu_inf_origin(double phi, Complex alpha, Complex beta) {
  return mu_inf_origin_branch(Branch::kPlus, phi, alpha, beta) +
         mu_inf_origin_branch(Branch::kMinus, phi, alpha, beta);
}

double mu_inf(std::int64_t x, double phi, Complex alpha, Complex beta) {
  if (x == 0) return mu_inf_origin(phi, alpha, beta);
  const TrigPack t = TrigPack::from_phi(phi);
  const auto ax = static_cast<double>(x < 0 ? -x : x);
  double total = 0.0;
  for (Branch b : kBranches) {
    const double m0 = mu_inf_origin_branch(b, phi, alpha, beta);
    if (m0 == 0.0) continue;
    const double sc = t.scaled_cos(b);
    total += (2.0 - sc) * std::pow(1.0 / (3.0 - 2.0 * sc), ax) * m0;
  }
  return total;
}

double total_point_mass(double phi, Complex alpha, Complex beta) {
  const TrigPack t = TrigPack::from_phi(phi);
  double total = 0.0;
  for (Branch b : kBranches) {
    const double m0 = mu_inf_origin_branch(b, phi, alpha, beta);
    if (m0 == 0.0) continue;
    const double sc = t.scaled_cos(b);
    const double q = 1.0 / (3.0 - 2.0 * sc);
    if (q >= 1.0) {
      throw DegenerateError("total_point_mass: decay rate " +
                            std::to_string(q) + " >= 1 on an active branch");
    }
    total += m0 * (1.0 + 2.0 * (2.0 - sc) * q / (1.0 - q));
  }
  return total;
}

double Theta0::angle() const { return std::atan2(sin0, cos0); }

Theta0 theta0(double E) {
  if (!(std::abs(E) <= kSqrt2 + 1e-12)) {
    throw DomainError("theta0: E must lie in [-sqrt2, sqrt2], got " +
                      std::to_string(E));
  }
  const double den = 3.0 - 2.0 * E;
  Theta0 t;
  t.E = E;
  t.cos0 = -(1.0 - E) * (1.0 - E) / den;
  // |S -+ C| = sqrt(2 - E^2) whenever E = C +- S.
  t.sin0 = (2.0 - E) * std::sqrt(std::max(0.0, 2.0 - E * E)) / den;
  if (std::abs(t.cos0 * t.cos0 + t.sin0 * t.sin0 - 1.0) > 1e-12) {
    throw DomainError("theta0: root pair is not unit-modulus");
  }
  return t;
}

AsymptoticPsi asymptotic_psi_origin(std::int64_t n, double phi, Complex alpha,
                                    Complex beta) {
  if (n < 1) throw DomainError("asymptotic_psi_origin: n must be >= 1");
  check_phi_half_open(phi);
  const TrigPack t = TrigPack::from_phi(phi);
  const auto nn = static_cast<double>(n);

  // Psi^L ~ X_- e_- + X_+ e_+,  Psi^R ~ i X_- e_- - i X_+ e_+, where
  // X_-+ = (alpha -+ i beta)(1 - E)/(3 - 2E) and e = cos(n th) + i s sin(n th).
  auto channel = [&](Branch b, Complex coeff, double E, double sgn) {
    if (!branch_active(b, phi)) return Complex{};
    const double th = theta0(E).angle();
    const Complex osc{std::cos(nn * th), sgn * std::sin(nn * th)};
    return coeff * ((1.0 - E) / (3.0 - 2.0 * E)) * osc;
  };
  const Complex minus = channel(Branch::kMinus, alpha - kI * beta, t.E_plus,
                                sign_or_zero(t.S - t.C));
  const Complex plus = channel(Branch::kPlus, alpha + kI * beta, t.E_minus,
                               sign_or_zero(t.S + t.C));
  const Complex left = minus + plus;
  const Complex right = kI * minus - kI * plus;
  return {left.real(), left.imag(), right.real(), right.imag()};
}

Branch matching_branch(StationaryBranch b) {
  return b == StationaryBranch::kBetaIAlpha ? Branch::kMinus : Branch::kPlus;
}

double stationary_measure(std::int64_t x, double phi, double alpha_mod2,
                          StationaryBranch branch) {
  check_phi_open(phi);
  if (!(alpha_mod2 > 0.0)) {
    throw DomainError("stationary_measure: |alpha|^2 must be > 0");
  }
  const TrigPack t = TrigPack::from_phi(phi);
  const double sign = branch == StationaryBranch::kBetaIAlpha ? 1.0 : -1.0;
  if (x == 0) return 2.0 * alpha_mod2;
  const double gamma = 2.0 - t.C - sign * t.S;
  const double rate = 1.0 / (3.0 - 2.0 * t.C - 2.0 * sign * t.S);
  const auto ax = static_cast<double>(x < 0 ? -x : x);
  return 2.0 * alpha_mod2 * std::pow(rate, ax) * gamma;
}

StationaryComparison compare_stationary_timeavg(double phi,
                                                StationaryBranch branch,
                                                std::int64_t xmax) {
  return compare_stationary_timeavg(phi, branch, branch, xmax);
}

StationaryComparison compare_stationary_timeavg(double phi,
                                                StationaryBranch branch,
                                                StationaryBranch state_branch,
                                                std::int64_t xmax) {
  check_phi_open(phi);
  if (xmax < 0) throw DomainError("compare: xmax must be >= 0");
  const WalkParams state = symmetric_state(state_branch, phi);
  if (mu_inf_origin(phi, state.alpha, state.beta) == 0.0) {
    throw DegenerateError(
        "compare: time-averaged measure vanishes for this branch and phi");
  }
  std::vector<double> ratios;
  for (std::int64_t x = -xmax; x <= xmax; ++x) {
    ratios.push_back(mu_inf(x, phi, state.alpha, state.beta) /
                     stationary_measure(x, phi, 0.5, branch));
  }
  StationaryComparison out;
  out.xmax = xmax;
  double sum = 0.0;
  for (double r : ratios) sum += r;
  out.ratio = sum / static_cast<double>(ratios.size());
  for (double r : ratios) {
    out.max_deviation = std::max(out.max_deviation, std::abs(r - out.ratio));
  }
  // The stationary profile is normalized to mu(0) = 1 = |c|^2.
  out.c_sq = out.ratio;
  const double amp = branch_amplitude(matching_branch(branch), phi);
  out.c_sq_expected = 2.0 * amp * amp;
  out.constant = out.max_deviation <= 1e-12;
  return out;
}

double cgmv_limit_origin(double phi, Complex alpha, Complex beta) {
  check_phi_open(phi);
  const double C = std::cos(2.0 * kPi * phi);
  const double S = std::sin(2.0 * kPi * phi);
  const Complex w = std::polar(1.0, 2.0 * kPi * phi);

  const double rho_a = 1.0 / kSqrt2;
  const double re_b = 0.0;
  const double im_b = 1.0 / kSqrt2;
  const double rho_b = 1.0 / kSqrt2;
  const Complex hat_alpha = alpha;
  const Complex hat_beta = kI * w * beta;

  const double mix = ((std::norm(hat_alpha) - std::norm(hat_beta)) * re_b +
                      2.0 * rho_b * std::real(std::conj(w * hat_alpha) * hat_beta)) /
                     std::sqrt(1.0 - im_b * im_b);

  double limit_2n = 0.0;  // lim P(X_{2n} = 0), summed over zeta_+ and zeta_-
  for (int s : {+1, -1}) {
    // Condition M+ (zeta_+) holds on (1/4, 1), M- (zeta_-) on (0, 3/4).
    const bool holds = s > 0 ? (phi > 0.25 && phi < 1.0) : (phi > 0.0 && phi < 0.75);
    if (!holds) continue;
    const double dist2 = 0.5 * (3.0 - 2.0 * (C + s * S));  // |zeta_s(b) - a|^2
    const double f = 1.0 - rho_a * rho_a / dist2;
    limit_2n += 0.5 * f * f * (1.0 - s * mix);
  }
  return 0.5 * limit_2n;
}

}  // namespace wojcik
