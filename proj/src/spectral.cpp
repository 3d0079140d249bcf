#include "wojcik/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wojcik/closed_form.hpp"
#include "wojcik/errors.hpp"

namespace wojcik {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr Complex kI{0.0, 1.0};

Complex omega_of(double phi) { return std::polar(1.0, 2.0 * kPi * phi); }

// Numerator of Xi0(z) phi0, i.e. Lambda0(z) Xi0(z) phi0.
Spinor xi0_numerator(Complex z, double phi, Complex alpha, Complex beta) {
  const Complex h = omega_of(phi) * f_tilde(z) / kSqrt2;
  return {alpha * (1.0 - h) - beta * h, alpha * h + beta * (1.0 - h)};
}

using CSeries = std::vector<Complex>;

CSeries cmul(const CSeries& a, const CSeries& b) {
  const std::size_t n = std::min(a.size(), b.size());
  CSeries c(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == Complex{}) continue;
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// 1/a for a(0) != 0.
CSeries cinverse(const CSeries& a) {
  CSeries inv(a.size());
  inv[0] = 1.0 / a[0];
  for (std::size_t k = 1; k < a.size(); ++k) {
    Complex acc{};
    for (std::size_t j = 1; j <= k; ++j) acc += a[j] * inv[k - j];
    inv[k] = -acc * inv[0];
  }
  return inv;
}

double polish_root(double theta, double phi) {
  for (int it = 0; it < 8; ++it) {
    const Complex z = std::polar(1.0, theta);
    const Complex g = big_lambda0(z, phi);
    const Complex dg = big_lambda0_derivative(z, phi) * kI * z;
    const double d2 = std::norm(dg);
    if (d2 == 0.0) break;
    const double delta = std::real(std::conj(dg) * g) / d2;
    theta -= delta;
    if (std::abs(delta) < 1e-15) break;
  }
  return std::remainder(theta, 2.0 * kPi);
}

}  // namespace

Complex f_tilde(Complex z) {
  const Complex z2 = z * z;
  return (z2 + 1.0 - std::sqrt(z2 * z2 + 1.0)) / kSqrt2;
}

Complex f_tilde_derivative(Complex z) {
  const Complex z2 = z * z;
  return (2.0 * z - 2.0 * z * z2 / std::sqrt(z2 * z2 + 1.0)) / kSqrt2;
}

double f_tilde_phase(double theta) {
  const double c = kSqrt2 * std::cos(theta);
  if (std::abs(c) > 1.0 + 1e-12) {
    throw DomainError("f_tilde_phase: |cos theta| exceeds 1/sqrt2");
  }
  const double s = std::sin(theta);
  // sin(theta) = 0 would force |cos theta| = 1, outside the band.
  const double mag = std::sqrt(std::max(0.0, 2.0 * s * s - 1.0));
  return std::atan2(s > 0.0 ? mag : -mag, std::clamp(c, -1.0, 1.0));
}

double f_tilde_phase_derivative(double theta) {
  const double s = std::sin(theta);
  const double root = std::sqrt(2.0 * s * s - 1.0);
  return kSqrt2 * s / (s > 0.0 ? root : -root);
}

Complex lambda_tilde(Complex z) { return z / (f_tilde(z) - kSqrt2); }

double lambda_tilde_sq_on_circle(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return 3.0 - 4.0 * c * c -
         2.0 * kSqrt2 * std::abs(s) * std::sqrt(std::max(0.0, 1.0 - 2.0 * c * c));
}

Complex big_lambda0(Complex z, double phi) {
  const Complex wf = omega_of(phi) * f_tilde(z);
  return 1.0 - kSqrt2 * wf + wf * wf;
}

Complex big_lambda0_derivative(Complex z, double phi) {
  const Complex w = omega_of(phi);
  return (-kSqrt2 * w + 2.0 * w * w * f_tilde(z)) * f_tilde_derivative(z);
}

Complex SpectralPoint::z() const { return std::polar(1.0, theta_s); }

std::vector<SpectralPoint> singular_points(double phi) {
  if (!(phi > 0.0 && phi < 1.0)) {
    throw DomainError("singular_points: phi must lie in (0,1), got " +
                      std::to_string(phi));
  }
  std::vector<SpectralPoint> out;
  for (Branch b : kBranches) {
    if (!branch_active(b, phi)) continue;
    // f(z_s) = e^{-i eps}; solving cos(phase) = sqrt2 cos(theta) on
    // theta + phase = -eps gives the pair below.
    const double eps = 2.0 * kPi * phi + (b == Branch::kPlus ? kPi / 4.0 : -kPi / 4.0);
    const double d = std::sqrt(3.0 - 2.0 * kSqrt2 * std::cos(eps));
    const double c = std::sin(eps) / d;
    const double s = (std::cos(eps) - kSqrt2) / d;
    for (int sign : {+1, -1}) {
      SpectralPoint p;
      p.branch = b;
      p.sign = sign;
      p.theta_s = polish_root(std::atan2(sign * s, sign * c), phi);
      if (p.theta_s <= -kPi) p.theta_s += 2.0 * kPi;
      const Complex z = p.z();
      if (std::abs(big_lambda0(z, phi)) > 1e-10) {
        throw DegenerateError("singular_points: closed-form point is not a root");
      }
      p.lambda_sq = std::norm(lambda_tilde(z));
      const double dphase = f_tilde_phase_derivative(p.theta_s);
      p.residue_prefactor = 1.0 / (2.0 * (1.0 + dphase) * (1.0 + dphase));
      out.push_back(p);
    }
  }
  return out;
}

double residue_norm_closed(const SpectralPoint& p, double phi, Complex alpha,
                           Complex beta) {
  const double amp = branch_amplitude(p.branch, phi);
  return 0.5 * amp * amp * branch_weight(p.branch, alpha, beta);
}

double residue_norm_phase(const SpectralPoint& p, double phi, Complex alpha,
                          Complex beta) {
  return xi0_numerator(p.z(), phi, alpha, beta).norm2() * p.residue_prefactor;
}

double residue_norm_direct(const SpectralPoint& p, double phi, Complex alpha,
                           Complex beta) {
  const Complex z = p.z();
  return xi0_numerator(z, phi, alpha, beta).norm2() /
         std::norm(big_lambda0_derivative(z, phi));
}

std::vector<ResidueContribution> residue_norms_origin(double phi,
                                                      Complex alpha,
                                                      Complex beta) {
  std::vector<ResidueContribution> out;
  for (const auto& p : singular_points(phi)) {
    out.push_back({p, residue_norm_closed(p, phi, alpha, beta)});
  }
  return out;
}

double residue_mass_at(std::int64_t x, double phi, Complex alpha,
                       Complex beta) {
  double total = 0.0;
  const Complex w = omega_of(phi);
  for (const auto& p : singular_points(phi)) {
    const Complex z = p.z();
    const Spinor num = xi0_numerator(z, phi, alpha, beta);
    const Complex dl = big_lambda0_derivative(z, phi);
    const Spinor res0{num.left / dl, num.right / dl};
    if (x == 0) {
      total += res0.norm2();
      continue;
    }
    const Complex lam = lambda_tilde(z);
    const Complex f = f_tilde(z);
    const auto ax = x < 0 ? -x : x;
    Spinor v;
    if (x > 0) {
      const Complex s = w / kSqrt2 * (res0.left - res0.right) *
                        std::pow(lam, static_cast<double>(ax - 1));
      v = {lam * f * s, z * s};
    } else {
      const Complex s = w / kSqrt2 * (res0.left + res0.right) *
                        std::pow(-lam, static_cast<double>(ax - 1));
      v = {z * s, -lam * f * s};
    }
    total += v.norm2();
  }
  return total;
}

std::vector<Mat2> xi_tilde0_series(double phi, std::int64_t N) {
  if (N < 0) throw DomainError("xi_tilde0_series: N must be >= 0");
  const Complex w = omega_of(phi);
  // g = sqrt2 f = z^2 + 1 - sqrt(1 + z^4), exact up to the final conversion.
  const PowerSeries root = sqrt1z4_series(N);
  CSeries wg(static_cast<std::size_t>(N + 1));
  for (std::int64_t k = 0; k <= N; ++k) {
    Rational g = -root[k];
    if (k == 0) g += 1;
    if (k == 2) g += 1;
    wg[k] = w * g.convert_to<double>();
  }
  // Lambda0 = 1 - w g + (w g)^2 / 2.
  CSeries lam = cmul(wg, wg);
  for (std::size_t k = 0; k < lam.size(); ++k) lam[k] = -wg[k] + 0.5 * lam[k];
  lam[0] += 1.0;
  const CSeries inv = cinverse(lam);
  // Numerator (1 - wg/2) I + (wg/2) [[0, -1], [1, 0]].
  CSeries diag(wg.size()), off(wg.size());
  for (std::size_t k = 0; k < wg.size(); ++k) {
    diag[k] = -0.5 * wg[k];
    off[k] = 0.5 * wg[k];
  }
  diag[0] += 1.0;
  const CSeries d = cmul(inv, diag);
  const CSeries o = cmul(inv, off);
  std::vector<Mat2> out(static_cast<std::size_t>(N + 1));
  for (std::size_t k = 0; k < out.size(); ++k) {
    out[k] = Mat2{{{d[k], -o[k]}, {o[k], d[k]}}};
  }
  return out;
}

}  // namespace wojcik
