#pragma once

#include <cstdint>
#include <vector>

#include "wojcik/branch.hpp"
#include "wojcik/series.hpp"
#include "wojcik/walk.hpp"

namespace wojcik {

// f(z) = (z^2 + 1 - sqrt(z^4 + 1)) / sqrt2 with the principal square root,
// so f(0) = 0. Satisfies f^2 - sqrt2 (1 + z^2) f + z^2 = 0.
Complex f_tilde(Complex z);

// df/dz.
Complex f_tilde_derivative(Complex z);

// Phase shift of f on the unit circle: f(e^{i th}) = e^{i(th + phase)} when
// |cos th| <= 1/sqrt2. Throws DomainError outside that band.
double f_tilde_phase(double theta);
// d(phase)/d(theta) = sqrt2 sin th / (sgn(sin th) sqrt(2 sin^2 th - 1)).
double f_tilde_phase_derivative(double theta);

// lambda(z) = z / (f(z) - sqrt2).
Complex lambda_tilde(Complex z);

// |lambda(e^{i th})|^2 = 3 - 4cos^2 th - 2 sqrt2 |sin th| sqrt(1 - 2cos^2 th),
// valid on the band |cos th| <= 1/sqrt2.
double lambda_tilde_sq_on_circle(double theta);

// 1 - sqrt2 w f(z) + w^2 f(z)^2 with w = e^{2 pi i phi}.
Complex big_lambda0(Complex z, double phi);
// d/dz of big_lambda0.
Complex big_lambda0_derivative(Complex z, double phi);

struct SpectralPoint {
  double theta_s = 0.0;  // in (-pi, pi]
  Branch branch = Branch::kPlus;
  int sign = +1;              // which member of the +- pair
  double lambda_sq = 0.0;     // |lambda(e^{i theta_s})|^2
  double residue_prefactor = 0.0;  // |Res(1/Lambda0)|^2 = 1/(2|1+phase'|^2)

  Complex z() const;
};

// Unit-circle zeros of Lambda0 for phi in (0,1), at most four. A branch
// contributes its +- pair only where it is active (see branch.hpp). Each
// point is placed from the closed form and then polished.
std::vector<SpectralPoint> singular_points(double phi);

// Squared residue norm ||Res(Xi0(z) phi0 : z = z_s)||^2 from the closed form
// (1/2) ((1 - sqrt2 C)/(3 - 2 sqrt2 C))^2 |alpha -+ i beta|^2.
double residue_norm_closed(const SpectralPoint& p, double phi, Complex alpha,
                           Complex beta);

// Same quantity evaluated from the numerator of Xi0(z) phi0 at z_s and the
// phase-derivative prefactor.
double residue_norm_phase(const SpectralPoint& p, double phi, Complex alpha,
                          Complex beta);

// Same quantity from the complex derivative of Lambda0 at z_s.
double residue_norm_direct(const SpectralPoint& p, double phi, Complex alpha,
                           Complex beta);

struct ResidueContribution {
  SpectralPoint point;
  double norm_sq = 0.0;
};

// Closed-form residue norms, one per singular point.
std::vector<ResidueContribution> residue_norms_origin(double phi,
                                                      Complex alpha,
                                                      Complex beta);

// ||Res(Xi_x(z) phi0 : z = z_s)||^2 summed over the singular points, with
// Xi_x for |x| >= 1 built from lambda(z), f(z) and Xi0(z).
double residue_mass_at(std::int64_t x, double phi, Complex alpha, Complex beta);

// Power series of the 2x2 matrix Xi0(z) through z^N; element k is the z^k
// coefficient.
std::vector<Mat2> xi_tilde0_series(double phi, std::int64_t N);

}  // namespace wojcik
