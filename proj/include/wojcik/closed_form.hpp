#pragma once

#include <cstdint>
#include <vector>

#include "wojcik/branch.hpp"
#include "wojcik/walk.hpp"

namespace wojcik {

// Trigonometric quantities derived from phi.
struct TrigPack {
  double C = 0.0;        // cos(2 pi phi)
  double S = 0.0;        // sin(2 pi phi)
  double E_plus = 0.0;   // C + S
  double E_minus = 0.0;  // C - S
  double C_plus = 0.0;   // cos(2 pi phi + pi/4)
  double C_minus = 0.0;  // cos(2 pi phi - pi/4)

  static TrigPack from_phi(double phi);

  // sqrt2 * C_{branch}; equals E_minus for kPlus and E_plus for kMinus.
  double scaled_cos(Branch b) const;
};

// Open-interval indicator of the branch's localization region.
bool branch_active(Branch b, double phi);

// |alpha + i beta|^2 for kPlus, |alpha - i beta|^2 for kMinus.
double branch_weight(Branch b, Complex alpha, Complex beta);

// (1 - sqrt2 C)/(3 - 2 sqrt2 C) for the branch.
double branch_amplitude(Branch b, double phi);

// 1/(3 - 2 sqrt2 C): the per-site decay factor of the localized mass.
double branch_decay(Branch b, double phi);

// Limit of the return probability for the eta presets.
double c_phi(double phi, int eta);

// Point mass at the origin contributed by one branch.
double mu_inf_origin_branch(Branch b, double phi, Complex alpha,
                            Complex beta);

// Time-averaged limit measure at the origin.
double mu_inf_origin(double phi, Complex alpha, Complex beta);

// Time-averaged limit measure at site x.
double mu_inf(std::int64_t x, double phi, Complex alpha, Complex beta);

// Sum over all sites of mu_inf. Throws DegenerateError if an active branch
// does not contract.
double total_point_mass(double phi, Complex alpha, Complex beta);

// Unit-modulus root pair e^{+-i theta0} of 1 + 2(1-E)^2/(3-2E) w + w^2.
struct Theta0 {
  double cos0 = 0.0;
  double sin0 = 0.0;
  double E = 0.0;

  double angle() const;
};

Theta0 theta0(double E);

struct AsymptoticPsi {
  double left_re = 0.0;
  double left_im = 0.0;
  double right_re = 0.0;
  double right_im = 0.0;
};

// Leading oscillatory behaviour of Psi_{2n}(0) for large n.
AsymptoticPsi asymptotic_psi_origin(std::int64_t n, double phi, Complex alpha,
                                    Complex beta);

// Stationary measures supported on the symmetric coin states.
enum class StationaryBranch {
  kBetaIAlpha,       // beta = i alpha
  kBetaMinusIAlpha,  // beta = -i alpha
};

// Branch of the time-averaged measure that the stationary family matches.
Branch matching_branch(StationaryBranch b);

// mu(x) = 2|alpha|^2 |theta_s|^{2|x|} Gamma(phi) (x != 0), 2|alpha|^2 at 0.
double stationary_measure(std::int64_t x, double phi, double alpha_mod2,
                          StationaryBranch branch);

struct StationaryComparison {
  double ratio = 0.0;           // mu_inf(x) / mu_stationary(x), averaged
  double max_deviation = 0.0;   // max |ratio(x) - ratio| over the grid
  double c_sq = 0.0;            // |c|^2 at which the measures coincide
  double c_sq_expected = 0.0;   // 2(1 - sqrt2 C)^2 / (3 - 2 sqrt2 C)^2
  std::int64_t xmax = 0;
  bool constant = false;        // max_deviation <= 1e-12
};

// Compares the time-averaged limit measure of the symmetric state on
// `branch` against the stationary measure normalized to mu(0) = 1, over
// |x| <= xmax. Throws DegenerateError if the time-averaged measure vanishes.
StationaryComparison compare_stationary_timeavg(double phi,
                                                StationaryBranch branch,
                                                std::int64_t xmax = 20);

// Same, but with the time-averaged state taken from `state_branch`. With
// crossed branches the ratio is not constant.
StationaryComparison compare_stationary_timeavg(double phi,
                                                StationaryBranch branch,
                                                StationaryBranch state_branch,
                                                std::int64_t xmax);

// Origin limit written in CGMV variables (rho_a, zeta_pm(b), hat alpha,
// hat beta). Numerically identical to mu_inf_origin.
double cgmv_limit_origin(double phi, Complex alpha, Complex beta);

}  // namespace wojcik
