#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "wojcik/closed_form.hpp"
#include "wojcik/series.hpp"
#include "wojcik/spectral.hpp"

namespace wojcik::cli {

namespace {

struct Check {
  std::string name;
  std::function<bool(std::string&)> body;
};

std::vector<WalkParams> sample_states(double phi) {
  const double r = 1.0 / std::sqrt(2.0);
  return {
      WalkParams::preset(phi, 1),
      WalkParams::preset(phi, -1),
      {phi, {1.0, 0.0}, {0.0, 0.0}},
      {phi, {0.6, 0.0}, {0.0, 0.8}},
      {phi, {r * 0.6, r * 0.6}, {-0.8 * r, 0.8 * r}},
  };
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

}  // namespace

bool run_verify(std::ostream& report) {
  const std::vector<Check> checks = {
      {"unitarity",
       [](std::string& detail) {
         double worst = 0.0;
         for (double phi : {0.0, 0.125, 0.5, 0.9}) {
           worst = std::max(worst, coin_at(0, phi).unitarity_defect());
           const WalkState s = evolve(WalkParams::preset(phi, 1), 500);
           worst = std::max(worst, std::abs(s.total_probability() - 1.0));
         }
         detail = "max defect " + sci(worst);
         return worst <= 1e-12;
       }},
      {"hadamard-returns",
       [](std::string& detail) {
         const double expected[] = {0.5, 0.125, 0.125, 0.0703125, 0.0703125,
                                    0.048828125, 0.048828125};
         double worst = 0.0;
         for (int k = 0; k < 7; ++k) {
           const double p = return_probability(WalkParams::preset(0.0, 1), 2 * (k + 1));
           worst = std::max(worst, std::abs(p - expected[k]));
         }
         detail = "max err " + sci(worst);
         return worst <= 1e-12;
       }},
      {"renewal-vs-evolution",
       [](std::string& detail) {
         double worst = 0.0;
         for (double phi : {0.125, 1.0 / 3.0, 0.5, 0.9}) {
           for (const auto& p : sample_states(phi)) {
             const auto seq = psi_origin_sequence(40, p);
             Propagator prop(p, 80);
             for (std::int64_t n = 0; n <= 40; ++n) {
               const Spinor a = prop.at(0);
               worst = std::max(worst, std::abs(a.left - seq[n].left) +
                                           std::abs(a.right - seq[n].right));
               if (n < 40) {
                 prop.advance();
                 prop.advance();
               }
             }
           }
         }
         detail = "max err " + sci(worst);
         return worst <= 1e-10;
       }},
      {"series-triple-equivalence",
       [](std::string& detail) {
         const PowerSeries gf = rstar_series(17);
         for (std::int64_t n = 1; n <= 17; ++n) {
           if (rstar(n) != gf[n] || rstar(n) != path_oracle_rstar(n)) {
             detail = "mismatch at n=" + std::to_string(n);
             return false;
           }
         }
         detail = "n <= 17 exact";
         return true;
       }},
      {"spectral-closure",
       [](std::string& detail) {
         double worst = 0.0;
         for (int k = 1; k <= 20; ++k) {
           const double phi = k / 21.0;
           for (const auto& p : sample_states(phi)) {
             double sum = 0.0;
             for (const auto& c : residue_norms_origin(phi, p.alpha, p.beta)) {
               worst = std::max(worst, std::abs(big_lambda0(c.point.z(), phi)));
               sum += c.norm_sq;
             }
             worst = std::max(worst, std::abs(sum - mu_inf_origin(phi, p.alpha, p.beta)));
           }
         }
         detail = "max err " + sci(worst);
         return worst <= 1e-10;
       }},
      {"cgmv-agreement",
       [](std::string& detail) {
         double worst = 0.0;
         for (int k = 1; k <= 20; ++k) {
           const double phi = k / 21.0;
           for (const auto& p : sample_states(phi)) {
             worst = std::max(worst, std::abs(cgmv_limit_origin(phi, p.alpha, p.beta) -
                                              mu_inf_origin(phi, p.alpha, p.beta)));
           }
         }
         detail = "max err " + sci(worst);
         return worst <= 1e-14;
       }},
      {"stationary-coincidence",
       [](std::string& detail) {
         double worst = 0.0;
         for (double phi : {0.3, 0.5}) {
           for (auto b : {StationaryBranch::kBetaIAlpha, StationaryBranch::kBetaMinusIAlpha}) {
             if (!branch_active(matching_branch(b), phi)) continue;
             const auto cmp = compare_stationary_timeavg(phi, b);
             worst = std::max({worst, cmp.max_deviation,
                               std::abs(cmp.c_sq - cmp.c_sq_expected)});
           }
         }
         detail = "max deviation " + sci(worst);
         return worst <= 1e-12;
       }},
      {"limit-vs-simulation",
       [](std::string& detail) {
         double worst = 0.0;
         for (int eta : {1, -1}) {
           const WalkParams p = WalkParams::preset(0.5, eta);
           const Measure m = time_average(p, 2000, 5);
           for (std::int64_t x = -5; x <= 5; ++x) {
             worst = std::max(worst, std::abs(m.at(x) - mu_inf(x, 0.5, p.alpha, p.beta)));
           }
         }
         detail = "max err " + sci(worst);
         return worst <= 1e-2;
       }},
  };

  bool all = true;
  for (const auto& c : checks) {
    std::string detail;
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    all = all && ok;
    report << (ok ? "PASS " : "FAIL ") << c.name << " (" << detail << ")\n";
  }
  report << (all ? "all checks passed" : "some checks failed") << '\n';
  return all;
}

}  // namespace wojcik::cli
