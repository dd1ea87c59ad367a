// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace fractoda {

// Base bump: 1 on [0,1], 0 on [2,inf), quintic-smoothstep transition (C^2).
double eta_base(double rho);

// eta_eps(r) = (1 - eta(2r/eps)) * eta(eps r): equals 1 on [eps, 1/eps],
// vanishes off [eps/2, 2/eps].
class Cutoff {
 public:
  explicit Cutoff(double eps);
  double operator()(double r) const;
  double eps() const { return eps_; }
  double support_lo() const { return 0.5 * eps_; }
  double support_hi() const { return 2.0 / eps_; }
  // r-values where smoothness drops to C^2 (panel breakpoints for quadrature)
  std::vector<double> breakpoints() const;

 private:
  double eps_;
};

// L(eps) = int_0^inf r^{-1} eta_eps(r)^2 dr, by panel quadrature.
double cutoff_log_integral(double eps);

} // namespace fractoda
