// SPDX-License-Identifier: Apache-2.0
#include "fractoda/cutoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fractoda/quadrature.hpp"

namespace fractoda {

namespace {
double smoothstep5(double x) {
  // C^2 monotone step on [0,1]
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return x * x * x * (10.0 + x * (-15.0 + 6.0 * x));
}
} // namespace

double eta_base(double rho) {
  if (rho <= 1.0) return 1.0;
  if (rho >= 2.0) return 0.0;
  return 1.0 - smoothstep5(rho - 1.0);
}

Cutoff::Cutoff(double eps) : eps_(eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw std::domain_error("Cutoff: eps must be in (0, 1/2)");
}

double Cutoff::operator()(double r) const {
  if (r <= 0.5 * eps_ || r >= 2.0 / eps_) return 0.0;
  return (1.0 - eta_base(2.0 * r / eps_)) * eta_base(eps_ * r);
}

std::vector<double> Cutoff::breakpoints() const {
  return {0.5 * eps_, eps_, 1.0 / eps_, 2.0 / eps_};
}

double cutoff_log_integral(double eps) {
  Cutoff eta(eps);
  auto bp = eta.breakpoints();
  std::vector<double> breaks;
  breaks.push_back(std::log(bp.front()));
  // transition zones resolved, interior split per unit of log r
  for (std::size_t k = 0; k + 1 < bp.size(); ++k) {
    double lo = std::log(bp[k]), hi = std::log(bp[k + 1]);
    int pieces = std::max(1, static_cast<int>(std::ceil(hi - lo)));
    for (int i = 1; i <= pieces; ++i) breaks.push_back(lo + (hi - lo) * i / pieces);
  }
  return integrate_panels(breaks, 16, [&](double u) {
    double v = eta(std::exp(u));
    return v * v;
  });
}

} // namespace fractoda
