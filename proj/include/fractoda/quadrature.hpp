// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

namespace fractoda {

struct GaussRule {
  std::vector<double> x;
  std::vector<double> w;

  std::size_t size() const { return x.size(); }

  template <class F>
  double integrate(F&& f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * f(x[i]);
    return s;
  }
};

// Gauss-Legendre on [-1, 1]; cached per n.
const GaussRule& gauss_legendre(int n);

// Gauss-Jacobi on [-1, 1] with weight (1-x)^a (1+x)^b, a, b > -1.
GaussRule gauss_jacobi(int n, double a, double b);

// Rule mapped to [lo, hi].
GaussRule mapped(const GaussRule& base, double lo, double hi);

// Gauss rule on [0, L] with weight x^b, b > -1 (endpoint singularity absorbed).
GaussRule gauss_power_weight(int n, double b, double L);

// Composite Gauss-Legendre over consecutive panels given by breakpoints.
template <class F>
double integrate_panels(const std::vector<double>& breaks, int nodes_per_panel, F&& f) {
  const GaussRule& base = gauss_legendre(nodes_per_panel);
  double s = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    double lo = breaks[k], hi = breaks[k + 1];
    double c = 0.5 * (hi + lo), h = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < base.size(); ++i)
      s += h * base.w[i] * f(c + h * base.x[i]);
  }
  return s;
}

// Geometric breakpoints lo, lo*ratio, ..., capped at hi (hi appended).
std::vector<double> geometric_breaks(double lo, double hi, double ratio);

// Eigen-decomposition of a symmetric tridiagonal matrix (Golub-Welsch helper);
// returns eigenvalues ascending and the first component of each normalized eigenvector.
void symmetric_tridiag_eigen(const std::vector<double>& diag,
                             const std::vector<double>& offdiag,
                             std::vector<double>& eigenvalues,
                             std::vector<double>& first_components);

} // namespace fractoda
