// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>
#include <vector>

#include "fractoda/constants.hpp"

namespace fractoda {

// Radial profile r -> f(r), r > 0, with decay metadata used for quadrature
// truncation and admissibility.
struct RadialFunction {
  std::function<double(double)> eval;
  enum class Decay { LogType, Power, CompactSupport } decay = Decay::Power;
  double decay_param = 0.0;   // power exponent, or support radius
  double smoothness = 2.0;    // Holder/C^k hint

  double operator()(double r) const { return eval(r); }
};

RadialFunction log_profile(double s);                 // f(r) = -2s log r
RadialFunction gaussian_profile(double height = 1.0, double width = 1.0);
RadialFunction constant_profile(double c);

// int_{S^{n-1}} (d2 + m (1 - <theta,omega>))^{-e} domega, d2 >= 0, m >= 0, e real.
// For n = 1 this is the two-point sum over <theta,omega> = +-1.
double angular_reduced(double d2, double m, double e, int n);

struct QuadResult {
  double value = 0.0;
  double error = 0.0;       // estimate from rule refinement
  bool converged = true;
};

// Principal-value fractional Laplacian for radial profiles. Node tables and
// angular kernel values are cached per (n, s) at construction; apply() is
// const and thread-safe.
class FracLapOperator {
 public:
  explicit FracLapOperator(const Params& p, double rel_tol = 1e-4);

  QuadResult apply(const RadialFunction& f, double r) const;
  QuadResult apply_at_origin(const RadialFunction& f) const;

  // The v-integral before the C_{n,s} r^{-2s} prefactor (used by the raw
  // kernel-integral cross-checks).
  QuadResult apply_raw(const RadialFunction& f, double r) const;

  const Params& params() const { return p_; }
  double normalization() const { return cns_; }

 private:
  struct NodeTable {
    std::vector<double> v;
    std::vector<double> w_omega;  // quadrature weight times Omega(v)
  };

  Params p_;
  double rel_tol_;
  double cns_;
  double vcut_;
  double vmax_;
  double near_moment_;  // int_0^{vcut} x^2 Omega(x) dx
  NodeTable coarse_, fine_;
};

// Raw double kernel integral of Section-2 type:
//   pv int_0^inf int_{S^{n-1}} (1 - t^{-(n-2s)/2}) t^{n-1} (t^2+1-2t<theta,omega>)^{-(n+2s)/2} dt domega.
// Multiplied by gagliardo_constant it equals lambda_ns.
QuadResult hardy_kernel_integral(const Params& p);

// Renormalized Riesz potential of a radial density:
//   c(n,s) int ( |x-z|^{-(n-2s)} - (1+|z|)^{-(n-2s)} ) density(z) dz  at |x| = r.
QuadResult riesz_potential(const RadialFunction& density, const Params& p, double r);

// g_eps(t) = int_0^inf r^{-1} eta_eps(r) (eta_eps(r) - eta_eps(rt)) dr.
double g_eps(double t, double eps);

} // namespace fractoda
