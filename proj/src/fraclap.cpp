// SPDX-License-Identifier: Apache-2.0
#include "fractoda/fraclap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fractoda/cutoff.hpp"
#include "fractoda/gammafn.hpp"
#include "fractoda/quadrature.hpp"

namespace fractoda {

RadialFunction log_profile(double s) {
  RadialFunction f;
  f.eval = [s](double r) { return -2.0 * s * std::log(r); };
  f.decay = RadialFunction::Decay::LogType;
  return f;
}

RadialFunction gaussian_profile(double height, double width) {
  RadialFunction f;
  f.eval = [height, width](double r) {
    double x = r / width;
    return height * std::exp(-x * x);
  };
  f.decay = RadialFunction::Decay::Power;
  f.decay_param = 1e30;
  return f;
}

RadialFunction constant_profile(double c) {
  RadialFunction f;
  f.eval = [c](double) { return c; };
  f.decay = RadialFunction::Decay::Power;
  f.decay_param = 0.0;
  return f;
}

namespace {

int integer_dimension(const Params& p) {
  double r = std::round(p.n);
  if (std::abs(p.n - r) > 1e-9 || r < 1.0)
    throw std::domain_error("quadrature modules need integer n >= 1");
  return static_cast<int>(r);
}

} // namespace

double angular_reduced(double d2, double m, double e, int n) {
  if (d2 < 0.0 || m < 0.0) throw std::domain_error("angular_reduced: negative argument");
  if (n == 1) return std::pow(d2, -e) + std::pow(d2 + 2.0 * m, -e);

  const double surf = sphere_area(n - 2);
  const double scale = d2 + 2.0 * m;  // max of the base over the sphere
  if (scale <= 0.0) throw std::domain_error("angular_reduced: degenerate kernel");
  const double a2 = d2 / scale, am = m / scale;

  auto integrand = [&](double phi) {
    double sp = std::sin(0.5 * phi);
    double base = a2 + 2.0 * am * sp * sp;
    return std::pow(std::sin(phi), n - 2) * std::pow(base, -e);
  };

  std::vector<double> breaks;
  double closing = 0.0;
  if (e > 0.0 && am > 1e-300) {
    if (a2 > 0.0) {
      double phistar = std::min(std::sqrt(a2 / am), M_PI);
      breaks.push_back(0.0);
      for (double x = phistar; x < M_PI; x *= 2.0) breaks.push_back(x);
      breaks.push_back(M_PI);
    } else {
      // pure power singularity at phi = 0
      double phi0 = 1e-14;
      double pow_exp = n - 1.0 - 2.0 * e;
      if (pow_exp <= 0.0)
        throw std::domain_error("angular_reduced: non-integrable angular singularity");
      closing = std::pow(0.5 * am, -e) * std::pow(phi0, pow_exp) / pow_exp;
      breaks.push_back(phi0);
      for (double x = phi0 * 4.0; x < M_PI; x *= 4.0) breaks.push_back(x);
      breaks.push_back(M_PI);
    }
  } else {
    breaks = {0.0, 0.25 * M_PI, 0.5 * M_PI, 0.75 * M_PI, M_PI};
  }
  double v = integrate_panels(breaks, 16, integrand) + closing;
  return surf * std::pow(scale, -e) * v;
}

FracLapOperator::FracLapOperator(const Params& p, double rel_tol)
    : p_(p), rel_tol_(rel_tol) {
  p_.require_s_interior();
  const int n = integer_dimension(p_);
  cns_ = gagliardo_constant(p_);
  vcut_ = std::pow(2.0, -20);
  vmax_ = std::max(40.0, 45.0 / (2.0 * p_.s));

  const double e = 0.5 * (n + 2.0 * p_.s);
  auto omega = [&](double v) {
    double u = std::exp(-v);
    double delta = -std::expm1(-v);
    return angular_reduced(delta * delta, 2.0 * u, e, n);
  };

  auto build = [&](int per_panel, NodeTable& t) {
    std::vector<double> breaks = geometric_breaks(vcut_, 1.0, 2.0);
    std::vector<double> tailb = geometric_breaks(1.0, vmax_, 2.0);
    breaks.insert(breaks.end(), tailb.begin() + 1, tailb.end());
    const GaussRule& base = gauss_legendre(per_panel);
    for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
      double c = 0.5 * (breaks[k + 1] + breaks[k]);
      double h = 0.5 * (breaks[k + 1] - breaks[k]);
      for (std::size_t i = 0; i < base.size(); ++i) {
        double v = c + h * base.x[i];
        t.v.push_back(v);
        t.w_omega.push_back(h * base.w[i] * omega(v));
      }
    }
  };
  build(12, coarse_);
  build(24, fine_);

  // int_0^{vcut} x^2 Omega(x) dx, graded to the x^{1-2s} behavior at 0
  std::vector<double> nb = geometric_breaks(vcut_ * std::pow(2.0, -46), vcut_, 2.0);
  near_moment_ = integrate_panels(nb, 12, [&](double x) { return x * x * omega(x); });
}

QuadResult FracLapOperator::apply_raw(const RadialFunction& f, double r) const {
  if (!(r > 0.0)) throw std::domain_error("FracLapOperator: r must be positive");
  const double n = p_.n, s = p_.s;
  const double fr = f(r);
  auto brk = [&](double v) {
    return (fr - f(r * std::exp(v))) * std::exp(-2.0 * s * v) +
           (fr - f(r * std::exp(-v))) * std::exp(-n * v);
  };
  auto sum = [&](const NodeTable& t) {
    double acc = 0.0;
    for (std::size_t i = 0; i < t.v.size(); ++i)
      acc += t.w_omega[i] * brk(t.v[i]);
    return acc;
  };
  double ic = sum(coarse_);
  double if_ = sum(fine_);

  // Taylor coefficient of the symmetrized bracket (= beta v^2 + O(v^3)) by
  // Richardson differences; closes the [0, vcut] gap without sampling in the
  // cancellation-dominated zone.
  const double h = 1.0 / 64.0;
  double t1 = brk(h) / (h * h);
  double t2 = brk(0.5 * h) / (0.25 * h * h);
  double t3 = brk(0.25 * h) / (0.0625 * h * h);
  double r12 = 2.0 * t2 - t1, r23 = 2.0 * t3 - t2;
  double beta = (4.0 * r23 - r12) / 3.0;

  QuadResult q;
  q.value = if_ + beta * near_moment_;
  q.error = std::abs(if_ - ic) + std::abs(beta - r23) * near_moment_;
  q.converged = q.error <= rel_tol_ * std::max(std::abs(q.value), 1e-14);
  return q;
}

QuadResult FracLapOperator::apply(const RadialFunction& f, double r) const {
  QuadResult q = apply_raw(f, r);
  double scale = cns_ * std::pow(r, -2.0 * p_.s);
  q.value *= scale;
  q.error *= scale;
  return q;
}

QuadResult FracLapOperator::apply_at_origin(const RadialFunction& f) const {
  const int n = integer_dimension(p_);
  const double s = p_.s;
  double f0 = f(0.0);
  auto integrand = [&](double rho) { return (f0 - f(rho)) * std::pow(rho, -1.0 - 2.0 * s); };

  const double rho_cut = 1e-6, rho_max = std::exp(vmax_);
  std::vector<double> breaks = geometric_breaks(rho_cut, rho_max, 2.0);
  double ic = integrate_panels(breaks, 12, integrand);
  double if_ = integrate_panels(breaks, 24, integrand);

  // closing [0, rho_cut]: f(0) - f(rho) ~ -f''(0) rho^2 / 2 for even smooth data
  const double h = 1.0 / 64.0;
  auto t = [&](double hh) { return 2.0 * (f(hh) - f0) / (hh * hh); };
  double fpp = (4.0 * t(0.5 * h) - t(h)) / 3.0;
  double closing = -0.5 * fpp * std::pow(rho_cut, 2.0 - 2.0 * s) / (2.0 - 2.0 * s);

  QuadResult q;
  double scale = cns_ * sphere_area(n - 1);
  q.value = scale * (if_ + closing);
  q.error = scale * (std::abs(if_ - ic) + 1e-3 * std::abs(closing));
  q.converged = q.error <= rel_tol_ * std::max(std::abs(q.value), 1e-14);
  return q;
}

QuadResult hardy_kernel_integral(const Params& p) {
  p.require_supercritical();
  p.require_s_interior();
  const double beta = 0.5 * (p.n - 2.0 * p.s);
  RadialFunction pw;
  pw.eval = [beta](double r) { return std::pow(r, -beta); };
  pw.decay = RadialFunction::Decay::Power;
  pw.decay_param = beta;
  FracLapOperator op(p, 1e-6);
  return op.apply_raw(pw, 1.0);
}

QuadResult riesz_potential(const RadialFunction& density, const Params& p, double r) {
  p.require_supercritical();
  p.require_s_interior();
  const int n = integer_dimension(p);
  const double s = p.s;
  const double e = 0.5 * (n - 2.0 * s);
  const double surf = sphere_area(n - 1);
  const double c = riesz_constant(p);

  auto kernelA = [&](double rho) {
    double M = std::max(r, rho), q = std::min(r, rho) / M;
    double delta = 1.0 - q;
    return std::pow(M, -2.0 * e) * angular_reduced(delta * delta, 2.0 * q, e, n);
  };
  auto integrand = [&](double rho) {
    double diff = kernelA(rho) - surf * std::pow(1.0 + rho, -2.0 * e);
    return diff * density(rho) * std::pow(rho, n - 1.0);
  };

  // graded panels: toward 0, toward the weak singularity at rho = r, dyadic mid-field
  const double far = 1e4 * (1.0 + r);
  std::vector<double> breaks;
  for (double x = r * 1e-9; x < 0.5 * r; x *= 4.0) breaks.push_back(x);
  for (double d = 0.5 * r; d > r * 1e-8; d *= 0.5) breaks.push_back(r - d);
  breaks.push_back(r);
  for (double d = r * 1e-8; d < r; d *= 2.0) breaks.push_back(r + d);
  for (double x = 2.0 * r; x < far; x *= 2.0) breaks.push_back(x);
  breaks.push_back(far);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  double ic = integrate_panels(breaks, 8, integrand);
  double if_ = integrate_panels(breaks, 16, integrand);

  // far tail via w = 1/rho; integrand decays like rho^{-2} there
  auto tail_integrand = [&](double w) { return integrand(1.0 / w) / (w * w); };
  std::vector<double> wb = {1e-12 / (1.0 + r), 0.25 / far, 0.5 / far, 1.0 / far};
  double tc = integrate_panels(wb, 8, tail_integrand);
  double tf = integrate_panels(wb, 16, tail_integrand);

  QuadResult q;
  q.value = c * (if_ + tf);
  q.error = c * (std::abs(if_ - ic) + std::abs(tf - tc));
  q.converged = q.error <= 1e-4 * std::max(std::abs(q.value), 1e-12);
  return q;
}

double g_eps(double t, double eps) {
  if (!(t > 0.0)) throw std::domain_error("g_eps: t must be positive");
  Cutoff eta(eps);
  const double lt = std::log(t);
  const double lo = std::log(eta.support_lo()), hi = std::log(eta.support_hi());

  std::vector<double> breaks;
  for (double b : eta.breakpoints()) {
    breaks.push_back(std::log(b));
    breaks.push_back(std::log(b) - lt);
  }
  breaks.push_back(lo);
  breaks.push_back(hi);
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  // clip to the support of the outer factor and split long stretches
  std::vector<double> clipped;
  for (double b : breaks)
    if (b >= lo - 1e-12 && b <= hi + 1e-12) clipped.push_back(b);
  std::vector<double> final_breaks;
  for (std::size_t k = 0; k + 1 < clipped.size(); ++k) {
    double a = clipped[k], b = clipped[k + 1];
    int pieces = std::max(1, static_cast<int>(std::ceil((b - a) / 1.0)));
    for (int i = 0; i < pieces; ++i) final_breaks.push_back(a + (b - a) * i / pieces);
  }
  final_breaks.push_back(clipped.back());

  return integrate_panels(final_breaks, 12, [&](double u) {
    double rr = std::exp(u);
    double a = eta(rr);
    return a * (a - eta(rr * t));
  });
}

} // namespace fractoda
