// SPDX-License-Identifier: Apache-2.0
#include "fractoda/constants.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>

#include "fractoda/gammafn.hpp"

namespace fractoda {

void Params::validate() const {
  if (!(n >= 1.0)) throw std::domain_error("Params: n must be >= 1");
  if (!(s > 0.0 && s <= 1.0)) throw std::domain_error("Params: s must be in (0, 1]");
  if (Q < 2) throw std::domain_error("Params: Q must be >= 2");
}

void Params::require_supercritical() const {
  validate();
  if (!(n > 2.0 * s)) throw std::domain_error("Params: requires n > 2s");
}

void Params::require_s_interior() const {
  validate();
  if (!(s < 1.0)) throw std::domain_error("Params: requires 0 < s < 1");
}

double kappa(double s) {
  if (!(s > 0.0 && s < 1.0)) throw std::domain_error("kappa: s must be in (0, 1)");
  return gamma_fn(1.0 - s) / (std::pow(2.0, 2.0 * s - 1.0) * gamma_fn(s));
}

namespace {

// Shared factor Gamma(n/2) Gamma(1+s) / Gamma((n-2s)/2).
double gamma_factor(const Params& p) {
  p.require_supercritical();
  return gamma_fn(0.5 * p.n) * gamma_fn(1.0 + p.s) / gamma_fn(0.5 * (p.n - 2.0 * p.s));
}

} // namespace

double a_ns(const Params& p) {
  return std::pow(2.0, 2.0 * p.s) * gamma_factor(p);
}

double lambda_ns(const Params& p) {
  p.require_supercritical();
  double g = gamma_fn(0.25 * (p.n + 2.0 * p.s)) / gamma_fn(0.25 * (p.n - 2.0 * p.s));
  return std::pow(2.0, 2.0 * p.s) * g * g;
}

double lambda_alpha(const Params& p, int alpha) {
  if (alpha < 1 || alpha > p.Q - 1)
    throw std::out_of_range("lambda_alpha: alpha must be in 1..Q-1");
  return std::pow(2.0, 2.0 * p.s - 1.0) * gamma_factor(p) *
         (static_cast<double>(alpha) * (p.Q - alpha));
}

double cal_a_alpha(const Params& p, int alpha) {
  if (alpha < 1 || alpha > p.Q)
    throw std::out_of_range("cal_a_alpha: alpha must be in 1..Q");
  return std::pow(2.0, 2.0 * p.s - 1.0) * gamma_factor(p) *
         (2.0 * alpha - 1.0 - p.Q);
}

double threshold_margin(const Params& p) {
  p.require_supercritical();
  double lhs = gamma_factor(p) * 0.5 * p.Q * (p.Q - 1.0);
  double g = gamma_fn(0.25 * (p.n + 2.0 * p.s)) / gamma_fn(0.25 * (p.n - 2.0 * p.s));
  return lhs - g * g;
}

bool threshold_holds(const Params& p) { return threshold_margin(p) > 0.0; }

double critical_dimension(double s, int Q) {
  Params probe{2.0 * s + 1e-9, s, Q};
  probe.validate();
  auto margin = [&](double n) {
    Params q{n, s, Q};
    return threshold_margin(q);
  };
  double lo = 2.0 * s + 1e-6, hi = 200.0;
  double flo = margin(lo), fhi = margin(hi);
  if (flo * fhi > 0.0) throw std::runtime_error("no crossing in bracket");
  for (int it = 0; it < 200 && hi - lo > 1e-8; ++it) {
    double mid = 0.5 * (lo + hi);
    double fm = margin(mid);
    if (fm == 0.0) return mid;
    if (flo * fm < 0.0) {
      hi = mid;
    } else {
      lo = mid;
      flo = fm;
    }
  }
  return 0.5 * (lo + hi);
}

RayleighResult max_rayleigh(int Q) {
  if (Q < 2) throw std::domain_error("max_rayleigh: Q must be >= 2");
  // A = D^T W D with (Dc)_a = c_{a+1} - c_a, W = diag(a(Q-a)); A annihilates
  // constants, so its top eigenpair solves the zero-sum constrained problem.
  Eigen::MatrixXd A = Eigen::MatrixXd::Zero(Q, Q);
  for (int a = 1; a <= Q - 1; ++a) {
    double w = static_cast<double>(a) * (Q - a);
    A(a - 1, a - 1) += w;
    A(a, a) += w;
    A(a - 1, a) -= w;
    A(a, a - 1) -= w;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(A);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("max_rayleigh: eigensolver failed");
  RayleighResult r;
  r.value = es.eigenvalues()(Q - 1);
  Eigen::VectorXd v = es.eigenvectors().col(Q - 1);
  v -= Eigen::VectorXd::Constant(Q, v.mean());  // project to zero sum exactly
  v.normalize();
  for (int i = 0; i < Q; ++i) {
    if (std::abs(v(i)) > 1e-12) {
      if (v(i) < 0) v = -v;
      break;
    }
  }
  r.argmax.assign(v.data(), v.data() + Q);
  return r;
}

double gagliardo_constant(const Params& p) {
  p.require_s_interior();
  return std::pow(2.0, 2.0 * p.s) * p.s * gamma_fn(0.5 * (p.n + 2.0 * p.s)) /
         (std::pow(M_PI, 0.5 * p.n) * gamma_fn(1.0 - p.s));
}

double riesz_constant(const Params& p) {
  p.require_s_interior();
  p.require_supercritical();
  return gamma_fn(0.5 * (p.n - 2.0 * p.s)) /
         (std::pow(2.0, 2.0 * p.s) * std::pow(M_PI, 0.5 * p.n) * gamma_fn(p.s));
}

double poisson_constant(const Params& p) {
  p.require_s_interior();
  return gamma_fn(0.5 * (p.n + 2.0 * p.s)) /
         (std::pow(M_PI, 0.5 * p.n) * gamma_fn(p.s));
}

ConstantSet constant_set(const Params& p) {
  p.require_supercritical();
  ConstantSet c;
  c.kappa = p.s < 1.0 ? kappa(p.s) : std::numeric_limits<double>::quiet_NaN();
  c.a_ns = a_ns(p);
  c.lambda_ns = lambda_ns(p);
  for (int a = 1; a <= p.Q - 1; ++a) c.lambda_alpha.push_back(lambda_alpha(p, a));
  for (int a = 1; a <= p.Q; ++a) c.cal_a_alpha.push_back(cal_a_alpha(p, a));
  if (p.s < 1.0) {
    c.riesz_c = riesz_constant(p);
    c.poisson_d = poisson_constant(p);
    c.gagliardo_c = gagliardo_constant(p);
  } else {
    c.riesz_c = c.poisson_d = c.gagliardo_c = std::numeric_limits<double>::quiet_NaN();
  }
  return c;
}

} // namespace fractoda
