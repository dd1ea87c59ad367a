// SPDX-License-Identifier: Apache-2.0
#include "fractoda/quadrature.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "fractoda/gammafn.hpp"

namespace fractoda {

void symmetric_tridiag_eigen(const std::vector<double>& diag,
                             const std::vector<double>& offdiag,
                             std::vector<double>& eigenvalues,
                             std::vector<double>& first_components) {
  const int n = static_cast<int>(diag.size());
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) J(i, i) = diag[i];
  for (int i = 0; i + 1 < n; ++i) {
    J(i, i + 1) = offdiag[i];
    J(i + 1, i) = offdiag[i];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("symmetric_tridiag_eigen: eigensolver failed");
  eigenvalues.resize(n);
  first_components.resize(n);
  for (int i = 0; i < n; ++i) {
    eigenvalues[i] = es.eigenvalues()(i);
    first_components[i] = es.eigenvectors()(0, i);
  }
}

namespace {

GaussRule golub_welsch(const std::vector<double>& a, const std::vector<double>& b,
                       double mu0) {
  std::vector<double> ev, fc;
  symmetric_tridiag_eigen(a, b, ev, fc);
  GaussRule r;
  r.x = ev;
  r.w.resize(ev.size());
  for (std::size_t i = 0; i < ev.size(); ++i) r.w[i] = mu0 * fc[i] * fc[i];
  return r;
}

GaussRule make_legendre(int n) {
  std::vector<double> a(n, 0.0), b(n - 1);
  for (int k = 1; k < n; ++k) b[k - 1] = k / std::sqrt(4.0 * k * k - 1.0);
  return golub_welsch(a, b, 2.0);
}

} // namespace

const GaussRule& gauss_legendre(int n) {
  static std::map<int, GaussRule> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, make_legendre(n)).first;
  return it->second;
}

GaussRule gauss_jacobi(int n, double a, double b) {
  if (a <= -1.0 || b <= -1.0)
    throw std::domain_error("gauss_jacobi: weight exponents must exceed -1");
  std::vector<double> al(n), be(n - 1 > 0 ? n - 1 : 0);
  double ab = a + b;
  al[0] = (b - a) / (ab + 2.0);
  for (int k = 1; k < n; ++k) {
    double d = 2.0 * k + ab;
    al[k] = (b * b - a * a) / (d * (d + 2.0));
  }
  for (int k = 1; k < n; ++k) {
    double num, den;
    if (k == 1) {
      num = 4.0 * (1.0 + a) * (1.0 + b);
      den = (ab + 2.0) * (ab + 2.0) * (ab + 3.0);
    } else {
      double d = 2.0 * k + ab;
      num = 4.0 * k * (k + a) * (k + b) * (k + ab);
      den = d * d * (d + 1.0) * (d - 1.0);
    }
    be[k - 1] = std::sqrt(num / den);
  }
  double mu0 = std::pow(2.0, ab + 1.0) * beta_fn(a + 1.0, b + 1.0);
  return golub_welsch(al, be, mu0);
}

GaussRule mapped(const GaussRule& base, double lo, double hi) {
  GaussRule r;
  r.x.resize(base.size());
  r.w.resize(base.size());
  double c = 0.5 * (hi + lo), h = 0.5 * (hi - lo);
  for (std::size_t i = 0; i < base.size(); ++i) {
    r.x[i] = c + h * base.x[i];
    r.w[i] = h * base.w[i];
  }
  return r;
}

GaussRule gauss_power_weight(int n, double b, double L) {
  // weight x^b on [0, L]: map Jacobi(a=0, beta=b) from [-1,1] via x = L(1+t)/2
  GaussRule j = gauss_jacobi(n, 0.0, b);
  GaussRule r;
  r.x.resize(j.size());
  r.w.resize(j.size());
  double scale = std::pow(0.5 * L, b + 1.0);
  for (std::size_t i = 0; i < j.size(); ++i) {
    r.x[i] = 0.5 * L * (1.0 + j.x[i]);
    r.w[i] = scale * j.w[i];
  }
  return r;
}

std::vector<double> geometric_breaks(double lo, double hi, double ratio) {
  std::vector<double> b;
  b.push_back(lo);
  double x = lo;
  while (x * ratio < hi) {
    x *= ratio;
    b.push_back(x);
  }
  b.push_back(hi);
  return b;
}

} // namespace fractoda
