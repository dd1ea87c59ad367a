// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

namespace fractoda {

// Root configuration: dimension n, fractional order s, number of equations Q.
// 0 < s <= 1 (s = 1 admitted only for threshold-style evaluation), Q >= 2, n >= 1.
// Threshold-related operations additionally require n > 2s; n is allowed to be
// real-valued there so the critical curve can be traced.
struct Params {
  double n = 3;
  double s = 0.5;
  int Q = 2;

  void validate() const;           // basic ranges
  void require_supercritical() const;  // n > 2s
  void require_s_interior() const;     // 0 < s < 1 (extension/kappa operations)
};

// kappa_s = Gamma(1-s) / (2^{2s-1} Gamma(s)), 0 < s < 1.
double kappa(double s);

// A_{n,s} = 2^{2s} Gamma(n/2) Gamma(1+s) / Gamma((n-2s)/2):
// (-Delta)^s (-2s log r) = A_{n,s} r^{-2s}.
double a_ns(const Params& p);

// Lambda_{n,s} = 2^{2s} Gamma((n+2s)/4)^2 / Gamma((n-2s)/4)^2 (Hardy constant).
double lambda_ns(const Params& p);

// lambda_{n,s,alpha,Q} = 2^{2s-1} Gamma(n/2)Gamma(1+s)/Gamma((n-2s)/2) * alpha(Q-alpha),
// alpha in 1..Q-1.
double lambda_alpha(const Params& p, int alpha);

// calA_{n,s,alpha,Q} = 2^{2s-1} Gamma(n/2)Gamma(1+s)/Gamma((n-2s)/2) * (2 alpha - 1 - Q),
// alpha in 1..Q.
double cal_a_alpha(const Params& p, int alpha);

// Strict inequality Gamma(n/2)Gamma(1+s)/Gamma((n-2s)/2) * Q(Q-1)/2 > Gamma((n+2s)/4)^2/Gamma((n-2s)/4)^2.
bool threshold_holds(const Params& p);

// lhs - rhs of the threshold inequality (positive iff it holds).
double threshold_margin(const Params& p);

// The crossing n* of the threshold on (2s, 200), by bracketing + bisection to 1e-8.
// Throws std::runtime_error("no crossing in bracket") when the bracket does not change sign.
double critical_dimension(double s, int Q);

struct RayleighResult {
  double value = 0;               // max of sum alpha(Q-alpha)(c_{a+1}-c_a)^2 / sum c_a^2, sum c = 0
  std::vector<double> argmax;     // unit norm, first nonzero coordinate positive
};

RayleighResult max_rayleigh(int Q);

// Normalization constant of the fractional Laplacian (the paper's C_{n,s} in the
// stability form): C_{n,s} = 2^{2s} s Gamma((n+2s)/2) / (pi^{n/2} Gamma(1-s)).
double gagliardo_constant(const Params& p);

// Riesz constant: c(n,s) (-Delta)^s |x|^{-(n-2s)} = delta, c(n,s) = Gamma((n-2s)/2)/(2^{2s} pi^{n/2} Gamma(s)).
double riesz_constant(const Params& p);

// Poisson kernel constant: P(X,z) = d_{n,s} y^{2s} |(x-z,y)|^{-(n+2s)}, unit mass;
// d_{n,s} = Gamma((n+2s)/2)/(pi^{n/2} Gamma(s)).
double poisson_constant(const Params& p);

struct ConstantSet {
  double kappa;        // NaN at s = 1 (domain boundary)
  double a_ns;
  double lambda_ns;
  std::vector<double> lambda_alpha;  // alpha = 1..Q-1
  std::vector<double> cal_a_alpha;   // alpha = 1..Q
  double riesz_c;
  double poisson_d;
  double gagliardo_c;
};

ConstantSet constant_set(const Params& p);

} // namespace fractoda
