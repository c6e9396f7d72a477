#pragma once

#include <complex>
#include <cstddef>

namespace nidim {

// Value plus an upper bound on the truncation error of the evaluation route
// actually taken (series tail bound or quadrature estimate).
struct EvalResult {
  std::complex<double> value{0.0, 0.0};
  double abs_error_estimate = 0.0;
  std::size_t terms_used = 0;

  double real() const { return value.real(); }
};

namespace specfun {

// Gamma function. Lanczos rational approximation (g = 7, 9-term coefficient
// set) with the reflection formula on Re x < 1/2. Relative accuracy is a few
// parts in 1e14 for |x| <= 50 away from the poles. Throws PoleArgument at
// nonpositive integers.
EvalResult gamma(double x);
EvalResult gamma(std::complex<double> z);

// 1/Gamma, entire: returns 0 at nonpositive integers instead of throwing.
double rgamma(double x);
std::complex<double> rgamma(std::complex<double> z);

// a(a-1)...(a-k+1)/k!, with the empty product equal to 1 for k = 0.
double generalized_binomial(double a, unsigned k);
std::complex<double> generalized_binomial(std::complex<double> a, unsigned k);

// Gauss hypergeometric 2F1(a,b;c;z) for real parameters and z < 1.
// Region strategy: direct series for |z| <= 1/2, Pfaff map z -> z/(z-1) for
// z < -1/2, and the 1-z connection formula for 1/2 < z < 1 (Euler-integral
// quadrature fallback when c-a-b is within 1e-8 of an integer).
// Throws DegenerateC when c is a nonpositive integer that the series reaches.
EvalResult hyp2f1(double a, double b, double c, double z);

// (1/Gamma(s)) int_0^inf tau^{s-1} e^{-tau A} dtau by adaptive quadrature;
// equals A^{-s}. Exists as an executable check of that integral identity.
double power_via_integral(double A, double s, double quadrature_tolerance = 1e-12);

// Theta_n(t) = (sum_{k in Z} e^{-pi t k^2})^n, direct summation with a
// rigorous geometric tail bound (relative error <= 1e-14).
double theta_sum(double t, int n);

// Theta_n(t) - 1 without cancellation (expm1/log1p), needed where the
// remainder is exponentially small.
double theta_sum_minus_one(double t, int n);

// Symmetric beta function B(beta,beta) = Gamma(beta)^2/Gamma(2 beta),
// meromorphically continued (finite for beta in (-1,0)).
double beta_symmetric(double beta);

// Continued incomplete symmetric beta: int_0^u [t(1-t)]^{beta-1} dt evaluated
// as (u^beta/beta) 2F1(beta, 1-beta; 1+beta; u) for u <= 1/2 and by the
// complement for u > 1/2. For beta < 0 this is the analytic continuation in
// beta of the (then divergent) integral.
double incomplete_beta_symmetric(double u, double beta);

}  // namespace specfun
}  // namespace nidim
