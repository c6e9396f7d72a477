#pragma once

#include <functional>

#include "nidim/params.hpp"

namespace nidim::loops {

enum class Method { ClosedForm, FeynmanQuadrature, DirectQuadrature, DimregLimit };

struct LoopResult {
  double value = 0.0;
  Method method = Method::ClosedForm;
  double error_estimate = 0.0;
  DeformationParams params;
  double external_momentum_sq = 0.0;  // k^2, bubble only
};

// m^2 = M^2 alpha n/(1-2 alpha); the effective mass adds m0^2 on top.
double mass_squared(const DeformationParams& params);
double effective_mass_squared(const DeformationParams& params);

// ---- tadpole: integral of (M^2+p^2)^alpha / (p^2 + mtilde^2) over R^n ----

// Closed hypergeometric form
//   -pi^{n/2} Gamma(1-n/2-alpha) / (Gamma(-alpha) alpha) (M^2)^{alpha+n/2-1}
//     2F1(1, 1-alpha-n/2; 1-alpha; 1 - mtilde^2/M^2),
// derived for alpha < 0 and analytically continued; finite for 0 < |alpha| < 1
// away from the Gamma poles at d = n + 2 alpha in {2, 4, ...}.
LoopResult tadpole_closed(const DeformationParams& params);

// One-parameter representation
//   +pi^{n/2} Gamma(1-n/2-alpha)/Gamma(-alpha)
//     int_0^1 (1-x)^{-alpha-1} [(1-x) M^2 + x mtilde^2]^{alpha+n/2-1} dx,
// valid for alpha < 0 only (the endpoint power is integrable there). The sign
// is fixed by the positivity of the underlying momentum integral.
LoopResult tadpole_feynman(const DeformationParams& params, double tol = 1e-10);

// Radial quadrature of the defining integral; requires n + 2 alpha < 2.
LoopResult tadpole_direct(const DeformationParams& params, double tol = 1e-10);

// pi^{n/2} Gamma(1-n/2) (m0^2)^{n/2-1}; PoleArgument for even n.
LoopResult tadpole_dimreg_limit(int n, double m0_sq);

// ---- bubble: two deformed propagators at external momentum k ----

// Exact Feynman-parameter reduction of the bubble with d = n + 4 alpha:
//   pi^{n/2} Gamma(2-d/2)/Gamma(-alpha)^2
//     int dx dy B(x,y)^{d/2-2} y^{-1-2 alpha} V(x,y),
// where B = x(1-x)k^2 + y M^2 + (1-y) mtilde^2 and V is the w-integral of
// [w(y-w)]^{-1-alpha} over its admissible window, evaluated in closed
// (incomplete-beta / hypergeometric) form. Valid in |alpha| < 1/2 directly and
// continued to alpha in [1/2, 1) through a subtracted cube representation.
// Agrees with bubble_direct wherever the latter converges.
LoopResult bubble_closed(const DeformationParams& params, double k_sq,
                         double tol = 1e-9);

// Direct momentum quadrature (radial x polar angle); needs n + 4 alpha < 4.
LoopResult bubble_direct(const DeformationParams& params, double k_sq,
                         double tol = 1e-9);

// -pi^{n/2} Gamma(2-n/2) int_0^1 (m0^2 + k^2 x(1-x))^{n/2-2} dx.
// The exponent is n/2-2 (verified against the alpha->0 limit of the deformed
// bubble); comparisons against other routes are made in magnitude.
LoopResult bubble_dimreg_limit(int n, double m0_sq, double k_sq, double tol = 1e-11);

// The x-only reduction as commonly quoted, with every factor taken verbatim:
//   pi^{n/2} Gamma(2-d/2)/Gamma(-alpha) (2^{1+2 alpha}/sqrt(pi)) cos(alpha pi)
//   Gamma(1/2+alpha) int_0^1 (x^{-2 alpha}/(2 alpha)) (mtilde^2+k^2 x(1-x))^{d/2-2}
//     2F1(-2 alpha, 2-d/2; 1-2 alpha; (mtilde^2-M^2) x/(mtilde^2+k^2(1-x)x)) dx
// with d/2 = n/2 + 2 alpha. Kept as a comparator: its parameter region is too
// small and it deviates from the exact reduction at the percent level.
double bubble_printed_form(const DeformationParams& params, double k_sq,
                           double tol = 1e-10);

// ---- displayed integral identities, quadrature vs closed form ----

struct IdentityPair {
  double quadrature;
  double closed;
};

// int_0^y [w(y-w)]^{-(1+alpha)} dw
//   = (2^{1+2 alpha}/sqrt(pi)) cos(alpha pi) Gamma(-alpha) Gamma(1/2+alpha)
//     y^{-1-2 alpha},   -1/2 < alpha < 0.
IdentityPair identity_w_integral(double alpha, double y, double tol = 1e-11);

struct YIdentityResult {
  double quadrature;       // int_0^x y^{-1-2 alpha} [x(1-x)k^2 + y M^2 + (1-y) mt^2]^{d/2-2} dy
  double closed;           // -(x^{-2a}/2a)(mt^2+k^2x(1-x))^{d/2-2} 2F1(-2a, 2-d/2; 1-2a; .)
  double closed_printed;   // same with second parameter 2-4a-d/2 (as often quoted)
};

// The Euler-integral evaluation fixes the second hypergeometric parameter to
// 2-d/2; the 2-4a-d/2 variant is returned alongside to quantify its deviation.
YIdentityResult identity_y_integral(double alpha, double x, double k_sq, double M,
                                    double mtilde_sq, double d, double tol = 1e-11);

// two-point first-order Richardson elimination: f(0) ~ (h1 f(h2) - h2 f(h1))/(h1-h2)
double richardson_limit(const std::function<double(double)>& f, double h1, double h2);

}  // namespace nidim::loops
