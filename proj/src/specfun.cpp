#include "nidim/specfun.hpp"

#include <cmath>
#include <limits>

#include "nidim/errors.hpp"
#include "nidim/quadrature.hpp"

namespace nidim::specfun {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

// Lanczos coefficients, g = 7, 9 terms (Godfrey's double-precision set).
constexpr double kLanczosG = 7.0;
constexpr double kLanczos[9] = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_nonpositive_integer(double x, double tol = 0.0) {
  return x <= 0.5 && std::fabs(x - std::round(x)) <= tol && std::round(x) <= 0.0;
}

template <typename T>
T lanczos_core(T z) {
  // valid for Re z >= 0.5
  T acc = kLanczos[0];
  for (int i = 1; i < 9; ++i) acc += kLanczos[i] / (z - 1.0 + double(i));
  T t = z + kLanczosG - 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, z - 0.5) * std::exp(-t) * acc;
}

template <typename T>
T gamma_impl(T z) {
  if constexpr (std::is_same_v<T, std::complex<double>>) {
    if (z.real() < 0.5) {
      // reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z)
      return kPi / (std::sin(kPi * z) * gamma_impl(1.0 - z));
    }
  } else {
    if (z < 0.5) return kPi / (std::sin(kPi * z) * gamma_impl(1.0 - z));
  }
  return lanczos_core(z);
}

}  // namespace

EvalResult gamma(double x) {
  if (is_nonpositive_integer(x))
    throw PoleArgument("gamma: pole at nonpositive integer x = " + std::to_string(x));
  const double v = gamma_impl(x);
  double rel = 5e-14;
  if (x < 0.5) rel += 2e-15 / std::max(std::fabs(std::sin(kPi * x)), 1e-3);
  return EvalResult{{v, 0.0}, std::fabs(v) * rel, 9};
}

EvalResult gamma(std::complex<double> z) {
  if (std::fabs(z.imag()) < 1e-300 && is_nonpositive_integer(z.real()))
    throw PoleArgument("gamma: pole at nonpositive integer z = " +
                       std::to_string(z.real()));
  const std::complex<double> v = gamma_impl(z);
  return EvalResult{v, std::abs(v) * 1e-13, 9};
}

double rgamma(double x) {
  if (is_nonpositive_integer(x)) return 0.0;
  return 1.0 / gamma_impl(x);
}

std::complex<double> rgamma(std::complex<double> z) {
  if (std::fabs(z.imag()) < 1e-300 && is_nonpositive_integer(z.real()))
    return {0.0, 0.0};
  return 1.0 / gamma_impl(z);
}

double generalized_binomial(double a, unsigned k) {
  double v = 1.0;
  for (unsigned i = 0; i < k; ++i) v *= (a - double(i)) / double(i + 1);
  return v;
}

std::complex<double> generalized_binomial(std::complex<double> a, unsigned k) {
  std::complex<double> v = 1.0;
  for (unsigned i = 0; i < k; ++i) v *= (a - double(i)) / double(i + 1);
  return v;
}

namespace {

constexpr std::size_t kSeriesCap = 1000000;  // hard iteration cap

// Direct Gauss series. Caller guarantees |z| <= ~0.6 or a terminating case.
EvalResult series_2f1(double a, double b, double c, double z) {
  // terminating case: a or b a nonpositive integer
  long terminate = -1;
  if (is_nonpositive_integer(a)) terminate = long(-std::round(a));
  if (is_nonpositive_integer(b)) {
    const long tb = long(-std::round(b));
    if (terminate < 0 || tb < terminate) terminate = tb;
  }
  if (is_nonpositive_integer(c)) {
    const long pc = long(-std::round(c));
    if (terminate < 0 || pc < terminate)
      throw DegenerateC("hyp2f1: c = " + std::to_string(c) +
                        " is a nonpositive integer");
  }
  double term = 1.0, sum = 1.0;
  std::size_t k = 0;
  while (true) {
    if (terminate >= 0 && long(k) >= terminate)
      return EvalResult{{sum, 0.0}, std::fabs(sum) * 1e-15 * double(k + 1), k};
    const double ratio = (a + double(k)) * (b + double(k)) * z /
                         ((c + double(k)) * (double(k) + 1.0));
    term *= ratio;
    sum += term;
    ++k;
    if (k > 8 && std::fabs(term) <= 1e-17 * std::fabs(sum)) {
      const double r = std::min(std::fabs(z) * (1.0 + 8.0 / double(k)), 0.999);
      const double tail = std::fabs(term) * r / (1.0 - r);
      return EvalResult{{sum, 0.0}, tail + std::fabs(sum) * 1e-15, k};
    }
    if (k >= kSeriesCap)
      throw NonConvergent("hyp2f1 series hit the iteration cap");
  }
}

// Euler integral fallback, needs c > b > 0 (callers may swap a,b first).
EvalResult euler_2f1(double a, double b, double c, double z) {
  if (!(c > b && b > 0.0))
    throw NonConvergent("hyp2f1: Euler-integral fallback needs c > b > 0");
  const double pref = gamma_impl(c) / (gamma_impl(b) * gamma_impl(c - b));
  auto g = [&](double t) { return std::pow(1.0 - z * t, -a); };
  quad::Result r = quad::integrate_power_both(g, b, c - b, 0.0, 1.0, 1e-14, 1e-13);
  return EvalResult{{pref * r.value, 0.0}, std::fabs(pref) * r.error + 1e-14,
                    std::size_t(r.evaluations)};
}

}  // namespace

EvalResult hyp2f1(double a, double b, double c, double z) {
  if (!(z < 1.0)) throw DomainError("hyp2f1: z must satisfy z < 1");
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b) || z == 0.0 ||
      std::fabs(z) <= 0.5)
    return series_2f1(a, b, c, z);

  if (z < -0.5) {
    // Pfaff: F(a,b;c;z) = (1-z)^{-a} F(a, c-b; c; z/(z-1)); prefer the slot
    // whose transformed series terminates.
    double ea = a, eb = b;
    if (is_nonpositive_integer(c - a)) std::swap(ea, eb);
    const double w = z / (z - 1.0);
    EvalResult inner = series_2f1(ea, c - eb, c, w);
    const double fac = std::pow(1.0 - z, -ea);
    return EvalResult{fac * inner.value, std::fabs(fac) * inner.abs_error_estimate,
                      inner.terms_used};
  }

  // 1/2 < z < 1: connection with argument 1-z
  const double s = c - a - b;
  if (std::fabs(s - std::round(s)) > 1e-8) {
    const double w = 1.0 - z;
    const double g_c = gamma_impl(c);
    const double t1 = g_c * gamma_impl(s) * rgamma(c - a) * rgamma(c - b);
    const double t2 = g_c * gamma_impl(-s) * rgamma(a) * rgamma(b) * std::pow(w, s);
    EvalResult f1 = series_2f1(a, b, 1.0 - s, w);
    EvalResult f2 = series_2f1(c - a, c - b, 1.0 + s, w);
    const double v = t1 * f1.value.real() + t2 * f2.value.real();
    const double err = std::fabs(t1) * f1.abs_error_estimate +
                       std::fabs(t2) * f2.abs_error_estimate + std::fabs(v) * 1e-13;
    return EvalResult{{v, 0.0}, err, f1.terms_used + f2.terms_used};
  }
  // integer c-a-b: fall back to the Euler integral (swap a,b if that helps)
  if (c > b && b > 0.0) return euler_2f1(a, b, c, z);
  return euler_2f1(b, a, c, z);
}

double power_via_integral(double A, double s, double quadrature_tolerance) {
  if (!(A > 0.0)) throw DomainError("power_via_integral: A must be positive");
  if (!(s > 0.0)) throw DomainError("power_via_integral: s must be positive");
  const double tol = quadrature_tolerance;
  const double split = 1.0 / A;

  // [0, 1/A]: u = (tau*? ) -- tau = u^{1/s} scaled so tau in [0,split]:
  // int_0^split tau^{s-1} e^{-tau A} dtau = (split^s/s) int_0^1 e^{-A split u^{1/s}} du
  quad::Result head = quad::integrate_power_left(
      [&](double tau) { return std::exp(-tau * A); }, s, 0.0, split, tol * 0.1,
      tol * 0.1);

  // tail: tau = e^v turns the integrand into e^{s v - A e^v}
  const double v0 = std::log(split);
  double v1 = v0 + 1.0;
  while (s * v1 - A * std::exp(v1) > std::log(tol) - 40.0) v1 += 1.0;
  quad::Result tail = quad::integrate(
      [&](double v) { return std::exp(s * v - A * std::exp(v)); }, v0, v1,
      tol * 0.1, tol * 0.1);

  const double gam = gamma(s).real();
  const double value = (head.value + tail.value) / gam;
  const double err = (head.error + tail.error) / std::fabs(gam);
  if (err > tol * std::max(1.0, std::fabs(value)))
    throw NonConvergent("power_via_integral: quadrature failed to meet tolerance");
  return value;
}

namespace {

// one-dimensional theta value and the remainder theta(t)-1, tail-bounded
double theta1_minus_one(double t) {
  if (!(t > 0.0)) throw DomainError("theta_sum: t must be positive");
  double s = 0.0;
  long k = 1;
  while (true) {
    const double term = 2.0 * std::exp(-kPi * t * double(k) * double(k));
    s += term;
    // remaining tail < term * e^{-pi t (2k+1)} / (1 - e^{-pi t (2k+3)})
    const double q = std::exp(-kPi * t * double(2 * k + 1));
    if (term * q / (1.0 - q) < 1e-16 * (1.0 + s)) break;
    ++k;
    if (k > 100000000L) throw NonConvergent("theta_sum: tail cutoff not reached");
  }
  return s;
}

}  // namespace

double theta_sum(double t, int n) {
  if (n < 1) throw DomainError("theta_sum: n must be positive");
  return std::pow(1.0 + theta1_minus_one(t), double(n));
}

double theta_sum_minus_one(double t, int n) {
  if (n < 1) throw DomainError("theta_sum: n must be positive");
  // theta^n - 1 = expm1(n log1p(theta - 1))
  return std::expm1(double(n) * std::log1p(theta1_minus_one(t)));
}

double beta_symmetric(double beta) {
  if (is_nonpositive_integer(beta, 1e-14))
    throw PoleArgument("beta_symmetric: Gamma pole at beta = " + std::to_string(beta));
  // a pole of Gamma(2 beta) sits in the denominator: the continued value is 0
  return gamma_impl(beta) * gamma_impl(beta) * rgamma(2.0 * beta);
}

double incomplete_beta_symmetric(double u, double beta) {
  if (u <= 0.0) return 0.0;
  if (u > 1.0) throw DomainError("incomplete_beta_symmetric: u must lie in [0,1]");
  if (u > 0.5) return beta_symmetric(beta) - incomplete_beta_symmetric(1.0 - u, beta);
  EvalResult f = hyp2f1(beta, 1.0 - beta, 1.0 + beta, u);
  return std::pow(u, beta) / beta * f.value.real();
}

}  // namespace nidim::specfun
