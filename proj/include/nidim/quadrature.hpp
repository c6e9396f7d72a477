#pragma once

#include <complex>
#include <functional>

namespace nidim::quad {

struct Result {
  double value = 0.0;
  double error = 0.0;  // absolute error bound from the Kronrod estimate
  long evaluations = 0;
};

struct ResultC {
  std::complex<double> value{0.0, 0.0};
  double error = 0.0;
  long evaluations = 0;
};

using Fn = std::function<double(double)>;
using FnC = std::function<std::complex<double>(double)>;

// Adaptive Gauss-Kronrod 7/15 on [a,b]. Stops when the summed error estimate
// drops below abs_tol + rel_tol*|I|. Throws NonConvergent once max_intervals
// subdivisions are exhausted without meeting the tolerance.
Result integrate(const Fn& f, double a, double b, double abs_tol, double rel_tol,
                 int max_intervals = 4000);

ResultC integrate_complex(const FnC& f, double a, double b, double abs_tol, double rel_tol,
                  int max_intervals = 4000);

// Integral of (x-a)^{mu-1} g(x) over [a,b], mu > 0, g smooth.
// The endpoint power is absorbed exactly by the substitution x = a + (b-a) u^{1/mu}.
Result integrate_power_left(const Fn& g, double mu, double a, double b,
                            double abs_tol, double rel_tol);

// Integral of (b-x)^{mu-1} g(x) over [a,b], mu > 0.
Result integrate_power_right(const Fn& g, double mu, double a, double b,
                             double abs_tol, double rel_tol);

// Integral of (x-a)^{mu_a-1} (b-x)^{mu_b-1} g(x) over [a,b]; split at midpoint.
Result integrate_power_both(const Fn& g, double mu_a, double mu_b, double a, double b,
                            double abs_tol, double rel_tol);

// Integral over [start, infinity) of f with |f(p)| ~ p^{-decay}, decay > 1.
// Uses t = 1/p and absorbs the resulting t^{decay-2} endpoint power.
Result integrate_tail(const Fn& f, double start, double decay, double abs_tol,
                      double rel_tol);

// Integral over an interval whose left endpoint carries an implicit (x-a)^{power}
// factor inside f itself (power > -1); substitution x = a + (b-a) u^{1/(1+power)}.
Result integrate_left_singular(const Fn& f, double power, double a, double b,
                               double abs_tol, double rel_tol);

}  // namespace nidim::quad
