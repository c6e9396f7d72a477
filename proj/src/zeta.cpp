#include "nidim/zeta.hpp"

#include <algorithm>
#include <cmath>

#include "nidim/errors.hpp"
#include "nidim/quadrature.hpp"

namespace nidim::zeta {

namespace {

using cplx = std::complex<double>;

constexpr double kPi = 3.141592653589793238462643383279503;

int spinor_dim(int n) { return 1 << (n / 2); }

// Chebyshev acceleration of sum_{j>=0} (-1)^j a_j (Cohen, Rodriguez Villegas,
// Zagier): geometric (3+sqrt 8)^{-N} error for totally monotone a_j.
cplx crz_alternating(const std::vector<cplx>& a) {
  const int N = int(a.size());
  double d = std::pow(3.0 + std::sqrt(8.0), N);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0, c = -d;
  cplx s = 0.0;
  for (int k = 0; k < N; ++k) {
    c = b - c;
    s += c * a[k];
    b *= double(k + N) * double(k - N) / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

}  // namespace

ZetaEvaluation epstein_zeta(cplx s, int n) {
  if (n < 1) throw DomainError("epstein_zeta: n must be positive");
  if (std::abs(s) < 1e-12)
    throw AtPole("epstein_zeta: s = 0 excluded");
  if (std::abs(s - cplx(double(n), 0.0)) < 1e-12)
    throw AtPole("epstein_zeta: pole at s = n");

  // integrand decays like e^{-pi t}; t^{|s|/2} growth is irrelevant by t = 60
  const double T = 60.0;
  auto f = [&](double t) -> cplx {
    const double rem = specfun::theta_sum_minus_one(t, n);
    return rem * (std::pow(cplx(t, 0.0), 0.5 * s - 1.0) +
                  std::pow(cplx(t, 0.0), 0.5 * (double(n) - s) - 1.0));
  };
  quad::ResultC r = quad::integrate_complex(f, 1.0, T, 1e-14, 1e-13);
  const cplx lambda = r.value + 2.0 / (s - double(n)) - 2.0 / s;
  const cplx value = lambda * std::pow(kPi, 0.5 * s) * specfun::rgamma(0.5 * s);
  ZetaEvaluation out;
  out.argument = s;
  out.value = value;
  out.method = Method::Continued;
  out.error_estimate = (r.error + 1e-15) * std::abs(std::pow(kPi, 0.5 * s)) *
                           std::abs(specfun::rgamma(0.5 * s)) +
                       std::abs(value) * 1e-13;
  out.terms_used = r.evaluations;
  return out;
}

namespace {

// tail bound for sum over |I|_inf > K of |I|^{-q}, q > n: shells of max-norm j
// hold at most 2n(2j+1)^{n-1} <= 2n 3^{n-1} j^{n-1} points, each with |I| >= j
double maxnorm_tail_bound(double q, int n, long K) {
  const double c = 2.0 * n * std::pow(3.0, n - 1);
  return c * std::pow(double(K), double(n) - q) / (q - double(n));
}

ZetaEvaluation lattice_zeta_direct(cplx z, int n, long cutoff) {
  const double q = z.real();
  if (!(q > double(n) + 0.1))
    throw OutsideConvergence("direct lattice sum needs Re z > n + 0.1");
  cplx sum = 0.0;
  long terms = 0;
  // iterate the box |I|_inf <= cutoff
  std::vector<long> idx(n, -cutoff);
  while (true) {
    double r2 = 0.0;
    for (long c : idx) r2 += double(c) * double(c);
    if (r2 > 0.0) {
      sum += std::pow(cplx(r2, 0.0), -0.5 * z);
      ++terms;
    }
    int j = n - 1;
    while (j >= 0 && idx[j] == cutoff) {
      idx[j] = -cutoff;
      --j;
    }
    if (j < 0) break;
    ++idx[j];
  }
  ZetaEvaluation out;
  out.argument = z;
  out.value = sum;
  out.method = Method::DirectSum;
  out.error_estimate = maxnorm_tail_bound(q, n, cutoff);
  out.terms_used = terms;
  return out;
}

}  // namespace

ZetaEvaluation zeta_abs_dirac(cplx z, int n, bool lattice_free) {
  const double sd = double(spinor_dim(n));
  ZetaEvaluation base;
  if (lattice_free) {
    base = epstein_zeta(z, n);
  } else {
    long cutoff = 200;
    // grow the box until the rigorous tail bound is negligible
    while (maxnorm_tail_bound(z.real(), n, cutoff) >
               1e-12 * std::max(1.0, std::abs(z)) &&
           cutoff < 4000000L / (n * n))
      cutoff *= 2;
    base = lattice_zeta_direct(z, n, cutoff);
  }
  base.value *= sd;
  base.error_estimate *= sd;
  return base;
}

ZetaEvaluation zeta_deformed(cplx z, const DeformationParams& params, int k_max,
                             bool allow_near_pole) {
  params.validate(0.5);
  const double one_minus_2a = 1.0 - 2.0 * params.alpha;
  const cplx a = params.alpha * z;

  // summand arguments 2k + (1-2 alpha) z; guard the canonical pole at n
  for (int k = 0; k <= k_max; ++k) {
    const cplx arg = 2.0 * double(k) + one_minus_2a * z;
    const double dist = std::abs(arg - cplx(double(params.n), 0.0));
    if (dist < 1e-12)
      throw AtPole("zeta_deformed: summand k = " + std::to_string(k) +
                   " hits the canonical pole at n");
    if (!allow_near_pole && dist < 1e-3)
      throw AtPole("zeta_deformed: summand k = " + std::to_string(k) +
                   " within 1e-3 of the canonical pole (pass allow_near_pole)");
  }

  ZetaEvaluation out;
  out.argument = z;
  out.method = Method::BinomialSum;

  ZetaEvaluation head = zeta_abs_dirac(one_minus_2a * z, params.n, true);
  out.value = head.value;
  out.error_estimate = head.error_estimate;
  out.terms_used = 1;
  if (std::abs(a) == 0.0) return out;  // alpha = 0: only k = 0 survives

  // terms t_k = binom(a,k) zeta_|D|(2k + (1-2 alpha) z); the coefficient sign
  // alternates strictly once k > Re a + 1, and |binom(a,k)| ~ k^{-1-Re a}
  std::vector<cplx> terms(k_max + 1, cplx(0.0, 0.0));
  double summand_err = 0.0;
  for (int k = 1; k <= k_max; ++k) {
    const cplx coef = specfun::generalized_binomial(a, k);
    if (std::abs(coef) < 1e-300) continue;  // a hit a nonnegative integer
    ZetaEvaluation zk = zeta_abs_dirac(2.0 * double(k) + one_minus_2a * z,
                                       params.n, true);
    terms[k] = coef * zk.value;
    summand_err += std::abs(coef) * zk.error_estimate;
    out.terms_used++;
  }
  const int k0 = std::max(1, int(std::floor(a.real())) + 2);
  for (int k = 1; k < std::min(k0, k_max + 1); ++k) out.value += terms[k];
  if (k0 <= k_max && std::abs(terms[k0]) > 0.0) {
    const cplx s0 = terms[k0] / std::abs(terms[k0]);
    std::vector<cplx> tail;
    tail.reserve(k_max - k0 + 1);
    for (int k = k0; k <= k_max; ++k)
      tail.push_back(terms[k] * std::pow(-1.0, double(k - k0)) / s0);
    out.value += s0 * crz_alternating(tail);
  }
  // conservative estimate: twice the last raw term, plus summand errors
  out.error_estimate += 2.0 * std::abs(terms[k_max]) + summand_err;
  return out;
}

ZetaEvaluation zeta_deformed_direct(cplx z, const DeformationParams& params,
                                    long mode_cutoff) {
  params.validate(0.5);
  const int n = params.n;
  const double alpha = params.alpha;
  const double q = (1.0 - 2.0 * alpha) * z.real();
  if (!(z.real() > params.dimension() + 0.1))
    throw OutsideConvergence(
        "zeta_deformed_direct: requires Re z > n/(1-2 alpha) + 0.1");

  cplx sum = 0.0;
  long terms = 0;
  std::vector<long> idx(n, -mode_cutoff);
  while (true) {
    double r2 = 0.0;
    for (long c : idx) r2 += double(c) * double(c);
    if (r2 > 0.0) {
      const double mu = std::sqrt(r2) * std::pow(1.0 + r2, -alpha);
      sum += std::pow(cplx(mu, 0.0), -z);
      ++terms;
    }
    int j = n - 1;
    while (j >= 0 && idx[j] == mode_cutoff) {
      idx[j] = -mode_cutoff;
      --j;
    }
    if (j < 0) break;
    ++idx[j];
  }
  // mu(r) >= 2^{-max(alpha,0)} r^{1-2 alpha} for r >= 1, so the tail terms are
  // bounded by 2^{|alpha| Re z} |I|^{-q} and the max-norm shell bound applies
  const double fudge = std::pow(2.0, std::fabs(alpha) * z.real());
  ZetaEvaluation out;
  out.argument = z;
  out.value = double(spinor_dim(n)) * sum;
  out.method = Method::DirectSum;
  out.error_estimate =
      double(spinor_dim(n)) * fudge * maxnorm_tail_bound(q, n, mode_cutoff);
  out.terms_used = terms;
  return out;
}

std::vector<double> dimension_spectrum(const DeformationParams& params, int k_max) {
  params.validate(0.5);
  std::vector<double> out;
  out.reserve(k_max + 1);
  for (int k = 0; k <= k_max; ++k)
    out.push_back(double(params.n - 2 * k) / (1.0 - 2.0 * params.alpha));
  return out;
}

namespace {

struct PoleFit {
  double z0;
  cplx a, b;
  double max_dev;
};

// linear least squares for (a,b) at fixed z0, then a golden-section scan in z0
PoleFit fit_simple_pole(const std::function<cplx(double)>& f, double z_guess,
                        const std::vector<double>& radii) {
  std::vector<double> zs;
  std::vector<cplx> vs;
  for (double r : radii) {
    zs.push_back(z_guess + r);
    zs.push_back(z_guess - r);
  }
  for (double z : zs) vs.push_back(f(z));

  auto solve = [&](double z0) -> PoleFit {
    // normal equations for v ~ a/(z-z0) + b
    double s11 = 0.0, s12 = 0.0, s22 = double(zs.size());
    cplx r1 = 0.0, r2 = 0.0;
    for (size_t i = 0; i < zs.size(); ++i) {
      const double x = 1.0 / (zs[i] - z0);
      s11 += x * x;
      s12 += x;
      r1 += x * vs[i];
      r2 += vs[i];
    }
    const double det = s11 * s22 - s12 * s12;
    const cplx a = (s22 * r1 - s12 * r2) / det;
    const cplx b = (s11 * r2 - s12 * r1) / det;
    double dev = 0.0;
    for (size_t i = 0; i < zs.size(); ++i)
      dev = std::max(dev, std::abs(vs[i] - a / (zs[i] - z0) - b));
    return PoleFit{z0, a, b, dev};
  };

  const double rmin = *std::min_element(radii.begin(), radii.end());
  double lo = z_guess - 0.4 * rmin, hi = z_guess + 0.4 * rmin;
  const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = solve(x1).max_dev, f2 = solve(x2).max_dev;
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = solve(x1).max_dev;
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = solve(x2).max_dev;
    }
  }
  return solve(0.5 * (lo + hi));
}

}  // namespace

PoleReport locate_pole(const std::function<cplx(double)>& evaluator, double z_guess,
                       const std::vector<double>& probe_radii) {
  if (probe_radii.size() < 2)
    throw DomainError("locate_pole: need at least two probe radii");
  PoleFit primary = fit_simple_pole(evaluator, z_guess, probe_radii);
  std::vector<double> halved;
  for (double r : probe_radii) halved.push_back(0.5 * r);
  PoleFit check = fit_simple_pole(evaluator, z_guess, halved);

  if (std::abs(primary.a) < 1e-8)
    throw NoPoleDetected("locate_pole: fitted residue magnitude " +
                         std::to_string(std::abs(primary.a)) + " below 1e-8 near z = " +
                         std::to_string(z_guess));

  PoleReport report;
  report.location = primary.z0;
  report.fitted_residue = primary.a;
  report.fit_residual = primary.max_dev;
  report.predicted_location = z_guess;
  report.residue_spread = std::abs(primary.a - check.a) / std::abs(primary.a);
  report.confirmed = report.residue_spread <= 0.01;
  return report;
}

}  // namespace nidim::zeta
