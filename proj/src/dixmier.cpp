#include "nidim/dixmier.hpp"

#include <cmath>

#include "nidim/errors.hpp"
#include "nidim/specfun.hpp"

namespace nidim::dixmier {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

int spinor_dim(int n) { return 1 << (n / 2); }

double norm_sq(const std::vector<int>& v) {
  double s = 0.0;
  for (int c : v) s += double(c) * double(c);
  return s;
}

int max_abs(const std::vector<int>& v) {
  int m = 0;
  for (int c : v) m = std::max(m, std::abs(c));
  return m;
}

struct LinearFit {
  double slope, intercept, max_dev;
};

LinearFit fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = double(x.size());
  double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
  for (size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double det = n * sxx - sx * sx;
  const double slope = (n * sxy - sx * sy) / det;
  const double intercept = (sxx * sy - sx * sxy) / det;
  double dev = 0.0;
  for (size_t i = 0; i < x.size(); ++i)
    dev = std::max(dev, std::fabs(slope * x[i] + intercept - y[i]));
  return {slope, intercept, dev};
}

}  // namespace

double sphere_volume(int n) {
  if (n < 1) throw DomainError("sphere_volume: n must be positive");
  return 2.0 * std::pow(kPi, 0.5 * n) * specfun::rgamma(0.5 * n);
}

ActionPrediction action_prediction(const std::vector<int>& q,
                                   const DeformationParams& params) {
  params.validate(0.5);
  if (int(q.size()) != params.n)
    throw DimensionMismatch("action_prediction: q length != n");
  const int n = params.n;
  const double q2 = norm_sq(q);
  const double mhat = params.alpha * n / (1.0 - 2.0 * params.alpha);
  ActionPrediction out;
  out.q = q;
  out.prefactor = double(spinor_dim(n)) * sphere_volume(n) /
                  (double(n) * std::pow(2.0 * kPi, n));
  out.value = out.prefactor * (q2 + mhat) * std::pow(1.0 + q2, -2.0 * params.alpha);
  return out;
}

DixmierFit dixmier_partial_sums(const std::vector<int>& q,
                                const DeformationParams& params,
                                const std::vector<long>& cutoffs) {
  params.validate(0.5);
  const int n = params.n;
  if (int(q.size()) != n)
    throw DimensionMismatch("dixmier_partial_sums: q length != n");
  if (n > 2)
    throw UnsupportedDimension(
        "dixmier_partial_sums: estimator runs are limited to n in {1, 2}");
  if (cutoffs.size() < 4)
    throw CutoffTooSmall("dixmier_partial_sums: need at least 4 cutoffs for the fit");
  for (size_t i = 0; i + 1 < cutoffs.size(); ++i)
    if (cutoffs[i] >= cutoffs[i + 1])
      throw DomainError("dixmier_partial_sums: cutoffs must be strictly increasing");
  for (long L : cutoffs)
    if (L < max_abs(q) + 4)
      throw CutoffTooSmall("dixmier_partial_sums: cutoff " + std::to_string(L) +
                           " below |q|_inf + 4");

  const double alpha = params.alpha;
  const double d = params.dimension();
  const double sd = double(spinor_dim(n));
  const long lmax = cutoffs.back();

  DixmierFit fit;
  fit.cutoffs = cutoffs;
  fit.partial_sums.assign(cutoffs.size(), 0.0);
  fit.state_counts.assign(cutoffs.size(), 0);

  // accumulate shell-by-shell: every mode with |I| <= Lambda contributes
  auto term_of = [&](const std::vector<int>& I) {
    const double i2 = norm_sq(I);
    const double u_i = std::pow(1.0 + i2, -alpha);
    const double mu = std::sqrt(i2) * u_i;
    std::vector<int> J(I);
    double diff2 = 0.0;
    double j2 = 0.0;
    for (int c = 0; c < n; ++c) J[c] = I[c] - q[c];
    j2 = norm_sq(J);
    const double u_j = std::pow(1.0 + j2, -alpha);
    for (int c = 0; c < n; ++c) {
      const double dd = double(I[c]) * u_i - double(J[c]) * u_j;
      diff2 += dd * dd;
    }
    return sd * std::pow(mu, -d) * diff2;
  };

  std::vector<int> I(n, 0);
  std::vector<long> idx(n, -lmax);
  while (true) {
    for (int c = 0; c < n; ++c) I[c] = int(idx[c]);
    const double r2 = norm_sq(I);
    if (r2 > 0.0) {
      const double t = term_of(I);
      for (size_t ci = 0; ci < cutoffs.size(); ++ci) {
        if (r2 <= double(cutoffs[ci]) * double(cutoffs[ci])) {
          fit.partial_sums[ci] += t;
          fit.state_counts[ci] += long(sd);
        }
      }
    }
    int j = n - 1;
    while (j >= 0 && idx[j] == lmax) {
      idx[j] = -lmax;
      --j;
    }
    if (j < 0) break;
    ++idx[j];
  }

  std::vector<double> lnN, s;
  for (size_t i = 0; i < cutoffs.size(); ++i) {
    lnN.push_back(std::log(double(fit.state_counts[i])));
    s.push_back(fit.partial_sums[i]);
  }
  LinearFit lf = fit_line(lnN, s);
  fit.slope = lf.slope;
  fit.intercept = lf.intercept;
  fit.fit_residual = lf.max_dev;
  return fit;
}

RatioReport ratio_check(const std::vector<int>& q1, const std::vector<int>& q2,
                        const DeformationParams& params,
                        const std::vector<long>& cutoffs) {
  if (q1 == q2) {
    RatioReport r;
    r.fit1 = dixmier_partial_sums(q1, params, cutoffs);
    r.fit2 = r.fit1;
    r.slope_ratio = 1.0;
    ActionPrediction p = action_prediction(q1, params);
    r.prediction_ratio = 1.0;
    r.discrepancy = 0.0;
    r.pass = true;
    (void)p;
    return r;
  }
  if (norm_sq(q1) == 0.0 || norm_sq(q2) == 0.0)
    throw DomainError("ratio_check: both momenta must be nonzero");
  RatioReport r;
  r.fit1 = dixmier_partial_sums(q1, params, cutoffs);
  r.fit2 = dixmier_partial_sums(q2, params, cutoffs);
  r.slope_ratio = r.fit1.slope / r.fit2.slope;
  r.prediction_ratio =
      action_prediction(q1, params).value / action_prediction(q2, params).value;
  r.discrepancy = std::fabs(r.slope_ratio / r.prediction_ratio - 1.0);
  r.pass = r.discrepancy <= 0.05;
  return r;
}

CanonicalLimitReport canonical_limit_check(const std::vector<int>& q,
                                           const std::vector<long>& cutoffs,
                                           int n, double M) {
  if (int(q.size()) != n)
    throw DimensionMismatch("canonical_limit_check: q length != n");
  std::vector<int> q2(q);
  for (int& c : q2) c *= 2;

  CanonicalLimitReport rep;
  rep.alphas = {0.2, 0.1, 0.05};
  for (double a : rep.alphas) {
    DeformationParams params{n, a, M, 0.0};
    RatioReport rr = ratio_check(q, q2, params, cutoffs);
    // invert R = (q1^2 + m)(1+q1^2)^{-2a} / ((q2^2 + m)(1+q2^2)^{-2a}) for m
    const double q1sq = norm_sq(q);
    const double q2sq = norm_sq(q2);
    const double u1 = std::pow(1.0 + q1sq, -2.0 * a);
    const double u2 = std::pow(1.0 + q2sq, -2.0 * a);
    const double R = rr.slope_ratio;
    const double implied = (q1sq * u1 - R * q2sq * u2) / (R * u2 - u1);
    rep.implied_mass.push_back(implied);
    rep.predicted_mass.push_back(a * n / (1.0 - 2.0 * a));
  }
  LinearFit lf = fit_line(rep.alphas, rep.implied_mass);
  rep.extrapolated_mass = lf.intercept;
  rep.fit_error = lf.max_dev;
  rep.mass_vanishes = std::fabs(rep.extrapolated_mass) <=
                      std::max(lf.max_dev, 1e-3);
  return rep;
}

}  // namespace nidim::dixmier
