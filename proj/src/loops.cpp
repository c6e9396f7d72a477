#include "nidim/loops.hpp"

#include <cmath>

#include "nidim/errors.hpp"
#include "nidim/quadrature.hpp"
#include "nidim/specfun.hpp"

namespace nidim::loops {

namespace {

constexpr double kPi = 3.141592653589793238462643383279503;

bool near_nonpositive_integer(double x, double tol = 1e-12) {
  return x < 0.5 && std::fabs(x - std::round(x)) <= tol && std::round(x) <= 0.0;
}

double sphere_surface(int n) {
  // V_{S^{n-1}} = 2 pi^{n/2} / Gamma(n/2)
  return 2.0 * std::pow(kPi, 0.5 * n) * specfun::rgamma(0.5 * n);
}

double require_positive_mass(const DeformationParams& params) {
  const double mt2 = params.mtilde_sq();
  if (!(mt2 > 0.0))
    throw NegativeMassSquared(
        "effective mass squared mtilde^2 = " + std::to_string(mt2) +
        " is nonpositive: a pole pinches the integration path (raise m0_sq)");
  return mt2;
}

}  // namespace

double mass_squared(const DeformationParams& params) {
  params.validate(1.0);
  return params.mass_sq();
}

double effective_mass_squared(const DeformationParams& params) {
  params.validate(1.0);
  return params.mtilde_sq();
}

LoopResult tadpole_closed(const DeformationParams& params) {
  params.validate(1.0);
  const double alpha = params.alpha;
  if (alpha == 0.0) throw DomainError("tadpole_closed: alpha must be nonzero");
  const int n = params.n;
  const double mt2 = require_positive_mass(params);
  const double M2 = params.M * params.M;

  const double g_arg = 1.0 - 0.5 * n - alpha;
  if (near_nonpositive_integer(g_arg))
    throw PoleArgument("tadpole_closed: Gamma(1-n/2-alpha) pole at d = n+2 alpha = " +
                       std::to_string(n + 2.0 * alpha));

  const double z = 1.0 - mt2 / M2;
  EvalResult f = specfun::hyp2f1(1.0, 1.0 - alpha - 0.5 * n, 1.0 - alpha, z);
  // Gamma(-alpha) alpha is analytic through alpha = 0; away from 0 use Gamma
  const double pref = -std::pow(kPi, 0.5 * n) * specfun::gamma(g_arg).real() /
                      (specfun::gamma(-alpha).real() * alpha) *
                      std::pow(M2, alpha + 0.5 * n - 1.0);
  LoopResult out;
  out.value = pref * f.value.real();
  out.method = Method::ClosedForm;
  out.error_estimate = std::fabs(pref) * f.abs_error_estimate +
                       std::fabs(out.value) * 1e-12;
  out.params = params;
  return out;
}

LoopResult tadpole_feynman(const DeformationParams& params, double tol) {
  params.validate(1.0);
  const double alpha = params.alpha;
  if (!(alpha < 0.0))
    throw DomainError("tadpole_feynman: the x-representation needs alpha < 0");
  const int n = params.n;
  const double mt2 = require_positive_mass(params);
  const double M2 = params.M * params.M;
  const double g_arg = 1.0 - 0.5 * n - alpha;
  if (near_nonpositive_integer(g_arg))
    throw PoleArgument("tadpole_feynman: Gamma(1-n/2-alpha) pole at d = " +
                       std::to_string(n + 2.0 * alpha));

  const double e = alpha + 0.5 * n - 1.0;
  // endpoint power (1-x)^{-alpha-1} absorbed exactly; mu = -alpha
  quad::Result r = quad::integrate_power_right(
      [&](double x) { return std::pow((1.0 - x) * M2 + x * mt2, e); }, -alpha, 0.0,
      1.0, tol * 0.01, tol * 0.1);
  const double pref = std::pow(kPi, 0.5 * n) * specfun::gamma(g_arg).real() *
                      specfun::rgamma(-alpha);
  LoopResult out;
  out.value = pref * r.value;
  out.method = Method::FeynmanQuadrature;
  out.error_estimate = std::fabs(pref) * r.error + std::fabs(out.value) * 1e-13;
  out.params = params;
  return out;
}

LoopResult tadpole_direct(const DeformationParams& params, double tol) {
  params.validate(1.0);
  const int n = params.n;
  const double alpha = params.alpha;
  if (!(n + 2.0 * alpha < 2.0))
    throw OutsideConvergence("tadpole_direct: needs n + 2 alpha < 2, got " +
                             std::to_string(n + 2.0 * alpha));
  const double mt2 = require_positive_mass(params);
  const double M2 = params.M * params.M;

  auto f = [&](double p) {
    return std::pow(p, n - 1) * std::pow(M2 + p * p, alpha) / (p * p + mt2);
  };
  const double split = 10.0 * std::max({std::sqrt(mt2), params.M, 1.0});
  quad::Result head = quad::integrate(f, 0.0, split, tol * 0.01, tol * 0.05);
  // integrand ~ p^{n+2 alpha-3} at infinity: decay exponent 3 - n - 2 alpha > 1
  quad::Result tail =
      quad::integrate_tail(f, split, 3.0 - n - 2.0 * alpha, tol * 0.01, tol * 0.05);

  LoopResult out;
  out.value = sphere_surface(n) * (head.value + tail.value);
  out.method = Method::DirectQuadrature;
  out.error_estimate = sphere_surface(n) * (head.error + tail.error);
  out.params = params;
  return out;
}

LoopResult tadpole_dimreg_limit(int n, double m0_sq) {
  if (n < 1) throw DomainError("tadpole_dimreg_limit: n must be positive");
  if (n % 2 == 0)
    throw PoleArgument("tadpole_dimreg_limit: Gamma(1-n/2) pole at even n = " +
                       std::to_string(n));
  if (!(m0_sq > 0.0))
    throw NegativeMassSquared("tadpole_dimreg_limit: m0_sq must be positive");
  LoopResult out;
  out.value = std::pow(kPi, 0.5 * n) * specfun::gamma(1.0 - 0.5 * n).real() *
              std::pow(m0_sq, 0.5 * n - 1.0);
  out.method = Method::DimregLimit;
  out.error_estimate = std::fabs(out.value) * 1e-13;
  out.params = DeformationParams{n, 0.0, 1.0, m0_sq};
  return out;
}

// ---------------------------------------------------------------------------
// bubble
// ---------------------------------------------------------------------------

namespace {

// exact reduction over the admissible (x, y, w) region for |alpha| < 1/2:
// the w-window is [max(0, y-x), min(y, 1-x)], and its integral of
// [w(y-w)]^{-1-alpha} is a difference of (continued) incomplete betas
double bubble_xy(const DeformationParams& params, double k_sq, double tol) {
  const double alpha = params.alpha;
  const double beta = -alpha;
  const int n = params.n;
  const double mt2 = params.mtilde_sq();
  const double M2 = params.M * params.M;
  const double b = -2.0 * alpha;           // y-power parameter
  const double e = 0.5 * n + 2.0 * alpha - 2.0;  // bracket exponent d/2-2
  const double beta_full = specfun::beta_symmetric(beta);
  const double D = M2 - mt2;

  auto bracket_a = [&](double x) { return x * (1.0 - x) * k_sq + mt2; };

  // y in (0, ymin]: the w-window is full, V = B(beta,beta) y^{b-1};
  // the y-integral collapses to an incomplete Euler form
  auto piece_head = [&](double x) {
    const double c = std::min(x, 1.0 - x);
    const double A = bracket_a(x);
    EvalResult f = specfun::hyp2f1(-e, b, b + 1.0, -D * c / A);
    return beta_full * std::pow(A, e) * std::pow(c, b) / b * f.value.real();
  };

  // remaining y-range: V from the continued incomplete beta
  auto v_window = [&](double x, double y) {
    const double u1 = std::max(0.0, (y - x) / y);
    const double u2 = std::min(1.0, (1.0 - x) / y);
    if (u2 <= u1) return 0.0;
    return specfun::incomplete_beta_symmetric(u2, beta) -
           specfun::incomplete_beta_symmetric(u1, beta);
  };
  auto rest = [&](double x) {
    const double ymin = std::min(x, 1.0 - x);
    const double ymax = std::max(x, 1.0 - x);
    const double A = bracket_a(x);
    auto g = [&](double y) {
      return std::pow(y, b - 1.0) * v_window(x, y) * std::pow(A + D * y, e);
    };
    double v = 0.0;
    // each piece carries an implicit (y - left)^{beta} factor from the
    // incomplete beta opening at the window edge
    if (ymax > ymin + 1e-14)
      v += quad::integrate_left_singular(g, beta, ymin, ymax, tol * 0.2, tol * 0.2)
               .value;
    if (1.0 > ymax + 1e-14)
      v += quad::integrate_left_singular(g, beta, ymax, 1.0, tol * 0.2, tol * 0.2)
               .value;
    return v;
  };

  auto integrand = [&](double x) { return piece_head(x) + rest(x); };
  // x endpoints carry an x^{-2 alpha} power (and its mirror at x -> 1)
  quad::Result left = quad::integrate_left_singular(integrand, b, 0.0, 0.5,
                                                    tol * 0.5, tol * 0.5);
  quad::Result right = quad::integrate_left_singular(
      [&](double x) { return integrand(1.0 - x); }, b, 0.0, 0.5, tol * 0.5,
      tol * 0.5);
  return left.value + right.value;
}

// subtracted cube representation, needed once alpha >= 1/2 where the (x,y)
// form would require double subtractions: with w(u) = (1-u)^{-alpha-1},
//   I = pref int dt [t(1-t)]^{-alpha} { S_uv - (1/alpha) S_u - (1/alpha) S_v
//                                       + h(1,1,t)/alpha^2 },
// one subtraction at u = 1 and v = 1 each.
double bubble_cube_subtracted(const DeformationParams& params, double k_sq,
                              double tol) {
  const double alpha = params.alpha;
  const int n = params.n;
  const double mt2 = params.mtilde_sq();
  const double M2 = params.M * params.M;
  const double s = 2.0 - 0.5 * n - 2.0 * alpha;

  auto mu_of = [&](double u) { return u * mt2 + (1.0 - u) * M2; };
  auto h = [&](double u, double v, double t) {
    const double delta = t * (1.0 - t) * k_sq + t * mu_of(u) + (1.0 - t) * mu_of(v);
    return std::pow(delta, -s);
  };

  const double mu = 1.0 - alpha;  // residual endpoint power after subtraction
  auto t_core = [&](double t) {
    // subtracted kernels carry integrable (1-u)^{-alpha} endpoint powers,
    // absorbed by integrate_power_right
    auto inner_v = [&](double u) {
      auto g = [&](double v) {
        const double num = h(u, v, t) - h(1.0, v, t) - h(u, 1.0, t) + h(1.0, 1.0, t);
        return num / ((1.0 - u) * (1.0 - v));
      };
      return quad::integrate_power_right(g, mu, 0.0, 1.0, tol * 1e-3, tol * 1e-2)
          .value;
    };
    const double s_uv =
        quad::integrate_power_right(inner_v, mu, 0.0, 1.0, tol * 1e-2, tol * 1e-1)
            .value;
    auto su_g = [&](double u) {
      return (h(u, 1.0, t) - h(1.0, 1.0, t)) / (1.0 - u);
    };
    const double s_u =
        quad::integrate_power_right(su_g, mu, 0.0, 1.0, tol * 1e-3, tol * 1e-2).value;
    auto sv_g = [&](double v) {
      return (h(1.0, v, t) - h(1.0, 1.0, t)) / (1.0 - v);
    };
    const double s_v =
        quad::integrate_power_right(sv_g, mu, 0.0, 1.0, tol * 1e-3, tol * 1e-2).value;
    return s_uv - (s_u + s_v) / alpha + h(1.0, 1.0, t) / (alpha * alpha);
  };
  // the [t(1-t)]^{-alpha} weight is integrable for alpha < 1
  quad::Result r =
      quad::integrate_power_both(t_core, mu, mu, 0.0, 1.0, tol, tol);
  return r.value;
}

}  // namespace

LoopResult bubble_closed(const DeformationParams& params, double k_sq, double tol) {
  params.validate(1.0);
  const double alpha = params.alpha;
  if (alpha == 0.0) throw DomainError("bubble_closed: alpha must be nonzero");
  if (k_sq < 0.0) throw DomainError("bubble_closed: k_sq must be nonnegative");
  require_positive_mass(params);
  const int n = params.n;
  const double s = 2.0 - 0.5 * n - 2.0 * alpha;  // Gamma argument, d = n + 4 alpha
  if (near_nonpositive_integer(s))
    throw PoleArgument("bubble_closed: Gamma(2-d/2) pole at d = n+4 alpha = " +
                       std::to_string(n + 4.0 * alpha));

  const double pref = std::pow(kPi, 0.5 * n) * specfun::gamma(s).real() *
                      specfun::rgamma(-alpha) * specfun::rgamma(-alpha);
  const double core = (alpha < 0.5) ? bubble_xy(params, k_sq, tol)
                                    : bubble_cube_subtracted(params, k_sq, tol);
  LoopResult out;
  out.value = pref * core;
  out.method = Method::ClosedForm;
  out.error_estimate = std::fabs(out.value) * std::max(tol, 1e-12) * 4.0;
  out.params = params;
  out.external_momentum_sq = k_sq;
  return out;
}

LoopResult bubble_direct(const DeformationParams& params, double k_sq, double tol) {
  params.validate(1.0);
  const int n = params.n;
  const double alpha = params.alpha;
  if (!(n + 4.0 * alpha < 4.0))
    throw OutsideConvergence("bubble_direct: needs n + 4 alpha < 4, got " +
                             std::to_string(n + 4.0 * alpha));
  const double mt2 = require_positive_mass(params);
  const double M2 = params.M * params.M;
  const double k = std::sqrt(k_sq);

  const double split = 10.0 * std::max({std::sqrt(mt2), params.M, k, 1.0});
  const double decay = 5.0 - n - 4.0 * alpha;  // radial integrand ~ p^{-(decay)}

  if (n == 1) {
    auto f = [&](double p) {
      const double pk2 = (p + k) * (p + k);
      return std::pow((M2 + p * p) * (M2 + pk2), alpha) /
             ((p * p + mt2) * (pk2 + mt2));
    };
    auto sym = [&](double p) { return f(p) + f(-p); };
    quad::Result head = quad::integrate(sym, 0.0, split, tol * 0.01, tol * 0.05);
    quad::Result tail = quad::integrate_tail(sym, split, decay, tol * 0.01, tol * 0.05);
    LoopResult out;
    out.value = head.value + tail.value;
    out.method = Method::DirectQuadrature;
    out.error_estimate = head.error + tail.error;
    out.params = params;
    out.external_momentum_sq = k_sq;
    return out;
  }

  auto angular = [&](double p) {
    auto g = [&](double th) {
      const double pk2 = p * p + 2.0 * p * k * std::cos(th) + k_sq;
      const double w = std::pow((M2 + p * p) * (M2 + pk2), alpha) /
                       ((p * p + mt2) * (pk2 + mt2));
      return (n == 2) ? w : std::pow(std::sin(th), n - 2) * w;
    };
    return quad::integrate(g, 0.0, kPi, tol * 1e-4, tol * 1e-3).value;
  };
  auto radial = [&](double p) { return std::pow(p, n - 1) * angular(p); };
  quad::Result head = quad::integrate(radial, 0.0, split, tol * 0.01, tol * 0.05);
  quad::Result tail = quad::integrate_tail(radial, split, decay, tol * 0.01, tol * 0.05);

  LoopResult out;
  out.value = sphere_surface(n - 1) * (head.value + tail.value);
  out.method = Method::DirectQuadrature;
  out.error_estimate = sphere_surface(n - 1) * (head.error + tail.error) +
                       std::fabs(out.value) * tol;
  out.params = params;
  out.external_momentum_sq = k_sq;
  return out;
}

LoopResult bubble_dimreg_limit(int n, double m0_sq, double k_sq, double tol) {
  if (n < 1) throw DomainError("bubble_dimreg_limit: n must be positive");
  if (n == 4 || (n > 4 && n % 2 == 0))
    throw PoleArgument("bubble_dimreg_limit: Gamma(2-n/2) pole at n = " +
                       std::to_string(n));
  if (!(m0_sq > 0.0))
    throw NegativeMassSquared("bubble_dimreg_limit: m0_sq must be positive");
  auto g = [&](double x) {
    return std::pow(m0_sq + k_sq * x * (1.0 - x), 0.5 * n - 2.0);
  };
  quad::Result r = quad::integrate(g, 0.0, 1.0, tol * 0.1, tol * 0.1);
  const double pref = -std::pow(kPi, 0.5 * n) * specfun::gamma(2.0 - 0.5 * n).real();
  LoopResult out;
  out.value = pref * r.value;
  out.method = Method::DimregLimit;
  out.error_estimate = std::fabs(pref) * r.error + std::fabs(out.value) * 1e-13;
  out.params = DeformationParams{n, 0.0, 1.0, m0_sq};
  out.external_momentum_sq = k_sq;
  return out;
}

double bubble_printed_form(const DeformationParams& params, double k_sq, double tol) {
  params.validate(0.5);
  const double alpha = params.alpha;
  if (alpha == 0.0) throw DomainError("bubble_printed_form: alpha must be nonzero");
  const int n = params.n;
  const double mt2 = require_positive_mass(params);
  const double M2 = params.M * params.M;
  const double dhalf = 0.5 * n + 2.0 * alpha;
  const double pref = std::pow(kPi, 0.5 * n) * specfun::gamma(2.0 - dhalf).real() *
                      specfun::rgamma(-alpha) *
                      (std::pow(2.0, 1.0 + 2.0 * alpha) / std::sqrt(kPi)) *
                      std::cos(alpha * kPi) * specfun::gamma(0.5 + alpha).real();
  auto g = [&](double x) {
    const double A = mt2 + k_sq * x * (1.0 - x);
    EvalResult f = specfun::hyp2f1(-2.0 * alpha, 2.0 - dhalf, 1.0 - 2.0 * alpha,
                                   (mt2 - M2) * x / A);
    return std::pow(A, dhalf - 2.0) / (2.0 * alpha) * f.value.real();
  };
  // absorb the x^{-2 alpha} endpoint power
  quad::Result r =
      quad::integrate_power_left(g, 1.0 - 2.0 * alpha, 0.0, 1.0, tol, tol);
  return pref * r.value;
}

IdentityPair identity_w_integral(double alpha, double y, double tol) {
  if (!(alpha > -0.5 && alpha < 0.0))
    throw DomainError("identity_w_integral: alpha must lie in (-1/2, 0)");
  if (!(y > 0.0)) throw DomainError("identity_w_integral: y must be positive");
  const double mu = -alpha;
  quad::Result q = quad::integrate_power_both([&](double) { return 1.0; }, mu, mu,
                                              0.0, y, tol * 0.01, tol * 0.1);
  const double closed = std::pow(2.0, 1.0 + 2.0 * alpha) / std::sqrt(kPi) *
                        std::cos(alpha * kPi) * specfun::gamma(-alpha).real() *
                        specfun::gamma(0.5 + alpha).real() *
                        std::pow(y, -1.0 - 2.0 * alpha);
  return IdentityPair{q.value, closed};
}

YIdentityResult identity_y_integral(double alpha, double x, double k_sq, double M,
                                    double mtilde_sq, double d, double tol) {
  if (!(alpha > -0.5 && alpha < 0.0))
    throw DomainError("identity_y_integral: alpha must lie in (-1/2, 0)");
  if (!(x > 0.0 && x <= 1.0))
    throw DomainError("identity_y_integral: x must lie in (0, 1]");
  const double M2 = M * M;
  const double A = x * (1.0 - x) * k_sq;
  const double e = 0.5 * d - 2.0;
  // y^{-1-2 alpha} endpoint power, mu = -2 alpha
  quad::Result q = quad::integrate_power_left(
      [&](double y) { return std::pow(A + y * M2 + (1.0 - y) * mtilde_sq, e); },
      -2.0 * alpha, 0.0, x, tol * 0.01, tol * 0.1);

  const double bracket = mtilde_sq + k_sq * x * (1.0 - x);
  const double z = (mtilde_sq - M2) * x / bracket;
  auto closed_with = [&](double second) {
    EvalResult f = specfun::hyp2f1(-2.0 * alpha, second, 1.0 - 2.0 * alpha, z);
    return -std::pow(x, -2.0 * alpha) / (2.0 * alpha) * std::pow(bracket, e) *
           f.value.real();
  };
  return YIdentityResult{q.value, closed_with(2.0 - 0.5 * d),
                         closed_with(2.0 - 4.0 * alpha - 0.5 * d)};
}

double richardson_limit(const std::function<double(double)>& f, double h1,
                        double h2) {
  const double f1 = f(h1), f2 = f(h2);
  return (h1 * f2 - h2 * f1) / (h1 - h2);
}

}  // namespace nidim::loops
