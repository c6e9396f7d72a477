#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "nidim/errors.hpp"
#include "nidim/zeta.hpp"

using namespace nidim;
using namespace nidim::zeta;

namespace {
constexpr double kPi = 3.141592653589793238462643383279503;

double rel(std::complex<double> got, double want) {
  return std::abs(got - want) / std::fabs(want);
}

std::complex<double> lambda_completed(double s, int n) {
  return std::pow(kPi, -0.5 * s) * specfun::gamma(std::complex<double>(0.5 * s, 0.0)).value *
         epstein_zeta({s, 0.0}, n).value;
}
}  // namespace

TEST_CASE("epstein continuation reproduces convergent sums") {
  // n=1: Z_1(s) = 2 zeta_R(s)
  CHECK(rel(epstein_zeta({2.0, 0.0}, 1).value, kPi * kPi / 3.0) < 1e-12);
  CHECK(rel(epstein_zeta({4.0, 0.0}, 1).value, 2.0 * std::riemann_zeta(4.0)) < 1e-12);
  // n=2, s=6: 4 zeta(3) beta(3), frozen
  CHECK(rel(epstein_zeta({6.0, 0.0}, 2).value, 4.6589136156038434) < 1e-12);
  // direct-sum agreement for Re s >= n + 1
  for (int n : {1, 2, 3}) {
    const double s = n + 1.5;
    ZetaEvaluation cont = zeta_abs_dirac({s, 0.0}, n, true);
    ZetaEvaluation direct = zeta_abs_dirac({s, 0.0}, n, false);
    CHECK(std::abs(cont.value - direct.value) <=
          direct.error_estimate + 1e-10 * std::abs(cont.value));
  }
}

TEST_CASE("epstein functional symmetry Lambda(s) = Lambda(n-s)") {
  for (int n : {1, 2, 3}) {
    for (double s : {0.35, 1.4, 2.7, 4.2}) {
      if (std::fabs(s - n) < 0.1 || std::fabs(n - s) < 1e-12) continue;
      const auto l1 = lambda_completed(s, n);
      const auto l2 = lambda_completed(n - s, n);
      CHECK(std::abs(l1 - l2) <= 1e-9 * std::max(1.0, std::abs(l1)));
    }
  }
}

TEST_CASE("epstein pole guards") {
  CHECK_THROWS_AS(epstein_zeta({1.0, 0.0}, 1), AtPole);
  CHECK_THROWS_AS(epstein_zeta({0.0, 0.0}, 2), AtPole);
  // explicit pole term dominates just off the pole
  const double eps = 0.01;
  const auto v = epstein_zeta({2.0 + eps, 0.0}, 2);
  const double pole_term =
      2.0 / eps * std::pow(kPi, 0.5 * (2.0 + eps)) * specfun::rgamma(0.5 * (2.0 + eps));
  CHECK(std::abs(v.value - pole_term) / std::abs(v.value) < 0.02);
}

TEST_CASE("zeta_abs_dirac carries the spinor multiplicity") {
  CHECK(rel(zeta_abs_dirac({2.0, 0.0}, 1).value, kPi * kPi / 3.0) < 1e-12);
  CHECK(rel(zeta_abs_dirac({6.0, 0.0}, 2).value, 2.0 * 4.6589136156038434) < 1e-12);
  CHECK_THROWS_AS(zeta_abs_dirac({2.0, 0.0}, 1, false), OutsideConvergence);
}

TEST_CASE("binomial zeta agrees with the direct deformed sum") {
  struct Case { int n; double alpha; double z; long cutoff; double tol; };
  for (const Case c : {Case{1, 0.1, 3.0, 3000000, 1e-8}, Case{1, -0.2, 3.0, 400000, 1e-8},
                       Case{2, 0.1, 6.0, 2500, 1e-8}, Case{3, 0.1, 10.0, 60, 1e-7}}) {
    DeformationParams p{c.n, c.alpha, 1.0, 0.0};
    ZetaEvaluation bino = zeta_deformed({c.z, 0.0}, p, 16);
    ZetaEvaluation dire = zeta_deformed_direct({c.z, 0.0}, p, c.cutoff);
    CHECK(std::abs(bino.value - dire.value) <=
          c.tol * std::abs(dire.value) + dire.error_estimate);
  }
}

TEST_CASE("alpha = 0 reduces to the canonical zeta") {
  DeformationParams p{2, 0.0, 1.0, 0.0};
  ZetaEvaluation a = zeta_deformed({5.0, 0.0}, p, 16);
  ZetaEvaluation b = zeta_abs_dirac({5.0, 0.0}, 2, true);
  CHECK(std::abs(a.value - b.value) < 1e-13 * std::abs(b.value));
}

TEST_CASE("direct deformed sum: tail bound honesty") {
  DeformationParams p{1, 0.1, 1.0, 0.0};
  ZetaEvaluation small = zeta_deformed_direct({3.0, 0.0}, p, 40000);
  ZetaEvaluation big = zeta_deformed_direct({3.0, 0.0}, p, 80000);
  CHECK(std::abs(small.value - big.value) <= small.error_estimate);
  CHECK_THROWS_AS(zeta_deformed_direct({1.2, 0.0}, p, 1000), OutsideConvergence);
}

TEST_CASE("k_max sensitivity stays within the reported estimate") {
  DeformationParams p{1, 0.1, 1.0, 0.0};
  ZetaEvaluation k8 = zeta_deformed({3.0, 0.0}, p, 8);
  ZetaEvaluation k16 = zeta_deformed({3.0, 0.0}, p, 16);
  CHECK(std::abs(k8.value - k16.value) <= k8.error_estimate);
}

TEST_CASE("dimension spectrum formula") {
  DeformationParams p1{2, 0.25, 1.0, 0.0};
  auto zs = dimension_spectrum(p1, 3);
  CHECK(zs[0] == doctest::Approx(4.0));
  CHECK(zs[1] == doctest::Approx(0.0));
  DeformationParams p0{3, 0.0, 1.0, 0.0};
  auto canon = dimension_spectrum(p0, 2);
  CHECK(canon[0] == 3.0);
  CHECK(canon[1] == 1.0);
  CHECK(canon[2] == -1.0);
  DeformationParams p3{3, 0.1, 1.0, 0.0};
  CHECK(dimension_spectrum(p3, 1)[1] == doctest::Approx(1.25));
}

TEST_CASE("locate_pole finds the canonical pole with the known residue") {
  // Z_n has residue V_{S^{n-1}} at s = n; zeta_abs_dirac scales by 2^{floor(n/2)}
  for (int n : {1, 2}) {
    auto f = [n](double s) { return zeta_abs_dirac({s, 0.0}, n, true).value; };
    PoleReport rep = locate_pole(f, double(n));
    CHECK(rep.confirmed);
    CHECK(std::fabs(rep.location - n) < 1e-6);
    const double residue = (1 << (n / 2)) * 2.0 * std::pow(kPi, 0.5 * n) *
                           specfun::rgamma(0.5 * n);
    CHECK(std::abs(rep.fitted_residue - residue) < 0.01 * residue);
  }
}

TEST_CASE("locate_pole on the deformed zeta") {
  DeformationParams p{2, 0.1, 1.0, 0.0};
  auto f = [&](double z) { return zeta_deformed({z, 0.0}, p, 14, true).value; };
  PoleReport rep = locate_pole(f, 2.0 / 0.8);
  CHECK(rep.confirmed);
  CHECK(std::fabs(rep.location - 2.5) < 1e-3);
  // holomorphic point: no pole
  CHECK_THROWS_AS(locate_pole(f, 4.1), NoPoleDetected);
}

TEST_CASE("entire shifts do not move pole locations") {
  DeformationParams p{1, 0.1, 1.0, 0.0};
  auto f = [&](double z) { return zeta_deformed({z, 0.0}, p, 14, true).value; };
  auto g = [&](double z) { return f(z) + std::complex<double>(3.7, 0.0); };
  PoleReport a = locate_pole(f, 1.25);
  PoleReport b = locate_pole(g, 1.25);
  CHECK(std::fabs(a.location - b.location) < 1e-9);
  CHECK(std::abs(a.fitted_residue - b.fitted_residue) <
        1e-6 * std::abs(a.fitted_residue));
}

TEST_CASE("removable point: n = 2k cancels the k = 1 pole at z = 0") {
  // at n = 2 the k = 1 candidate sits at z = 0 where binom(alpha z, 1) vanishes
  DeformationParams p{2, 0.1, 1.0, 0.0};
  auto f = [&](double z) { return zeta_deformed({z, 0.0}, p, 14, true).value; };
  CHECK_THROWS_AS(locate_pole(f, 0.0), NoPoleDetected);
}
