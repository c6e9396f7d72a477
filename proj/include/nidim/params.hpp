#pragma once

#include <cmath>

#include "nidim/errors.hpp"

namespace nidim {

// Single source of truth for the deformation data (n, alpha, M, m0^2) and the
// quantities derived from them.
struct DeformationParams {
  int n = 1;          // torus / space dimension
  double alpha = 0.0; // deformation exponent of D (1+D^2)^{-alpha}
  double M = 1.0;     // mass scale restoring physical units
  double m0_sq = 0.0; // optional additional mass squared

  // m^2 = M^2 alpha n / (1 - 2 alpha)
  double mass_sq() const { return M * M * alpha * double(n) / (1.0 - 2.0 * alpha); }

  // mtilde^2 = m^2 + m0^2
  double mtilde_sq() const { return mass_sq() + m0_sq; }

  // d = n / (1 - 2 alpha), the top of the dimension spectrum
  double dimension() const { return double(n) / (1.0 - 2.0 * alpha); }

  void validate(double alpha_bound = 1.0) const {
    if (n < 1) throw DomainError("params: n must be a positive integer");
    if (!(M > 0.0)) throw DomainError("params: M must be positive");
    if (m0_sq < 0.0) throw DomainError("params: m0_sq must be nonnegative");
    if (std::fabs(1.0 - 2.0 * alpha) < 1e-12)
      throw DomainError("params: alpha = 1/2 makes d = n/(1-2 alpha) infinite");
    if (!(std::fabs(alpha) < alpha_bound))
      throw DomainError("params: |alpha| must be below " + std::to_string(alpha_bound));
  }
};

}  // namespace nidim
