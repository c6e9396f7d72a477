#pragma once

#include <Eigen/Dense>
#include <vector>

namespace nidim {

// Hermitian Euclidean gamma matrices in n dimensions on a spinor space of
// dimension 2^floor(n/2), built by iterated tensor products of the 2x2
// hermitian generators. Satisfies g_mu g_nu + g_nu g_mu = 2 delta_{mu nu}.
struct CliffordRep {
  int n = 0;
  int spinor_dim = 0;
  std::vector<Eigen::MatrixXcd> gammas;
};

// 1 <= n <= 8 (spinor_dim <= 16). Throws UnsupportedDimension otherwise.
CliffordRep build_gammas(int n);

// Contraction sum_mu v_mu gamma_mu; (gamma.v)^2 = |v|^2 Id.
Eigen::MatrixXcd gamma_dot(const CliffordRep& rep, const std::vector<double>& v);

}  // namespace nidim
