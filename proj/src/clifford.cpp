#include "nidim/clifford.hpp"

#include <complex>

#include "nidim/errors.hpp"

namespace nidim {

namespace {

using Mat = Eigen::MatrixXcd;
using cplx = std::complex<double>;

Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Mat pauli(int k) {
  Mat s(2, 2);
  switch (k) {
    case 1: s << 0, 1, 1, 0; break;
    case 2: s << 0, cplx(0, -1), cplx(0, 1), 0; break;
    default: s << 1, 0, 0, -1; break;
  }
  return s;
}

}  // namespace

CliffordRep build_gammas(int n) {
  if (n < 1 || n > 8)
    throw UnsupportedDimension("build_gammas: n must lie in [1,8], got " +
                               std::to_string(n));
  if (n == 1) {
    CliffordRep rep{1, 1, {}};
    Mat one(1, 1);
    one << 1.0;
    rep.gammas.push_back(one);
    return rep;
  }
  // even case 2m by recursion: append gamma_i -> gamma_i (x) s3,
  // then I (x) s1 and I (x) s2
  std::vector<Mat> g = {pauli(1), pauli(2)};
  const int m_target = n / 2;
  for (int m = 1; m < m_target; ++m) {
    std::vector<Mat> next;
    next.reserve(g.size() + 2);
    for (const Mat& gi : g) next.push_back(kron(gi, pauli(3)));
    const Mat id = Mat::Identity(g[0].rows(), g[0].cols());
    next.push_back(kron(id, pauli(1)));
    next.push_back(kron(id, pauli(2)));
    g.swap(next);
  }
  if (n % 2 == 1) {
    // odd completion: (-i)^m gamma_1 ... gamma_{2m} is hermitian, squares to 1,
    // and anticommutes with the even-case generators
    Mat prod = Mat::Identity(g[0].rows(), g[0].cols());
    for (const Mat& gi : g) prod = prod * gi;
    cplx phase(1.0, 0.0);
    const cplx mi(0.0, -1.0);
    for (int i = 0; i < m_target; ++i) phase *= mi;
    g.push_back(phase * prod);
  }
  CliffordRep rep;
  rep.n = n;
  rep.spinor_dim = int(g[0].rows());
  rep.gammas = std::move(g);
  return rep;
}

Eigen::MatrixXcd gamma_dot(const CliffordRep& rep, const std::vector<double>& v) {
  if (int(v.size()) != rep.n)
    throw DimensionMismatch("gamma_dot: vector length " + std::to_string(v.size()) +
                            " does not match n = " + std::to_string(rep.n));
  Mat out = Mat::Zero(rep.spinor_dim, rep.spinor_dim);
  for (int mu = 0; mu < rep.n; ++mu) out += v[mu] * rep.gammas[mu];
  return out;
}

}  // namespace nidim
