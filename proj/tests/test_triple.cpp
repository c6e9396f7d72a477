#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "nidim/errors.hpp"
#include "nidim/triple.hpp"

using namespace nidim;

namespace {

using Mat = Eigen::MatrixXcd;

struct Setup {
  std::shared_ptr<const ModeLattice> lattice;
  std::shared_ptr<const CliffordRep> rep;
};

Setup make(int n, int cutoff) {
  return {std::make_shared<const ModeLattice>(n, cutoff),
          std::make_shared<const CliffordRep>(build_gammas(n))};
}

double max_abs(const Mat& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("lattice ordering and lookup") {
  ModeLattice lat(2, 3);
  CHECK(lat.size() == 49);
  CHECK(lat.mode(0) == Mode{-3, -3});
  CHECK(lat.mode(lat.size() - 1) == Mode{3, 3});
  for (long i = 0; i < lat.size(); ++i) CHECK(lat.index_of(lat.mode(i)) == i);
  CHECK(lat.index_of(Mode{4, 0}) == -1);
  // lexicographic: consecutive modes differ in the last coordinate first
  CHECK(lat.mode(1) == Mode{-3, -2});
}

TEST_CASE("dirac blocks and eigenvalues") {
  auto [lat, rep] = make(2, 4);
  TripleOperator d = build_dirac(lat, rep);
  CHECK(d.find(lat->index_of({0, 0}), lat->index_of({0, 0})) == nullptr);
  const Mat* b10 = d.find(lat->index_of({1, 0}), lat->index_of({1, 0}));
  REQUIRE(b10 != nullptr);
  CHECK(max_abs(*b10 + rep->gammas[0]) == 0.0);  // block is -gamma_1 exactly
  CHECK(d.hermiticity_defect() < 1e-14);
  // block at I has eigenvalues +-|I|, each with multiplicity spinor_dim/2
  const Mode I{2, 1};
  const Mat* blk = d.find(lat->index_of(I), lat->index_of(I));
  REQUIRE(blk != nullptr);
  Eigen::SelfAdjointEigenSolver<Mat> es(*blk);
  const double r = std::sqrt(5.0);
  CHECK(std::fabs(es.eigenvalues()(0) + r) < 1e-13);
  CHECK(std::fabs(es.eigenvalues()(1) - r) < 1e-13);
}

TEST_CASE("deformed dirac blocks") {
  auto [lat, rep] = make(2, 4);
  DeformationParams p{2, 0.25, 1.0, 0.0};
  TripleOperator da = build_deformed_dirac(lat, rep, p);
  CHECK(da.hermiticity_defect() < 1e-14);
  const Mat* blk = da.find(lat->index_of({1, 0}), lat->index_of({1, 0}));
  REQUIRE(blk != nullptr);
  CHECK(max_abs(*blk + std::pow(2.0, -0.25) * rep->gammas[0]) < 1e-15);
  // alpha = 0 equals the canonical operator exactly
  DeformationParams p0{2, 0.0, 1.0, 0.0};
  TripleOperator d0 = build_deformed_dirac(lat, rep, p0);
  CHECK(build_dirac(lat, rep).max_difference_interior(d0, 0) == 0.0);
}

TEST_CASE("deformed block norm grows like |I|^(1-2 alpha)") {
  auto [lat, rep] = make(1, 64);
  DeformationParams p{1, 0.25, 1.0, 0.0};
  TripleOperator da = build_deformed_dirac(lat, rep, p);
  // log-log fit of block norm vs |I| over the upper decade
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int cnt = 0;
  for (int i = 8; i <= 64; i += 4) {
    const Mode I{i};
    const double norm = max_abs(*da.find(lat->index_of(I), lat->index_of(I)));
    const double x = std::log(double(i)), y = std::log(norm);
    sx += x; sy += y; sxx += x * x; sxy += x * y;
    ++cnt;
  }
  const double slope = (cnt * sxy - sx * sy) / (cnt * sxx - sx * sx);
  CHECK(std::fabs(slope - 0.5) < 0.01);  // 1 - 2 alpha = 0.5
}

TEST_CASE("multiplication operator") {
  auto [lat, rep] = make(2, 4);
  // f = 1 is the identity
  TripleOperator one = build_multiplication(lat, rep, phase(Mode{0, 0}));
  for (const auto& [key, blk] : one.blocks()) {
    CHECK(key.first == key.second);
    CHECK(max_abs(blk - Mat::Identity(2, 2)) == 0.0);
  }
  // pure phase shifts every mode by J and is unitary away from the boundary
  TruncationReport report;
  TripleOperator shift = build_multiplication(lat, rep, phase(Mode{1, 0}), &report);
  CHECK(report.blocks_dropped > 0);  // the boundary rows fall off the box
  const Mat* blk = shift.find(lat->index_of({1, 2}), lat->index_of({0, 2}));
  REQUIRE(blk != nullptr);
  CHECK(max_abs(*blk - Mat::Identity(2, 2)) == 0.0);
  // cos(x_1) splits into two half-weight shifts
  TripleOperator cosop = build_multiplication(lat, rep, cosine(0, 2));
  const Mat* up = cosop.find(lat->index_of({1, 0}), lat->index_of({0, 0}));
  REQUIRE(up != nullptr);
  CHECK(max_abs(*up - 0.5 * Mat::Identity(2, 2)) == 0.0);
}

TEST_CASE("differential of a phase: canonical case") {
  auto [lat, rep] = make(2, 6);
  DeformationParams p0{2, 0.0, 1.0, 0.0};
  const Mode J{1, 0};
  TripleOperator df = differential(phase(J), p0, lat, rep);
  // alpha = 0: df equals multiplication by i gamma.df = shift by J times -gamma.J
  TripleOperator expect(lat, rep);
  for (long i = 0; i < lat->size(); ++i) {
    const long out = lat->index_of(ModeLattice::add(lat->mode(i), J));
    if (out < 0) continue;
    expect.at(out, i) = -gamma_dot(*rep, {1.0, 0.0});
  }
  CHECK(df.max_difference_interior(expect, 1) < 1e-15);
}

TEST_CASE("differential blocks match the hand-evaluated commutator") {
  auto [lat, rep] = make(2, 6);
  DeformationParams p{2, 0.3, 1.0, 0.0};
  const Mode J{1, 0};
  TripleOperator df = differential(phase(J), p, lat, rep);
  const Mode I{1, 2};
  const Mode IJ = ModeLattice::add(I, J);
  const Mat* blk = df.find(lat->index_of(IJ), lat->index_of(I));
  REQUIRE(blk != nullptr);
  const double ui = std::pow(1.0 + ModeLattice::norm_sq(I), -0.3);
  const double uij = std::pow(1.0 + ModeLattice::norm_sq(IJ), -0.3);
  const Mat want = -uij * gamma_dot(*rep, {2.0, 2.0}) + ui * gamma_dot(*rep, {1.0, 2.0});
  CHECK(max_abs(*blk - want) < 1e-15);
  // constant f gives the zero operator
  TripleOperator dconst = differential(phase(Mode{0, 0}), p, lat, rep);
  CHECK(dconst.max_entry_interior(0) == 0.0);
}

TEST_CASE("closed-form differential agrees on interior blocks") {
  struct Case { int n; double alpha; int cutoff; };
  for (const Case c : {Case{1, 0.3, 12}, Case{2, 0.3, 8}, Case{2, 0.1, 8}}) {
    auto [lat, rep] = make(c.n, c.cutoff);
    DeformationParams p{c.n, c.alpha, 1.0, 0.0};
    Mode J(c.n, 0);
    J[0] = 1;
    TripleOperator a = differential(phase(J), p, lat, rep);
    TripleOperator b = differential_closed_form(phase(J), p, lat, rep);
    CHECK(a.max_difference_interior(b, support_radius(phase(J))) < 1e-12);
  }
  // the commutator term vanishes identically at alpha = 0
  auto [lat, rep] = make(2, 6);
  DeformationParams p0{2, 0.0, 1.0, 0.0};
  TripleOperator a = differential(phase(Mode{1, 0}), p0, lat, rep);
  TripleOperator b = differential_closed_form(phase(Mode{1, 0}), p0, lat, rep);
  CHECK(a.max_difference_interior(b, 1) < 1e-15);
}

TEST_CASE("canonical limit: deformed differential approaches i gamma.df") {
  auto [lat, rep] = make(1, 12);
  const Mode J{1};
  DeformationParams p0{1, 0.0, 1.0, 0.0};
  TripleOperator canon = differential(phase(J), p0, lat, rep);
  double prev = 1e300;
  for (double alpha : {0.3, 0.1, 0.03}) {
    DeformationParams p{1, alpha, 1.0, 0.0};
    TripleOperator df = differential(phase(J), p, lat, rep);
    const double dev = df.max_difference_interior(canon, 1);
    CHECK(dev < prev);
    prev = dev;
  }
}

TEST_CASE("boundedness: interior norm does not grow with the cutoff") {
  const Mode J{1};
  DeformationParams p{1, 0.2, 1.0, 0.0};
  double norms[2];
  int k = 0;
  for (int cutoff : {8, 16}) {
    auto [lat, rep] = make(1, cutoff);
    norms[k++] = differential(phase(J), p, lat, rep).max_block_norm_interior(1);
  }
  CHECK(norms[1] <= norms[0] + 1e-10);
}

TEST_CASE("non-multiplicativity witness") {
  auto [lat, rep] = make(1, 10);
  const FourierMap f = phase(Mode{1});
  DeformationParams p0{1, 0.0, 1.0, 0.0};
  CHECK(non_multiplicativity_witness(f, f, p0, lat, rep) < 1e-13);
  DeformationParams p{1, 0.3, 1.0, 0.0};
  const double w = non_multiplicativity_witness(f, f, p, lat, rep);
  CHECK(w > 0.0);
  // regression baseline: the extremal block sits at I = 0 with entry
  // 2 (2^-0.3 - 5^-0.3)
  CHECK(w == doctest::Approx(0.39043706727245177).epsilon(1e-12));
  // witness decreases monotonically toward alpha = 0
  double prev = 1e300;
  for (double alpha : {0.2, 0.1, 0.05}) {
    DeformationParams pa{1, alpha, 1.0, 0.0};
    const double wa = non_multiplicativity_witness(f, f, pa, lat, rep);
    CHECK(wa > 0.0);
    CHECK(wa < prev);
    prev = wa;
  }
}

TEST_CASE("junk residual: two routes agree and vanish only classically") {
  auto rep1 = std::make_shared<const CliffordRep>(build_gammas(1));
  // alpha = 0: the residual vanishes identically
  JunkResidual r0 = junk_residual(Mode{1}, DeformationParams{1, 0.0, 1.0, 0.0}, rep1);
  CHECK(max_abs(r0.direct) < 1e-13);
  // I = 0: trivial candidate
  JunkResidual rz = junk_residual(Mode{0}, DeformationParams{1, 0.3, 1.0, 0.0}, rep1);
  CHECK(max_abs(rz.direct) == 0.0);
  // n=1, I=1, alpha=0.3: frozen coefficient 2(5^-0.3 - 2^-0.3) on gamma_1,
  // equivalently a positive multiple of -gamma.I
  JunkResidual r = junk_residual(Mode{1}, DeformationParams{1, 0.3, 1.0, 0.0}, rep1);
  CHECK(r.agreement < 1e-12);
  CHECK(std::fabs(r.direct(0, 0).real() + 0.39043706727245177) < 1e-13);
  // all |I| <= 3, alpha in {0.1, 0.3}, both dimensions
  for (double alpha : {0.1, 0.3}) {
    for (int i = 1; i <= 3; ++i) {
      JunkResidual ri =
          junk_residual(Mode{i}, DeformationParams{1, alpha, 1.0, 0.0}, rep1);
      CHECK(ri.agreement < 1e-12);
      CHECK(ri.direct.norm() > 1e-6);
    }
  }
  auto rep2 = std::make_shared<const CliffordRep>(build_gammas(2));
  for (double alpha : {0.1, 0.3}) {
    for (Mode I : {Mode{1, 0}, Mode{1, 1}, Mode{2, 1}, Mode{3, 0}}) {
      JunkResidual ri = junk_residual(I, DeformationParams{2, alpha, 1.0, 0.0}, rep2);
      CHECK(ri.agreement < 1e-12);
      CHECK(ri.direct.norm() > 1e-6);
    }
  }
}

TEST_CASE("vanishing one-form analysis") {
  auto [lat, rep] = make(1, 6);
  DeformationParams p{1, 0.3, 1.0, 0.0};
  VanishingFormReport rep03 = vanishing_one_form_check(lat, rep, p);
  CHECK(rep03.one_form_consistency < 1e-13);
  CHECK(rep03.all_nonzero);
  CHECK(rep03.zero_mode_norm == 0.0);
  for (const auto& [I, norm] : rep03.residual_norms) CHECK(norm > 0.0);

  DeformationParams p0{1, 0.0, 1.0, 0.0};
  VanishingFormReport rep00 = vanishing_one_form_check(lat, rep, p0);
  CHECK_FALSE(rep00.all_nonzero);  // classically every residual vanishes
  for (const auto& [I, norm] : rep00.residual_norms) CHECK(norm < 1e-13);
}

TEST_CASE("self-adjointness of both Dirac operators") {
  for (int n : {1, 2, 3}) {
    auto [lat, rep] = make(n, n < 3 ? 6 : 3);
    CHECK(build_dirac(lat, rep).hermiticity_defect() < 1e-14);
    DeformationParams p{n, 0.3, 1.0, 0.0};
    CHECK(build_deformed_dirac(lat, rep, p).hermiticity_defect() < 1e-14);
  }
}

TEST_CASE("sparse triplet export") {
  auto [lat, rep] = make(1, 2);
  TripleOperator d = build_dirac(lat, rep);
  std::ostringstream os;
  d.write_triplets(os);
  const std::string text = os.str();
  CHECK(text.find("# sparse triplets: mode_out mode_in spinor_row spinor_col re im") !=
        std::string::npos);
  // block at I=1 (index 3) is the 1x1 entry -1
  CHECK(text.find("3 3 0 0 -1 0") != std::string::npos);
}
