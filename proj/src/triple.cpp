#include "nidim/triple.hpp"

#include <cmath>
#include <random>

#include "nidim/errors.hpp"

namespace nidim {

namespace {

using Block = Eigen::MatrixXcd;
using cplx = std::complex<double>;

std::vector<double> to_real(const Mode& m) {
  return std::vector<double>(m.begin(), m.end());
}

double heat_weight(const Mode& I, double alpha) {
  return std::pow(1.0 + ModeLattice::norm_sq(I), -alpha);
}

void check_pair(const ModeLattice& lat, const CliffordRep& rep) {
  if (lat.n() != rep.n)
    throw DimensionMismatch("lattice dimension " + std::to_string(lat.n()) +
                            " != Clifford dimension " + std::to_string(rep.n));
}

}  // namespace

FourierMap phase(const Mode& J) { return FourierMap{{J, cplx(1.0, 0.0)}}; }

FourierMap cosine(int axis, int n) {
  Mode plus(n, 0), minus(n, 0);
  plus[axis] = 1;
  minus[axis] = -1;
  return FourierMap{{plus, cplx(0.5, 0.0)}, {minus, cplx(0.5, 0.0)}};
}

int support_radius(const FourierMap& f) {
  int r = 0;
  for (const auto& [J, c] : f) r = std::max(r, ModeLattice::max_abs(J));
  return r;
}

Block& TripleOperator::at(long out, long in) {
  auto it = blocks_.find({out, in});
  if (it == blocks_.end()) {
    it = blocks_
             .emplace(Key{out, in},
                      Block::Zero(rep_->spinor_dim, rep_->spinor_dim))
             .first;
  }
  return it->second;
}

const Block* TripleOperator::find(long out, long in) const {
  auto it = blocks_.find({out, in});
  return it == blocks_.end() ? nullptr : &it->second;
}

TripleOperator TripleOperator::adjoint() const {
  TripleOperator out(lattice_, rep_);
  for (const auto& [key, blk] : blocks_)
    out.blocks_[{key.second, key.first}] = blk.adjoint();
  return out;
}

TripleOperator TripleOperator::scaled(cplx c) const {
  TripleOperator out(lattice_, rep_);
  for (const auto& [key, blk] : blocks_) out.blocks_[key] = c * blk;
  return out;
}

TripleOperator TripleOperator::operator+(const TripleOperator& o) const {
  TripleOperator out = *this;
  for (const auto& [key, blk] : o.blocks_) {
    auto it = out.blocks_.find(key);
    if (it == out.blocks_.end())
      out.blocks_[key] = blk;
    else
      it->second += blk;
  }
  return out;
}

TripleOperator TripleOperator::operator-(const TripleOperator& o) const {
  return *this + o.scaled(cplx(-1.0, 0.0));
}

TripleOperator TripleOperator::operator*(const TripleOperator& o) const {
  TripleOperator out(lattice_, rep_);
  // group the right factor's blocks by their out-mode
  std::map<long, std::vector<std::pair<long, const Block*>>> by_out;
  for (const auto& [key, blk] : o.blocks_)
    by_out[key.first].emplace_back(key.second, &blk);
  for (const auto& [key, blk] : blocks_) {
    auto hit = by_out.find(key.second);
    if (hit == by_out.end()) continue;
    for (const auto& [in, rhs] : hit->second) {
      auto it = out.blocks_.find({key.first, in});
      if (it == out.blocks_.end())
        out.blocks_[{key.first, in}] = blk * (*rhs);
      else
        it->second += blk * (*rhs);
    }
  }
  return out;
}

double TripleOperator::max_entry_interior(int margin) const {
  double v = 0.0;
  for (const auto& [key, blk] : blocks_) {
    if (!lattice_->is_interior(key.first, margin) ||
        !lattice_->is_interior(key.second, margin))
      continue;
    v = std::max(v, blk.cwiseAbs().maxCoeff());
  }
  return v;
}

double TripleOperator::max_block_norm_interior(int margin) const {
  double v = 0.0;
  for (const auto& [key, blk] : blocks_) {
    if (!lattice_->is_interior(key.first, margin) ||
        !lattice_->is_interior(key.second, margin))
      continue;
    v = std::max(v, blk.jacobiSvd().singularValues()(0));
  }
  return v;
}

double TripleOperator::hermiticity_defect() const {
  double v = 0.0;
  for (const auto& [key, blk] : blocks_) {
    const Block* mirror = find(key.second, key.first);
    if (mirror == nullptr) {
      v = std::max(v, blk.cwiseAbs().maxCoeff());
      continue;
    }
    v = std::max(v, (blk - mirror->adjoint()).cwiseAbs().maxCoeff());
  }
  return v;
}

double TripleOperator::max_difference_interior(const TripleOperator& o,
                                               int margin) const {
  return (*this - o).max_entry_interior(margin);
}

void TripleOperator::write_triplets(std::ostream& os) const {
  os << "# sparse triplets: mode_out mode_in spinor_row spinor_col re im\n";
  os << "# lattice: n=" << lattice_->n() << " cutoff=" << lattice_->cutoff()
     << " modes=" << lattice_->size() << " spinor_dim=" << rep_->spinor_dim
     << " (mode indices are lexicographic positions)\n";
  os.precision(17);
  for (const auto& [key, blk] : blocks_) {
    for (Eigen::Index r = 0; r < blk.rows(); ++r)
      for (Eigen::Index c = 0; c < blk.cols(); ++c) {
        const cplx v = blk(r, c);
        if (v == cplx(0.0, 0.0)) continue;
        // +0.0 normalizes negative zeros for byte-stable output
        os << key.first << ' ' << key.second << ' ' << r << ' ' << c << ' '
           << v.real() + 0.0 << ' ' << v.imag() + 0.0 << '\n';
      }
  }
}

TripleOperator build_dirac(std::shared_ptr<const ModeLattice> lattice,
                           std::shared_ptr<const CliffordRep> rep) {
  check_pair(*lattice, *rep);
  TripleOperator op(lattice, rep);
  for (long i = 0; i < lattice->size(); ++i) {
    const Mode& I = lattice->mode(i);
    if (ModeLattice::max_abs(I) == 0) continue;  // zero block stays absent
    op.at(i, i) = -gamma_dot(*rep, to_real(I));
  }
  return op;
}

TripleOperator build_deformed_dirac(std::shared_ptr<const ModeLattice> lattice,
                                    std::shared_ptr<const CliffordRep> rep,
                                    const DeformationParams& params) {
  check_pair(*lattice, *rep);
  params.validate(0.5);
  TripleOperator op(lattice, rep);
  for (long i = 0; i < lattice->size(); ++i) {
    const Mode& I = lattice->mode(i);
    if (ModeLattice::max_abs(I) == 0) continue;
    op.at(i, i) = -heat_weight(I, params.alpha) * gamma_dot(*rep, to_real(I));
  }
  return op;
}

TripleOperator build_heat_factor(std::shared_ptr<const ModeLattice> lattice,
                                 std::shared_ptr<const CliffordRep> rep,
                                 double alpha) {
  check_pair(*lattice, *rep);
  TripleOperator op(lattice, rep);
  const Block id = Block::Identity(rep->spinor_dim, rep->spinor_dim);
  for (long i = 0; i < lattice->size(); ++i)
    op.at(i, i) = heat_weight(lattice->mode(i), alpha) * id;
  return op;
}

TripleOperator build_multiplication(std::shared_ptr<const ModeLattice> lattice,
                                    std::shared_ptr<const CliffordRep> rep,
                                    const FourierMap& f, TruncationReport* report) {
  check_pair(*lattice, *rep);
  TripleOperator op(lattice, rep);
  const Block id = Block::Identity(rep->spinor_dim, rep->spinor_dim);
  long dropped = 0;
  for (long i = 0; i < lattice->size(); ++i) {
    const Mode& I = lattice->mode(i);
    for (const auto& [J, c] : f) {
      const long out = lattice->index_of(ModeLattice::add(I, J));
      if (out < 0) {
        ++dropped;
        continue;
      }
      op.at(out, i) += c * id;
    }
  }
  if (report != nullptr) report->blocks_dropped = dropped;
  return op;
}

TripleOperator differential(const FourierMap& f, const DeformationParams& params,
                            std::shared_ptr<const ModeLattice> lattice,
                            std::shared_ptr<const CliffordRep> rep) {
  TripleOperator d_alpha = build_deformed_dirac(lattice, rep, params);
  TripleOperator mf = build_multiplication(lattice, rep, f);
  return d_alpha * mf - mf * d_alpha;
}

TripleOperator differential_closed_form(const FourierMap& f,
                                        const DeformationParams& params,
                                        std::shared_ptr<const ModeLattice> lattice,
                                        std::shared_ptr<const CliffordRep> rep) {
  check_pair(*lattice, *rep);
  params.validate(0.5);
  // multiplication by (Df) = i gamma.df: shift blocks c_J (-gamma.J)
  TripleOperator m_df(lattice, rep);
  for (long i = 0; i < lattice->size(); ++i) {
    const Mode& I = lattice->mode(i);
    for (const auto& [J, c] : f) {
      const long out = lattice->index_of(ModeLattice::add(I, J));
      if (out < 0) continue;
      m_df.at(out, i) += -c * gamma_dot(*rep, to_real(J));
    }
  }
  TripleOperator u = build_heat_factor(lattice, rep, params.alpha);
  TripleOperator mf = build_multiplication(lattice, rep, f);
  TripleOperator dirac = build_dirac(lattice, rep);
  return u * m_df + (u * mf - mf * u) * dirac;
}

double non_multiplicativity_witness(const FourierMap& f, const FourierMap& g,
                                    const DeformationParams& params,
                                    std::shared_ptr<const ModeLattice> lattice,
                                    std::shared_ptr<const CliffordRep> rep) {
  TripleOperator df = differential(f, params, lattice, rep);
  TripleOperator mg = build_multiplication(lattice, rep, g);
  TripleOperator comm = df * mg - mg * df;
  return comm.max_entry_interior(support_radius(f) + support_radius(g));
}

JunkResidual junk_residual(const Mode& I, const DeformationParams& params,
                           std::shared_ptr<const CliffordRep> rep) {
  params.validate(0.5);
  const int n = int(I.size());
  if (n != rep->n) throw DimensionMismatch("junk_residual: mode length != n");
  const int cutoff = 2 * ModeLattice::max_abs(I) + 2;
  auto lattice = std::make_shared<const ModeLattice>(n, std::max(cutoff, 2));

  const FourierMap f = phase(I);
  const FourierMap f2 = phase(ModeLattice::add(I, I));
  TripleOperator mf = build_multiplication(lattice, rep, f);
  TripleOperator omega = mf * differential(f, params, lattice, rep);
  omega = omega.scaled(cplx(2.0, 0.0)) - differential(f2, params, lattice, rep);

  // apply to a constant spinor and project on mode 2I: that is block (2I, 0)
  const Mode zero(n, 0);
  const Mode twoI = ModeLattice::add(I, I);
  const Block* blk = omega.find(lattice->index_of(twoI), lattice->index_of(zero));
  Block direct = blk != nullptr
                     ? *blk
                     : Block::Zero(rep->spinor_dim, rep->spinor_dim);

  const double i2 = ModeLattice::norm_sq(I);
  const double coeff =
      2.0 * (std::pow(1.0 + i2, -params.alpha) - std::pow(1.0 + 4.0 * i2, -params.alpha));
  Block closed = coeff * (-gamma_dot(*rep, to_real(I)));

  JunkResidual out{std::move(direct), std::move(closed), 0.0};
  out.agreement = (out.direct - out.closed).cwiseAbs().maxCoeff();
  return out;
}

VanishingFormReport vanishing_one_form_check(
    std::shared_ptr<const ModeLattice> lattice,
    std::shared_ptr<const CliffordRep> rep, const DeformationParams& params) {
  check_pair(*lattice, *rep);
  params.validate(0.5);
  if (lattice->cutoff() > 6)
    throw DomainError("vanishing_one_form_check: use a small lattice (cutoff <= 6)");
  VanishingFormReport report;
  report.alpha = params.alpha;

  // (i) generic 1-form sum_{J,I} a_{JI} f_J df_I applied to a constant spinor:
  // the (I+J, 0) block must equal a_{JI} (1+|I|^2)^{-alpha} (-gamma.I) summed
  // over pairs with the same I+J.
  {
    std::mt19937 rng(811);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    std::vector<std::pair<Mode, Mode>> pairs;  // (J, I)
    if (lattice->n() == 1) {
      pairs = {{{1}, {1}}, {{-1}, {2}}, {{2}, {-1}}, {{0}, {1}}};
    } else {
      Mode J1(lattice->n(), 0), I1(lattice->n(), 0), J2(lattice->n(), 0),
          I2(lattice->n(), 0);
      J1[0] = 1;
      I1[0] = 1;
      J2[1] = -1;
      I2[0] = 1;
      I2[1] = 1;
      pairs = {{J1, I1}, {J2, I2}, {Mode(lattice->n(), 0), I1}};
    }
    TripleOperator total(lattice, rep);
    std::map<Mode, Block> expected;
    const Mode zero(lattice->n(), 0);
    for (const auto& [J, I] : pairs) {
      const cplx a(u(rng), u(rng));
      TripleOperator mj = build_multiplication(lattice, rep, phase(J));
      total = total + (mj * differential(phase(I), params, lattice, rep)).scaled(a);
      const Mode out = ModeLattice::add(J, I);
      Block& e = expected.try_emplace(out, Block::Zero(rep->spinor_dim, rep->spinor_dim))
                     .first->second;
      e += a * heat_weight(I, params.alpha) * (-gamma_dot(*rep, to_real(I)));
    }
    double defect = 0.0;
    for (const auto& [out, e] : expected) {
      const Block* got = total.find(lattice->index_of(out), lattice->index_of(zero));
      Block g = got != nullptr ? *got : Block::Zero(rep->spinor_dim, rep->spinor_dim);
      defect = std::max(defect, (g - e).cwiseAbs().maxCoeff());
    }
    report.one_form_consistency = defect;
  }

  // (ii) residual of every candidate 2 f_I df_I - d(f_I^2), |I|_inf <= 2
  {
    ModeLattice probe(lattice->n(), 2);
    bool all_nonzero = true;
    for (long i = 0; i < probe.size(); ++i) {
      const Mode& I = probe.mode(i);
      if (ModeLattice::max_abs(I) == 0) continue;
      JunkResidual r = junk_residual(I, params, rep);
      const double norm = r.direct.norm();
      report.residual_norms.emplace_back(I, norm);
      if (norm <= 1e-10) all_nonzero = false;
    }
    report.all_nonzero = all_nonzero;
  }

  // candidate concentrated on I = 0: the 1-form vanishes identically
  {
    const Mode zero(lattice->n(), 0);
    TripleOperator omega =
        build_multiplication(lattice, rep, phase(zero)) *
        differential(phase(zero), params, lattice, rep);
    omega = omega.scaled(cplx(2.0, 0.0)) -
            differential(phase(zero), params, lattice, rep);
    report.zero_mode_norm = omega.max_entry_interior(0);
  }
  return report;
}

}  // namespace nidim
