#include "nidim/lattice.hpp"

#include <cmath>
#include <cstdlib>

#include "nidim/errors.hpp"

namespace nidim {

ModeLattice::ModeLattice(int n, int cutoff) : n_(n), cutoff_(cutoff) {
  if (n < 1) throw DomainError("ModeLattice: n must be positive");
  if (cutoff < 1) throw DomainError("ModeLattice: cutoff must be positive");
  long count = 1;
  for (int i = 0; i < n; ++i) count *= (2L * cutoff + 1);
  if (count > 20000000L)
    throw DomainError("ModeLattice: (2*cutoff+1)^n exceeds the supported size");
  modes_.reserve(count);
  Mode m(n, -cutoff);
  while (true) {
    modes_.push_back(m);
    int j = n - 1;
    while (j >= 0 && m[j] == cutoff) {
      m[j] = -cutoff;
      --j;
    }
    if (j < 0) break;
    ++m[j];
  }
}

long ModeLattice::index_of(const Mode& m) const {
  long idx = 0;
  for (int j = 0; j < n_; ++j) {
    if (m[j] < -cutoff_ || m[j] > cutoff_) return -1;
    idx = idx * (2L * cutoff_ + 1) + (m[j] + cutoff_);
  }
  return idx;
}

bool ModeLattice::is_interior(long index, int margin) const {
  return max_abs(modes_[index]) <= cutoff_ - margin;
}

Mode ModeLattice::add(const Mode& a, const Mode& b) {
  Mode out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

double ModeLattice::norm_sq(const Mode& m) {
  double s = 0.0;
  for (int c : m) s += double(c) * double(c);
  return s;
}

int ModeLattice::max_abs(const Mode& m) {
  int v = 0;
  for (int c : m) v = std::max(v, std::abs(c));
  return v;
}

}  // namespace nidim
