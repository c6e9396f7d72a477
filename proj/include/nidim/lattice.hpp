#pragma once

#include <vector>

namespace nidim {

using Mode = std::vector<int>;  // a Fourier mode I in Z^n

// Truncated Fourier-mode box {I in Z^n : |I|_inf <= cutoff} in lexicographic
// order, so operator blocks are reproducible across runs.
class ModeLattice {
 public:
  ModeLattice(int n, int cutoff);

  int n() const { return n_; }
  int cutoff() const { return cutoff_; }
  long size() const { return long(modes_.size()); }
  const Mode& mode(long index) const { return modes_[index]; }
  const std::vector<Mode>& modes() const { return modes_; }

  // lexicographic position, or -1 when the mode lies outside the box
  long index_of(const Mode& m) const;
  bool contains(const Mode& m) const { return index_of(m) >= 0; }

  // true when |mode|_inf <= cutoff - margin (blocks unaffected by truncation)
  bool is_interior(long index, int margin) const;

  static Mode add(const Mode& a, const Mode& b);
  static double norm_sq(const Mode& m);
  static int max_abs(const Mode& m);

 private:
  int n_;
  int cutoff_;
  std::vector<Mode> modes_;
};

}  // namespace nidim
