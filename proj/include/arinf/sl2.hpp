#pragma once

#include "arinf/graded.hpp"
#include "arinf/sparse_op.hpp"

#include <map>
#include <utility>
#include <vector>

namespace arinf {

// Decode of one harmonic slot at fixed (p,q): Lefschetz power j and copy
// index t inside prim^{p-j,q-j}. Slot layout is j ascending, then t.
struct StringSlot {
  int j = 0;
  int t = 0;
};

// One Lefschetz string instance cut to the window: rung j sits at
// (a+j, b+j, r0-j, k) for 0 <= j <= d with d = n-a-b. `interior` means every
// rung lies inside the window (region membership is rung-uniform).
struct StringInstance {
  int a = 0, b = 0, t = 0;
  int r0 = 0, k = 0;
  int d = 0;
  bool interior = false;
};

// Hard-Lefschetz string decomposition of a truncation. Every basis element
// is the rung of exactly one string; the raising/lowering/weight operators
// below act string by string and satisfy the sl2 relations exactly.
class Sl2Structure {
 public:
  explicit Sl2Structure(const GradedSpace* space);

  const GradedSpace& space() const { return *space_; }

  struct Rung {
    int a, b, t;  // anchor bidegree and copy index
    int j;        // rung index, 0 <= j <= d
    int r0, k;    // rung-0 coordinates of the instance
    int d;        // top rung index = n - a - b
  };
  const Rung& rung(int position) const { return rungs_[static_cast<std::size_t>(position)]; }

  StringSlot slot_decode(int p, int q, int slot) const;
  int slot_encode(int p, int q, int j, int t) const;  // -1 when absent

  // Basis position of rung j of the string through `position`; -1 when that
  // rung leaves the window.
  int rung_position(int position, int j) const;

  bool string_interior(int position) const;
  std::vector<bool> interior_mask() const;

  // Distinct string instances meeting the window, in basis order of their
  // first rung present.
  std::vector<StringInstance> strings() const;

  SparseOp raising() const;   // e: rung j -> j+1, coefficient 1
  SparseOp lowering() const;  // f: rung j -> j-1, coefficient j(d-j+1)
  SparseOp cartan() const;    // H: diagonal p+q-n

  // exp(e) exp(-f) exp(e): maps rung j to rung d-j with coefficient
  // (-1)^j j!/(d-j)!; squares to (-1)^d per string.
  SparseOp weyl_flip() const;
  // weyl_flip scaled per string by 1 (d even) or sqrt(-1) (d odd); an exact
  // involution.
  SparseOp normalized_flip() const;

 private:
  const GradedSpace* space_;
  std::vector<Rung> rungs_;
  std::map<std::pair<int, int>, std::vector<StringSlot>> slots_;
};

}  // namespace arinf
