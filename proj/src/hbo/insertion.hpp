#pragma once

#include <vector>

#include "hbo/orders.hpp"
#include "hbo/perms.hpp"
#include "hbo/report.hpp"
#include "hbo/subsets.hpp"

// Insertion of one Bruhat order into another.
//
// Given b in B(n,d), b2 in B(m,d) and an offset 0 <= j <= n-d, the ground set
// [n+m-d] splits into three consecutive blocks
//
//     A = {1..j},   B = {j+1..j+m},   C = {j+m+1..n+m-d},
//
// with D = {j+1..j+d} the initial d elements of B.  A u D u C has exactly n
// elements; phi is the unique monotone bijection [n] -> A u D u C.  The result
// decides membership of every (d+1)-subset L of [n+m-d] by one of three rules:
//
//   inner  (L inside B):        look up L - j in b2,
//   outer  (L misses B \ D):    look up phi^-1(L) in b,
//   mixed  (everything else):   replace L^- = L n (B \ D) by the rightmost
//                               unused elements of D and look up the image.

namespace hbo {

struct InsertionFrame {
  int n = 0;
  int m = 0;
  int d = 0;
  int j = 0;

  // Validates n >= d >= 1, m >= d, 0 <= j <= n-d.
  static InsertionFrame make(int n, int m, int d, int j);

  int ground() const { return n + m - d; }

  bool in_A(int v) const { return v <= j; }
  bool in_B(int v) const { return v > j && v <= j + m; }
  bool in_D(int v) const { return v > j && v <= j + d; }
  bool in_C(int v) const { return v > j + m; }

  // The monotone bijection [n] -> A u D u C and its inverse.
  int phi(int i) const { return i <= j + d ? i : i + (m - d); }
  int phi_inv(int y) const { return y <= j + d ? y : y - (m - d); }
  Subset phi_inv(const Subset& s) const;
};

enum class InsertionCase { inner, outer, mixed };

InsertionCase classify(const Subset& L, const InsertionFrame& frame);

// The mixed-case replacement: keep L^+ = L \ (B \ D) and send L^- order-
// preservingly onto the rightmost elements of D not used by L^+.  Defined for
// any L with enough room in D (in particular all mixed (d+1)- and most
// (d+2)-subsets); throws when L is not mixed or D cannot absorb L^-.
Subset bar(const Subset& L, const InsertionFrame& frame);

// The insertion b o_j b2.  Always produces a valid element; the result is
// re-checked against the interval criterion unless compiled out.
BruhatElement insert(const BruhatElement& b, const BruhatElement& b2, int j);

// Insertion of tau into sigma at position pos (1-based): tau replaces the
// value band around sigma(pos) while sigma's remaining values stretch around
// it.  Matches insert at d = 1 with offset j = pos - 1 under the inversion
// bridge to B(n,1).
Perm permutation_insert(const Perm& sigma, const Perm& tau, int pos);

// (b o_j b') o_{j+j'} b''  ==  b o_j (b' o_{j'} b'')        for all legal j, j'
// (b o_k0 b') o_{k0+m+k1} b''  ==  (b o_{k0+d+k1} b'') o_k0 b'   for k0+k1 <= n-2d
// Sweeps every triple from the pools over every legal offset pattern.
LawReport check_insertion_laws(const std::vector<BruhatElement>& as,
                               const std::vector<BruhatElement>& bs,
                               const std::vector<BruhatElement>& cs);

// Monotonicity in both arguments: b2 <= b2' gives b o_j b2 <= b o_j b2', and
// b <= b' gives b o_j b2 <= b' o_j b2, over all legal j.
LawReport check_insertion_monotone(const std::vector<BruhatElement>& outer,
                                   const std::vector<BruhatElement>& inner);

}  // namespace hbo
