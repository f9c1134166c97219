#pragma once

#include <string>
#include <vector>

#include "hbo/insertion.hpp"
#include "hbo/orders.hpp"
#include "hbo/perms.hpp"

// The planar operads built on molecule types and Bruhat orders.
//
// A molecule type of arity n records the electron counts (k_0, ..., k_n)
// between n nuclei of width d; its realization on a line has dn + sum(k_i)
// particle slots.  Composition splices the part types into the nuclei,
// merging boundary electrons.  On top of the types live:
//
//   - the symmetric-group operad (block substitution of permutations),
//   - the team operad F: permutations of a molecule fixing every electron
//     and permuting the nucleus slots,
//   - the small Bruhat operad: B(nd, d) with composition by iterated
//     insertion at the nucleus offsets d*(m_1 + ... + m_{i-1}),
//   - the big Bruhat operad: pairs (element of B(m,d), molecule type with m
//     particle slots), inserting at the type's nucleus offsets.

namespace hbo {

class MoleculeType {
 public:
  MoleculeType(int d, std::vector<int> electrons);

  int d() const { return d_; }
  int arity() const { return static_cast<int>(electrons_.size()) - 1; }
  const std::vector<int>& electrons() const { return electrons_; }

  int particle_count() const;
  // Number of particle slots strictly before nucleus i (1-based).
  int nucleus_offset(int i) const;
  // Slot indices of all nuclei, ascending (d slots per nucleus).
  std::vector<int> nucleus_slots() const;
  bool electron_free() const;

  std::string str() const;

  friend bool operator==(const MoleculeType&, const MoleculeType&) = default;

 private:
  int d_ = 1;
  std::vector<int> electrons_;
};

MoleculeType master_unit(int d);
MoleculeType master_compose(const MoleculeType& k, const std::vector<MoleculeType>& parts);
MoleculeType master_insert(const MoleculeType& k, int slot, const MoleculeType& part);

// gamma(tau; sigma_1..sigma_k): apply sigma_i inside the i-th block, then
// move block i to position tau(i).
Perm sym_compose(const Perm& tau, const std::vector<Perm>& sigmas);

// An element of F(n): a permutation of the particle slots of a d=1 molecule
// type that fixes every electron slot and permutes the nucleus slots.
class FElement {
 public:
  FElement(MoleculeType type, Perm realized);
  static FElement from_team(MoleculeType type, const Perm& team);

  const MoleculeType& type() const { return type_; }
  const Perm& realized() const { return realized_; }
  Perm team_action() const;  // induced permutation of the nuclei

  std::string str() const;

  friend bool operator==(const FElement&, const FElement&) = default;

 private:
  MoleculeType type_;
  Perm realized_;
};

FElement f_unit();
FElement f_compose(const FElement& tau, const std::vector<FElement>& sigmas);

// Small Bruhat operad: arity-n elements are B(nd, d).
BruhatElement small_unit(int d);
BruhatElement small_compose(const BruhatElement& b0,
                            const std::vector<BruhatElement>& parts);

// Big Bruhat operad: a Bruhat order together with the molecule type laying
// its ground set out as electrons and nuclei.
class BigElement {
 public:
  BigElement(BruhatElement bruhat, MoleculeType type);

  int m() const { return bruhat_.n(); }
  int d() const { return bruhat_.d(); }
  int arity() const { return type_.arity(); }
  const BruhatElement& bruhat() const { return bruhat_; }
  const MoleculeType& type() const { return type_; }

  std::string str() const;

  friend bool operator==(const BigElement&, const BigElement&) = default;

 private:
  BruhatElement bruhat_;
  MoleculeType type_;
};

BigElement big_unit(int d);
BigElement big_compose(const BigElement& a0, const std::vector<BigElement>& parts);

}  // namespace hbo
