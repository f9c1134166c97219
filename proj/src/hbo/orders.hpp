#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

#include "hbo/budget.hpp"
#include "hbo/perms.hpp"
#include "hbo/subsets.hpp"

// Higher Bruhat orders B(n,d), modeled through inversion sets.
//
// An element of B(n,d) is represented by a subset I of the (d+1)-subsets of
// [n] such that for every (d+2)-subset q, the members of I inside the packet
// of q occupy a prefix or a suffix of the packet sequence (the interval
// criterion).  The order relation is containment of inversion sets; B(n,1)
// recovers the symmetric group under the weak order.
//
// Linear orders on the d-subsets enter through the independent oracle path:
// an order is admissible when its restriction to every packet runs in packet
// order or reversed, and its inversion set collects the reversed packets.

namespace hbo {

class InversionSet {
 public:
  // Validates that every member is a (d+1)-subset of [n]; members are stored
  // sorted lexicographically and must be distinct.
  InversionSet(int n, int d, std::vector<Subset> members);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Subset>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool contains(const Subset& s) const;
  bool subset_of(const InversionSet& other) const;
  InversionSet with(const Subset& s) const;
  InversionSet complement() const;  // relative to all (d+1)-subsets of [n]

  std::string str() const;

  friend bool operator==(const InversionSet&, const InversionSet&) = default;

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Subset> members_;
};

std::ostream& operator<<(std::ostream& os, const InversionSet& inv);

// Canonical element ordering: by inversion count, then lexicographically on
// the sorted member list.  Enumeration output is sorted this way.
bool canonical_less(const InversionSet& a, const InversionSet& b);

struct ZieglerResult {
  // Sources of the packets whose intersection with the set is neither a
  // prefix nor a suffix of the packet sequence.
  std::vector<Subset> violations;
  bool ok() const { return violations.empty(); }
};

ZieglerResult ziegler_check(const InversionSet& inv);

class BruhatElement {
 public:
  // Runs the interval criterion; throws listing the violating packets.
  static BruhatElement checked(InversionSet inv);
  // Caller guarantees validity (enumeration internals, unit constructions).
  static BruhatElement trusted(InversionSet inv);

  int n() const { return inv_.n(); }
  int d() const { return inv_.d(); }
  const InversionSet& inv() const { return inv_; }

  friend bool operator==(const BruhatElement&, const BruhatElement&) = default;

 private:
  explicit BruhatElement(InversionSet inv) : inv_(std::move(inv)) {}
  InversionSet inv_;
};

std::ostream& operator<<(std::ostream& os, const BruhatElement& b);

BruhatElement minimal_element(int n, int d);  // empty inversion set
BruhatElement maximal_element(int n, int d);  // all (d+1)-subsets

// Containment of inversion sets; requires matching (n, d).
bool leq(const BruhatElement& a, const BruhatElement& b);

// A linear order on the d-subsets of [n]: sequence[0] is the smallest.
class LinearOrder {
 public:
  LinearOrder(int n, int d, std::vector<Subset> sequence);

  int n() const { return n_; }
  int d() const { return d_; }
  const std::vector<Subset>& sequence() const { return sequence_; }
  int position(const Subset& s) const;  // 0-based rank

 private:
  int n_ = 0;
  int d_ = 0;
  std::vector<Subset> sequence_;
  std::unordered_map<Subset, int, SubsetHash> positions_;
};

// True when the restriction to every packet is increasing or decreasing.
bool is_admissible(const LinearOrder& order);

// Inversion set of an admissible order: the (d+1)-subsets whose packet the
// order traverses in reverse.  Throws naming a violating packet otherwise.
InversionSet inversions(const LinearOrder& order);

// Depth-first enumeration of all valid inversion sets, deciding membership
// of one (d+1)-subset at a time and pruning with the interval criterion.
// Output is in canonical order with the minimum first and maximum last.
std::vector<BruhatElement> enumerate_bruhat(int n, int d, Budget& budget);

struct OracleResult {
  std::vector<InversionSet> classes;  // distinct inversion sets, canonical order
  std::uint64_t admissible_orders = 0;
};

// Independent oracle: walk all admissible linear orders on the d-subsets
// (prefix-growth search, pruned by the packet condition) and collect the
// distinct inversion sets.  Shares no logic with enumerate_bruhat.
OracleResult enumerate_admissible_classes(int n, int d, Budget& budget);

struct HasseDiagram {
  int n = 0;
  int d = 0;
  std::vector<BruhatElement> nodes;          // canonical order
  std::vector<std::pair<int, int>> edges;    // a -> b where b adds one inversion
};

HasseDiagram hasse(int n, int d, Budget& budget);

struct MaximalChain {
  std::vector<BruhatElement> steps;  // minimum first, maximum last
};

// Every minimum-to-maximum path in the diagram, in deterministic order.
void for_each_maximal_chain(const HasseDiagram& diagram, Budget& budget,
                            const std::function<void(const MaximalChain&)>& fn);

std::vector<MaximalChain> maximal_chains(int n, int d, Budget& budget);

// The linear order on the (d+1)-subsets listing inversions as the chain adds
// them.  Requires d+1 <= n; checks that the result is admissible.
LinearOrder chain_to_order(const MaximalChain& chain);

// Bridges with the symmetric group at d = 1.
BruhatElement to_bruhat(const Perm& p);     // inversion pairs as 2-subsets
Perm to_perm(const BruhatElement& b);       // inverse of to_bruhat

}  // namespace hbo
