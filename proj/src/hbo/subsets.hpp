#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace hbo {

// A finite subset of {1, 2, ...}, kept as a strictly increasing sequence.
// The sorted form is the canonical one: equality, ordering (lexicographic)
// and hashing all read it directly.
class Subset {
 public:
  Subset() = default;

  // Sorts its argument; rejects duplicates and values < 1.
  explicit Subset(std::vector<int> elems);
  Subset(std::initializer_list<int> elems);

  std::size_t size() const { return elems_.size(); }
  bool empty() const { return elems_.empty(); }
  const std::vector<int>& elems() const { return elems_; }

  // i-th smallest element, 0-based index.
  int operator[](std::size_t i) const { return elems_[i]; }
  int min() const { return elems_.front(); }
  int max() const { return elems_.back(); }

  bool contains(int v) const;

  Subset with(int v) const;            // insert a new element
  Subset without_value(int v) const;   // drop an existing element
  Subset without_index(std::size_t i) const;
  Subset shifted(int delta) const;     // elementwise translation

  std::string str() const;             // "{1,3,4}"

  friend auto operator<=>(const Subset&, const Subset&) = default;

 private:
  std::vector<int> elems_;
};

std::ostream& operator<<(std::ostream& os, const Subset& s);

struct SubsetHash {
  std::size_t operator()(const Subset& s) const;
};

std::uint64_t binomial(int n, int k);

// All k-subsets of [n] = {1..n}, in lexicographic order.  k > n yields an
// empty list; k == 0 yields the single empty subset.
std::vector<Subset> k_subsets(int n, int k);

// The packet of s: the subsets obtained by deleting one element of s,
// ordered from deleting the largest element down to deleting the smallest.
// This ordering is exactly lexicographic on the members.
struct Packet {
  Subset source;
  std::vector<Subset> members;
};

Packet packet_of(const Subset& s);

// The unique order-preserving bijection between two integer sets of equal
// cardinality.
class MonotoneBijection {
 public:
  MonotoneBijection(std::vector<int> src, std::vector<int> dst);

  int map(int v) const;
  int inv(int v) const;
  Subset map(const Subset& s) const;
  Subset inv(const Subset& s) const;

 private:
  std::vector<int> src_;
  std::vector<int> dst_;
};

}  // namespace hbo
