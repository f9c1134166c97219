#pragma once

#include <array>
#include <compare>
#include <iosfwd>
#include <string>
#include <vector>

namespace hbo {

// A permutation of [n] in one-line notation: images_[i-1] = p(i).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // validates that it is a bijection
  static Perm identity(int n);

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return images_; }

  Perm inverse() const;

  std::string str() const;  // "[2,1,3]"

  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> images_;
};

std::ostream& operator<<(std::ostream& os, const Perm& p);

std::vector<Perm> all_perms(int n);

// Position pairs {i,k}, i < k, with p(i) > p(k).
std::vector<std::array<int, 2>> inversion_pairs(const Perm& p);

// Weak Bruhat order: containment of inversion-pair sets.
bool weak_leq(const Perm& a, const Perm& b);

}  // namespace hbo
