#include "hbo/perms.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "hbo/error.hpp"

namespace hbo {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (int v : images_) {
    if (v < 1 || v > static_cast<int>(images_.size()) ||
        seen[static_cast<std::size_t>(v - 1)]) {
      fail(ErrorCode::invalid_argument, "one-line notation is not a bijection");
    }
    seen[static_cast<std::size_t>(v - 1)] = true;
  }
}

Perm Perm::identity(int n) {
  if (n < 0) fail(ErrorCode::invalid_argument, "permutation size must be >= 0");
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  return Perm(std::move(im));
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i) + 1;
  }
  return Perm(std::move(inv));
}

std::string Perm::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Perm& p) {
  os << '[';
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) os << ',';
    os << p(i);
  }
  return os << ']';
}

std::vector<Perm> all_perms(int n) {
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 1);
  std::vector<Perm> out;
  do {
    out.push_back(Perm(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::vector<std::array<int, 2>> inversion_pairs(const Perm& p) {
  std::vector<std::array<int, 2>> out;
  for (int i = 1; i <= p.size(); ++i) {
    for (int k = i + 1; k <= p.size(); ++k) {
      if (p(i) > p(k)) out.push_back({i, k});
    }
  }
  return out;
}

bool weak_leq(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) {
    fail(ErrorCode::invalid_argument, "weak order compares equal-size permutations");
  }
  auto ia = inversion_pairs(a);
  auto ib = inversion_pairs(b);
  return std::includes(ib.begin(), ib.end(), ia.begin(), ia.end());
}

}  // namespace hbo
