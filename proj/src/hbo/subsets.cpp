#include "hbo/subsets.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "hbo/error.hpp"

namespace hbo {

Subset::Subset(std::vector<int> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1) {
      fail(ErrorCode::invalid_argument, "subset elements must be >= 1");
    }
    if (i > 0 && elems_[i] == elems_[i - 1]) {
      fail(ErrorCode::invalid_argument,
           "duplicate element " + std::to_string(elems_[i]) + " in subset");
    }
  }
}

Subset::Subset(std::initializer_list<int> elems)
    : Subset(std::vector<int>(elems)) {}

bool Subset::contains(int v) const {
  return std::binary_search(elems_.begin(), elems_.end(), v);
}

Subset Subset::with(int v) const {
  if (contains(v)) {
    fail(ErrorCode::invalid_argument,
         "element " + std::to_string(v) + " already present in " + str());
  }
  std::vector<int> e = elems_;
  e.insert(std::upper_bound(e.begin(), e.end(), v), v);
  Subset out;
  out.elems_ = std::move(e);  // still sorted and distinct
  return out;
}

Subset Subset::without_value(int v) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), v);
  if (it == elems_.end() || *it != v) {
    fail(ErrorCode::invalid_argument,
         "element " + std::to_string(v) + " not present in " + str());
  }
  Subset out;
  out.elems_.assign(elems_.begin(), it);
  out.elems_.insert(out.elems_.end(), it + 1, elems_.end());
  return out;
}

Subset Subset::without_index(std::size_t i) const {
  if (i >= elems_.size()) {
    fail(ErrorCode::invalid_argument, "subset index out of range");
  }
  Subset out;
  out.elems_ = elems_;
  out.elems_.erase(out.elems_.begin() + static_cast<std::ptrdiff_t>(i));
  return out;
}

Subset Subset::shifted(int delta) const {
  Subset out;
  out.elems_ = elems_;
  for (int& v : out.elems_) {
    v += delta;
    if (v < 1) fail(ErrorCode::invalid_argument, "shift drops element below 1");
  }
  return out;
}

std::string Subset::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Subset& s) {
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  return os << '}';
}

std::size_t SubsetHash::operator()(const Subset& s) const {
  std::size_t h = 1469598103934665603ull;  // FNV-1a over the elements
  for (int v : s.elems()) {
    h ^= static_cast<std::size_t>(v);
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  }
  return r;
}

std::vector<Subset> k_subsets(int n, int k) {
  if (n < 0) fail(ErrorCode::invalid_argument, "ground size must be >= 0");
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.emplace_back();
    return out;
  }
  out.reserve(binomial(n, k));
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.push_back(Subset(cur));
    // advance the rightmost index that still has room
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - (k - 1 - i)) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < k; ++t) {
      cur[static_cast<std::size_t>(t)] = cur[static_cast<std::size_t>(t - 1)] + 1;
    }
  }
  return out;
}

Packet packet_of(const Subset& s) {
  if (s.empty()) fail(ErrorCode::invalid_argument, "packet of the empty subset");
  Packet p;
  p.source = s;
  p.members.reserve(s.size());
  // delete the largest element first, then the next largest, ...
  for (std::size_t t = 0; t < s.size(); ++t) {
    p.members.push_back(s.without_index(s.size() - 1 - t));
  }
  return p;
}

MonotoneBijection::MonotoneBijection(std::vector<int> src, std::vector<int> dst)
    : src_(std::move(src)), dst_(std::move(dst)) {
  std::sort(src_.begin(), src_.end());
  std::sort(dst_.begin(), dst_.end());
  if (src_.size() != dst_.size()) {
    fail(ErrorCode::invalid_argument,
         "monotone bijection needs sets of equal cardinality");
  }
  for (std::size_t i = 1; i < src_.size(); ++i) {
    if (src_[i] == src_[i - 1] || dst_[i] == dst_[i - 1]) {
      fail(ErrorCode::invalid_argument, "monotone bijection needs distinct values");
    }
  }
}

int MonotoneBijection::map(int v) const {
  auto it = std::lower_bound(src_.begin(), src_.end(), v);
  if (it == src_.end() || *it != v) {
    fail(ErrorCode::invalid_argument,
         "value " + std::to_string(v) + " outside bijection domain");
  }
  return dst_[static_cast<std::size_t>(it - src_.begin())];
}

int MonotoneBijection::inv(int v) const {
  auto it = std::lower_bound(dst_.begin(), dst_.end(), v);
  if (it == dst_.end() || *it != v) {
    fail(ErrorCode::invalid_argument,
         "value " + std::to_string(v) + " outside bijection range");
  }
  return src_[static_cast<std::size_t>(it - dst_.begin())];
}

Subset MonotoneBijection::map(const Subset& s) const {
  std::vector<int> out;
  out.reserve(s.size());
  for (int v : s.elems()) out.push_back(map(v));
  return Subset(std::move(out));
}

Subset MonotoneBijection::inv(const Subset& s) const {
  std::vector<int> out;
  out.reserve(s.size());
  for (int v : s.elems()) out.push_back(inv(v));
  return Subset(std::move(out));
}

}  // namespace hbo
