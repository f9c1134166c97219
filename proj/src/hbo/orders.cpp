#include "hbo/orders.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>

#include "hbo/error.hpp"

namespace hbo {

namespace {

void require_dims(int n, int d) {
  if (d < 1 || n < d) {
    fail(ErrorCode::invalid_argument,
         "need 1 <= d <= n, got n=" + std::to_string(n) + " d=" + std::to_string(d));
  }
}

}  // namespace

InversionSet::InversionSet(int n, int d, std::vector<Subset> members)
    : n_(n), d_(d), members_(std::move(members)) {
  require_dims(n, d);
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    const Subset& s = members_[i];
    if (static_cast<int>(s.size()) != d + 1) {
      fail(ErrorCode::invalid_argument,
           "inversion " + s.str() + " is not a " + std::to_string(d + 1) + "-subset");
    }
    if (s.max() > n) {
      fail(ErrorCode::invalid_argument,
           "inversion " + s.str() + " outside ground set [" + std::to_string(n) + "]");
    }
    if (i > 0 && s == members_[i - 1]) {
      fail(ErrorCode::invalid_argument, "duplicate inversion " + s.str());
    }
  }
}

bool InversionSet::contains(const Subset& s) const {
  return std::binary_search(members_.begin(), members_.end(), s);
}

bool InversionSet::subset_of(const InversionSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

InversionSet InversionSet::with(const Subset& s) const {
  std::vector<Subset> m = members_;
  m.push_back(s);
  return InversionSet(n_, d_, std::move(m));
}

InversionSet InversionSet::complement() const {
  std::vector<Subset> m;
  for (const Subset& s : k_subsets(n_, d_ + 1)) {
    if (!contains(s)) m.push_back(s);
  }
  return InversionSet(n_, d_, std::move(m));
}

std::string InversionSet::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const InversionSet& inv) {
  os << '{';
  for (std::size_t i = 0; i < inv.members().size(); ++i) {
    if (i) os << ',';
    os << inv.members()[i];
  }
  return os << '}';
}

bool canonical_less(const InversionSet& a, const InversionSet& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.members() < b.members();
}

ZieglerResult ziegler_check(const InversionSet& inv) {
  ZieglerResult result;
  for (const Subset& q : k_subsets(inv.n(), inv.d() + 2)) {
    const Packet p = packet_of(q);
    // membership pattern along the packet sequence
    int first = -1, last = -1, count = 0;
    for (std::size_t t = 0; t < p.members.size(); ++t) {
      if (inv.contains(p.members[t])) {
        if (first < 0) first = static_cast<int>(t);
        last = static_cast<int>(t);
        ++count;
      }
    }
    if (count == 0) continue;
    const bool contiguous = (last - first + 1 == count);
    const bool prefix = contiguous && first == 0;
    const bool suffix = contiguous && last == static_cast<int>(p.members.size()) - 1;
    if (!prefix && !suffix) result.violations.push_back(q);
  }
  return result;
}

BruhatElement BruhatElement::checked(InversionSet inv) {
  ZieglerResult z = ziegler_check(inv);
  if (!z.ok()) {
    std::ostringstream os;
    os << "not an inversion set: packet interval criterion fails at";
    for (const Subset& q : z.violations) os << ' ' << q;
    fail(ErrorCode::invalid_argument, os.str());
  }
  return BruhatElement(std::move(inv));
}

BruhatElement BruhatElement::trusted(InversionSet inv) {
  return BruhatElement(std::move(inv));
}

std::ostream& operator<<(std::ostream& os, const BruhatElement& b) {
  return os << "B(" << b.n() << ',' << b.d() << ") " << b.inv();
}

BruhatElement minimal_element(int n, int d) {
  require_dims(n, d);
  return BruhatElement::trusted(InversionSet(n, d, {}));
}

BruhatElement maximal_element(int n, int d) {
  require_dims(n, d);
  return BruhatElement::trusted(InversionSet(n, d, k_subsets(n, d + 1)));
}

bool leq(const BruhatElement& a, const BruhatElement& b) {
  if (a.n() != b.n() || a.d() != b.d()) {
    fail(ErrorCode::invalid_argument,
         "comparing elements of different orders: " + a.inv().str() + " vs " +
             b.inv().str());
  }
  return a.inv().subset_of(b.inv());
}

LinearOrder::LinearOrder(int n, int d, std::vector<Subset> sequence)
    : n_(n), d_(d), sequence_(std::move(sequence)) {
  require_dims(n, d);
  if (sequence_.size() != binomial(n, d)) {
    fail(ErrorCode::invalid_argument,
         "order must list every " + std::to_string(d) + "-subset of [" +
             std::to_string(n) + "] exactly once");
  }
  for (std::size_t i = 0; i < sequence_.size(); ++i) {
    const Subset& s = sequence_[i];
    if (static_cast<int>(s.size()) != d || (!s.empty() && s.max() > n)) {
      fail(ErrorCode::invalid_argument, "entry " + s.str() + " is not a d-subset");
    }
    if (!positions_.emplace(s, static_cast<int>(i)).second) {
      fail(ErrorCode::invalid_argument, "entry " + s.str() + " repeated");
    }
  }
}

int LinearOrder::position(const Subset& s) const {
  auto it = positions_.find(s);
  if (it == positions_.end()) {
    fail(ErrorCode::invalid_argument, "subset " + s.str() + " not in the order");
  }
  return it->second;
}

namespace {

// -1: packet runs in reverse, +1: forward, 0: neither (inadmissible).
int packet_direction(const LinearOrder& order, const Packet& p) {
  bool inc = true, dec = true;
  int prev = order.position(p.members[0]);
  for (std::size_t t = 1; t < p.members.size(); ++t) {
    int cur = order.position(p.members[t]);
    inc = inc && cur > prev;
    dec = dec && cur < prev;
    prev = cur;
  }
  if (inc) return 1;
  if (dec) return -1;
  return 0;
}

}  // namespace

bool is_admissible(const LinearOrder& order) {
  for (const Subset& q : k_subsets(order.n(), order.d() + 1)) {
    if (packet_direction(order, packet_of(q)) == 0) return false;
  }
  return true;
}

InversionSet inversions(const LinearOrder& order) {
  std::vector<Subset> inv;
  for (const Subset& q : k_subsets(order.n(), order.d() + 1)) {
    switch (packet_direction(order, packet_of(q))) {
      case 1:
        break;
      case -1:
        inv.push_back(q);
        break;
      default:
        fail(ErrorCode::invalid_argument,
             "order not admissible: packet of " + q.str() +
                 " is neither in packet order nor reversed");
    }
  }
  return InversionSet(order.n(), order.d(), std::move(inv));
}

// ---------------------------------------------------------------------------
// Enumeration: decide membership of each (d+1)-subset in lexicographic order.
// Per packet of a (d+2)-subset we track the extremal decided positions; the
// partial assignment stays viable iff every decided "in" precedes every
// decided "out" (prefix) or follows it (suffix).

namespace {

struct PacketWindow {
  int min_in = std::numeric_limits<int>::max();
  int max_in = -1;
  int min_out = std::numeric_limits<int>::max();
  int max_out = -1;

  bool viable() const { return max_in < min_out || max_out < min_in; }
};

struct MemberUse {
  int packet;
  int position;
};

class BruhatSearch {
 public:
  BruhatSearch(int n, int d, Budget& budget) : n_(n), d_(d), budget_(budget) {
    members_ = k_subsets(n, d + 1);
    std::unordered_map<Subset, int, SubsetHash> index;
    for (std::size_t i = 0; i < members_.size(); ++i) {
      index.emplace(members_[i], static_cast<int>(i));
    }
    uses_.resize(members_.size());
    for (const Subset& q : k_subsets(n, d + 2)) {
      const Packet p = packet_of(q);
      const int pk = static_cast<int>(windows_.size());
      windows_.emplace_back();
      for (std::size_t t = 0; t < p.members.size(); ++t) {
        uses_[static_cast<std::size_t>(index.at(p.members[t]))].push_back(
            {pk, static_cast<int>(t)});
      }
    }
    chosen_.assign(members_.size(), false);
  }

  std::vector<InversionSet> run() {
    walk(0);
    std::sort(found_.begin(), found_.end(), canonical_less);
    return std::move(found_);
  }

 private:
  void walk(std::size_t next) {
    budget_.charge();
    if (next == members_.size()) {
      std::vector<Subset> inv;
      for (std::size_t i = 0; i < members_.size(); ++i) {
        if (chosen_[i]) inv.push_back(members_[i]);
      }
      found_.push_back(InversionSet(n_, d_, std::move(inv)));
      return;
    }
    for (bool in : {false, true}) {
      std::vector<std::pair<int, PacketWindow>> trail;
      bool ok = true;
      for (const MemberUse& use : uses_[next]) {
        PacketWindow& w = windows_[static_cast<std::size_t>(use.packet)];
        trail.emplace_back(use.packet, w);
        if (in) {
          w.min_in = std::min(w.min_in, use.position);
          w.max_in = std::max(w.max_in, use.position);
        } else {
          w.min_out = std::min(w.min_out, use.position);
          w.max_out = std::max(w.max_out, use.position);
        }
        if (!w.viable()) ok = false;
      }
      if (ok) {
        chosen_[next] = in;
        walk(next + 1);
      }
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        windows_[static_cast<std::size_t>(it->first)] = it->second;
      }
    }
  }

  int n_;
  int d_;
  Budget& budget_;
  std::vector<Subset> members_;
  std::vector<PacketWindow> windows_;
  std::vector<std::vector<MemberUse>> uses_;
  std::vector<bool> chosen_;
  std::vector<InversionSet> found_;
};

}  // namespace

std::vector<BruhatElement> enumerate_bruhat(int n, int d, Budget& budget) {
  require_dims(n, d);
  BruhatSearch search(n, d, budget);
  std::vector<InversionSet> sets = search.run();
  std::vector<BruhatElement> out;
  out.reserve(sets.size());
  for (InversionSet& inv : sets) out.push_back(BruhatElement::trusted(std::move(inv)));
  return out;
}

// ---------------------------------------------------------------------------
// Oracle: grow an order on the d-subsets one entry at a time.  A packet whose
// first element has appeared fixes a direction; later members must arrive in
// exactly that direction.

namespace {

struct PacketProgress {
  signed char direction = 0;  // 0 unset, +1 forward, -1 reversed
  signed char seen = 0;
  signed char expect = -1;    // next packet position, meaningful when seen > 0
};

class AdmissibleSearch {
 public:
  AdmissibleSearch(int n, int d, Budget& budget) : n_(n), d_(d), budget_(budget) {
    items_ = k_subsets(n, d);
    std::unordered_map<Subset, int, SubsetHash> index;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      index.emplace(items_[i], static_cast<int>(i));
    }
    uses_.resize(items_.size());
    for (const Subset& q : k_subsets(n, d + 1)) {
      const Packet p = packet_of(q);
      const int pk = static_cast<int>(packets_.size());
      packets_.push_back(q);
      progress_.emplace_back();
      packet_len_.push_back(static_cast<int>(p.members.size()));
      for (std::size_t t = 0; t < p.members.size(); ++t) {
        uses_[static_cast<std::size_t>(index.at(p.members[t]))].push_back(
            {pk, static_cast<int>(t)});
      }
    }
    used_.assign(items_.size(), false);
  }

  OracleResult run() {
    grow(0);
    OracleResult result;
    result.admissible_orders = orders_;
    result.classes.assign(classes_.begin(), classes_.end());
    std::sort(result.classes.begin(), result.classes.end(), canonical_less);
    return result;
  }

 private:
  bool place(std::size_t item, std::vector<std::pair<int, PacketProgress>>& trail) {
    for (const MemberUse& use : uses_[item]) {
      PacketProgress& st = progress_[static_cast<std::size_t>(use.packet)];
      trail.emplace_back(use.packet, st);
      const int len = packet_len_[static_cast<std::size_t>(use.packet)];
      if (st.seen == 0) {
        if (use.position == 0) {
          st.direction = 1;
          st.expect = 1;
        } else if (use.position == len - 1) {
          st.direction = -1;
          st.expect = static_cast<signed char>(len - 2);
        } else {
          return false;
        }
      } else {
        if (use.position != st.expect) return false;
        st.expect = static_cast<signed char>(st.expect + st.direction);
      }
      ++st.seen;
    }
    return true;
  }

  void grow(std::size_t depth) {
    budget_.charge();
    if (depth == items_.size()) {
      ++orders_;
      std::vector<Subset> inv;
      for (std::size_t pk = 0; pk < packets_.size(); ++pk) {
        if (progress_[pk].direction == -1) inv.push_back(packets_[pk]);
      }
      classes_.insert(InversionSet(n_, d_, std::move(inv)));
      return;
    }
    for (std::size_t item = 0; item < items_.size(); ++item) {
      if (used_[item]) continue;
      std::vector<std::pair<int, PacketProgress>> trail;
      if (place(item, trail)) {
        used_[item] = true;
        grow(depth + 1);
        used_[item] = false;
      }
      for (auto it = trail.rbegin(); it != trail.rend(); ++it) {
        progress_[static_cast<std::size_t>(it->first)] = it->second;
      }
    }
  }

  struct CanonicalLess {
    bool operator()(const InversionSet& a, const InversionSet& b) const {
      return canonical_less(a, b);
    }
  };

  int n_;
  int d_;
  Budget& budget_;
  std::vector<Subset> items_;
  std::vector<Subset> packets_;
  std::vector<int> packet_len_;
  std::vector<PacketProgress> progress_;
  std::vector<std::vector<MemberUse>> uses_;
  std::vector<bool> used_;
  std::uint64_t orders_ = 0;
  std::set<InversionSet, CanonicalLess> classes_;
};

}  // namespace

OracleResult enumerate_admissible_classes(int n, int d, Budget& budget) {
  require_dims(n, d);
  AdmissibleSearch search(n, d, budget);
  return search.run();
}

HasseDiagram hasse(int n, int d, Budget& budget) {
  HasseDiagram diagram;
  diagram.n = n;
  diagram.d = d;
  diagram.nodes = enumerate_bruhat(n, d, budget);

  struct CanonicalLess {
    bool operator()(const InversionSet& a, const InversionSet& b) const {
      return canonical_less(a, b);
    }
  };
  std::map<InversionSet, int, CanonicalLess> index;
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    index.emplace(diagram.nodes[i].inv(), static_cast<int>(i));
  }

  const std::vector<Subset> all = k_subsets(n, d + 1);
  for (std::size_t i = 0; i < diagram.nodes.size(); ++i) {
    const InversionSet& inv = diagram.nodes[i].inv();
    for (const Subset& x : all) {
      if (inv.contains(x)) continue;
      auto it = index.find(inv.with(x));
      if (it != index.end()) {
        diagram.edges.emplace_back(static_cast<int>(i), it->second);
      }
    }
  }
  std::sort(diagram.edges.begin(), diagram.edges.end());
  return diagram;
}

void for_each_maximal_chain(const HasseDiagram& diagram, Budget& budget,
                            const std::function<void(const MaximalChain&)>& fn) {
  if (diagram.nodes.empty()) return;
  // canonical order puts the minimum first and the maximum last
  const int source = 0;
  const int sink = static_cast<int>(diagram.nodes.size()) - 1;

  std::vector<std::vector<int>> adj(diagram.nodes.size());
  for (const auto& [a, b] : diagram.edges) adj[static_cast<std::size_t>(a)].push_back(b);

  std::vector<int> path{source};
  std::function<void(int)> walk = [&](int at) {
    budget.charge();
    if (at == sink) {
      MaximalChain chain;
      chain.steps.reserve(path.size());
      for (int idx : path) chain.steps.push_back(diagram.nodes[static_cast<std::size_t>(idx)]);
      fn(chain);
      return;
    }
    for (int next : adj[static_cast<std::size_t>(at)]) {
      path.push_back(next);
      walk(next);
      path.pop_back();
    }
  };
  walk(source);
}

std::vector<MaximalChain> maximal_chains(int n, int d, Budget& budget) {
  HasseDiagram diagram = hasse(n, d, budget);
  std::vector<MaximalChain> chains;
  for_each_maximal_chain(diagram, budget,
                         [&](const MaximalChain& c) { chains.push_back(c); });
  return chains;
}

LinearOrder chain_to_order(const MaximalChain& chain) {
  if (chain.steps.empty()) {
    fail(ErrorCode::invalid_argument, "empty chain");
  }
  const int n = chain.steps.front().n();
  const int d = chain.steps.front().d();
  if (d + 1 > n) {
    fail(ErrorCode::invalid_argument,
         "chain in B(" + std::to_string(n) + "," + std::to_string(d) +
             ") induces no order: no (d+1)-subsets");
  }
  if (!chain.steps.front().inv().empty()) {
    fail(ErrorCode::invalid_argument, "chain does not start at the minimum");
  }
  std::vector<Subset> sequence;
  for (std::size_t i = 1; i < chain.steps.size(); ++i) {
    const InversionSet& prev = chain.steps[i - 1].inv();
    const InversionSet& cur = chain.steps[i].inv();
    if (chain.steps[i].n() != n || chain.steps[i].d() != d ||
        cur.size() != prev.size() + 1 || !prev.subset_of(cur)) {
      fail(ErrorCode::invalid_argument,
           "chain step " + std::to_string(i) + " does not add exactly one inversion");
    }
    for (const Subset& s : cur.members()) {
      if (!prev.contains(s)) {
        sequence.push_back(s);
        break;
      }
    }
  }
  LinearOrder order(n, d + 1, std::move(sequence));  // also checks completeness
  if (!is_admissible(order)) {
    fail(ErrorCode::invalid_argument, "chain induces an inadmissible order");
  }
  return order;
}

BruhatElement to_bruhat(const Perm& p) {
  std::vector<Subset> inv;
  for (const auto& [i, k] : inversion_pairs(p)) inv.push_back(Subset{i, k});
  return BruhatElement::checked(InversionSet(p.size(), 1, std::move(inv)));
}

Perm to_perm(const BruhatElement& b) {
  if (b.d() != 1) {
    fail(ErrorCode::invalid_argument, "permutation bridge needs d = 1");
  }
  const int n = b.n();
  // Lehmer code from the inversion pairs, then decode.
  std::vector<int> code(static_cast<std::size_t>(n), 0);
  for (const Subset& s : b.inv().members()) {
    ++code[static_cast<std::size_t>(s[0] - 1)];
  }
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const int c = code[static_cast<std::size_t>(i)];
    images.push_back(pool[static_cast<std::size_t>(c)]);
    pool.erase(pool.begin() + c);
  }
  Perm result{std::move(images)};
  if (to_bruhat(result) != b) {
    fail(ErrorCode::internal, "inversion set is not realized by any permutation");
  }
  return result;
}

}  // namespace hbo
