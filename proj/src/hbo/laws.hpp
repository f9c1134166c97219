#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "hbo/budget.hpp"
#include "hbo/operads.hpp"
#include "hbo/report.hpp"

// Generic operad law checking.  An instance supplies arity, the unit, the
// partial composition a o_i b (1-based slot) and equality; full composition
// is derived by substituting parts left to right with accumulated slots.
// The harness sweeps the two defining identities of partial composition
//
//   (a o_i b) o_{i-1+j} c = a o_i (b o_j c)        1<=i<=ar(a), 1<=j<=ar(b)
//   (a o_i b) o_{k-1+ar(b)} c = (a o_k b) o_i c    1<=i<k<=ar(a)
//
// together with the unit laws, plus a bounded sample of the nested full-
// composition identity.

namespace hbo {

template <typename O>
concept Operad = requires(const O& op, const typename O::Element& a, int i) {
  { op.name() } -> std::convertible_to<std::string>;
  { op.arity(a) } -> std::convertible_to<int>;
  { op.unit() } -> std::convertible_to<typename O::Element>;
  { op.compose_at(a, i, a) } -> std::convertible_to<typename O::Element>;
  { op.equal(a, a) } -> std::convertible_to<bool>;
  { op.show(a) } -> std::convertible_to<std::string>;
};

template <typename O>
concept OrderedOperad = Operad<O> && requires(const O& op, const typename O::Element& a) {
  { op.leq(a, a) } -> std::convertible_to<bool>;
};

// Full composition derived from partial compositions: substitute parts
// left to right; after placing t parts the next slot shifts by the extra
// arity those parts contributed.
template <Operad O>
typename O::Element derived_compose(const O& op, const typename O::Element& a,
                                    const std::vector<typename O::Element>& parts) {
  if (static_cast<int>(parts.size()) != op.arity(a)) {
    fail(ErrorCode::invalid_argument, op.name() + ": part count != arity");
  }
  typename O::Element acc = a;
  int shift = 0;
  for (std::size_t t = 0; t < parts.size(); ++t) {
    acc = op.compose_at(acc, static_cast<int>(t) + 1 + shift, parts[t]);
    shift += op.arity(parts[t]) - 1;
  }
  return acc;
}

struct LawSweepOptions {
  std::size_t nested_samples = 400;  // deterministic cap on nested gamma checks
  Budget* budget = nullptr;
};

template <Operad O>
LawReport verify_operad_laws(const O& op,
                             const std::vector<typename O::Element>& pool,
                             const LawSweepOptions& options = {}) {
  LawReport report;
  report.name = op.name();
  auto charge = [&] {
    if (options.budget) options.budget->charge();
  };

  // unit laws
  const typename O::Element unit = op.unit();
  for (const auto& a : pool) {
    charge();
    for (int i = 1; i <= op.arity(a); ++i) {
      if (op.equal(op.compose_at(a, i, unit), a)) {
        report.pass();
      } else {
        report.fail("right unit fails at slot " + std::to_string(i) + " on " +
                    op.show(a));
      }
    }
    if (op.equal(op.compose_at(unit, 1, a), a)) {
      report.pass();
    } else {
      report.fail("left unit fails on " + op.show(a));
    }
  }

  // sequential and parallel partial-composition identities
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      for (const auto& c : pool) {
        charge();
        for (int i = 1; i <= op.arity(a); ++i) {
          const auto ab = op.compose_at(a, i, b);
          for (int j = 1; j <= op.arity(b); ++j) {
            const auto lhs = op.compose_at(ab, i - 1 + j, c);
            const auto rhs = op.compose_at(a, i, op.compose_at(b, j, c));
            if (op.equal(lhs, rhs)) {
              report.pass();
            } else {
              report.fail("sequential law fails at i=" + std::to_string(i) +
                          " j=" + std::to_string(j) + " on " + op.show(a) + " ; " +
                          op.show(b) + " ; " + op.show(c));
            }
          }
          for (int k = i + 1; k <= op.arity(a); ++k) {
            const auto lhs = op.compose_at(ab, k - 1 + op.arity(b), c);
            const auto rhs = op.compose_at(op.compose_at(a, k, c), i, b);
            if (op.equal(lhs, rhs)) {
              report.pass();
            } else {
              report.fail("parallel law fails at i=" + std::to_string(i) +
                          " k=" + std::to_string(k) + " on " + op.show(a) + " ; " +
                          op.show(b) + " ; " + op.show(c));
            }
          }
        }
      }
    }
  }

  // nested full composition on a deterministic sample: substituting twice in
  // sequence equals substituting the pre-composed parts
  std::size_t sampled = 0;
  for (std::size_t ia = 0; ia < pool.size() && sampled < options.nested_samples; ++ia) {
    const auto& a = pool[ia];
    const int k = op.arity(a);
    if (k > 2) continue;  // keep the tuple space small
    // stride through part assignments
    const std::size_t step = 1 + pool.size() / 3;
    for (std::size_t ib = 0; ib < pool.size() && sampled < options.nested_samples;
         ib += step) {
      std::vector<typename O::Element> bs(static_cast<std::size_t>(k),
                                          pool[(ia + ib) % pool.size()]);
      if (k >= 1) bs[0] = pool[ib];
      std::vector<typename O::Element> cs;
      std::vector<std::vector<typename O::Element>> per_part;
      bool feasible = true;
      for (const auto& b : bs) {
        std::vector<typename O::Element> row(
            static_cast<std::size_t>(op.arity(b)),
            pool[(ib + cs.size()) % pool.size()]);
        per_part.push_back(row);
        for (const auto& e : row) cs.push_back(e);
        if (cs.size() > 12) feasible = false;
      }
      if (!feasible) continue;
      charge();
      ++sampled;
      const auto once = derived_compose(op, a, bs);
      const auto lhs = derived_compose(op, once, cs);
      std::vector<typename O::Element> pre;
      pre.reserve(bs.size());
      for (std::size_t t = 0; t < bs.size(); ++t) {
        pre.push_back(derived_compose(op, bs[t], per_part[t]));
      }
      const auto rhs = derived_compose(op, a, pre);
      if (op.equal(lhs, rhs)) {
        report.pass();
      } else {
        report.fail("nested composition fails on " + op.show(a));
      }
    }
  }

  return report;
}

// Monotonicity of composition for ordered operads: comparable heads composed
// with slotwise-comparable parts give comparable results.  Exhaustive over
// the comparable pairs of both pools; every part slot draws from part_pool.
template <OrderedOperad O>
LawReport monotone_compose_check(const O& op,
                                 const std::vector<typename O::Element>& head_pool,
                                 const std::vector<typename O::Element>& part_pool,
                                 Budget* budget = nullptr) {
  LawReport report;
  report.name = op.name() + " monotonicity";
  using Element = typename O::Element;

  auto comparable = [&op](const std::vector<Element>& pool) {
    std::vector<std::pair<const Element*, const Element*>> pairs;
    for (const auto& x : pool) {
      for (const auto& y : pool) {
        if (op.arity(x) == op.arity(y) && op.leq(x, y)) pairs.emplace_back(&x, &y);
      }
    }
    return pairs;
  };
  const auto head_pairs = comparable(head_pool);
  const auto part_pairs = comparable(part_pool);
  if (head_pairs.empty() || part_pairs.empty()) return report;

  const int arity = op.arity(*head_pairs.front().first);
  // slotwise assignment of comparable part pairs: iterate the mixed radix
  // counter over part_pairs^arity
  std::vector<std::size_t> pick(static_cast<std::size_t>(arity), 0);
  while (true) {
    for (const auto& [lo, hi] : head_pairs) {
      if (op.arity(*lo) != arity) continue;
      if (budget) budget->charge();
      std::vector<Element> lo_parts, hi_parts;
      lo_parts.reserve(pick.size());
      hi_parts.reserve(pick.size());
      for (std::size_t s = 0; s < pick.size(); ++s) {
        lo_parts.push_back(*part_pairs[pick[s]].first);
        hi_parts.push_back(*part_pairs[pick[s]].second);
      }
      const Element low = derived_compose(op, *lo, lo_parts);
      const Element high = derived_compose(op, *hi, hi_parts);
      if (op.leq(low, high)) {
        report.pass();
      } else {
        report.fail("composition not monotone on " + op.show(*lo) + " <= " +
                    op.show(*hi));
      }
    }
    std::size_t s = 0;
    while (s < pick.size() && ++pick[s] == part_pairs.size()) {
      pick[s] = 0;
      ++s;
    }
    if (s == pick.size()) break;
  }
  return report;
}

// ---------------------------------------------------------------------------
// Instance adapters.

struct MasterOperad {
  using Element = MoleculeType;
  int d = 1;

  std::string name() const { return "master d=" + std::to_string(d); }
  int arity(const Element& a) const { return a.arity(); }
  Element unit() const { return master_unit(d); }
  Element compose_at(const Element& a, int i, const Element& b) const {
    return master_insert(a, i, b);
  }
  Element full_compose(const Element& a, const std::vector<Element>& parts) const {
    return master_compose(a, parts);
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  std::string show(const Element& a) const { return a.str(); }
};

struct SymOperad {
  using Element = Perm;

  std::string name() const { return "symmetric"; }
  int arity(const Element& a) const { return a.size(); }
  Element unit() const { return Perm::identity(1); }
  Element compose_at(const Element& a, int i, const Element& b) const {
    return permutation_insert(a, b, i);
  }
  Element full_compose(const Element& a, const std::vector<Element>& parts) const {
    return sym_compose(a, parts);
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool leq(const Element& a, const Element& b) const {
    return a.size() == b.size() && weak_leq(a, b);
  }
  std::string show(const Element& a) const { return a.str(); }
};

struct FOperad {
  using Element = FElement;

  std::string name() const { return "team"; }
  int arity(const Element& a) const { return a.type().arity(); }
  Element unit() const { return f_unit(); }
  Element compose_at(const Element& a, int i, const Element& b) const {
    std::vector<Element> parts;
    parts.reserve(static_cast<std::size_t>(a.type().arity()));
    for (int s = 1; s <= a.type().arity(); ++s) {
      parts.push_back(s == i ? b : unit());
    }
    return f_compose(a, parts);
  }
  Element full_compose(const Element& a, const std::vector<Element>& parts) const {
    return f_compose(a, parts);
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool leq(const Element& a, const Element& b) const {
    return a.type() == b.type() && weak_leq(a.realized(), b.realized());
  }
  std::string show(const Element& a) const { return a.str(); }
};

struct SmallBruhatOperad {
  using Element = BruhatElement;
  int d = 1;

  std::string name() const { return "small Bruhat d=" + std::to_string(d); }
  int arity(const Element& a) const { return a.n() / d; }
  Element unit() const { return small_unit(d); }
  Element compose_at(const Element& a, int i, const Element& b) const {
    return insert(a, b, (i - 1) * d);
  }
  Element full_compose(const Element& a, const std::vector<Element>& parts) const {
    return small_compose(a, parts);
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool leq(const Element& a, const Element& b) const {
    return a.n() == b.n() && hbo::leq(a, b);
  }
  std::string show(const Element& a) const { return a.inv().str(); }
};

struct BigBruhatOperad {
  using Element = BigElement;
  int d = 1;

  std::string name() const { return "big Bruhat d=" + std::to_string(d); }
  int arity(const Element& a) const { return a.arity(); }
  Element unit() const { return big_unit(d); }
  Element compose_at(const Element& a, int i, const Element& b) const {
    std::vector<Element> parts;
    parts.reserve(static_cast<std::size_t>(a.arity()));
    for (int s = 1; s <= a.arity(); ++s) parts.push_back(s == i ? b : unit());
    return big_compose(a, parts);
  }
  Element full_compose(const Element& a, const std::vector<Element>& parts) const {
    return big_compose(a, parts);
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool leq(const Element& a, const Element& b) const {
    return a.type() == b.type() && hbo::leq(a.bruhat(), b.bruhat());
  }
  std::string show(const Element& a) const { return a.str(); }
};

// Cross-check that an instance's native full composition matches the one
// derived from partial compositions, over all part tuples from the pool.
template <Operad O>
LawReport check_full_compose(const O& op,
                             const std::vector<typename O::Element>& heads,
                             const std::vector<typename O::Element>& parts,
                             Budget* budget = nullptr) {
  LawReport report;
  report.name = op.name() + " full composition";
  for (const auto& a : heads) {
    const int k = op.arity(a);
    std::vector<std::size_t> pick(static_cast<std::size_t>(k), 0);
    while (true) {
      if (budget) budget->charge();
      std::vector<typename O::Element> tuple;
      tuple.reserve(pick.size());
      for (std::size_t s : pick) tuple.push_back(parts[s]);
      if (op.equal(op.full_compose(a, tuple), derived_compose(op, a, tuple))) {
        report.pass();
      } else {
        report.fail("full vs derived composition differ on " + op.show(a));
      }
      std::size_t s = 0;
      while (s < pick.size() && ++pick[s] == parts.size()) {
        pick[s] = 0;
        ++s;
      }
      if (s == pick.size()) break;
    }
  }
  return report;
}

}  // namespace hbo
