#include "hbo/insertion.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "hbo/error.hpp"

namespace hbo {

InsertionFrame InsertionFrame::make(int n, int m, int d, int j) {
  if (d < 1 || n < d || m < d) {
    fail(ErrorCode::invalid_argument,
         "insertion needs n >= d and m >= d with d >= 1, got n=" + std::to_string(n) +
             " m=" + std::to_string(m) + " d=" + std::to_string(d));
  }
  if (j < 0 || j > n - d) {
    fail(ErrorCode::invalid_argument,
         "offset j=" + std::to_string(j) + " outside [0," + std::to_string(n - d) +
             "]");
  }
  return InsertionFrame{n, m, d, j};
}

Subset InsertionFrame::phi_inv(const Subset& s) const {
  std::vector<int> out;
  out.reserve(s.size());
  for (int v : s.elems()) {
    if (in_B(v) && !in_D(v)) {
      fail(ErrorCode::internal, "phi_inv applied to " + s.str() + " which meets B\\D");
    }
    out.push_back(phi_inv(v));
  }
  return Subset(std::move(out));
}

InsertionCase classify(const Subset& L, const InsertionFrame& frame) {
  bool all_in_B = true;
  bool meets_B_minus_D = false;
  for (int v : L.elems()) {
    if (!frame.in_B(v)) all_in_B = false;
    if (frame.in_B(v) && !frame.in_D(v)) meets_B_minus_D = true;
  }
  if (all_in_B) return InsertionCase::inner;
  if (!meets_B_minus_D) return InsertionCase::outer;
  return InsertionCase::mixed;
}

Subset bar(const Subset& L, const InsertionFrame& frame) {
  if (classify(L, frame) != InsertionCase::mixed) {
    fail(ErrorCode::invalid_argument, "bar applies to the mixed case only");
  }
  std::vector<int> plus;   // L^+ = L \ (B \ D)
  std::vector<int> minus;  // L^- = L n (B \ D)
  for (int v : L.elems()) {
    if (frame.in_B(v) && !frame.in_D(v)) {
      minus.push_back(v);
    } else {
      plus.push_back(v);
    }
  }
  // rightmost elements of D \ L^+ (L^- is disjoint from D, so D \ L^+ = D \ L)
  std::vector<int> free_d;
  for (int v = frame.j + 1; v <= frame.j + frame.d; ++v) {
    if (!L.contains(v)) free_d.push_back(v);
  }
  if (free_d.size() < minus.size()) {
    fail(ErrorCode::invalid_argument,
         "bar undefined: D cannot absorb L^- for " + L.str());
  }
  plus.insert(plus.end(), free_d.end() - static_cast<std::ptrdiff_t>(minus.size()),
              free_d.end());
  return Subset(std::move(plus));
}

BruhatElement insert(const BruhatElement& b, const BruhatElement& b2, int j) {
  if (b.d() != b2.d()) {
    fail(ErrorCode::invalid_argument, "insertion arguments must share d");
  }
  const InsertionFrame frame = InsertionFrame::make(b.n(), b2.n(), b.d(), j);

  std::vector<Subset> members;
  for (const Subset& L : k_subsets(frame.ground(), frame.d + 1)) {
    bool member = false;
    switch (classify(L, frame)) {
      case InsertionCase::inner:
        member = b2.inv().contains(L.shifted(-frame.j));
        break;
      case InsertionCase::outer:
        member = b.inv().contains(frame.phi_inv(L));
        break;
      case InsertionCase::mixed:
        member = b.inv().contains(frame.phi_inv(bar(L, frame)));
        break;
    }
    if (member) members.push_back(L);
  }

  InversionSet inv(frame.ground(), frame.d, std::move(members));
#if HBO_VALIDATE_INSERTIONS
  ZieglerResult z = ziegler_check(inv);
  if (!z.ok()) {
    fail(ErrorCode::internal,
         "insertion produced an invalid set at offset " + std::to_string(j) + ": " +
             inv.str());
  }
#endif
  return BruhatElement::trusted(std::move(inv));
}

Perm permutation_insert(const Perm& sigma, const Perm& tau, int pos) {
  const int n = sigma.size();
  const int m = tau.size();
  if (pos < 1 || pos > n) {
    fail(ErrorCode::invalid_argument,
         "insertion position " + std::to_string(pos) + " outside [1," +
             std::to_string(n) + "]");
  }
  const int target = sigma(pos);
  std::vector<int> images(static_cast<std::size_t>(n + m - 1));
  // positions before the inserted block keep sigma, with values >= target
  // pushed up to make room for tau's value band
  for (int x = 1; x < pos; ++x) {
    const int v = sigma(x);
    images[static_cast<std::size_t>(x - 1)] = v < target ? v : v + m - 1;
  }
  // the block itself holds tau shifted into the band around target
  for (int t = 1; t <= m; ++t) {
    images[static_cast<std::size_t>(pos - 1 + t - 1)] = target - 1 + tau(t);
  }
  // positions after the block resume sigma at pos+1
  for (int x = pos + m; x <= n + m - 1; ++x) {
    const int v = sigma(x - m + 1);
    images[static_cast<std::size_t>(x - 1)] = v < target ? v : v + m - 1;
  }
  return Perm(std::move(images));
}

namespace {

void require_uniform(const std::vector<BruhatElement>& pool, const char* which) {
  for (std::size_t i = 1; i < pool.size(); ++i) {
    if (pool[i].n() != pool[0].n() || pool[i].d() != pool[0].d()) {
      fail(ErrorCode::invalid_argument,
           std::string(which) + " pool mixes different orders");
    }
  }
}

std::string triple_tag(const BruhatElement& a, const BruhatElement& b,
                       const BruhatElement& c) {
  std::ostringstream os;
  os << a.inv() << " , " << b.inv() << " , " << c.inv();
  return os.str();
}

}  // namespace

LawReport check_insertion_laws(const std::vector<BruhatElement>& as,
                               const std::vector<BruhatElement>& bs,
                               const std::vector<BruhatElement>& cs) {
  LawReport report;
  report.name = "insertion laws";
  if (as.empty() || bs.empty() || cs.empty()) return report;
  require_uniform(as, "first");
  require_uniform(bs, "second");
  require_uniform(cs, "third");
  const int d = as[0].d();
  if (bs[0].d() != d || cs[0].d() != d) {
    fail(ErrorCode::invalid_argument, "law pools must share d");
  }
  const int n = as[0].n();
  const int m = bs[0].n();
  report.name += " B(" + std::to_string(n) + "," + std::to_string(d) + ") x B(" +
                 std::to_string(m) + "," + std::to_string(d) + ") x B(" +
                 std::to_string(cs[0].n()) + "," + std::to_string(d) + ")";

  for (const BruhatElement& a : as) {
    for (const BruhatElement& b : bs) {
      for (const BruhatElement& c : cs) {
        // sequential: inserting c inside the copy of b
        for (int j = 0; j <= n - d; ++j) {
          for (int j2 = 0; j2 <= m - d; ++j2) {
            const BruhatElement lhs = insert(insert(a, b, j), c, j + j2);
            const BruhatElement rhs = insert(a, insert(b, c, j2), j);
            if (lhs == rhs) {
              report.pass();
            } else {
              report.fail("sequential law fails at j=" + std::to_string(j) +
                          " j'=" + std::to_string(j2) + " on " + triple_tag(a, b, c));
            }
          }
        }
        // parallel: b and c land in disjoint blocks of a
        for (int k0 = 0; k0 + 2 * d <= n; ++k0) {
          for (int k1 = 0; k0 + k1 + 2 * d <= n; ++k1) {
            const BruhatElement lhs = insert(insert(a, b, k0), c, k0 + m + k1);
            const BruhatElement rhs = insert(insert(a, c, k0 + d + k1), b, k0);
            if (lhs == rhs) {
              report.pass();
            } else {
              report.fail("parallel law fails at k0=" + std::to_string(k0) +
                          " k1=" + std::to_string(k1) + " on " + triple_tag(a, b, c));
            }
          }
        }
      }
    }
  }
  return report;
}

LawReport check_insertion_monotone(const std::vector<BruhatElement>& outer,
                                   const std::vector<BruhatElement>& inner) {
  LawReport report;
  report.name = "insertion monotonicity";
  if (outer.empty() || inner.empty()) return report;
  require_uniform(outer, "outer");
  require_uniform(inner, "inner");
  const int n = outer[0].n();
  const int d = outer[0].d();
  if (inner[0].d() != d) {
    fail(ErrorCode::invalid_argument, "monotonicity pools must share d");
  }
  report.name += " B(" + std::to_string(n) + "," + std::to_string(d) +
                 ") <- B(" + std::to_string(inner[0].n()) + "," +
                 std::to_string(d) + ")";

  for (int j = 0; j <= n - d; ++j) {
    // monotone in the inserted argument
    for (const BruhatElement& b : outer) {
      for (const BruhatElement& p : inner) {
        for (const BruhatElement& q : inner) {
          if (!leq(p, q)) continue;
          if (leq(insert(b, p, j), insert(b, q, j))) {
            report.pass();
          } else {
            report.fail("inner monotonicity fails at j=" + std::to_string(j) +
                        " on " + triple_tag(b, p, q));
          }
        }
      }
    }
    // monotone in the receiving argument
    for (const BruhatElement& b : outer) {
      for (const BruhatElement& bt : outer) {
        if (!leq(b, bt)) continue;
        for (const BruhatElement& p : inner) {
          if (leq(insert(b, p, j), insert(bt, p, j))) {
            report.pass();
          } else {
            report.fail("outer monotonicity fails at j=" + std::to_string(j) +
                        " on " + triple_tag(b, bt, p));
          }
        }
      }
    }
  }
  return report;
}

}  // namespace hbo
