#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "hbo/budget.hpp"
#include "hbo/error.hpp"
#include "hbo/perms.hpp"
#include "hbo/subsets.hpp"

using namespace hbo;

TEST_CASE("binomial coefficients") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 5) == 252);
  CHECK(binomial(4, 7) == 0);
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}

TEST_CASE("subsets are canonical and validated") {
  const Subset s{3, 1, 4};
  CHECK(s.str() == "{1,3,4}");
  CHECK(s.size() == 3);
  CHECK(s.min() == 1);
  CHECK(s.max() == 4);
  CHECK(s.contains(3));
  CHECK(!s.contains(2));
  CHECK(s.with(2).str() == "{1,2,3,4}");
  CHECK(s.without_value(3).str() == "{1,4}");
  CHECK(s.without_index(0).str() == "{3,4}");
  CHECK(s.shifted(2).str() == "{3,5,6}");

  CHECK_THROWS_AS(Subset({1, 1}), Error);
  CHECK_THROWS_AS(Subset({0, 2}), Error);
  CHECK_THROWS_AS(Subset({-1}), Error);

  CHECK(Subset{1, 2} < Subset{1, 3});
  CHECK(Subset{1, 3} < Subset{2, 3});
  CHECK(Subset{} < Subset{1});
}

TEST_CASE("k_subsets run in lexicographic order") {
  const auto pairs = k_subsets(4, 2);
  REQUIRE(pairs.size() == 6);
  CHECK(pairs[0] == Subset{1, 2});
  CHECK(pairs[1] == Subset{1, 3});
  CHECK(pairs[2] == Subset{1, 4});
  CHECK(pairs[3] == Subset{2, 3});
  CHECK(pairs[4] == Subset{2, 4});
  CHECK(pairs[5] == Subset{3, 4});
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));

  CHECK(k_subsets(3, 0).size() == 1);
  CHECK(k_subsets(3, 0)[0].empty());
  CHECK(k_subsets(2, 3).empty());
  for (int n = 0; n <= 7; ++n) {
    for (int k = 0; k <= n; ++k) {
      const auto subsets = k_subsets(n, k);
      CHECK(subsets.size() == binomial(n, k));
      CHECK(std::is_sorted(subsets.begin(), subsets.end()));
      const std::set<Subset> unique(subsets.begin(), subsets.end());
      CHECK(unique.size() == subsets.size());
    }
  }
}

TEST_CASE("packet of a subset deletes the largest element first") {
  const Packet p = packet_of(Subset{1, 2, 3});
  REQUIRE(p.members.size() == 3);
  CHECK(p.members[0] == Subset{1, 2});
  CHECK(p.members[1] == Subset{1, 3});
  CHECK(p.members[2] == Subset{2, 3});

  // deleting the (i+1)-st largest gives the i-th member, and the result is
  // always sorted lexicographically
  for (const Subset& s : k_subsets(6, 3)) {
    const Packet q = packet_of(s);
    REQUIRE(q.members.size() == s.size());
    CHECK(std::is_sorted(q.members.begin(), q.members.end()));
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(q.members[i] == s.without_index(s.size() - 1 - i));
    }
  }
}

TEST_CASE("monotone bijection maps order-isomorphically") {
  const MonotoneBijection phi({1, 2, 5}, {3, 7, 9});
  CHECK(phi.map(1) == 3);
  CHECK(phi.map(2) == 7);
  CHECK(phi.map(5) == 9);
  CHECK(phi.inv(9) == 5);
  CHECK(phi.map(Subset{1, 5}) == Subset{3, 9});
  CHECK(phi.inv(Subset{3, 7}) == Subset{1, 2});
  CHECK_THROWS_AS(phi.map(4), Error);
  CHECK_THROWS_AS(MonotoneBijection({1, 2}, {1}), Error);
}

TEST_CASE("permutations validate and invert") {
  const Perm p({2, 3, 1});
  CHECK(p.size() == 3);
  CHECK(p(1) == 2);
  CHECK(p.str() == "[2,3,1]");
  CHECK(p.inverse() == Perm({3, 1, 2}));
  CHECK(p.inverse().inverse() == p);
  CHECK(Perm::identity(4) == Perm({1, 2, 3, 4}));
  CHECK_THROWS_AS(Perm({1, 1}), Error);
  CHECK_THROWS_AS(Perm({0, 1}), Error);
  CHECK_THROWS_AS(Perm({2, 3}), Error);
}

TEST_CASE("all_perms enumerates the symmetric group") {
  const auto s3 = all_perms(3);
  REQUIRE(s3.size() == 6);
  const std::set<Perm> unique(s3.begin(), s3.end());
  CHECK(unique.size() == 6);
  CHECK(all_perms(1).size() == 1);
  CHECK(all_perms(4).size() == 24);
}

TEST_CASE("inversion pairs use positions in one-line notation") {
  // the discriminating case: [2,3,1] has inversions at position pairs
  // {1,3} and {2,3} (values 2>1 and 3>1), not at {1,2}
  const auto inv = inversion_pairs(Perm({2, 3, 1}));
  REQUIRE(inv.size() == 2);
  CHECK(inv[0] == std::array<int, 2>{1, 3});
  CHECK(inv[1] == std::array<int, 2>{2, 3});
  CHECK(inversion_pairs(Perm::identity(5)).empty());
  CHECK(inversion_pairs(Perm({3, 2, 1})).size() == 3);
}

TEST_CASE("weak order is containment of inversion sets") {
  const Perm id = Perm::identity(3);
  const Perm w0({3, 2, 1});
  for (const Perm& p : all_perms(3)) {
    CHECK(weak_leq(id, p));
    CHECK(weak_leq(p, w0));
    CHECK(weak_leq(p, p));
  }
  CHECK(!weak_leq(Perm({2, 1, 3}), Perm({1, 3, 2})));
  // antisymmetry
  for (const Perm& p : all_perms(3)) {
    for (const Perm& q : all_perms(3)) {
      if (weak_leq(p, q) && weak_leq(q, p)) CHECK(p == q);
    }
  }
}

TEST_CASE("budget guards runaway searches") {
  Budget b(3);
  b.charge();
  b.charge(2);
  CHECK(b.used() == 3);
  CHECK_THROWS_AS(b.charge(), Error);
  try {
    Budget(0).charge();
    FAIL("expected budget error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::budget_exceeded);
  }
}
