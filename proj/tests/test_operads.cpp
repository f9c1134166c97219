// The operad family: molecule types with boundary-merging composition, the
// symmetric-group operad, the team operad F, the small Bruhat operad on
// B(nd, d), and the big Bruhat operad of (order, type) pairs.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "hbo/budget.hpp"
#include "hbo/error.hpp"
#include "hbo/insertion.hpp"
#include "hbo/operads.hpp"
#include "hbo/orders.hpp"
#include "hbo/perms.hpp"
#include "hbo/suites.hpp"

using namespace hbo;

namespace {

MoleculeType mt(std::vector<int> electrons, int d = 1) {
  return MoleculeType(d, std::move(electrons));
}

MoleculeType electron_free_type(int arity, int d = 1) {
  return MoleculeType(d, std::vector<int>(static_cast<std::size_t>(arity) + 1, 0));
}

}  // namespace

TEST_CASE("molecule types: layout accessors") {
  const MoleculeType t = mt({1, 0, 2});
  CHECK(t.d() == 1);
  CHECK(t.arity() == 2);
  CHECK(t.particle_count() == 5);  // e N N e e
  CHECK(t.nucleus_offset(1) == 1);
  CHECK(t.nucleus_offset(2) == 2);
  CHECK(t.nucleus_slots() == std::vector<int>{2, 3});
  CHECK_FALSE(t.electron_free());

  const MoleculeType w = mt({0, 1, 0}, 2);  // N N e N N
  CHECK(w.arity() == 2);
  CHECK(w.particle_count() == 5);
  CHECK(w.nucleus_offset(1) == 0);
  CHECK(w.nucleus_offset(2) == 3);
  CHECK(w.nucleus_slots() == std::vector<int>{1, 2, 4, 5});

  CHECK(electron_free_type(3).electron_free());

  CHECK_THROWS_AS(MoleculeType(1, {}), Error);
  CHECK_THROWS_AS(MoleculeType(1, {2}), Error);  // arity starts at 1
  CHECK_THROWS_AS(MoleculeType(1, {1, -1}), Error);
  CHECK_THROWS_AS(MoleculeType(0, {0, 0}), Error);
}

TEST_CASE("master composition: pinned values") {
  CHECK(master_unit(1) == mt({0, 0}));
  CHECK(master_unit(3) == mt({0, 0}, 3));

  CHECK(master_compose(mt({1, 2}), {mt({0, 1})}) == mt({1, 3}));
  CHECK(master_compose(mt({0, 0, 0}), {mt({1, 0}), mt({0, 2})}) ==
        mt({1, 0, 2}));
  CHECK(master_compose(mt({0, 0, 0}), {mt({1, 0}), mt({0, 0, 2})}) ==
        mt({1, 0, 0, 2}));

  CHECK_THROWS_AS(master_compose(mt({0, 0, 0}), {master_unit(1)}), Error);
  CHECK_THROWS_AS(master_compose(mt({0, 0}), {master_unit(2)}), Error);
}

TEST_CASE("master composition: structural properties") {
  Budget budget;
  const std::vector<MoleculeType> pool = molecule_pool(1, 2, 2);
  for (const MoleculeType& head : pool) {
    if (head.arity() == 0) continue;
    // Unit on the left and on the right.
    std::vector<MoleculeType> units(static_cast<std::size_t>(head.arity()),
                                    master_unit(1));
    CHECK(master_compose(head, units) == head);
    CHECK(master_insert(master_unit(1), 1, head) == head);

    for (const MoleculeType& part : pool) {
      for (int slot = 1; slot <= head.arity(); ++slot) {
        budget.charge();
        const MoleculeType composed = master_insert(head, slot, part);
        CHECK(composed.arity() == head.arity() - 1 + part.arity());
        CHECK(composed.particle_count() ==
              head.particle_count() + part.particle_count() - 1);

        // Single-slot insertion agrees with full composition padded by units.
        std::vector<MoleculeType> parts(
            static_cast<std::size_t>(head.arity()), master_unit(1));
        parts[static_cast<std::size_t>(slot - 1)] = part;
        CHECK(master_compose(head, parts) == composed);

        // The electron arithmetic never depends on the nucleus width.
        const MoleculeType head3(3, head.electrons());
        const MoleculeType part3(3, part.electrons());
        CHECK(master_insert(head3, slot, part3).electrons() ==
              composed.electrons());
      }
    }
  }
}

TEST_CASE("symmetric-group composition: pinned values") {
  const Perm id2 = Perm::identity(2);
  const Perm s21({2, 1});
  CHECK(sym_compose(id2, {s21, s21}) == Perm({2, 1, 4, 3}));
  CHECK(sym_compose(s21, {id2, id2}) == Perm({3, 4, 1, 2}));
  CHECK(sym_compose(s21, {s21, id2}) == Perm({4, 3, 1, 2}));
  CHECK(sym_compose(Perm::identity(1), {s21}) == s21);
  CHECK(sym_compose(s21, {Perm::identity(1), Perm::identity(1)}) == s21);

  CHECK_THROWS_AS(sym_compose(s21, {id2}), Error);  // arity mismatch
}

TEST_CASE("symmetric-group composition: blocks land where the head says") {
  for (const Perm& tau : all_perms(3)) {
    const std::vector<Perm> parts = {Perm::identity(1), Perm::identity(2),
                                     Perm::identity(3)};
    const Perm g = sym_compose(tau, parts);
    REQUIRE(g.size() == 6);
    // Block boundaries in the input: {1}, {2,3}, {4,5,6}.  Images must be
    // consecutive runs ordered like tau.
    const int starts[] = {1, 2, 4};
    const int sizes[] = {1, 2, 3};
    std::vector<int> out_start(4, 0);
    for (int i = 1; i <= 3; ++i) {
      for (int t = 1; t < sizes[i - 1]; ++t)
        CHECK(g(starts[i - 1] + t) == g(starts[i - 1]) + t);
      out_start[static_cast<std::size_t>(i)] = g(starts[i - 1]);
    }
    for (int i = 1; i <= 3; ++i)
      for (int k = 1; k <= 3; ++k)
        if (tau(i) < tau(k)) CHECK(out_start[static_cast<std::size_t>(i)] <
                                   out_start[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("team operad: construction and validation") {
  const MoleculeType t = mt({1, 0, 2});  // slots e N N e e, nuclei {2,3}
  const FElement fixed = FElement::from_team(t, Perm::identity(2));
  CHECK(fixed.realized() == Perm::identity(5));
  CHECK(fixed.team_action() == Perm::identity(2));

  const FElement swapped = FElement::from_team(t, Perm({2, 1}));
  CHECK(swapped.realized() == Perm({1, 3, 2, 4, 5}));
  CHECK(swapped.team_action() == Perm({2, 1}));

  // Moving an electron slot is rejected.
  CHECK_THROWS_AS(FElement(t, Perm({2, 3, 1, 4, 5})), Error);
  // Size mismatch between type and permutation is rejected.
  CHECK_THROWS_AS(FElement(t, Perm::identity(4)), Error);

  CHECK(f_unit().type() == master_unit(1));
  CHECK(f_unit().realized() == Perm::identity(1));

  // On electron-free types the realized permutation is the team action.
  const Perm s231({2, 3, 1});
  const FElement free = FElement::from_team(electron_free_type(3), s231);
  CHECK(free.realized() == s231);
  CHECK(free.team_action() == s231);
}

TEST_CASE("team operad: round trip and composed actions") {
  const std::vector<FElement> pool = team_pool(4);
  CHECK(pool.size() == 84);
  for (const FElement& f : pool) {
    CHECK(FElement::from_team(f.type(), f.team_action()) == f);
    CHECK(f.team_action().size() == f.type().arity());
  }

  // f_compose realizes sym_compose on team actions and master_compose on
  // types.
  for (const FElement& head : pool) {
    if (head.type().arity() != 2) continue;
    for (const FElement& p1 : pool)
      for (const FElement& p2 : pool) {
        if (p1.type().particle_count() > 2 || p2.type().particle_count() > 2)
          continue;
        const FElement composed = f_compose(head, {p1, p2});
        CHECK(composed.type() ==
              master_compose(head.type(), {p1.type(), p2.type()}));
        CHECK(composed.team_action() ==
              sym_compose(head.team_action(),
                          {p1.team_action(), p2.team_action()}));
      }
  }
}

TEST_CASE("small Bruhat operad: units and extremes") {
  CHECK(small_unit(1) == minimal_element(1, 1));
  CHECK(small_unit(2) == minimal_element(2, 2));

  // Head of arity 2 at d = 2 with two arity-2 parts lands in B(8, 2).
  const BruhatElement max42 = maximal_element(4, 2);
  const BruhatElement min42 = minimal_element(4, 2);
  CHECK(small_compose(max42, {max42, max42}) == maximal_element(8, 2));
  CHECK(small_compose(min42, {min42, min42}) == minimal_element(8, 2));

  CHECK_THROWS_AS(small_compose(max42, {max42}), Error);  // arity mismatch
  CHECK_THROWS_AS(small_compose(max42, {max42, minimal_element(3, 1)}),
                  Error);  // d mismatch
  CHECK_THROWS_AS(small_compose(minimal_element(3, 2), {}),
                  Error);  // ground set not divisible by d
}

TEST_CASE("small Bruhat operad at d = 1 is the symmetric-group operad") {
  Budget budget;
  const std::vector<BruhatElement> heads = enumerate_bruhat(2, 1, budget);
  const std::vector<BruhatElement> parts = enumerate_bruhat(3, 1, budget);
  for (const BruhatElement& b : heads)
    for (const BruhatElement& p1 : parts)
      for (const BruhatElement& p2 : enumerate_bruhat(2, 1, budget)) {
        const BruhatElement composed = small_compose(b, {p1, p2});
        CHECK(to_perm(composed) ==
              sym_compose(to_perm(b), {to_perm(p1), to_perm(p2)}));
      }
}

TEST_CASE("big Bruhat operad: construction and unit") {
  CHECK_THROWS_AS(BigElement(minimal_element(5, 1), mt({1, 0, 2, 9})),
                  Error);  // particle counts disagree
  CHECK_THROWS_AS(BigElement(minimal_element(4, 2), mt({0, 0, 0})),
                  Error);  // d disagrees

  const BigElement unit1 = big_unit(1);
  CHECK(unit1.bruhat() == minimal_element(1, 1));
  CHECK(unit1.type() == master_unit(1));
  const BigElement unit2 = big_unit(2);
  CHECK(unit2.bruhat() == minimal_element(2, 2));
  CHECK(unit2.m() == 2);
  CHECK(unit2.arity() == 1);
}

TEST_CASE("big composition inserts at the electron offsets") {
  // d = 1 head: type e N e N e over B(5, 1).
  const BruhatElement a51 =
      insert(maximal_element(3, 1), minimal_element(3, 1), 1);
  REQUIRE(a51.n() == 5);
  const BigElement a(a51, mt({1, 1, 1}));
  const BigElement b(to_bruhat(Perm({2, 1})), electron_free_type(2));
  const BigElement u = big_unit(1);

  CHECK(big_compose(a, {b, u}).bruhat() == insert(a51, b.bruhat(), 1));
  CHECK(big_compose(a, {u, b}).bruhat() == insert(a51, b.bruhat(), 3));
  CHECK(big_compose(a, {b, u}).type() ==
        master_compose(a.type(), {b.type(), u.type()}));

  // d = 2 head: type e NN NN e e over B(7, 2).
  const BruhatElement a72 =
      insert(maximal_element(4, 2), minimal_element(5, 2), 1);
  REQUIRE(a72.n() == 7);
  const BigElement c(a72, mt({1, 0, 2}, 2));
  const BigElement p(maximal_element(4, 2), electron_free_type(2, 2));
  const BigElement u2 = big_unit(2);

  CHECK(big_compose(c, {p, u2}).bruhat() == insert(a72, p.bruhat(), 1));
  CHECK(big_compose(c, {u2, p}).bruhat() == insert(a72, p.bruhat(), 3));

  CHECK_THROWS_AS(big_compose(a, {b}), Error);        // arity mismatch
  CHECK_THROWS_AS(big_compose(a, {b, u2}), Error);    // d mismatch
}

TEST_CASE("big composition on electron-free types is small composition") {
  Budget budget;
  const std::vector<BruhatElement> heads = enumerate_bruhat(2, 1, budget);
  const std::vector<BruhatElement> parts2 = enumerate_bruhat(2, 1, budget);
  const std::vector<BruhatElement> parts3 = enumerate_bruhat(3, 1, budget);
  for (const BruhatElement& h : heads)
    for (const BruhatElement& p1 : parts2)
      for (const BruhatElement& p2 : parts3) {
        const BigElement big_head(h, electron_free_type(2));
        const BigElement q1(p1, electron_free_type(2));
        const BigElement q2(p2, electron_free_type(3));
        const BigElement composed = big_compose(big_head, {q1, q2});
        CHECK(composed.type().electron_free());
        CHECK(composed.bruhat() == small_compose(h, {p1, p2}));
      }
}

TEST_CASE("suite pools have the advertised shapes") {
  Budget budget(50'000'000);
  CHECK(molecule_pool(1, 3, 2).size() == 117);
  CHECK(team_pool(4).size() == 84);
  CHECK(big_pool_d1(budget).size() == 31);
  const std::vector<BruhatElement> pool =
      bruhat_pool({{2, 1}, {3, 1}}, budget);
  CHECK(pool.size() == 8);  // 2! + 3!
}

TEST_CASE("random element generator stays inside the poset") {
  Budget budget(10'000'000);
  std::mt19937_64 rng(12345);
  for (int trial = 0; trial < 25; ++trial) {
    const BruhatElement b = random_bruhat_element(5, 2, rng, budget);
    CHECK(b.n() == 5);
    CHECK(b.d() == 2);
    CHECK(ziegler_check(b.inv()).ok());
  }
  // Same seed, same draws.
  std::mt19937_64 rng1(7), rng2(7);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(random_bruhat_element(4, 1, rng1, budget) ==
          random_bruhat_element(4, 1, rng2, budget));
}
