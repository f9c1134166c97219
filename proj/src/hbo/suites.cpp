#include "hbo/suites.hpp"

#include <algorithm>
#include <numeric>

#include "hbo/error.hpp"
#include "hbo/insertion.hpp"
#include "hbo/laws.hpp"

namespace hbo {

std::vector<MoleculeType> molecule_pool(int d, int max_arity, int max_entry) {
  if (max_arity < 1 || max_entry < 0) {
    fail(ErrorCode::invalid_argument, "molecule_pool: bad bounds");
  }
  std::vector<MoleculeType> pool;
  for (int arity = 1; arity <= max_arity; ++arity) {
    std::vector<int> entries(static_cast<std::size_t>(arity) + 1, 0);
    while (true) {
      pool.emplace_back(d, entries);
      std::size_t s = 0;
      while (s < entries.size() && ++entries[s] > max_entry) {
        entries[s] = 0;
        ++s;
      }
      if (s == entries.size()) break;
    }
  }
  return pool;
}

std::vector<FElement> team_pool(int max_size) {
  std::vector<FElement> pool;
  for (const MoleculeType& type : molecule_pool(1, max_size, max_size)) {
    if (type.particle_count() > max_size) continue;
    for (const Perm& team : all_perms(type.arity())) {
      pool.push_back(FElement::from_team(type, team));
    }
  }
  return pool;
}

std::vector<BruhatElement> bruhat_pool(const std::vector<std::pair<int, int>>& shapes,
                                       Budget& budget) {
  std::vector<BruhatElement> pool;
  for (const auto& [n, d] : shapes) {
    auto elements = enumerate_bruhat(n, d, budget);
    pool.insert(pool.end(), elements.begin(), elements.end());
  }
  return pool;
}

std::vector<BigElement> big_pool_d1(Budget& budget) {
  std::vector<BigElement> pool;
  for (int m = 1; m <= 3; ++m) {
    std::vector<MoleculeType> types;
    for (const MoleculeType& type : molecule_pool(1, m, m)) {
      const auto& e = type.electrons();
      const int total = std::accumulate(e.begin(), e.end(), 0);
      if (type.particle_count() != m) continue;
      if (m == 3 && total > 1) continue;
      types.push_back(type);
    }
    for (const BruhatElement& b : enumerate_bruhat(m, 1, budget)) {
      for (const MoleculeType& type : types) pool.emplace_back(b, type);
    }
  }
  return pool;
}

BruhatElement random_bruhat_element(int n, int d, std::mt19937_64& rng,
                                    Budget& budget) {
  const std::vector<Subset> all = k_subsets(n, d + 1);
  std::uniform_int_distribution<std::size_t> rank_dist(0, all.size());
  const std::size_t target = rank_dist(rng);
  std::vector<Subset> current;
  while (current.size() < target) {
    std::vector<Subset> candidates;
    for (const Subset& s : all) {
      if (std::find(current.begin(), current.end(), s) != current.end()) continue;
      budget.charge();
      std::vector<Subset> next = current;
      next.push_back(s);
      if (ziegler_check(InversionSet(n, d, next)).ok()) candidates.push_back(s);
    }
    if (candidates.empty()) break;  // only happens at the maximum
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    current.push_back(candidates[pick(rng)]);
  }
  return BruhatElement::checked(InversionSet(n, d, std::move(current)));
}

namespace {

LawSweepOptions sweep_options(Budget& budget) {
  LawSweepOptions options;
  options.budget = &budget;
  return options;
}

std::vector<LawReport> suite_master(Budget& budget) {
  const MasterOperad op{1};
  std::vector<LawReport> reports;
  reports.push_back(verify_operad_laws(op, molecule_pool(1, 3, 2), sweep_options(budget)));
  reports.push_back(
      check_full_compose(op, molecule_pool(1, 3, 1), molecule_pool(1, 2, 1), &budget));
  return reports;
}

std::vector<LawReport> suite_sym(Budget& budget) {
  const SymOperad op;
  std::vector<Perm> pool = all_perms(2);
  for (const Perm& p : all_perms(3)) pool.push_back(p);
  std::vector<Perm> parts = all_perms(1);
  for (const Perm& p : all_perms(2)) parts.push_back(p);
  std::vector<LawReport> reports;
  reports.push_back(verify_operad_laws(op, pool, sweep_options(budget)));
  reports.push_back(check_full_compose(op, pool, parts, &budget));
  return reports;
}

std::vector<LawReport> suite_team(Budget& budget) {
  const FOperad op;
  std::vector<LawReport> reports;
  reports.push_back(verify_operad_laws(op, team_pool(4), sweep_options(budget)));
  reports.push_back(check_full_compose(op, team_pool(4), team_pool(2), &budget));
  return reports;
}

std::vector<LawReport> suite_small_bruhat_d1(Budget& budget) {
  const SmallBruhatOperad op{1};
  const auto pool = bruhat_pool({{1, 1}, {2, 1}, {3, 1}}, budget);
  std::vector<LawReport> reports;
  reports.push_back(verify_operad_laws(op, pool, sweep_options(budget)));
  reports.push_back(check_full_compose(op, pool, pool, &budget));
  return reports;
}

std::vector<LawReport> suite_small_bruhat_d2(Budget& budget) {
  const SmallBruhatOperad op{2};
  const auto pool = bruhat_pool({{2, 2}, {4, 2}}, budget);
  std::vector<LawReport> reports;
  reports.push_back(verify_operad_laws(op, pool, sweep_options(budget)));
  reports.push_back(check_full_compose(op, pool, pool, &budget));
  return reports;
}

std::vector<LawReport> suite_big_bruhat_d1(Budget& budget) {
  const BigBruhatOperad op{1};
  const auto pool = big_pool_d1(budget);
  std::vector<BigElement> parts;
  for (const BigElement& b : pool) {
    if (b.m() <= 2) parts.push_back(b);
  }
  std::vector<LawReport> reports;
  reports.push_back(verify_operad_laws(op, pool, sweep_options(budget)));
  reports.push_back(check_full_compose(op, pool, parts, &budget));
  return reports;
}

std::vector<LawReport> suite_insertion_d1(Budget& budget) {
  const auto b21 = bruhat_pool({{2, 1}}, budget);
  const auto b31 = bruhat_pool({{3, 1}}, budget);
  const auto b41 = bruhat_pool({{4, 1}}, budget);
  std::vector<LawReport> reports;
  reports.push_back(check_insertion_laws(b31, b21, b21));
  reports.push_back(check_insertion_laws(b31, b31, b31));
  reports.push_back(check_insertion_laws(b41, b31, b21));
  return reports;
}

std::vector<LawReport> suite_insertion_d2(Budget& budget) {
  const auto b22 = bruhat_pool({{2, 2}}, budget);
  const auto b42 = bruhat_pool({{4, 2}}, budget);
  std::vector<LawReport> reports;
  reports.push_back(check_insertion_laws(b42, b42, b42));
  reports.push_back(check_insertion_laws(b42, b42, b22));
  return reports;
}

std::vector<LawReport> suite_monotone_d1(Budget& budget) {
  const auto b21 = bruhat_pool({{2, 1}}, budget);
  const auto b31 = bruhat_pool({{3, 1}}, budget);
  std::vector<LawReport> reports;
  reports.push_back(check_insertion_monotone(b31, b31));
  reports.push_back(
      monotone_compose_check(SmallBruhatOperad{1}, b21, b31, &budget));
  return reports;
}

std::vector<LawReport> suite_monotone_d2(Budget& budget) {
  const auto b42 = bruhat_pool({{4, 2}}, budget);
  std::vector<LawReport> reports;
  reports.push_back(check_insertion_monotone(b42, b42));
  reports.push_back(
      monotone_compose_check(SmallBruhatOperad{2}, b42, b42, &budget));
  return reports;
}

std::vector<LawReport> suite_random_closure(std::uint64_t seed, Budget& budget) {
  std::mt19937_64 rng(seed);
  LawReport closure;
  closure.name = "random insertion closure";
  const std::vector<std::pair<int, int>> shapes = {{4, 1}, {5, 1}, {4, 2}, {5, 2}};
  std::vector<std::vector<BruhatElement>> draws(shapes.size());
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (int k = 0; k < 6; ++k) {
      draws[i].push_back(
          random_bruhat_element(shapes[i].first, shapes[i].second, rng, budget));
    }
  }
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    for (std::size_t k = i; k < shapes.size(); ++k) {
      if (shapes[i].second != shapes[k].second) continue;  // d must match
      const int n = shapes[i].first;
      const int d = shapes[i].second;
      std::uniform_int_distribution<int> offset(0, n - d);
      for (const BruhatElement& b : draws[i]) {
        for (const BruhatElement& part : draws[k]) {
          budget.charge();
          const int j = offset(rng);
          const BruhatElement out = insert(b, part, j);
          if (ziegler_check(out.inv()).ok()) {
            closure.pass();
          } else {
            closure.fail("insertion left the interval criterion at j=" +
                         std::to_string(j) + " on " + b.inv().str() + " ; " +
                         part.inv().str());
          }
        }
      }
    }
  }

  LawReport assoc;
  assoc.name = "random sequential identity";
  for (int trial = 0; trial < 60; ++trial) {
    const bool deep = trial % 2 == 0;
    const int d = deep ? 1 : 2;
    const int n = deep ? 4 : 4;
    const int m = deep ? 3 : 4;
    const int l = deep ? 2 : 4;
    const BruhatElement a = random_bruhat_element(n, d, rng, budget);
    const BruhatElement b = random_bruhat_element(m, d, rng, budget);
    const BruhatElement c = random_bruhat_element(l, d, rng, budget);
    std::uniform_int_distribution<int> oj(0, n - d);
    std::uniform_int_distribution<int> oj2(0, m - d);
    const int j = oj(rng);
    const int j2 = oj2(rng);
    budget.charge();
    const BruhatElement lhs = insert(insert(a, b, j), c, j + j2);
    const BruhatElement rhs = insert(a, insert(b, c, j2), j);
    if (lhs == rhs) {
      assoc.pass();
    } else {
      assoc.fail("sequential identity fails at j=" + std::to_string(j) +
                 " j2=" + std::to_string(j2) + " on " + a.inv().str() + " ; " +
                 b.inv().str() + " ; " + c.inv().str());
    }
  }
  return {closure, assoc};
}

}  // namespace

std::vector<std::string> law_suite_names() {
  return {"master",          "sym",
          "team",            "small-bruhat-d1",
          "small-bruhat-d2", "big-bruhat-d1",
          "insertion-d1",    "insertion-d2",
          "monotone-d1",     "monotone-d2",
          "random-closure"};
}

std::vector<LawReport> run_law_suite(const std::string& name,
                                     const SuiteOptions& options) {
  Budget local;
  Budget& budget = options.budget ? *options.budget : local;
  if (name == "master") return suite_master(budget);
  if (name == "sym") return suite_sym(budget);
  if (name == "team") return suite_team(budget);
  if (name == "small-bruhat-d1") return suite_small_bruhat_d1(budget);
  if (name == "small-bruhat-d2") return suite_small_bruhat_d2(budget);
  if (name == "big-bruhat-d1") return suite_big_bruhat_d1(budget);
  if (name == "insertion-d1") return suite_insertion_d1(budget);
  if (name == "insertion-d2") return suite_insertion_d2(budget);
  if (name == "monotone-d1") return suite_monotone_d1(budget);
  if (name == "monotone-d2") return suite_monotone_d2(budget);
  if (name == "random-closure") return suite_random_closure(options.seed, budget);
  fail(ErrorCode::invalid_argument, "unknown law suite: " + name);
}

std::vector<LawReport> run_all_law_suites(const SuiteOptions& options) {
  std::vector<LawReport> reports;
  for (const std::string& name : law_suite_names()) {
    auto part = run_law_suite(name, options);
    reports.insert(reports.end(), part.begin(), part.end());
  }
  return reports;
}

}  // namespace hbo
