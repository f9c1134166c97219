#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hbo/budget.hpp"
#include "hbo/operads.hpp"
#include "hbo/orders.hpp"
#include "hbo/report.hpp"

// Named, reproducible law suites.  Each suite fixes its element pools and
// sweeps a family of identities exhaustively; the one randomized suite is
// driven entirely by the caller-provided seed.  The command-line `laws`
// command and the acceptance harness both run these.

namespace hbo {

// All molecule types with the given d, arity in [1, max_arity] and every
// electron entry in [0, max_entry], in deterministic order.
std::vector<MoleculeType> molecule_pool(int d, int max_arity, int max_entry);

// All team elements (d = 1) with at most max_size particle slots.
std::vector<FElement> team_pool(int max_size);

// Concatenation of the full enumerations of the given (n, d) shapes.
std::vector<BruhatElement> bruhat_pool(const std::vector<std::pair<int, int>>& shapes,
                                       Budget& budget);

// Every d = 1 big element with m <= 2, plus those with m = 3 and at most one
// electron (31 elements).
std::vector<BigElement> big_pool_d1(Budget& budget);

// Uniform random walk up from the minimal element: repeatedly adds a random
// inversion that keeps the interval criterion, stopping at a random rank.
BruhatElement random_bruhat_element(int n, int d, std::mt19937_64& rng,
                                    Budget& budget);

struct SuiteOptions {
  std::uint64_t seed = 0;
  Budget* budget = nullptr;  // shared budget; a local one is used when null
};

std::vector<std::string> law_suite_names();

// Runs one suite by name; throws invalid_argument for unknown names.
std::vector<LawReport> run_law_suite(const std::string& name,
                                     const SuiteOptions& options = {});

std::vector<LawReport> run_all_law_suites(const SuiteOptions& options = {});

}  // namespace hbo
