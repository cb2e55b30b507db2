#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgw/catalog.hpp"

namespace sgw {

struct SuiteCheck {
  std::string claim;           // human-readable statement that was checked
  std::string ref;             // stable machine tag for the check
  bool passed = false;
  std::string counterexample;  // serialized JSON witness, empty when passed
};

struct SuiteReport {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool passed = false;  // all checks passed
  std::int64_t wall_ms = 0;
};

/// Classifies every catalog entry, checks the known verdicts, replays each
/// reduction trace, and asks the brute-force oracle (orders <= 4) to hunt
/// for a counterexample to each implied identity.
SuiteReport suite_classification(const std::vector<CatalogEntry>& catalog,
                                 int workers = 1);

/// k in {2, 3}: the injective-word and disjoint-union models refuse the
/// k-ary identities they must refuse, and a k-ary expansion identity holds
/// on a nilpotent semigroup of order <= 4 exactly when it is k-nilpotent.
SuiteReport suite_obstructions(int k, const std::vector<CatalogEntry>& catalog,
                               int workers = 1);

/// The W/V membership matrix at arity 3, the free-quotient subgroup lattice
/// over three symbols, and the monogenic witness C(4).
SuiteReport suite_independence(int workers = 1);

/// Structural sweep over all representatives of order <= 4 plus the fixed
/// T(2) membership checks.
SuiteReport suite_permutative(const std::vector<CatalogEntry>& catalog,
                              int workers = 1);

std::vector<SuiteReport> run_all_suites(
    const std::vector<CatalogEntry>& catalog, int workers = 1);

}  // namespace sgw
