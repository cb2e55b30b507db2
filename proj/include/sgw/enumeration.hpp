#pragma once

#include <vector>

#include "sgw/cayley.hpp"
#include "sgw/identities.hpp"

namespace sgw {

enum class EnumMode {
  UpToIso,      // one representative per isomorphism class
  UpToIsoAnti,  // one per isomorphism-or-anti-isomorphism class
  RawTables,    // every labeled associative table
};

struct EnumerationSpec {
  int order = 1;
  EnumMode mode = EnumMode::UpToIso;
  std::vector<Identity> must_satisfy;
  std::vector<Identity> must_fail;
};

/// The enumeration cap: 5, or WORKBENCH_MAX_ORDER when set (clamped to
/// [1, 5]).
int max_enumeration_order();

/// Lexicographically least flat table over all relabelings of S.
std::vector<int> canonical_key(const CayleyTable& S);

/// As canonical_key, but also minimized against the opposite table.
std::vector<int> canonical_key_anti(const CayleyTable& S);

/// All semigroups of the given order, one table per class. Output is sorted
/// by flat table and is independent of the worker count. Identity filters
/// are applied to the finished representatives.
std::vector<CayleyTable> enumerate_semigroups(const EnumerationSpec& spec,
                                              int workers = 1);

/// Representatives of every order from 1 up to max_order, concatenated.
std::vector<CayleyTable> all_representatives(int max_order, int workers = 1);

}  // namespace sgw
