#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "sgw/enumeration.hpp"

using namespace sgw;

namespace {

std::vector<CayleyTable> enumerate(int order, EnumMode mode, int workers = 1) {
  EnumerationSpec spec;
  spec.order = order;
  spec.mode = mode;
  return enumerate_semigroups(spec, workers);
}

// Brute-force reference: decode every function {0..m-1}^2 -> {0..m-1} and
// count the associative ones. Only feasible for m <= 3.
int brute_raw_count(int m) {
  const int cells = m * m;
  long total = 1;
  for (int c = 0; c < cells; ++c) total *= m;
  int count = 0;
  for (long code = 0; code < total; ++code) {
    std::vector<int> flat(cells);
    long rest = code;
    for (int c = 0; c < cells; ++c) {
      flat[c] = static_cast<int>(rest % m);
      rest /= m;
    }
    bool ok = true;
    for (int i = 0; ok && i < m; ++i)
      for (int j = 0; ok && j < m; ++j)
        for (int k = 0; ok && k < m; ++k)
          if (flat[flat[i * m + j] * m + k] != flat[i * m + flat[j * m + k]])
            ok = false;
    if (ok) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("raw tables match the brute-force decoder") {
  CHECK(brute_raw_count(1) == 1);
  CHECK(brute_raw_count(2) == 8);
  CHECK(brute_raw_count(3) == 113);
  CHECK(enumerate(1, EnumMode::RawTables).size() == 1);
  CHECK(enumerate(2, EnumMode::RawTables).size() == 8);
  CHECK(enumerate(3, EnumMode::RawTables).size() == 113);
}

TEST_CASE("class counts per order") {
  CHECK(enumerate(1, EnumMode::UpToIso).size() == 1);
  CHECK(enumerate(2, EnumMode::UpToIso).size() == 5);
  CHECK(enumerate(3, EnumMode::UpToIso).size() == 24);
  CHECK(enumerate(4, EnumMode::UpToIso).size() == 188);

  CHECK(enumerate(1, EnumMode::UpToIsoAnti).size() == 1);
  CHECK(enumerate(2, EnumMode::UpToIsoAnti).size() == 4);
  CHECK(enumerate(3, EnumMode::UpToIsoAnti).size() == 18);
  CHECK(enumerate(4, EnumMode::UpToIsoAnti).size() == 126);
}

TEST_CASE("representatives are canonical fixpoints and pairwise distinct") {
  std::set<std::vector<int>> seen;
  for (const CayleyTable& S : enumerate(3, EnumMode::UpToIso)) {
    CHECK(canonical_key(S) == S.table);
    CHECK(seen.insert(S.table).second);
  }
  for (const CayleyTable& S : enumerate(3, EnumMode::UpToIsoAnti))
    CHECK(canonical_key_anti(S) == S.table);
}

TEST_CASE("keys are invariant under relabeling") {
  for (const CayleyTable& S : enumerate(3, EnumMode::UpToIso)) {
    const int m = S.order;
    // Rotate labels by one and re-derive the key.
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = (i + 1) % m;
    std::vector<int> flat(m * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        flat[perm[i] * m + perm[j]] = perm[S.at(i, j)];
    CayleyTable rot = validate_flat("rot", m, flat);
    CHECK(canonical_key(rot) == S.table);
  }
}

TEST_CASE("worker count does not change the output") {
  for (EnumMode mode : {EnumMode::UpToIso, EnumMode::UpToIsoAnti}) {
    std::vector<CayleyTable> one = enumerate(4, mode, 1);
    std::vector<CayleyTable> three = enumerate(4, mode, 3);
    REQUIRE(one.size() == three.size());
    for (std::size_t q = 0; q < one.size(); ++q)
      CHECK(one[q].table == three[q].table);
  }
}

TEST_CASE("anti-pairing accounting") {
  // Every iso class is either self-dual or pairs off with its opposite:
  // #anti == #selfdual + (#iso - #selfdual) / 2.
  std::vector<CayleyTable> iso = enumerate(3, EnumMode::UpToIso);
  int selfdual = 0;
  for (const CayleyTable& S : iso)
    if (is_anti_isomorphic(S, S)) ++selfdual;
  CHECK(selfdual == 12);
  int anti = static_cast<int>(enumerate(3, EnumMode::UpToIsoAnti).size());
  CHECK(anti == selfdual + (static_cast<int>(iso.size()) - selfdual) / 2);
}

TEST_CASE("identity filters select classes") {
  EnumerationSpec bands;
  bands.order = 2;
  bands.must_satisfy.push_back(parse_identity("x x = x"));
  std::vector<CayleyTable> found = enumerate_semigroups(bands);
  // Left-zero, right-zero, semilattice, and the two-element group is out.
  CHECK(found.size() == 3);
  for (const CayleyTable& S : found)
    CHECK(satisfies(S, parse_identity("x x = x")).holds);

  EnumerationSpec noncomm;
  noncomm.order = 2;
  noncomm.must_fail.push_back(parse_identity("x y = y x"));
  CHECK(enumerate_semigroups(noncomm).size() == 2);

  EnumerationSpec both;
  both.order = 2;
  both.must_satisfy.push_back(parse_identity("x x = x"));
  both.must_fail.push_back(parse_identity("x y = y x"));
  CHECK(enumerate_semigroups(both).size() == 2);
}

TEST_CASE("representative names encode order and position") {
  std::vector<CayleyTable> reps = enumerate(2, EnumMode::UpToIso);
  REQUIRE(reps.size() == 5);
  CHECK(reps[0].name == "S2#0");
  CHECK(reps[4].name == "S2#4");
}

TEST_CASE("all_representatives concatenates ascending orders") {
  std::vector<CayleyTable> reps = all_representatives(3);
  CHECK(reps.size() == 1 + 5 + 24);
  CHECK(reps.front().order == 1);
  CHECK(reps.back().order == 3);
}

TEST_CASE("order bounds are enforced") {
  EnumerationSpec bad;
  bad.order = 0;
  CHECK_THROWS_AS(enumerate_semigroups(bad), RangeError);
  bad.order = max_enumeration_order() + 1;
  CHECK_THROWS_AS(enumerate_semigroups(bad), RangeError);
  CHECK(max_enumeration_order() >= 1);
  CHECK(max_enumeration_order() <= 5);
}
