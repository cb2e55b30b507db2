#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sgw/cayley.hpp"
#include "sgw/models.hpp"

using namespace sgw;

namespace {

// Independent associativity oracle: plain triple loop over a flat table.
bool brute_assoc(int m, const std::vector<int>& t) {
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      for (int k = 0; k < m; ++k)
        if (t[t[i * m + j] * m + k] != t[i * m + t[j * m + k]]) return false;
  return true;
}

}  // namespace

TEST_CASE("validate accepts exactly the associative 2x2 tables") {
  int accepted = 0, brute = 0;
  for (int code = 0; code < 16; ++code) {
    std::vector<int> t{code & 1, (code >> 1) & 1, (code >> 2) & 1,
                       (code >> 3) & 1};
    if (brute_assoc(2, t)) ++brute;
    try {
      validate_flat("S", 2, t);
      ++accepted;
    } catch (const AssociativityError&) {
    }
  }
  CHECK(brute == 8);
  CHECK(accepted == 8);
}

TEST_CASE("associativity error reports the first violating triple") {
  try {
    validate("S", {{1, 0}, {0, 0}});
    FAIL("expected a throw");
  } catch (const AssociativityError& e) {
    CHECK(e.i == 0);
    CHECK(e.j == 0);
    CHECK(e.k == 1);
  }
}

TEST_CASE("validate rejects malformed input") {
  CHECK_THROWS_AS(validate("S", {{0, 0}, {0}}), RangeError);
  CHECK_THROWS_AS(validate("S", {{0, 2}, {0, 0}}), RangeError);
  CHECK_THROWS_AS(validate("S", {}), RangeError);
  CHECK_THROWS_AS(validate("S", {{0, 0}, {0, 0}}, {"only-one"}), RangeError);
}

TEST_CASE("zero and identity detection") {
  CayleyTable c3 = build_C(3).table;
  CHECK(c3.zero == 2);
  CHECK(!c3.identity);

  CayleyTable n1 = build_N1().table;
  CHECK(n1.identity == 0);
  CHECK(n1.zero == 2);

  CayleyTable w2 = build_W(2).table;
  CHECK(!w2.zero);
  CHECK(!w2.identity);
}

TEST_CASE("omega powers land on the unique idempotent power") {
  CayleyTable c4 = build_C(4).table;
  for (int s = 0; s < 4; ++s) {
    int w = omega_power(c4, s);
    CHECK(c4.at(w, w) == w);
    CHECK(w == 3);  // a^4 absorbs every power chain
  }
  CHECK(omega_plus(c4, 0, 1) == 3);
  CHECK(omega_plus(c4, 0, 0) == 3);

  CHECK(idempotents(c4).elements() == std::vector<int>{3});
  CHECK(completely_regular(c4).elements() == std::vector<int>{3});

  // In a monoid with a group part, omega of the identity is itself.
  CayleyTable n1 = build_N1().table;
  CHECK(omega_power(n1, 0) == 0);
  CHECK(omega_plus(n1, 1, 1) == 2);  // n^omega * n = 0 * n = 0
}

TEST_CASE("power ideal of the injective-word model") {
  CayleyTable t2 = build_T(2).table;  // a1 a2 a1a2 a2a1 0
  CHECK(power_ideal(t2, 1) == ElementSet::full(5));
  CHECK(power_ideal(t2, 2).elements() == std::vector<int>{2, 3, 4});
  CHECK(power_ideal(t2, 3).elements() == std::vector<int>{4});
  CHECK(power_ideal(t2, 7).elements() == std::vector<int>{4});
}

TEST_CASE("set products") {
  CayleyTable t2 = build_T(2).table;
  ElementSet gens(5);
  gens.set(0);
  gens.set(1);
  ElementSet sq = set_product(t2, gens, gens);
  CHECK(sq.elements() == std::vector<int>{2, 3, 4});
}

TEST_CASE("congruence closure and quotient on the injective-word model") {
  CayleyTable t2 = build_T(2).table;
  Congruence c = congruence_closure(t2, {{2, 3}});  // a1a2 ~ a2a1
  CHECK(c.num_classes == 4);
  CHECK(is_congruence(t2, c));
  CayleyTable q = quotient(t2, c);
  CHECK(q.order == 4);
  // The merged class makes the quotient commutative.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(q.at(i, j) == q.at(j, i));
}

TEST_CASE("closure adds consequences of a merge") {
  // Forcing a1 ~ a1a2 in T2 propagates: a1*a2 ~ a1a2*a2 = 0, etc.
  CayleyTable t2 = build_T(2).table;
  Congruence c = congruence_closure(t2, {{0, 2}});
  CHECK(is_congruence(t2, c));
  CHECK(c.class_of[2] == c.class_of[4]);  // a1a2 ~ 0 forced
}

TEST_CASE("is_congruence rejects an incompatible partition") {
  CayleyTable t2 = build_T(2).table;
  Congruence bad;
  bad.class_of = {0, 1, 0, 2, 3};  // a1 ~ a1a2 alone, nothing else
  bad.num_classes = 4;
  CHECK(!is_congruence(t2, bad));
  CHECK_THROWS_AS(quotient(t2, bad), NotACongruenceError);
}

TEST_CASE("rees quotient collapses an ideal to the zero") {
  CayleyTable t2 = build_T(2).table;
  ElementSet ideal(5);
  ideal.set(2);
  ideal.set(3);
  ideal.set(4);
  CayleyTable q = rees_quotient(t2, ideal);
  CHECK(q.order == 3);
  CHECK(q.zero == 2);
  CHECK(q.labels[2] == "0");
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(q.at(i, j) == 2);  // null semigroup

  ElementSet not_ideal(5);
  not_ideal.set(0);
  CHECK_THROWS_AS(rees_quotient(t2, not_ideal), NotAnIdealError);
  CHECK_THROWS_AS(rees_quotient(t2, ElementSet(5)), NotAnIdealError);
}

TEST_CASE("direct product") {
  CayleyTable c2 = build_C(2).table;
  CayleyTable p = direct_product(c2, c2);
  CHECK(p.order == 4);
  CHECK(p.zero == 3);  // (a^2, a^2)
  CHECK(p.labels[0] == "(a,a)");

  CayleyTable t4 = build_T(4).table;
  CHECK_THROWS_AS(direct_product(t4, t4), SizeGuardError);
}

TEST_CASE("subsemigroup closure") {
  CayleyTable t2 = build_T(2).table;
  ElementSet gens(5);
  gens.set(0);  // a1
  Subsemigroup sub = subsemigroup(t2, gens);
  CHECK(sub.parent_index == std::vector<int>{0, 4});
  CHECK(sub.table.order == 2);
  CHECK(sub.table.at(0, 0) == 1);  // a1*a1 = 0

  ElementSet both(5);
  both.set(0);
  both.set(1);
  CHECK(subsemigroup(t2, both).table.order == 5);
}

TEST_CASE("opposite, isomorphism, anti-isomorphism") {
  CayleyTable left = validate("L", {{0, 0}, {1, 1}});
  CayleyTable right = validate("R", {{0, 1}, {0, 1}});
  CHECK(is_isomorphic(left, opposite(right)));
  CHECK(!is_isomorphic(left, right));
  CHECK(is_anti_isomorphic(left, right));
  CHECK(!is_anti_isomorphic(left, left));

  CayleyTable c2 = build_C(2).table;
  CayleyTable chain = validate("E2", {{0, 1}, {1, 1}});
  CHECK(!is_isomorphic(c2, chain));
  CHECK(is_isomorphic(c2, c2));
}

TEST_CASE("isomorphism is found under relabeling") {
  CayleyTable v = build_V(1, 2).table;
  const int m = v.order;
  // Rotate the element names.
  std::vector<int> perm(m);
  for (int i = 0; i < m; ++i) perm[i] = (i + 1) % m;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      rows[perm[i]][perm[j]] = perm[v.at(i, j)];
  CayleyTable w = validate("V'", rows);
  CHECK(is_isomorphic(v, w));
}

TEST_CASE("revalidate accepts every constructed model") {
  for (const CayleyTable& S :
       {build_T(3).table, build_Ufree(3).table, build_W(3).table,
        build_V(2, 4).table, build_rees(3).table}) {
    CHECK_NOTHROW(revalidate(S));
  }
}
