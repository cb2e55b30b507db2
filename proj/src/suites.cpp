#include "sgw/suites.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <sstream>

#include "sgw/classifier.hpp"
#include "sgw/enumeration.hpp"
#include "sgw/json_io.hpp"
#include "sgw/models.hpp"
#include "sgw/oracle.hpp"

namespace sgw {

namespace {

using Clock = std::chrono::steady_clock;

void finish_report(SuiteReport& r, Clock::time_point start) {
  r.passed = std::all_of(r.checks.begin(), r.checks.end(),
                         [](const SuiteCheck& c) { return c.passed; });
  r.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  Clock::now() - start)
                  .count();
}

std::string table_witness(const CayleyTable& S, const std::string& note) {
  nlohmann::json j{{"semigroup", table_to_json(S)}, {"note", note}};
  return j.dump();
}

std::string failed_identity_witness(const CayleyTable& S, const Identity& e) {
  Counterexample c;
  c.S = S;
  c.failed = e;
  c.assignment = satisfies(S, e).witness;
  return counterexample_to_json(c).dump();
}

// Nontrivial permutations of 1..n as image rows, in lexicographic order.
std::vector<std::vector<int>> nontrivial_perms(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 1);
  std::vector<std::vector<int>> out;
  while (std::next_permutation(p.begin(), p.end())) out.push_back(p);
  return out;
}

std::string perm_name(const std::vector<int>& sigma) {
  std::string s;
  for (int v : sigma) s += std::to_string(v);
  return s;
}

// The cyclic group generated by an image row.
std::vector<std::vector<int>> cyclic_closure(const std::vector<int>& sigma) {
  const int n = static_cast<int>(sigma.size());
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 1);
  std::vector<std::vector<int>> out{id};
  std::vector<int> cur = sigma;
  while (cur != id) {
    out.push_back(cur);
    std::vector<int> next(n);
    for (int q = 0; q < n; ++q) next[q] = sigma[cur[q] - 1];
    cur = next;
  }
  return out;
}

// Is the set of completely regular elements closed under the product?
bool cr_closed(const CayleyTable& S) {
  ElementSet I = completely_regular(S);
  for (int a : I.elements())
    for (int b : I.elements())
      if (!I.test(S.at(a, b))) return false;
  return true;
}

struct CatalogProduct {
  const CatalogEntry* entry;
  ProductIdentity product;
};

// Catalog entries that parse as product identities (all built-ins do; user
// extensions may not and are skipped here).
std::vector<CatalogProduct> catalog_products(
    const std::vector<CatalogEntry>& catalog) {
  std::vector<CatalogProduct> out;
  for (const auto& e : catalog) {
    try {
      out.push_back({&e, as_product_identity(e.identity)});
    } catch (const Error&) {
    }
  }
  return out;
}

}  // namespace

SuiteReport suite_classification(const std::vector<CatalogEntry>& catalog,
                                 int workers) {
  const auto start = Clock::now();
  SuiteReport r;
  r.suite = "classification";

  static const std::map<std::string, std::string> expected = {
      {"omega-reverse", "ACR(1,2)"}, {"sandwich", "ACR(1,2)"},
      {"canary-2", "ACR(2,2)"},      {"canary-3", "ACR(3,3)"},
      {"square", "ACR(1,1)"},        {"drop-x2", "ACR(2,2)"},
      {"swap", "Permutation(2 1)"},  {"perm-12", "Permutation(2 1 3)"},
      {"perm-23", "Permutation(1 3 2)"}, {"perm-13", "Permutation(3 2 1)"},
      {"perm-123", "Permutation(2 3 1)"}, {"perm-132", "Permutation(3 1 2)"},
  };

  for (const auto& entry : catalog) {
    SuiteCheck c;
    c.ref = "classification/" + entry.name;
    std::ostringstream claim;
    try {
      ProductIdentity p = as_product_identity(entry.identity);
      Classification left = classify(p, StripOrder::LeftFirst);
      Classification right = classify(p, StripOrder::RightFirst);
      claim << entry.name << " classifies as " << left.verdict_text()
            << ", the trace replays, and the implied identity "
            << print_identity(left.implied)
            << " has no counterexample up to order 4";
      bool ok = left.verdict_text() == right.verdict_text() &&
                replay_trace(p, left);
      auto want = expected.find(entry.name);
      if (ok && want != expected.end() && left.verdict_text() != want->second) {
        ok = false;
        c.counterexample = nlohmann::json{
            {"note", "expected " + want->second + ", got " +
                         left.verdict_text()}}.dump();
      }
      if (ok) {
        if (left.verdict == Classification::Verdict::Permutation) {
          ok = alpha_equal(left.implied, entry.identity);
          if (!ok)
            c.counterexample = nlohmann::json{
                {"note", "permutation verdict does not reproduce the entry"}}
                .dump();
        } else {
          OracleResult o =
              implies_oracle(entry.identity, left.implied, 4, workers);
          if (!o.no_counterexample()) {
            ok = false;
            c.counterexample =
                counterexample_to_json(*o.counterexample).dump();
          }
        }
      }
      c.passed = ok;
    } catch (const Error& err) {
      claim << entry.name << " classifies";
      c.passed = false;
      c.counterexample = nlohmann::json{{"note", err.what()}}.dump();
    }
    c.claim = claim.str();
    r.checks.push_back(std::move(c));
  }
  finish_report(r, start);
  return r;
}

SuiteReport suite_obstructions(int k, const std::vector<CatalogEntry>& catalog,
                               int workers) {
  if (k != 2 && k != 3)
    throw RangeError("obstruction suite is defined for k in {2, 3}");
  const auto start = Clock::now();
  SuiteReport r;
  r.suite = "obstructions(k=" + std::to_string(k) + ")";
  const std::string base = "obstructions/k" + std::to_string(k) + "/";

  LabeledModel T = build_T(k);
  LabeledModel O = build_Ufree(k);

  for (const auto& sigma : nontrivial_perms(k)) {
    Identity eps = perm_identity(k, sigma);
    SuiteCheck c;
    c.claim = T.table.name + " fails the permutation identity " +
              print_identity(eps);
    c.ref = base + "T-fails-perm-" + perm_name(sigma);
    c.passed = !satisfies(T.table, eps).holds;
    if (!c.passed)
      c.counterexample = table_witness(T.table, "identity unexpectedly holds");
    r.checks.push_back(std::move(c));
  }

  for (const auto& cp : catalog_products(catalog)) {
    if (cp.product.arity() != k || !is_expansion(cp.product)) continue;
    for (const LabeledModel* m : {&T, &O}) {
      SuiteCheck c;
      c.claim = m->table.name + " fails the expansion identity " +
                cp.entry->name;
      c.ref = base + m->table.name.substr(0, 1) + "-fails-" + cp.entry->name;
      c.passed = !satisfies(m->table, cp.entry->identity).holds;
      if (!c.passed)
        c.counterexample =
            table_witness(m->table, "identity unexpectedly holds");
      r.checks.push_back(std::move(c));
    }
  }

  {
    SuiteCheck c;
    c.claim = O.table.name + " is commutative";
    c.ref = base + "O-commutative";
    c.passed = satisfies(O.table, parse_identity("x y = y x")).holds;
    if (!c.passed)
      c.counterexample =
          failed_identity_witness(O.table, parse_identity("x y = y x"));
    r.checks.push_back(std::move(c));
  }

  {
    SuiteCheck c;
    c.claim = T.table.name + " satisfies x y x = 0 and x^2 = 0";
    c.ref = base + "T-zero-forms";
    c.passed = satisfies_all(T.table, expanded_identities(preset_identities("T")));
    if (!c.passed)
      c.counterexample = table_witness(T.table, "a zero form fails");
    r.checks.push_back(std::move(c));
  }

  {
    Identity nilp = preset_identities("N(" + std::to_string(k + 1) + ")")
                        .identities.front();
    SuiteCheck c;
    c.claim = T.table.name + " is " + std::to_string(k + 1) + "-nilpotent";
    c.ref = base + "T-nilpotent";
    c.passed = satisfies(T.table, nilp).holds;
    if (!c.passed) c.counterexample = failed_identity_witness(T.table, nilp);
    r.checks.push_back(std::move(c));
  }

  {
    Identity k_nilp =
        preset_identities("N(" + std::to_string(k) + ")").identities.front();
    std::vector<CayleyTable> reps = all_representatives(4, workers);
    for (const auto& cp : catalog_products(catalog)) {
      if (cp.product.arity() != k || !is_expansion(cp.product)) continue;
      SuiteCheck c;
      c.claim = "every nilpotent semigroup of order <= 4 satisfies " +
                cp.entry->name + " exactly when it is " + std::to_string(k) +
                "-nilpotent";
      c.ref = base + "nilpotent-matrix-" + cp.entry->name;
      c.passed = true;
      for (const CayleyTable& S : reps) {
        if (!S.zero || power_ideal(S, S.order).count() != 1) continue;
        const bool sat = satisfies(S, cp.entry->identity).holds;
        const bool nil_k = satisfies(S, k_nilp).holds;
        if (sat != nil_k) {
          c.passed = false;
          c.counterexample = table_witness(
              S, sat ? "satisfies the expansion but is not k-nilpotent"
                     : "k-nilpotent but fails the expansion");
          break;
        }
      }
      r.checks.push_back(std::move(c));
    }
  }

  finish_report(r, start);
  return r;
}

SuiteReport suite_independence(int workers) {
  (void)workers;
  const auto start = Clock::now();
  SuiteReport r;
  r.suite = "independence";

  // Membership matrix at arity 3.
  for (int k = 1; k <= 3; ++k) {
    LabeledModel W = build_W(k);
    LabeledModel V = build_V(k, 3);
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) {
        Identity acr = acr_identity(3, i, j);
        {
          SuiteCheck c;
          const bool expect = k <= j;
          c.claim = W.table.name + (expect ? " satisfies " : " fails ") +
                    print_identity(acr);
          c.ref = "independence/matrix/W" + std::to_string(k) + "/acr" +
                  std::to_string(i) + std::to_string(j);
          c.passed = satisfies(W.table, acr).holds == expect;
          if (!c.passed)
            c.counterexample = expect
                                   ? failed_identity_witness(W.table, acr)
                                   : table_witness(W.table, "unexpectedly holds");
          r.checks.push_back(std::move(c));
        }
        {
          SuiteCheck c;
          const bool expect = k > j;
          c.claim = V.table.name + (expect ? " satisfies " : " fails ") +
                    print_identity(acr);
          c.ref = "independence/matrix/V" + std::to_string(k) + "3/acr" +
                  std::to_string(i) + std::to_string(j);
          c.passed = satisfies(V.table, acr).holds == expect;
          if (!c.passed)
            c.counterexample = expect
                                   ? failed_identity_witness(V.table, acr)
                                   : table_witness(V.table, "unexpectedly holds");
          r.checks.push_back(std::move(c));
        }
      }
  }

  // Free-quotient lattice over three symbols: the largest quotient of T(3)
  // forced to satisfy one permutation identity satisfies exactly the
  // identities of the generated cyclic subgroup.
  {
    LabeledModel T3 = build_T(3);
    const auto perms = nontrivial_perms(3);
    for (const auto& sigma : perms) {
      LabeledModel Q =
          free_quotient(T3.table, {perm_identity(3, sigma)});
      const auto subgroup = cyclic_closure(sigma);
      for (const auto& tau : perms) {
        Identity eps = perm_identity(3, tau);
        const bool expect = std::find(subgroup.begin(), subgroup.end(), tau) !=
                            subgroup.end();
        SuiteCheck c;
        c.claim = "the largest quotient of T(3) satisfying perm " +
                  perm_name(sigma) + (expect ? " satisfies" : " fails") +
                  " perm " + perm_name(tau);
        c.ref = "independence/lattice/" + perm_name(sigma) + "/" +
                perm_name(tau);
        c.passed = satisfies(Q.table, eps).holds == expect;
        if (!c.passed)
          c.counterexample =
              expect ? failed_identity_witness(Q.table, eps)
                     : table_witness(Q.table, "unexpectedly holds");
        r.checks.push_back(std::move(c));
      }
    }
  }

  // The monogenic witness: C(4) satisfies every arity-3 permutation
  // identity but none of the arity-3 one-block expansions.
  {
    LabeledModel C4 = build_C(4);
    for (const auto& sigma : nontrivial_perms(3)) {
      Identity eps = perm_identity(3, sigma);
      SuiteCheck c;
      c.claim = "C(4) satisfies perm " + perm_name(sigma);
      c.ref = "independence/C4/perm-" + perm_name(sigma);
      c.passed = satisfies(C4.table, eps).holds;
      if (!c.passed)
        c.counterexample = failed_identity_witness(C4.table, eps);
      r.checks.push_back(std::move(c));
    }
    for (int i = 1; i <= 3; ++i)
      for (int j = i; j <= 3; ++j) {
        Identity acr = acr_identity(3, i, j);
        SuiteCheck c;
        c.claim = "C(4) fails " + print_identity(acr);
        c.ref = "independence/C4/acr" + std::to_string(i) + std::to_string(j);
        c.passed = !satisfies(C4.table, acr).holds;
        if (!c.passed)
          c.counterexample = table_witness(C4.table, "unexpectedly holds");
        r.checks.push_back(std::move(c));
      }
  }

  finish_report(r, start);
  return r;
}

SuiteReport suite_permutative(const std::vector<CatalogEntry>& catalog,
                              int workers) {
  const auto start = Clock::now();
  SuiteReport r;
  r.suite = "permutative";

  std::vector<CayleyTable> reps = all_representatives(4, workers);
  const auto products = catalog_products(catalog);

  std::vector<const CatalogEntry*> perm_entries;
  for (const auto& cp : products)
    if (cp.product.arity() <= 3 && !is_expansion(cp.product) &&
        is_regular(cp.product))
      perm_entries.push_back(cp.entry);

  {
    Identity sandwich = parse_identity("x y = y x y");
    SuiteCheck c;
    c.claim = "for every order-<=4 semigroup satisfying x y = y x y, the "
              "squared ideal, SES over the idempotents, and the completely "
              "regular elements coincide";
    c.ref = "permutative/sandwich-structure";
    c.passed = true;
    for (const CayleyTable& S : reps) {
      if (!satisfies(S, sandwich).holds) continue;
      ElementSet S2 = power_ideal(S, 2);
      ElementSet E = idempotents(S);
      ElementSet full = ElementSet::full(S.order);
      ElementSet SES = set_product(S, set_product(S, full, E), full);
      ElementSet I = completely_regular(S);
      if (!(S2 == SES && SES == I)) {
        c.passed = false;
        c.counterexample = table_witness(S, "the three element sets differ");
        break;
      }
    }
    r.checks.push_back(std::move(c));
  }

  {
    Identity perm_preset = preset_identities("Perm").identities.front();
    SuiteCheck c;
    c.claim = "every order-<=4 semigroup satisfying a permutation identity "
              "of arity <= 3 satisfies the Perm preset";
    c.ref = "permutative/perm-implies-preset";
    c.passed = true;
    for (const CayleyTable& S : reps) {
      bool has_perm = false;
      for (const CatalogEntry* e : perm_entries)
        if (satisfies(S, e->identity).holds) { has_perm = true; break; }
      if (has_perm && !satisfies(S, perm_preset).holds) {
        c.passed = false;
        c.counterexample = failed_identity_witness(S, perm_preset);
        break;
      }
    }
    r.checks.push_back(std::move(c));
  }

  for (const auto& cp : products) {
    SuiteCheck c;
    c.claim = "every order-<=4 semigroup satisfying " + cp.entry->name +
              " has multiplicatively closed completely regular elements";
    c.ref = "permutative/closed-I/" + cp.entry->name;
    c.passed = true;
    for (const CayleyTable& S : reps) {
      if (!satisfies(S, cp.entry->identity).holds) continue;
      if (!cr_closed(S)) {
        c.passed = false;
        c.counterexample =
            table_witness(S, "completely regular elements are not closed");
        break;
      }
    }
    r.checks.push_back(std::move(c));
  }

  {
    Identity medial = preset_identities("Medial").identities.front();
    SuiteCheck c;
    c.claim = "every completely regular order-<=4 semigroup satisfying a "
              "permutation identity is medial";
    c.ref = "permutative/cr-perm-implies-medial";
    c.passed = true;
    for (const CayleyTable& S : reps) {
      if (completely_regular(S).count() != S.order) continue;
      bool has_perm = false;
      for (const CatalogEntry* e : perm_entries)
        if (satisfies(S, e->identity).holds) { has_perm = true; break; }
      if (has_perm && !satisfies(S, medial).holds) {
        c.passed = false;
        c.counterexample = failed_identity_witness(S, medial);
        break;
      }
    }
    r.checks.push_back(std::move(c));
  }

  {
    LabeledModel T2 = build_T(2);
    for (const char* name : {"VN1", "VY", "VQ"}) {
      Preset p = preset_identities(name);
      SuiteCheck c;
      c.claim = "T(2) satisfies every " + p.name + " identity";
      c.ref = std::string("permutative/T2-") + name;
      c.passed = true;
      for (const Identity& e : p.identities)
        if (!satisfies(T2.table, e).holds) {
          c.passed = false;
          c.counterexample = failed_identity_witness(T2.table, e);
          break;
        }
      r.checks.push_back(std::move(c));
    }
  }

  finish_report(r, start);
  return r;
}

std::vector<SuiteReport> run_all_suites(
    const std::vector<CatalogEntry>& catalog, int workers) {
  std::vector<SuiteReport> out;
  out.push_back(suite_classification(catalog, workers));
  out.push_back(suite_obstructions(2, catalog, workers));
  out.push_back(suite_obstructions(3, catalog, workers));
  out.push_back(suite_independence(workers));
  out.push_back(suite_permutative(catalog, workers));
  return out;
}

}  // namespace sgw
