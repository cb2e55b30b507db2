// Acceptance run: eight self-contained criteria, one line each, with wall
// budgets pinned below. Exits nonzero when any criterion fails or blows its
// budget. Kept independent of the doctest suites on purpose: everything here
// re-derives its expectations through the public API plus local brute force.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "derive_cases.hpp"
#include "sgw/catalog.hpp"
#include "sgw/classifier.hpp"
#include "sgw/derivation.hpp"
#include "sgw/enumeration.hpp"
#include "sgw/json_io.hpp"
#include "sgw/models.hpp"
#include "sgw/oracle.hpp"

using namespace sgw;

namespace {

constexpr int kWorkers = 3;

struct Outcome {
  bool ok = true;
  std::ostringstream notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (notes.tellp() > 0) notes << "; ";
      notes << what;
    }
  }
};

// Associativity re-proved without going through the library's validator.
bool assoc_by_hand(const CayleyTable& S) {
  for (int i = 0; i < S.order; ++i)
    for (int j = 0; j < S.order; ++j)
      for (int k = 0; k < S.order; ++k)
        if (S.at(S.at(i, j), k) != S.at(i, S.at(j, k))) return false;
  return true;
}

bool holds(const CayleyTable& S, const Identity& e) {
  return satisfies(S, e).holds;
}

std::vector<std::vector<int>> nontrivial_sigmas(int n) {
  std::vector<int> sigma(n);
  for (int q = 0; q < n; ++q) sigma[q] = q + 1;
  std::vector<std::vector<int>> out;
  while (std::next_permutation(sigma.begin(), sigma.end()))
    out.push_back(sigma);
  return out;
}

// ---- criterion 1: model zoo exactness ----
Outcome model_zoo() {
  Outcome o;
  const int t_orders[] = {2, 5, 16, 65};
  for (int k = 1; k <= 4; ++k) {
    LabeledModel m = build_T(k);
    o.require(m.table.order == t_orders[k - 1],
              "injective-word order k=" + std::to_string(k));
    o.require(assoc_by_hand(m.table), "injective-word associativity");
  }
  const int o_orders[] = {2, 4, 8};
  for (int k = 1; k <= 3; ++k) {
    LabeledModel m = build_Ufree(k);
    o.require(m.table.order == o_orders[k - 1],
              "disjoint-union order k=" + std::to_string(k));
    o.require(assoc_by_hand(m.table), "disjoint-union associativity");
  }
  const int w_orders[] = {2, 6, 14};
  for (int k = 1; k <= 3; ++k) {
    LabeledModel m = build_W(k);
    o.require(m.table.order == w_orders[k - 1],
              "truncated-word order k=" + std::to_string(k));
    o.require(assoc_by_hand(m.table), "truncated-word associativity");
  }
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= n; ++k) {
      LabeledModel m = build_V(k, n);
      o.require(m.table.order == 2 * n - k + 2,
                "two-generator order k=" + std::to_string(k) +
                    " n=" + std::to_string(n));
      o.require(assoc_by_hand(m.table), "two-generator associativity");
    }
  return o;
}

// ---- criterion 2: the reversal example ----
Outcome reversal_example() {
  Outcome o;
  Identity premise = parse_identity("x y = y^(w+1) x^(w+1)");
  Classification c = classify(as_product_identity(premise));
  o.require(c.verdict_text() == "ACR(1,2)",
            "classify gave " + c.verdict_text());
  o.require(print_identity(c.implied) == "x y = (x y)^(w+1)",
            "implied identity " + print_identity(c.implied));
  for (const char* conclusion :
       {"x y = (x y)^(w+1)", "x y = y x", "x y = x^(w+1) y",
        "x y = x y^(w+1)"}) {
    OracleResult r =
        implies_oracle(premise, parse_identity(conclusion), 4, kWorkers);
    o.require(r.no_counterexample(),
              std::string("counterexample against ") + conclusion);
  }
  return o;
}

// ---- criterion 3: word-model obstructions at k = 2, 3 ----
Outcome word_model_obstructions() {
  Outcome o;
  std::vector<CatalogEntry> catalog = builtin_catalog();
  for (int k : {2, 3}) {
    CayleyTable T = build_T(k).table;
    CayleyTable O = build_Ufree(k).table;
    for (const auto& sigma : nontrivial_sigmas(k))
      o.require(!holds(T, perm_identity(k, sigma)),
                "injective words admit a permutation at k=" +
                    std::to_string(k));
    for (const CatalogEntry& entry : catalog) {
      ProductIdentity p = as_product_identity(entry.identity);
      if (p.arity() != k || !is_expansion(p)) continue;
      o.require(!holds(T, entry.identity),
                "injective words satisfy " + entry.name);
      o.require(!holds(O, entry.identity),
                "disjoint unions satisfy " + entry.name);
    }
    o.require(holds(O, parse_identity("x y = y x")),
              "disjoint unions not commutative");
    bool t_preset = true;
    for (const Identity& e :
         expanded_identities(preset_identities("T")))
      t_preset = t_preset && holds(T, e);
    o.require(t_preset, "injective words fail their own preset");
    Preset nil = preset_identities("N(" + std::to_string(k + 1) + ")");
    bool nilpotent = true;
    for (const Identity& e : expanded_identities(nil))
      nilpotent = nilpotent && holds(T, e);
    o.require(nilpotent, "length-" + std::to_string(k + 1) +
                             " products do not vanish");
  }
  return o;
}

// ---- criterion 4: membership matrix at arity 3 ----
Outcome membership_matrix() {
  Outcome o;
  int checks = 0;
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j) {
      Identity e = acr_identity(3, i, j);
      for (int k = 1; k <= 3; ++k) {
        bool w_in = holds(build_W(k).table, e);
        bool v_in = holds(build_V(k, 3).table, e);
        o.require(w_in == (k <= j),
                  "truncated words k=" + std::to_string(k) + " window (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
        o.require(v_in == (k > j),
                  "two-generator k=" + std::to_string(k) + " window (" +
                      std::to_string(i) + "," + std::to_string(j) + ")");
        checks += 2;
      }
    }
  o.require(checks == 36, "matrix size");
  return o;
}

// ---- criterion 5: the three-symbol lattice via free quotients ----
Outcome symbol_lattice() {
  Outcome o;
  CayleyTable t3 = build_T(3).table;
  auto sigmas = nontrivial_sigmas(3);
  auto in_cycle = [](const std::vector<int>& sigma,
                     const std::vector<int>& tau) {
    std::vector<int> cur = sigma;
    for (;;) {
      if (cur == tau) return true;
      std::vector<int> next(cur.size());
      for (std::size_t q = 0; q < cur.size(); ++q)
        next[q] = sigma[cur[q] - 1];
      if (next == sigma) return false;
      cur = next;
    }
  };
  int checks = 0;
  for (const auto& sigma : sigmas) {
    LabeledModel q = free_quotient(t3, {perm_identity(3, sigma)});
    for (const auto& tau : sigmas) {
      bool got = holds(q.table, perm_identity(3, tau));
      o.require(got == in_cycle(sigma, tau),
                "lattice mismatch at one sigma/tau pair");
      ++checks;
    }
  }
  o.require(checks == 25, "lattice size");
  return o;
}

// ---- criterion 6: structural sweep over order <= 4 ----
Outcome structural_sweep() {
  Outcome o;
  std::vector<CayleyTable> reps = all_representatives(4, kWorkers);
  o.require(reps.size() == 1 + 5 + 24 + 188, "representative count");

  Identity sandwich = parse_identity("x y = y x y");
  std::vector<CatalogEntry> catalog = builtin_catalog();
  std::vector<Identity> perms;
  for (int n : {2, 3})
    for (const auto& sigma : nontrivial_sigmas(n))
      perms.push_back(perm_identity(n, sigma));
  std::vector<Identity> medial =
      expanded_identities(preset_identities("Medial"));
  std::vector<Identity> perm_preset =
      expanded_identities(preset_identities("Perm"));

  for (const CayleyTable& S : reps) {
    ElementSet cr = completely_regular(S);

    if (holds(S, sandwich)) {
      ElementSet s2 = power_ideal(S, 2);
      ElementSet full = ElementSet::full(S.order);
      ElementSet ses = set_product(S, set_product(S, full, idempotents(S)), full);
      o.require(s2 == ses && ses == cr,
                "sandwich law without the sandwich structure on " + S.name);
    }

    for (const CatalogEntry& entry : catalog)
      if (holds(S, entry.identity)) {
        bool closed = true;
        for (int a : cr.elements())
          for (int b : cr.elements())
            closed = closed && cr.test(S.at(a, b));
        o.require(closed, "open regular part under " + entry.name + " on " +
                              S.name);
      }

    bool some_perm = false;
    for (const Identity& e : perms) some_perm = some_perm || holds(S, e);
    if (some_perm) {
      bool perm_ok = true;
      for (const Identity& e : perm_preset) perm_ok = perm_ok && holds(S, e);
      o.require(perm_ok, "permutation law without the omega-window law on " +
                             S.name);
      if (cr.count() == S.order) {
        bool medial_ok = true;
        for (const Identity& e : medial) medial_ok = medial_ok && holds(S, e);
        o.require(medial_ok, "regular permutational but not medial: " + S.name);
      }
    }
  }
  return o;
}

// ---- criterion 7: enumeration self-consistency ----
Outcome enumeration_consistency() {
  Outcome o;
  const int iso_counts[] = {1, 1, 5, 24, 188};
  const int anti_counts[] = {1, 1, 4, 18, 126};
  for (int m = 2; m <= 4; ++m) {
    EnumerationSpec iso_spec;
    iso_spec.order = m;
    iso_spec.mode = EnumMode::UpToIso;
    EnumerationSpec anti_spec;
    anti_spec.order = m;
    anti_spec.mode = EnumMode::UpToIsoAnti;

    std::vector<CayleyTable> iso = enumerate_semigroups(iso_spec, kWorkers);
    std::vector<CayleyTable> anti = enumerate_semigroups(anti_spec, kWorkers);
    o.require(static_cast<int>(iso.size()) == iso_counts[m],
              "iso count at order " + std::to_string(m));
    o.require(static_cast<int>(anti.size()) == anti_counts[m],
              "anti count at order " + std::to_string(m));
    o.require(iso.size() >= anti.size(), "mode inequality");

    for (const CayleyTable& S : iso)
      o.require(canonical_key(S) == S.table,
                "non-canonical iso representative at order " +
                    std::to_string(m));
    for (const CayleyTable& S : anti)
      o.require(canonical_key_anti(S) == S.table,
                "non-canonical anti representative at order " +
                    std::to_string(m));

    std::vector<CayleyTable> iso_seq = enumerate_semigroups(iso_spec, 1);
    o.require(iso_seq.size() == iso.size(), "worker-dependent iso count");
    bool same = iso_seq.size() == iso.size();
    for (std::size_t q = 0; same && q < iso.size(); ++q)
      same = iso_seq[q].table == iso[q].table;
    o.require(same, "worker-dependent iso output at order " +
                        std::to_string(m));

    // Self-dual classes stay put, the rest pair off two-to-one.
    int selfdual = 0;
    for (const CayleyTable& S : iso)
      if (is_anti_isomorphic(S, S)) ++selfdual;
    o.require(static_cast<int>(iso.size() - anti.size()) ==
                  (static_cast<int>(iso.size()) - selfdual) / 2 &&
                  (iso.size() - selfdual) % 2 == 0,
              "anti pairing does not account for the difference at order " +
                  std::to_string(m));
  }
  return o;
}

// ---- criterion 8: deduction soundness ----
Outcome deduction_soundness() {
  Outcome o;
  int derived = 0;
  for (const DeriveCase& c : derive_cases()) {
    std::vector<Identity> basis;
    for (const auto& b : c.basis) basis.push_back(parse_identity(b));
    Identity goal = parse_identity(c.goal);
    DeriveResult r = derive_search(basis, goal);
    o.require(r.derived(), "underived goal " + c.goal);
    if (r.derived()) ++derived;
    OracleResult check = implies_oracle(basis, goal, 4, kWorkers);
    o.require(check.no_counterexample(),
              "oracle refutes derived goal " + c.goal);
  }
  o.require(derived == 20, "expected 20 derivations, got " +
                               std::to_string(derived));

  DeriveResult bogus = derive_search({parse_identity("x y = y x")},
                                     parse_identity("x = x x"));
  o.require(!bogus.derived(), "derived idempotence from commutativity");
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {"model zoo exactness", 1.0, model_zoo},
      {"reversal example", 120.0, reversal_example},
      {"word-model obstructions", 60.0, word_model_obstructions},
      {"membership matrix", 60.0, membership_matrix},
      {"three-symbol lattice", 60.0, symbol_lattice},
      {"structural sweep", 300.0, structural_sweep},
      {"enumeration self-consistency", 300.0, enumeration_consistency},
      {"deduction soundness", 120.0, deduction_soundness},
  };

  int failures = 0;
  for (std::size_t q = 0; q < criteria.size(); ++q) {
    const Criterion& c = criteria[q];
    const auto start = std::chrono::steady_clock::now();
    Outcome result;
    try {
      result = c.run();
    } catch (const std::exception& e) {
      result.ok = false;
      result.notes << "exception: " << e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > c.budget_seconds) {
      result.ok = false;
      if (result.notes.tellp() > 0) result.notes << "; ";
      result.notes << "over budget";
    }
    if (!result.ok) ++failures;
    std::cout << "criterion " << q + 1 << " (" << c.name << "): "
              << (result.ok ? "PASS" : "FAIL") << " [" << std::fixed
              << std::setprecision(2) << seconds << " s of "
              << std::setprecision(0) << c.budget_seconds << " s]";
    if (!result.ok) std::cout << " -- " << result.notes.str();
    std::cout << "\n";
  }
  if (failures > 0)
    std::cout << failures << " criterion(s) failed" << std::endl;
  else
    std::cout << "all 8 criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
