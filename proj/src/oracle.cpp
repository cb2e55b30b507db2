#include "sgw/oracle.hpp"

namespace sgw {

OracleResult implies_oracle(const std::vector<Identity>& premises,
                            const Identity& conclusion, int max_order,
                            int workers) {
  if (max_order < 1 || max_order > max_enumeration_order())
    throw RangeError("oracle order must lie in [1, " +
                     std::to_string(max_enumeration_order()) + "], got " +
                     std::to_string(max_order));
  OracleResult result;
  result.max_order = max_order;
  for (int m = 1; m <= max_order; ++m) {
    EnumerationSpec spec;
    spec.order = m;
    for (const CayleyTable& S : enumerate_semigroups(spec, workers)) {
      bool premises_hold = true;
      for (const auto& p : premises)
        if (!satisfies(S, p)) { premises_hold = false; break; }
      if (!premises_hold) continue;
      CheckResult check = satisfies(S, conclusion);
      if (!check.holds) {
        Counterexample c;
        c.S = S;
        c.failed = conclusion;
        c.assignment = check.witness;
        result.counterexample = std::move(c);
        return result;
      }
    }
  }
  return result;
}

OracleResult implies_oracle(const Identity& premise, const Identity& conclusion,
                            int max_order, int workers) {
  return implies_oracle(std::vector<Identity>{premise}, conclusion, max_order,
                        workers);
}

bool replay(const Counterexample& c) {
  revalidate(c.S);
  // A zero-form check fails through one of its expansions, so the stored
  // witness carries the expansion's fresh variable; re-check via satisfies
  // when the direct evaluation cannot be replayed.
  if (c.failed.zero_form()) {
    for (const Identity& e : expand_zero(c.failed)) {
      bool applicable = true;
      for (const auto& v : e.variables)
        if (!c.assignment.count(v)) { applicable = false; break; }
      if (applicable &&
          evaluate(e.lhs, c.S, c.assignment) !=
              evaluate(e.rhs, c.S, c.assignment))
        return true;
    }
    return false;
  }
  for (const auto& v : c.failed.variables)
    if (!c.assignment.count(v)) return false;
  return evaluate(c.failed.lhs, c.S, c.assignment) !=
         evaluate(c.failed.rhs, c.S, c.assignment);
}

}  // namespace sgw
