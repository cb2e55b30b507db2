#pragma once

#include <optional>
#include <vector>

#include "sgw/cayley.hpp"
#include "sgw/enumeration.hpp"
#include "sgw/identities.hpp"

namespace sgw {

/// A semigroup on which every premise holds but the conclusion fails, plus
/// the failing assignment. Serializable and replayable.
struct Counterexample {
  CayleyTable S;
  Identity failed;
  Assignment assignment;
};

struct OracleResult {
  int max_order = 0;
  std::optional<Counterexample> counterexample;
  bool no_counterexample() const { return !counterexample.has_value(); }
};

/// Scans every semigroup of order <= max_order (one per isomorphism class,
/// in canonical order) for one satisfying all premises but not the
/// conclusion. Finding none is evidence for the implication at small orders,
/// not a proof.
OracleResult implies_oracle(const std::vector<Identity>& premises,
                            const Identity& conclusion, int max_order,
                            int workers = 1);

OracleResult implies_oracle(const Identity& premise,
                            const Identity& conclusion, int max_order,
                            int workers = 1);

/// Re-runs the failed check on the stored semigroup and assignment; true
/// when the counterexample still refutes the identity.
bool replay(const Counterexample& c);

}  // namespace sgw
