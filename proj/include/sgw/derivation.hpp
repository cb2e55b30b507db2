#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgw/identities.hpp"

namespace sgw {

struct DeriveBudget {
  int max_word_length = 8;
  std::uint64_t max_expansions = 200000;
};

struct DeriveStep {
  std::string from;
  std::string to;
  std::string rule;  // which basis identity, which direction
};

/// Outcome of a bounded search. NotFoundWithinBudget is a normal verdict,
/// not an error: it means no derivation was found inside the budget, not
/// that none exists.
struct DeriveResult {
  enum class Status { Derived, NotFoundWithinBudget };
  Status status = Status::NotFoundWithinBudget;
  std::vector<DeriveStep> trace;  // rewrites goal lhs into goal rhs when Derived
  std::uint64_t expansions = 0;

  bool derived() const { return status == Status::Derived; }
};

/// Bidirectional breadth-first search for a rewriting chain between the
/// two sides of the goal. A step replaces a factor matching one side of a
/// basis identity (under a substitution of nonempty words, i.e. the usual
/// closure under context and substitution) by the other side, with every
/// intermediate word over the goal's variables and no longer than the
/// budget's word length. All identities must be finite; zero-form basis
/// entries are expanded, a zero-form goal is rejected.
DeriveResult derive_search(const std::vector<Identity>& basis,
                           const Identity& goal,
                           const DeriveBudget& budget = {});

}  // namespace sgw
