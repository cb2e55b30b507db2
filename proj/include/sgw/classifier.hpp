#pragma once

#include <string>
#include <vector>

#include "sgw/identities.hpp"

namespace sgw {

/// An identity whose left side is a plain product x1 ... xn of n distinct
/// variables; only the right side is stored. vars keeps the left side's
/// variable names in order.
struct ProductIdentity {
  std::vector<std::string> vars;
  TermPtr rhs;

  int arity() const { return static_cast<int>(vars.size()); }
};

/// Throws NotAProductIdentityError when lhs is not a product of distinct
/// variables, and TrivialIdentityError when both sides are structurally
/// equal.
ProductIdentity as_product_identity(const Identity& e);

Identity to_identity(const ProductIdentity& p);

/// Every left-side variable occurs on the right.
bool is_regular(const ProductIdentity& p);

/// The right side is strictly longer than the left (infinite counts).
bool is_expansion(const ProductIdentity& p);

/// For a non-regular identity: squares the least absent variable, i.e.
/// replaces the right side by x1 ... x(i-1) xi^2 x(i+1) ... xn where xi is
/// the least variable missing from the right. Throws AlreadyRegularError
/// on regular input.
ProductIdentity regularize(const ProductIdentity& p);

/// For a finite expansion identity: the word sequence obtained by
/// repeatedly rewriting the length-n prefix through the identity,
/// starting from x1 ... xn. Returns steps+1 words.
std::vector<std::vector<std::string>> unroll_sequence(const ProductIdentity& p,
                                                      int steps);

/// The right side cannot be written as x1 * (word without x1): true iff
/// the first letter is not x1 or x1 occurs again later.
bool is_left_primitive(const ProductIdentity& p);
bool is_right_primitive(const ProductIdentity& p);

struct ReductionStep {
  enum class Kind { NonRegularSquare, LeftStrip, RightStrip, PrimitiveCore };
  Kind kind;
  int index = 0;  // NonRegularSquare: 1-based position of the squared variable
};

/// Outcome of classify: every nontrivial product identity either is a
/// permutation identity or entails the completely-regular core identity
/// x1..xn = x1..x(i-1) (xi..xj)^(w+1) x(j+1)..xn for the window (i,j)
/// found by stripping. `implied` is that identity spelled with the input's
/// variable names.
struct Classification {
  enum class Verdict { Permutation, Acr };
  Verdict verdict;
  std::vector<int> sigma;  // Permutation: 1-based images; position p holds x[sigma[p-1]]
  int n = 0, i = 0, j = 0;  // Acr window, 1-based
  std::vector<ReductionStep> trace;
  Identity implied;

  std::string verdict_text() const;
};

enum class StripOrder { LeftFirst, RightFirst };

Classification classify(const ProductIdentity& p,
                        StripOrder order = StripOrder::LeftFirst);

/// x1 ... xn = x1 ... x(i-1) (xi ... xj)^(w+1) x(j+1) ... xn over
/// canonical variables x1..xn; requires 1 <= i <= j <= n.
Identity acr_identity(int n, int i, int j);

/// x1 ... xn = x(1s) ... x(ns) for a nontrivial permutation; sigma is
/// given by 1-based images (position p of the right side holds
/// x[sigma[p-1]]).
Identity perm_identity(int n, const std::vector<int>& sigma);

/// Re-applies the recorded reduction steps to the input and confirms they
/// reproduce the verdict.
bool replay_trace(const ProductIdentity& p, const Classification& c);

}  // namespace sgw
