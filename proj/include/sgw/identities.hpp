#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sgw/cayley.hpp"
#include "sgw/terms.hpp"

namespace sgw {

/// A semigroup identity lhs = rhs. A null rhs is the zero-form lhs = 0,
/// shorthand for the pair {u lhs = lhs, lhs u = lhs} with u fresh (see
/// expand_zero). variables lists every variable in first-occurrence
/// order, lhs first.
struct Identity {
  TermPtr lhs;
  TermPtr rhs;
  std::vector<std::string> variables;

  bool zero_form() const { return rhs == nullptr; }
};

Identity make_identity(TermPtr lhs, TermPtr rhs);
Identity make_zero_identity(TermPtr lhs);

/// Text form: "lhs = rhs" or "lhs = 0"; see parse_term for the term
/// grammar. '0' is only meaningful as the entire right side.
Identity parse_identity(const std::string& text);

std::string print_identity(const Identity& e);

bool identity_equal(const Identity& a, const Identity& b);

/// Equality up to a consistent renaming of variables.
bool alpha_equal(const Identity& a, const Identity& b);

/// Structural triviality: both sides equal after flattening.
bool is_trivial(const Identity& e);

/// lhs = 0 becomes {u lhs = lhs, lhs u = lhs} with u fresh.
std::vector<Identity> expand_zero(const Identity& e);

/// Prepends (appends) one fresh variable to both sides. Fresh names are
/// drawn from z, z1, z2, ... skipping names in use. Zero-forms are
/// rejected; expand them first.
Identity res_left(const Identity& e);
Identity res_right(const Identity& e);

/// Replaces each variable x by a product x1 ... xk of k fresh variables
/// on both sides (k >= 1).
Identity malcev_split(const Identity& e, int k);

using Assignment = std::map<std::string, int>;

/// Value of t in S under the assignment; every variable of t must be
/// bound (UnboundVariableError otherwise). Power nodes evaluate through
/// omega_plus.
int evaluate(const TermPtr& t, const CayleyTable& S, const Assignment& a);

struct CheckResult {
  bool holds = false;
  Assignment witness;  // a violating assignment when !holds
  explicit operator bool() const { return holds; }
};

inline constexpr std::uint64_t kDefaultAssignmentBudget = std::uint64_t{1} << 26;

/// Exhaustive check of e over all |S|^#vars assignments. Zero-forms are
/// expanded first, which makes the check equivalent to "S has a zero and
/// lhs always evaluates to it". Throws CostGuardError when the assignment
/// count would exceed the budget.
CheckResult satisfies(const CayleyTable& S, const Identity& e,
                      std::uint64_t max_assignments = kDefaultAssignmentBudget);

bool satisfies_all(const CayleyTable& S, const std::vector<Identity>& ids);

/// Identity-set file: one identity per line, blank lines and '#' comments
/// ignored, zero-form lines expanded on load.
std::vector<Identity> parse_identity_lines(const std::string& text);
std::vector<Identity> load_identity_file(const std::string& path);

}  // namespace sgw
