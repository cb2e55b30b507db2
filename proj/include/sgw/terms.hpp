#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sgw/errors.hpp"

namespace sgw {

struct OmegaTerm;
using TermPtr = std::shared_ptr<const OmegaTerm>;

/// AST of an omega-term. Nodes are immutable and shared.
///
/// Invariants kept by the constructors below: Concat children are
/// flattened (no Concat directly under Concat) and number at least two;
/// finite positive powers are always represented as repeated
/// concatenation, so a Power node always means exponent w+k with k >= 0.
struct OmegaTerm {
  enum class Kind { Var, Concat, Power };
  Kind kind;
  std::string name;            // Var
  std::vector<TermPtr> parts;  // Concat
  TermPtr base;                // Power
  int power_offset = 0;        // Power: exponent w + power_offset
};

TermPtr var(std::string name);

/// Flattens nested Concats; a single part collapses to that part.
/// Throws RangeError on an empty part list.
TermPtr concat(std::vector<TermPtr> parts);

/// base^(w+offset), offset >= 0.
TermPtr power(TermPtr base, int offset);

bool term_equal(const TermPtr& a, const TermPtr& b);

enum class Multiplicity { Zero, One, Many };

/// Static facts about a term: which variables occur, how often (counting
/// anything below a Power node as Many), the first and last variable, and
/// the length (number of variable occurrences, nullopt when any Power
/// makes it infinite).
struct TermProfile {
  std::set<std::string> content;
  std::optional<std::uint64_t> length;
  std::string first, last;
  std::map<std::string, Multiplicity> multiplicity;

  Multiplicity of(const std::string& v) const {
    auto it = multiplicity.find(v);
    return it == multiplicity.end() ? Multiplicity::Zero : it->second;
  }
};

TermProfile profile(const TermPtr& t);

/// Replaces every occurrence of variable v by s (capture is not a concern:
/// terms have no binders). The result is re-flattened.
TermPtr substitute(const TermPtr& t, const std::string& v, const TermPtr& s);

enum class Side { Left, Right };

/// Rewrites a Power node b^(w+k) with k >= 1 as k unrolled copies of b on
/// the requested side of b^w; k = 0 returns the node unchanged. Throws
/// RangeError when the node is not a Power.
TermPtr unroll(const TermPtr& power_node, Side side);

/// Canonical rendering: factors separated by single spaces, omega powers
/// as ^w or ^(w+k), non-variable power bases parenthesized. parse_term of
/// the output reproduces the term.
std::string print_term(const TermPtr& t);

/// Grammar: identifiers are variables; juxtaposition or '*' concatenates;
/// ^w and ^(w+k) are omega powers; ^n (n >= 1) is a finite power and is
/// expanded to repeated concatenation; parentheses group.
TermPtr parse_term(const std::string& text);

}  // namespace sgw
