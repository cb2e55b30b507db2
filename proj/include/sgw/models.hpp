#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "sgw/cayley.hpp"
#include "sgw/identities.hpp"

namespace sgw {

/// A constructed semigroup together with the parameters that produced it.
struct LabeledModel {
  CayleyTable table;
  std::map<std::string, int> parameters;
  std::string description;
};

/// Nonempty injective words over k letters plus a zero; the product is
/// concatenation when the result repeats no letter, zero otherwise.
/// Elements are sorted by length, then lexicographically; zero is last.
/// Order 1 + sum over m=1..k of k!/(k-m)!. Guard: 1 <= k <= 6.
LabeledModel build_T(int k);

/// Nonempty subsets of {1..k} plus a zero; the product of disjoint sets is
/// their union, anything else is zero. Subsets are sorted by size then by
/// binary value; zero is last. Order 2^k. Guard: 1 <= k <= 10.
LabeledModel build_Ufree(int k);

/// Nonempty words of length <= k over {a, b}; the product is concatenation
/// truncated to the first k letters. Sorted by length then lexicographically.
/// Order 2^(k+1) - 2. Guard: 1 <= k <= 6.
LabeledModel build_W(int k);

/// The semigroup with elements a^1..a^n, b a^0..b a^(n-k), 0 and products
///   a^i a^j = a^min(i+j, n),   a^i (b a^r) = b a^r,
///   (b a^r) a^j = b a^(r+j) if r+j <= n-k else 0,   (b a^r)(b a^s) = 0.
/// Order 2n - k + 2; zero last. Guard: 1 <= k <= n <= 8.
LabeledModel build_V(int k, int n);

/// Monogenic semigroup a^1..a^r with a^i a^j = a^min(i+j, r).
LabeledModel build_C(int r);

/// The three-element monoid {1, n, 0} with n^2 = 0.
LabeledModel build_N1();

using SandwichMatrix = std::array<std::array<int, 2>, 2>;
inline constexpr SandwichMatrix kDefaultSandwich{{{0, 0}, {0, 1}}};

/// Rees matrix semigroup over Z/pZ with index sets {1,2} x {1,2}:
/// (i,g,l)(i',h,l') = (i, g + P[l][i'] + h, l'). Order 4p. Requires p prime,
/// 2 <= p <= 13.
LabeledModel build_rees(int p, const SandwichMatrix& P = kDefaultSandwich);

/// S with one new neutral element appended (label "1").
CayleyTable adjoin_identity(const CayleyTable& S);

/// Largest quotient of S satisfying every identity in `relations`: the
/// quotient by the congruence generated by all pairs
/// (evaluate(lhs, a), evaluate(rhs, a)) over every assignment a. The result
/// is checked to satisfy the relations before it is returned.
LabeledModel free_quotient(const CayleyTable& S,
                           const std::vector<Identity>& relations);

/// A named identity basis. `notes` records display quirks, e.g. a line that
/// is trivial exactly as printed.
struct Preset {
  std::string name;
  std::vector<Identity> identities;
  std::string notes;
};

/// Looks up a preset by name. Fixed names: T, U, Perm, Medial, LRB, RRB,
/// VN1, VY, VQ. Parametrized: N(k), K(k), ACR(n,i,j), P(n,s) where s is a
/// digit string like 213. Throws UnknownPresetError otherwise.
Preset preset_identities(const std::string& name);

/// The preset's identities with every zero-form replaced by its two-sided
/// absorption expansion.
std::vector<Identity> expanded_identities(const Preset& p);

/// Parses builder strings: T(k), O(k), W(k), V(k,n), C(r), N1, K(p).
LabeledModel build_model(const std::string& text);

}  // namespace sgw
