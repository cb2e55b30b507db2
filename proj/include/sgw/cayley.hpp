#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgw/errors.hpp"

namespace sgw {

/// A finite semigroup given by its full multiplication table.
///
/// Elements are dense indices 0..order-1. The row index is the left
/// factor: at(i, j) is the product (element i) * (element j).
/// Instances produced by validate() have associativity proved from the
/// table and zero/identity detected, never trusted from input.
struct CayleyTable {
  int order = 0;
  std::vector<int> table;  // row-major, order*order entries
  std::vector<std::string> labels;
  std::optional<int> zero;
  std::optional<int> identity;
  std::string name;

  int at(int i, int j) const {
    return table[static_cast<std::size_t>(i) * order + j];
  }
};

/// Subset of the element indices of a fixed table.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(int universe) : bits_(universe, false) {}

  static ElementSet full(int universe) {
    ElementSet s(universe);
    s.bits_.assign(universe, true);
    return s;
  }

  int universe() const { return static_cast<int>(bits_.size()); }
  bool test(int i) const { return bits_[i]; }
  void set(int i) { bits_[i] = true; }
  void reset(int i) { bits_[i] = false; }

  int count() const;
  std::vector<int> elements() const;  // ascending
  bool subset_of(const ElementSet& other) const;

  bool operator==(const ElementSet&) const = default;

 private:
  std::vector<bool> bits_;
};

/// Checks shape, entry ranges and associativity of a raw table, then
/// builds a CayleyTable with zero/identity auto-detected. Labels default
/// to e0, e1, ... when omitted.
CayleyTable validate(const std::string& name,
                     const std::vector<std::vector<int>>& rows,
                     std::vector<std::string> labels = {});

/// Same, from a flat row-major table.
CayleyTable validate_flat(const std::string& name, int order,
                          std::vector<int> flat,
                          std::vector<std::string> labels = {});

/// Re-proves associativity and the declared zero/identity of an existing
/// instance (used after deserialization).
void revalidate(const CayleyTable& S);

ElementSet idempotents(const CayleyTable& S);

/// The unique idempotent among the positive powers of s.
int omega_power(const CayleyTable& S, int s);

/// omega_power(s) multiplied by s^k; k = 0 returns omega_power(s) itself.
int omega_plus(const CayleyTable& S, int s, int k);

/// Elements s with s == omega_plus(s, 1), i.e. lying in a subgroup.
ElementSet completely_regular(const CayleyTable& S);

/// {a*b : a in A, b in B}.
ElementSet set_product(const CayleyTable& S, const ElementSet& A,
                       const ElementSet& B);

/// The set of all products of at least n elements (n >= 1).
ElementSet power_ideal(const CayleyTable& S, int n);

CayleyTable direct_product(const CayleyTable& S, const CayleyTable& T);

struct Subsemigroup {
  CayleyTable table;
  std::vector<int> parent_index;  // subsemigroup index -> index in S
};

/// Closure of gens under multiplication, re-indexed ascending by parent
/// index. gens must be nonempty.
Subsemigroup subsemigroup(const CayleyTable& S, const ElementSet& gens);

/// A partition of the element indices as a class-index array. Classes are
/// numbered by first occurrence, so class_of[0] == 0.
struct Congruence {
  std::vector<int> class_of;
  int num_classes = 0;
};

/// Least congruence containing the given pairs: closed under left and
/// right translation by every element.
Congruence congruence_closure(const CayleyTable& S,
                              const std::vector<std::pair<int, int>>& pairs);

bool is_congruence(const CayleyTable& S, const Congruence& c);

/// Quotient table on the classes; throws NotACongruenceError when the
/// partition is not compatible with multiplication. Class labels are the
/// label of the least member.
CayleyTable quotient(const CayleyTable& S, const Congruence& c);

/// Collapses a nonempty two-sided ideal to a single zero (placed last);
/// the rest keeps its relative order.
CayleyTable rees_quotient(const CayleyTable& S, const ElementSet& ideal);

CayleyTable opposite(const CayleyTable& S);

/// Multiplication-preserving bijection test; intended for small orders.
bool is_isomorphic(const CayleyTable& S, const CayleyTable& T);

/// Order-reversing bijection test: S isomorphic to the opposite of T.
bool is_anti_isomorphic(const CayleyTable& S, const CayleyTable& T);

}  // namespace sgw
