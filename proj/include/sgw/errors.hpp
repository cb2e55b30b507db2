#pragma once

#include <stdexcept>
#include <string>

namespace sgw {

/// Base class of every error thrown by the workbench.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RangeError : Error {
  using Error::Error;
};

/// Thrown when a table fails the associativity scan; carries the first
/// violating triple (i,j,k) with (i*j)*k != i*(j*k).
struct AssociativityError : Error {
  int i, j, k;
  AssociativityError(int i_, int j_, int k_, const std::string& what)
      : Error(what), i(i_), j(j_), k(k_) {}
};

struct NotACongruenceError : Error {
  using Error::Error;
};

struct NotAnIdealError : Error {
  using Error::Error;
};

/// Parse failure; pos is a 0-based offset into the input text.
struct SyntaxError : Error {
  std::size_t pos;
  SyntaxError(std::size_t pos_, const std::string& what) : Error(what), pos(pos_) {}
};

struct UnboundVariableError : Error {
  using Error::Error;
};

struct NotAProductIdentityError : Error {
  using Error::Error;
};

struct AlreadyRegularError : Error {
  using Error::Error;
};

struct TrivialIdentityError : Error {
  using Error::Error;
};

struct IndexError : Error {
  using Error::Error;
};

struct UnknownPresetError : Error {
  using Error::Error;
};

/// Construction would exceed a hard size cap (e.g. direct product order).
struct SizeGuardError : Error {
  using Error::Error;
};

/// An exhaustive check would enumerate too many assignments.
struct CostGuardError : Error {
  using Error::Error;
};

}  // namespace sgw
