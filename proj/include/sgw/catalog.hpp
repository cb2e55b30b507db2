#pragma once

#include <string>
#include <vector>

#include "sgw/identities.hpp"

namespace sgw {

struct CatalogEntry {
  std::string name;
  Identity identity;
};

/// The built-in product-identity catalog: one expansion identity per shape
/// the classifier handles, the non-regular example, and every nontrivial
/// permutation identity of arity <= 3.
const std::vector<CatalogEntry>& builtin_catalog();

/// Parses "name: identity" lines; '#' starts a comment, blank lines are
/// skipped. Throws Error when the file cannot be read.
std::vector<CatalogEntry> load_catalog_file(const std::string& path);

std::vector<CatalogEntry> parse_catalog_lines(const std::string& text);

}  // namespace sgw
