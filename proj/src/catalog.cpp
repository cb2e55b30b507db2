#include "sgw/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace sgw {

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    const std::pair<const char*, const char*> raw[] = {
        {"omega-reverse", "x y = y^(w+1) x^(w+1)"},
        {"sandwich", "x y = y x y"},
        {"canary-2", "x1 x2 = x1 x2 x2"},
        {"canary-3", "x1 x2 x3 = x1 x2 x3 x3"},
        {"square", "x = x x"},
        {"drop-x2", "x1 x2 = x1 x1"},
        {"swap", "x y = y x"},
        {"perm-12", "x1 x2 x3 = x2 x1 x3"},
        {"perm-23", "x1 x2 x3 = x1 x3 x2"},
        {"perm-13", "x1 x2 x3 = x3 x2 x1"},
        {"perm-123", "x1 x2 x3 = x2 x3 x1"},
        {"perm-132", "x1 x2 x3 = x3 x1 x2"},
    };
    std::vector<CatalogEntry> out;
    for (const auto& [name, text] : raw)
      out.push_back({name, parse_identity(text)});
    return out;
  }();
  return entries;
}

std::vector<CatalogEntry> parse_catalog_lines(const std::string& text) {
  std::vector<CatalogEntry> out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = std::all_of(line.begin(), line.end(),
                             [](unsigned char c) { return std::isspace(c); });
    if (blank) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos)
      throw SyntaxError(0, "catalog line " + std::to_string(lineno) +
                               " is missing the 'name:' prefix");
    std::string name = line.substr(0, colon);
    auto strip = [](std::string s) {
      auto notspace = [](unsigned char c) { return !std::isspace(c); };
      s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
      s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
      return s;
    };
    out.push_back({strip(name), parse_identity(line.substr(colon + 1))});
  }
  return out;
}

std::vector<CatalogEntry> load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read catalog file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_catalog_lines(buf.str());
}

}  // namespace sgw
