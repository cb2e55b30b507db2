#include "sgw/identities.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sgw {

namespace {

void collect_vars(const TermPtr& t, std::vector<std::string>& out) {
  switch (t->kind) {
    case OmegaTerm::Kind::Var:
      if (std::find(out.begin(), out.end(), t->name) == out.end())
        out.push_back(t->name);
      return;
    case OmegaTerm::Kind::Concat:
      for (const auto& p : t->parts) collect_vars(p, out);
      return;
    case OmegaTerm::Kind::Power:
      collect_vars(t->base, out);
      return;
  }
}

std::vector<std::string> variables_of(const TermPtr& lhs, const TermPtr& rhs) {
  std::vector<std::string> vars;
  collect_vars(lhs, vars);
  if (rhs) collect_vars(rhs, vars);
  return vars;
}

bool name_in_use(const Identity& e, const std::string& name) {
  return std::find(e.variables.begin(), e.variables.end(), name) != e.variables.end();
}

std::string fresh_name(const Identity& e, const std::string& stem) {
  if (!name_in_use(e, stem)) return stem;
  for (int i = 1;; ++i) {
    std::string cand = stem + std::to_string(i);
    if (!name_in_use(e, cand)) return cand;
  }
}

}  // namespace

Identity make_identity(TermPtr lhs, TermPtr rhs) {
  if (!lhs || !rhs) throw RangeError("identity sides must be nonempty terms");
  Identity e;
  e.lhs = std::move(lhs);
  e.rhs = std::move(rhs);
  e.variables = variables_of(e.lhs, e.rhs);
  return e;
}

Identity make_zero_identity(TermPtr lhs) {
  if (!lhs) throw RangeError("identity side must be a nonempty term");
  Identity e;
  e.lhs = std::move(lhs);
  e.variables = variables_of(e.lhs, nullptr);
  return e;
}

Identity parse_identity(const std::string& text) {
  int depth = 0;
  std::size_t eq = std::string::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == '=' && depth == 0) {
      if (eq != std::string::npos) throw SyntaxError(i, "more than one '='");
      eq = i;
    }
  }
  if (eq == std::string::npos)
    throw SyntaxError(text.size(), "expected '=' between the two sides");
  TermPtr lhs = parse_term(text.substr(0, eq));
  std::string rhs_text = text.substr(eq + 1);
  std::string trimmed = rhs_text;
  trimmed.erase(std::remove_if(trimmed.begin(), trimmed.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                trimmed.end());
  if (trimmed == "0") return make_zero_identity(std::move(lhs));
  try {
    return make_identity(std::move(lhs), parse_term(rhs_text));
  } catch (const SyntaxError& err) {
    throw SyntaxError(err.pos + eq + 1, err.what());
  }
}

std::string print_identity(const Identity& e) {
  std::string out = print_term(e.lhs);
  out += " = ";
  out += e.zero_form() ? "0" : print_term(e.rhs);
  return out;
}

bool identity_equal(const Identity& a, const Identity& b) {
  if (a.zero_form() != b.zero_form()) return false;
  if (!term_equal(a.lhs, b.lhs)) return false;
  return a.zero_form() || term_equal(a.rhs, b.rhs);
}

namespace {

TermPtr rename_canonical(const TermPtr& t, const std::map<std::string, std::string>& m) {
  switch (t->kind) {
    case OmegaTerm::Kind::Var:
      return var(m.at(t->name));
    case OmegaTerm::Kind::Concat: {
      std::vector<TermPtr> parts;
      parts.reserve(t->parts.size());
      for (const auto& p : t->parts) parts.push_back(rename_canonical(p, m));
      return concat(std::move(parts));
    }
    case OmegaTerm::Kind::Power:
      return power(rename_canonical(t->base, m), t->power_offset);
  }
  return t;
}

Identity canonical_form(const Identity& e) {
  std::map<std::string, std::string> m;
  for (std::size_t i = 0; i < e.variables.size(); ++i)
    m[e.variables[i]] = "v" + std::to_string(i + 1);
  Identity out;
  out.lhs = rename_canonical(e.lhs, m);
  out.rhs = e.zero_form() ? nullptr : rename_canonical(e.rhs, m);
  out.variables = variables_of(out.lhs, out.rhs);
  return out;
}

}  // namespace

bool alpha_equal(const Identity& a, const Identity& b) {
  return identity_equal(canonical_form(a), canonical_form(b));
}

bool is_trivial(const Identity& e) {
  return !e.zero_form() && term_equal(e.lhs, e.rhs);
}

std::vector<Identity> expand_zero(const Identity& e) {
  if (!e.zero_form())
    throw RangeError("expand_zero expects a zero-form identity");
  TermPtr u = var(fresh_name(e, "u"));
  return {make_identity(concat({u, e.lhs}), e.lhs),
          make_identity(concat({e.lhs, u}), e.lhs)};
}

Identity res_left(const Identity& e) {
  if (e.zero_form())
    throw RangeError("restriction of a zero-form identity is not defined; expand it first");
  TermPtr z = var(fresh_name(e, "z"));
  return make_identity(concat({z, e.lhs}), concat({z, e.rhs}));
}

Identity res_right(const Identity& e) {
  if (e.zero_form())
    throw RangeError("restriction of a zero-form identity is not defined; expand it first");
  TermPtr z = var(fresh_name(e, "z"));
  return make_identity(concat({e.lhs, z}), concat({e.rhs, z}));
}

Identity malcev_split(const Identity& e, int k) {
  if (k < 1) throw RangeError("split width must be >= 1");
  TermPtr lhs = e.lhs;
  TermPtr rhs = e.rhs;
  std::vector<std::string> taken = e.variables;
  auto free_name = [&taken](const std::string& cand) {
    return std::find(taken.begin(), taken.end(), cand) == taken.end();
  };
  for (const auto& v : e.variables) {
    std::vector<TermPtr> parts;
    for (int i = 1; i <= k; ++i) {
      std::string name = v + std::to_string(i);
      while (!free_name(name)) name += "_";
      taken.push_back(name);
      parts.push_back(var(name));
    }
    TermPtr repl = concat(std::move(parts));
    lhs = substitute(lhs, v, repl);
    if (rhs) rhs = substitute(rhs, v, repl);
  }
  return rhs ? make_identity(lhs, rhs) : make_zero_identity(lhs);
}

int evaluate(const TermPtr& t, const CayleyTable& S, const Assignment& a) {
  if (!t) throw RangeError("null term");
  switch (t->kind) {
    case OmegaTerm::Kind::Var: {
      auto it = a.find(t->name);
      if (it == a.end())
        throw UnboundVariableError("variable " + t->name + " is not assigned");
      if (it->second < 0 || it->second >= S.order)
        throw RangeError("assignment of " + t->name + " out of range");
      return it->second;
    }
    case OmegaTerm::Kind::Concat: {
      int acc = evaluate(t->parts[0], S, a);
      for (std::size_t i = 1; i < t->parts.size(); ++i)
        acc = S.at(acc, evaluate(t->parts[i], S, a));
      return acc;
    }
    case OmegaTerm::Kind::Power: {
      int b = evaluate(t->base, S, a);
      return omega_plus(S, b, t->power_offset);
    }
  }
  throw Error("unreachable term kind");
}

namespace {

// Odometer sweep over all |S|^n assignments of the given variables.
CheckResult check_two_sided(const CayleyTable& S, const Identity& e,
                            std::uint64_t max_assignments) {
  const auto& vars = e.variables;
  const int n = static_cast<int>(vars.size());
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(S.order);
    if (total > max_assignments)
      throw CostGuardError("identity over " + std::to_string(n) +
                           " variables on order " + std::to_string(S.order) +
                           " exceeds the assignment budget");
  }
  std::vector<int> values(n, 0);
  Assignment a;
  CheckResult res;
  for (;;) {
    for (int i = 0; i < n; ++i) a[vars[i]] = values[i];
    if (evaluate(e.lhs, S, a) != evaluate(e.rhs, S, a)) {
      res.holds = false;
      res.witness = a;
      return res;
    }
    int i = n - 1;
    while (i >= 0 && values[i] == S.order - 1) values[i--] = 0;
    if (i < 0) break;
    ++values[i];
  }
  res.holds = true;
  return res;
}

}  // namespace

CheckResult satisfies(const CayleyTable& S, const Identity& e,
                      std::uint64_t max_assignments) {
  if (!e.zero_form()) return check_two_sided(S, e, max_assignments);
  for (const Identity& part : expand_zero(e)) {
    CheckResult r = check_two_sided(S, part, max_assignments);
    if (!r.holds) return r;
  }
  return CheckResult{true, {}};
}

bool satisfies_all(const CayleyTable& S, const std::vector<Identity>& ids) {
  for (const auto& e : ids)
    if (!satisfies(S, e).holds) return false;
  return true;
}

std::vector<Identity> parse_identity_lines(const std::string& text) {
  std::vector<Identity> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    bool blank = std::all_of(line.begin(), line.end(),
                             [](unsigned char c) { return std::isspace(c); });
    if (blank) continue;
    Identity e = parse_identity(line);
    if (e.zero_form()) {
      for (auto& part : expand_zero(e)) out.push_back(std::move(part));
    } else {
      out.push_back(std::move(e));
    }
  }
  return out;
}

std::vector<Identity> load_identity_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open identity file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_identity_lines(buf.str());
}

}  // namespace sgw
