#include "sgw/terms.hpp"

#include <cctype>
#include <sstream>

namespace sgw {

TermPtr var(std::string name) {
  if (name.empty()) throw RangeError("variable name must be nonempty");
  auto t = std::make_shared<OmegaTerm>();
  t->kind = OmegaTerm::Kind::Var;
  t->name = std::move(name);
  return t;
}

TermPtr concat(std::vector<TermPtr> parts) {
  std::vector<TermPtr> flat;
  flat.reserve(parts.size());
  for (auto& p : parts) {
    if (!p) throw RangeError("null part in concatenation");
    if (p->kind == OmegaTerm::Kind::Concat)
      flat.insert(flat.end(), p->parts.begin(), p->parts.end());
    else
      flat.push_back(std::move(p));
  }
  if (flat.empty()) throw RangeError("empty concatenation");
  if (flat.size() == 1) return flat[0];
  auto t = std::make_shared<OmegaTerm>();
  t->kind = OmegaTerm::Kind::Concat;
  t->parts = std::move(flat);
  return t;
}

TermPtr power(TermPtr base, int offset) {
  if (!base) throw RangeError("null power base");
  if (offset < 0) throw RangeError("omega power offset must be >= 0");
  auto t = std::make_shared<OmegaTerm>();
  t->kind = OmegaTerm::Kind::Power;
  t->base = std::move(base);
  t->power_offset = offset;
  return t;
}

bool term_equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->kind != b->kind) return false;
  switch (a->kind) {
    case OmegaTerm::Kind::Var:
      return a->name == b->name;
    case OmegaTerm::Kind::Concat: {
      if (a->parts.size() != b->parts.size()) return false;
      for (std::size_t i = 0; i < a->parts.size(); ++i)
        if (!term_equal(a->parts[i], b->parts[i])) return false;
      return true;
    }
    case OmegaTerm::Kind::Power:
      return a->power_offset == b->power_offset && term_equal(a->base, b->base);
  }
  return false;
}

namespace {

void profile_walk(const TermPtr& t, bool under_power, TermProfile& out) {
  switch (t->kind) {
    case OmegaTerm::Kind::Var: {
      auto& m = out.multiplicity[t->name];
      int c = (m == Multiplicity::Zero ? 0 : m == Multiplicity::One ? 1 : 2);
      c += under_power ? 2 : 1;
      m = c >= 2 ? Multiplicity::Many : Multiplicity::One;
      return;
    }
    case OmegaTerm::Kind::Concat:
      for (const auto& p : t->parts) profile_walk(p, under_power, out);
      return;
    case OmegaTerm::Kind::Power:
      profile_walk(t->base, true, out);
      return;
  }
}

std::optional<std::uint64_t> length_of(const TermPtr& t) {
  switch (t->kind) {
    case OmegaTerm::Kind::Var:
      return 1;
    case OmegaTerm::Kind::Concat: {
      std::uint64_t sum = 0;
      for (const auto& p : t->parts) {
        auto l = length_of(p);
        if (!l) return std::nullopt;
        sum += *l;
      }
      return sum;
    }
    case OmegaTerm::Kind::Power:
      return std::nullopt;
  }
  return std::nullopt;
}

const std::string& first_var(const TermPtr& t) {
  const OmegaTerm* p = t.get();
  while (p->kind != OmegaTerm::Kind::Var)
    p = (p->kind == OmegaTerm::Kind::Concat ? p->parts.front() : p->base).get();
  return p->name;
}

const std::string& last_var(const TermPtr& t) {
  const OmegaTerm* p = t.get();
  while (p->kind != OmegaTerm::Kind::Var)
    p = (p->kind == OmegaTerm::Kind::Concat ? p->parts.back() : p->base).get();
  return p->name;
}

}  // namespace

TermProfile profile(const TermPtr& t) {
  if (!t) throw RangeError("null term");
  TermProfile out;
  profile_walk(t, false, out);
  for (const auto& [v, m] : out.multiplicity) {
    (void)m;
    out.content.insert(v);
  }
  out.length = length_of(t);
  out.first = first_var(t);
  out.last = last_var(t);
  return out;
}

TermPtr substitute(const TermPtr& t, const std::string& v, const TermPtr& s) {
  if (!t || !s) throw RangeError("null term");
  switch (t->kind) {
    case OmegaTerm::Kind::Var:
      return t->name == v ? s : t;
    case OmegaTerm::Kind::Concat: {
      std::vector<TermPtr> parts;
      parts.reserve(t->parts.size());
      bool changed = false;
      for (const auto& p : t->parts) {
        parts.push_back(substitute(p, v, s));
        changed = changed || parts.back() != p;
      }
      return changed ? concat(std::move(parts)) : t;
    }
    case OmegaTerm::Kind::Power: {
      TermPtr base = substitute(t->base, v, s);
      return base == t->base ? t : power(base, t->power_offset);
    }
  }
  return t;
}

TermPtr unroll(const TermPtr& power_node, Side side) {
  if (!power_node || power_node->kind != OmegaTerm::Kind::Power)
    throw RangeError("unroll expects a Power node");
  const int k = power_node->power_offset;
  if (k == 0) return power_node;
  std::vector<TermPtr> parts;
  if (side == Side::Right) parts.push_back(power(power_node->base, 0));
  for (int c = 0; c < k; ++c) parts.push_back(power_node->base);
  if (side == Side::Left) parts.push_back(power(power_node->base, 0));
  return concat(std::move(parts));
}

namespace {

void print_rec(const TermPtr& t, std::ostringstream& out) {
  switch (t->kind) {
    case OmegaTerm::Kind::Var:
      out << t->name;
      return;
    case OmegaTerm::Kind::Concat: {
      bool first = true;
      for (const auto& p : t->parts) {
        if (!first) out << ' ';
        first = false;
        print_rec(p, out);
      }
      return;
    }
    case OmegaTerm::Kind::Power: {
      if (t->base->kind == OmegaTerm::Kind::Var) {
        out << t->base->name;
      } else {
        out << '(';
        print_rec(t->base, out);
        out << ')';
      }
      if (t->power_offset == 0)
        out << "^w";
      else
        out << "^(w+" << t->power_offset << ")";
      return;
    }
  }
}

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_space();
    return pos >= text.size();
  }

  char peek() {
    skip_space();
    return pos < text.size() ? text[pos] : '\0';
  }

  bool ident_start(char c) {
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string read_ident() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      ++pos;
    return text.substr(start, pos - start);
  }

  long read_int() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw SyntaxError(pos, "expected an integer");
    return std::stol(text.substr(start, pos - start));
  }

  void expect(char c) {
    if (peek() != c)
      throw SyntaxError(pos, std::string("expected '") + c + "'");
    ++pos;
  }
};

struct Parser {
  Lexer lex;

  explicit Parser(const std::string& t) : lex(t) {}

  TermPtr parse_atom() {
    char c = lex.peek();
    if (c == '(') {
      ++lex.pos;
      TermPtr t = parse_concat();
      lex.expect(')');
      return t;
    }
    if (lex.ident_start(c)) return var(lex.read_ident());
    throw SyntaxError(lex.pos, "expected a variable or '('");
  }

  TermPtr parse_factor() {
    TermPtr t = parse_atom();
    while (lex.peek() == '^') {
      ++lex.pos;
      t = apply_exponent(t);
    }
    return t;
  }

  TermPtr apply_exponent(TermPtr base) {
    char c = lex.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = lex.pos;
      long n = lex.read_int();
      if (n < 1) throw SyntaxError(at, "finite power must be >= 1");
      if (n == 1) return base;
      std::vector<TermPtr> copies(static_cast<std::size_t>(n), base);
      return concat(std::move(copies));
    }
    if (lex.ident_start(c)) {
      std::size_t at = lex.pos;
      std::string id = lex.read_ident();
      if (id != "w")
        throw SyntaxError(at, "expected w, an integer, or (w+k) after '^'");
      return power(std::move(base), 0);
    }
    if (c == '(') {
      ++lex.pos;
      std::size_t at = lex.pos;
      std::string id = lex.read_ident();
      if (id != "w") throw SyntaxError(at, "expected w inside exponent parentheses");
      int offset = 0;
      if (lex.peek() == '+') {
        ++lex.pos;
        std::size_t ip = lex.pos;
        long k = lex.read_int();
        if (k < 0) throw SyntaxError(ip, "omega offset must be >= 0");
        offset = static_cast<int>(k);
      }
      lex.expect(')');
      return power(std::move(base), offset);
    }
    throw SyntaxError(lex.pos, "expected w, an integer, or (w+k) after '^'");
  }

  TermPtr parse_concat() {
    std::vector<TermPtr> parts;
    parts.push_back(parse_factor());
    for (;;) {
      char c = lex.peek();
      if (c == '*') {
        ++lex.pos;
        parts.push_back(parse_factor());
      } else if (c == '(' || lex.ident_start(c)) {
        parts.push_back(parse_factor());
      } else {
        break;
      }
    }
    return concat(std::move(parts));
  }

  TermPtr parse_whole() {
    if (lex.at_end()) throw SyntaxError(lex.pos, "empty term");
    TermPtr t = parse_concat();
    if (!lex.at_end()) throw SyntaxError(lex.pos, "unexpected trailing input");
    return t;
  }
};

}  // namespace

std::string print_term(const TermPtr& t) {
  if (!t) throw RangeError("null term");
  std::ostringstream out;
  print_rec(t, out);
  return out.str();
}

TermPtr parse_term(const std::string& text) {
  Parser p(text);
  return p.parse_whole();
}

}  // namespace sgw
