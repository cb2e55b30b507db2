#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "sgw/terms.hpp"

using namespace sgw;

TEST_CASE("parse and print round-trip") {
  for (const char* text : {"x", "x y x", "x^w", "x^(w+3)", "(x y)^(w+1) z",
                           "longname other_1", "(x^w y)^(w+2)"}) {
    TermPtr t = parse_term(text);
    CHECK(print_term(t) == text);
    CHECK(term_equal(parse_term(print_term(t)), t));
  }
}

TEST_CASE("finite powers desugar to repetition") {
  CHECK(print_term(parse_term("x^3")) == "x x x");
  CHECK(print_term(parse_term("x^1")) == "x");
  CHECK(print_term(parse_term("(x y)^2")) == "x y x y");
  CHECK(print_term(parse_term("x^2 y")) == "x x y");
}

TEST_CASE("star is juxtaposition") {
  CHECK(term_equal(parse_term("x*y*x"), parse_term("x y x")));
  CHECK(term_equal(parse_term("x * y^w"), parse_term("x y^w")));
}

TEST_CASE("identifiers are maximal munch") {
  TermPtr t = parse_term("xy");
  CHECK(t->kind == OmegaTerm::Kind::Var);
  CHECK(t->name == "xy");
  TermPtr u = parse_term("x y");
  CHECK(u->kind == OmegaTerm::Kind::Concat);
  CHECK(u->parts.size() == 2);
}

TEST_CASE("concat flattens and collapses") {
  TermPtr t = concat({concat({var("x"), var("y")}), var("z")});
  CHECK(t->parts.size() == 3);
  TermPtr s = concat({var("x")});
  CHECK(s->kind == OmegaTerm::Kind::Var);
  CHECK_THROWS_AS(concat({}), RangeError);
}

TEST_CASE("syntax errors carry a position") {
  struct Case {
    const char* text;
    int pos;
  };
  for (Case c : {Case{"", 0}, Case{"x ^", 3}, Case{"x^0", 2}, Case{"(x y", 4},
                 Case{"x)", 1}, Case{"x^(w+", 5}, Case{"x^(3)", 3},
                 Case{"^w", 0}, Case{"x y = z", 4}}) {
    try {
      parse_term(c.text);
      FAIL("expected SyntaxError for: ", c.text);
    } catch (const SyntaxError& e) {
      CHECK_MESSAGE(e.pos == c.pos, c.text, " reported pos ", e.pos);
    }
  }
}

TEST_CASE("profile tracks content, length, ends, multiplicity") {
  TermProfile p = profile(parse_term("x y x"));
  CHECK(p.content == std::set<std::string>{"x", "y"});
  CHECK(p.length == 3);
  CHECK(p.first == "x");
  CHECK(p.last == "x");
  CHECK(p.of("x") == Multiplicity::Many);
  CHECK(p.of("y") == Multiplicity::One);
  CHECK(p.of("z") == Multiplicity::Zero);

  TermProfile q = profile(parse_term("x^w y"));
  CHECK(!q.length);
  CHECK(q.first == "x");
  CHECK(q.last == "y");
  CHECK(q.of("x") == Multiplicity::Many);

  TermProfile r = profile(parse_term("(x y)^(w+1)"));
  CHECK(r.first == "x");
  CHECK(r.last == "y");
  CHECK(!r.length);
}

TEST_CASE("substitute replaces whole variables") {
  TermPtr t = parse_term("x y x");
  TermPtr s = substitute(t, "x", parse_term("a b"));
  CHECK(print_term(s) == "a b y a b");
  TermPtr u = substitute(parse_term("x^w"), "x", parse_term("y z"));
  CHECK(print_term(u) == "(y z)^w");
  CHECK(print_term(substitute(t, "q", var("r"))) == "x y x");
}

TEST_CASE("unroll peels the offset copies off an omega power") {
  TermPtr t = parse_term("x^(w+2)");
  CHECK(print_term(unroll(t, Side::Left)) == "x x x^w");
  CHECK(print_term(unroll(t, Side::Right)) == "x^w x x");
  CHECK(print_term(unroll(parse_term("x^w"), Side::Left)) == "x^w");
  CHECK(print_term(unroll(parse_term("(x y)^(w+1)"), Side::Left)) ==
        "x y (x y)^w");
  CHECK_THROWS_AS(unroll(parse_term("x y"), Side::Left), RangeError);
}

TEST_CASE("print parenthesizes compound power bases only") {
  CHECK(print_term(power(var("x"), 0)) == "x^w");
  CHECK(print_term(power(concat({var("x"), var("y")}), 1)) == "(x y)^(w+1)");
}
