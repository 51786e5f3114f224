#include <doctest.h>

#include "hyperlog/structures.hpp"

using namespace hyperlog;

namespace {
Formula pa(const char* s) { return parse_formula(s, Dialect::Abelian); }
Formula pl(const char* s) { return parse_formula(s, Dialect::Lukasiewicz); }
}  // namespace

TEST_CASE("parse prelinearity") {
  Formula f = pa("(A -> B) \\/ (B -> A)");
  Formula a = Formula::var("A"), b = Formula::var("B");
  CHECK(f == lor(arrow(a, b), arrow(b, a)));
  CHECK(pa("t").is(Kind::Top));
}

TEST_CASE("positive implication is right-associative") {
  Formula p = Formula::var("p"), q = Formula::var("q"), r = Formula::var("r");
  CHECK(pl("p => q => r") == imp(p, imp(q, r)));
}

TEST_CASE("render") {
  Formula p = Formula::var("p"), q = Formula::var("q");
  CHECK(render_formula(arrow(p, q)) == "p -> q");
  CHECK(render_formula(imp(p, Formula::bot())) == "p => bot");
  CHECK(render_formula(plus(p, neg(q))) == "p + -q");
}

TEST_CASE("render/parse round trip") {
  for (const char* s : {"(p -> q) -> r", "p -> q -> r", "-(p + q) /\\ t", "p \\/ q /\\ r", "p \\/ (q /\\ r)",
                        "--p + -(q -> p)"}) {
    Formula f = pa(s);
    CHECK(pa(render_formula(f).c_str()) == f);
  }
  for (const char* s : {"(p => q) => bot", "~p o+ q", "p .> (q =>> p)", "p <-> q"}) {
    Formula f = pl(s);
    CHECK(pl(render_formula(f).c_str()) == f);
  }
}

TEST_CASE("normalize into the primitive connectives") {
  Formula p = Formula::var("p"), q = Formula::var("q");
  Formula bot = Formula::bot();
  CHECK(normalize(pl("~p"), CalculusId::GL) == imp(p, bot));
  CHECK(normalize(pl("p o+ q"), CalculusId::GL) == imp(imp(p, bot), q));
  CHECK(normalize(pa("p -> q"), CalculusId::GA) == arrow(p, q));
}

TEST_CASE("dialect checks") {
  CHECK_THROWS_AS(parse_formula("~p", Dialect::Abelian), SyntaxError);
  CHECK_THROWS_AS(parse_formula("p + q", Dialect::Lukasiewicz), SyntaxError);
  CHECK_THROWS_AS(check_dialect(tilde(Formula::var("p")), Dialect::Abelian), DialectError);
  CHECK_THROWS_AS(check_dialect(plus(Formula::var("p"), Formula::var("q")), Dialect::Lukasiewicz), DialectError);
  CHECK(in_dialect(pa("(p => q) /\\ t"), Dialect::Abelian));
}

TEST_CASE("syntax errors carry a position") {
  try {
    pa("p -> ");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.position() >= 4);
  }
  CHECK_THROWS_AS(pa("(p"), SyntaxError);
  CHECK_THROWS_AS(pa("p q"), SyntaxError);
}

TEST_CASE("reserved names are rejected in user input") {
  CHECK_THROWS(pa("$qbot"));
  CHECK_NOTHROW(parse_formula("$qbot", Dialect::Abelian, {true}));
}

TEST_CASE("hypersequents") {
  Hypersequent g = parse_hypersequent("A, B |- A, B", Dialect::Abelian);
  REQUIRE(g.size() == 1);
  CHECK(g.components[0].left.size() == 2);
  CHECK(g.components[0].right.size() == 2);

  Hypersequent e = parse_hypersequent("|-", Dialect::Abelian);
  REQUIRE(e.size() == 1);
  CHECK(e.components[0].empty());

  CHECK(parse_hypersequent("p |- q | q |- p", Dialect::Abelian).size() == 2);
}

TEST_CASE("focused and labelled sequents round trip") {
  FocusedHypersequent fg = parse_focused("[p] p, p |- | |- p", Dialect::Abelian);
  CHECK(fg.focus == "p");
  CHECK(parse_focused(render(fg), Dialect::Abelian) == fg);

  LabelledSequent s = parse_labelled("x.y:r, 1:p || q => p |- x:p, 1:q", Dialect::Abelian);
  CHECK(s.store.size() == 1);
  CHECK(s.atomic_labels() == std::vector<std::string>{"x", "y"});
  CHECK(parse_labelled(render(s), Dialect::Abelian) == s);
}
