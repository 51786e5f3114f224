#include <doctest.h>

#include "hyperlog/hyper.hpp"
#include "hyperlog/translate.hpp"

using namespace hyperlog;

namespace {

Formula pl(const char* s) { return parse_formula(s, Dialect::Lukasiewicz); }
Formula reserved(const char* s) { return parse_formula(s, Dialect::Abelian, {true}); }

bool ga_valid(const Formula& f) { return prove_ga(Hypersequent{Sequent({}, {f})}).valid; }
bool gl_valid(const Formula& f) { return prove_gl(Hypersequent{Sequent({}, {f})}).valid; }

}  // namespace

TEST_CASE("star") {
  CHECK(star(Formula::bot()) == reserved("$qbot /\\ t"));
  CHECK(star(pl("p => p")) == reserved("t /\\ ((p \\/ $qbot) /\\ t -> (p \\/ $qbot) /\\ t)"));
  Hypersequent g = parse_hypersequent("p |- q", Dialect::Lukasiewicz);
  Hypersequent s = star(g);
  REQUIRE(s.size() == 1);
  CHECK(s.components[0].left == Multiset{star(Formula::var("p"))});
  CHECK(s.components[0].right == Multiset{star(Formula::var("q"))});
}

TEST_CASE("material") {
  CHECK(material(pl("bot .> p")) == reserved("t /\\ $mbot -> $mbot \\/ p"));
  CHECK(ga_valid(material(pl("p .> (q .> p)"))));
  CHECK(material(pl("p")) == Formula::var("p"));
  CHECK_FALSE(ga_valid(material(pl("p"))));
  CHECK_THROWS_AS(material(pl("p =>> q")), DialectError);
}

TEST_CASE("enthymematic") {
  CHECK(enthymematic(parse_formula("t", Dialect::Abelian)) == Formula::top());
  CHECK(ga_valid(enthymematic(parse_formula("t", Dialect::Abelian))));
  CHECK(ga_valid(enthymematic(pl("(p =>> q) \\/ (q =>> p)"))));
  CHECK(enthymematic(pl("p =>> p")) == parse_formula("t /\\ p -> p", Dialect::Abelian));
  CHECK_THROWS_AS(enthymematic(pl("p => bot")), DialectError);
}

TEST_CASE("star preserves verdicts") {
  for (const char* s : {"((p => q) => q) => ((q => p) => p)", "p \\/ (p => bot)", "bot => p", "p => q => p",
                        "(p => q) \\/ (q => p)", "~~p => p", "p o+ ~p", "p /\\ q => p \\/ bot"}) {
    Formula f = pl(s);
    CHECK_MESSAGE(gl_valid(f) == ga_valid(star(f)), s);
  }
}

TEST_CASE("countermodel transfer") {
  Formula f = pl("p \\/ (p => bot)");
  Verdict a = prove_ga(Hypersequent{Sequent({}, {star(f)})});
  REQUIRE_FALSE(a.valid);
  auto v = transfer_countermodel(*a.countermodel);
  REQUIRE(v);
  CHECK(v->model == Model::UnitIntervalL);
  CHECK(eval_l(f, *v) < 0);

  Valuation nonneg;
  nonneg.set(std::string(kQBot), 1);
  CHECK_FALSE(transfer_countermodel(nonneg));
}
