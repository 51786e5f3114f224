#include <doctest.h>

#include "hyperlog/semantics.hpp"

using namespace hyperlog;

namespace {
Valuation q_model(std::initializer_list<std::pair<const char*, const char*>> xs) {
  Valuation v;
  for (auto [k, x] : xs) v.set(k, Rational(x));
  return v;
}
Valuation l_model(std::initializer_list<std::pair<const char*, const char*>> xs) {
  Valuation v = q_model(xs);
  v.model = Model::UnitIntervalL;
  return v;
}
}  // namespace

TEST_CASE("eval_a") {
  Valuation v = q_model({{"p", "3/2"}, {"q", "1"}});
  CHECK(eval_a(parse_formula("p -> q", Dialect::Abelian), v) == Rational(-1, 2));
  CHECK(eval_a(parse_formula("p -> p", Dialect::Abelian), v) == 0);
  CHECK(eval_a(parse_formula("(p + -q) /\\ t", Dialect::Abelian), v) == 0);
  Valuation w = q_model({{"p", "-1"}, {"q", "0"}});
  CHECK(eval_a(parse_formula("p => q", Dialect::Abelian), w) == 0);
}

TEST_CASE("eval_l") {
  Valuation v = l_model({{"p", "-1/2"}, {"q", "-3/4"}});
  CHECK(eval_l(Formula::bot(), v) == -1);
  CHECK(eval_l(parse_formula("p => p", Dialect::Lukasiewicz), v) == 0);
  CHECK(eval_l(parse_formula("p o+ q", Dialect::Lukasiewicz), v) == Rational(-1, 4));
  CHECK(eval_l(parse_formula("p /\\ q", Dialect::Lukasiewicz), v) == Rational(-3, 4));
  CHECK(eval_l(parse_formula("~p", Dialect::Lukasiewicz), v) == Rational(-1, 2));
}

TEST_CASE("eval rejects values outside [-1,0] in the unit interval model") {
  Valuation v = l_model({{"p", "1/2"}});
  CHECK_THROWS_AS(eval_l(Formula::var("p"), v), EvalError);
}

TEST_CASE("holds_component") {
  Formula a = Formula::var("A"), b = Formula::var("B"), p = Formula::var("p"), q = Formula::var("q");
  Valuation v = q_model({{"A", "7"}, {"B", "-2"}, {"p", "-1"}});
  CHECK(holds_component(ms_make({a, b}), ms_make({a, b}), v));
  CHECK(holds_component(ms_make({p}), {}, v));
  Valuation w = q_model({{"p", "-3/2"}, {"q", "-1"}});
  CHECK_FALSE(holds_component(ms_make({p}), ms_make({q, q}), w));
}

TEST_CASE("random_refute") {
  Hypersequent np = parse_hypersequent("|- p", Dialect::Abelian);
  auto v = random_refute(np, Model::Q, 100, 1);
  REQUIRE(v);
  CHECK(v->at("p") < 0);
  CHECK_FALSE(random_refute(parse_hypersequent("|- p -> p", Dialect::Abelian), Model::Q, 100, 1));
  auto b = random_refute(parse_hypersequent("|- bot", Dialect::Lukasiewicz), Model::UnitIntervalL, 10, 1);
  REQUIRE(b);
  CHECK_FALSE(holds(parse_hypersequent("|- bot", Dialect::Lukasiewicz), *b));
}
