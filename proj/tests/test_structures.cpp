#include <doctest.h>

#include "hyperlog/structures.hpp"

using namespace hyperlog;

namespace {
Formula pa(const char* s) { return parse_formula(s, Dialect::Abelian); }
}  // namespace

TEST_CASE("multiset operations") {
  Formula p = Formula::var("p"), q = Formula::var("q");
  Multiset a = ms_make({q, p, p});
  CHECK(count(a, p) == 2);
  CHECK(ms_sum(a, ms_make({q})) == ms_make({p, p, q, q}));
  CHECK(ms_diff(a, ms_make({p})) == ms_make({p, q}));
  CHECK(ms_scale(ms_make({p, q}), 3).size() == 6);
  CHECK(ms_includes(a, ms_make({p, q})));
  CHECK_FALSE(ms_includes(a, ms_make({q, q})));
  CHECK_THROWS_AS(ms_erase_one(a, Formula::var("r")), std::logic_error);
}

TEST_CASE("hypersequent components are kept sorted") {
  Hypersequent g = parse_hypersequent("q |- p | p |- q", Dialect::Abelian);
  Hypersequent h = parse_hypersequent("p |- q | q |- p", Dialect::Abelian);
  CHECK(g == h);
  CHECK(g.without(0).size() == 1);
}

TEST_CASE("complexity") {
  CHECK(complexity_cp(pa("p")) == 0);
  CHECK(complexity_cp(pa("p -> q")) == 1);
  CHECK(complexity_cp(pa("(p -> q) /\\ t")) == 2);
  CHECK(complexity_cp(Formula::bot()) == 0);
}

TEST_CASE("multiset complexity") {
  using V = std::vector<std::size_t>;
  CHECK(multiset_complexity_mc(parse_hypersequent("A, B |- A, B", Dialect::Abelian)) == V{0, 0, 0, 0});
  CHECK(multiset_complexity_mc(parse_hypersequent("|- p -> q", Dialect::Abelian)) == V{1});
  CHECK(multiset_complexity_mc(parse_hypersequent("p |- | |- q", Dialect::Abelian)) == V{0, 0});
}

TEST_CASE("multiset ordering") {
  using V = std::vector<std::size_t>;
  CHECK(multiset_less(V{}, V{0}));
  CHECK(multiset_less(V{1, 1, 1}, V{2}));
  CHECK_FALSE(multiset_less(V{2}, V{2}));
  CHECK_FALSE(multiset_less(V{2}, V{1, 1, 1}));
  CHECK(multiset_less(V{0, 3}, V{1, 3}));
}

TEST_CASE("d-measure") {
  CHECK(d_measure(parse_focused("[p] p, p |- | |- p", Dialect::Abelian)) == 3);
  CHECK(d_measure(parse_focused("[p] p |- p", Dialect::Abelian)) == 0);
  CHECK(d_measure(parse_focused("[q] p |-", Dialect::Abelian)) == 0);
}

TEST_CASE("labelling functions") {
  LabelledSequent s = parse_labelled("x:p, 1:q |- 1:p, x:q", Dialect::Abelian);
  CHECK(apply_labelling({{"x", false}}, s) == parse_sequent("q |- p", Dialect::Abelian));
  CHECK(apply_labelling({{"x", true}}, s) == parse_sequent("p, q |- p, q", Dialect::Abelian));
  CHECK_THROWS_AS(apply_labelling({}, s), std::invalid_argument);

  Sequent plain = parse_sequent("p -> q, r |- q", Dialect::Abelian);
  CHECK(apply_labelling({}, LabelledSequent::lift(plain)) == plain);
}

TEST_CASE("label trees") {
  LabelTree t;
  t.add("x", "");
  t.add("y", "x");
  t.add("z", "");
  CHECK(t.is_path(Label{{"x", "y"}}));
  CHECK(t.is_path(Label::unit()));
  CHECK_FALSE(t.is_path(Label{{"y"}}));
  CHECK_FALSE(t.is_path(Label{{"x", "z"}}));
  CHECK(t.children("").size() == 2);
}
