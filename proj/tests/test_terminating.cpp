#include <doctest.h>

#include "hyperlog/hyper.hpp"
#include "hyperlog/terminating.hpp"

using namespace hyperlog;

namespace {

FocusedHypersequent fa(const char* s) { return parse_focused(s, Dialect::Abelian); }
FocusedHypersequent fl(const char* s) { return parse_focused(s, Dialect::Lukasiewicz); }

// Index of the component holding the focus on its left.
std::size_t left_index(const FocusedHypersequent& g) {
  return count(g.body.components[0].left, Formula::var(g.focus)) > 0 ? 0 : 1;
}

bool has_rule(const ProofTree& t, const std::string& rule) {
  if (t.rule == rule) return true;
  for (const auto& p : t.premises)
    if (has_rule(p, rule)) return true;
  return false;
}

}  // namespace

TEST_CASE("GA_t example with an S' step") {
  SearchStats stats;
  SearchOptions opts;
  opts.stats = &stats;
  Verdict v = prove_ga_t(fa("[q] |- ((q + q + q) /\\ (p + p + p)) -> (p + q + q)"), opts);
  REQUIRE(v.valid);
  CHECK(check_proof(*v.proof, CalculusId::GA_t));
  CHECK(has_rule(*v.proof, "S'"));
  CHECK(stats.sprime_d_violations == 0);
}

TEST_CASE("GA_t refutes and identifies") {
  Verdict v = prove_ga_t(fa("[p] |- p"));
  REQUIRE_FALSE(v.valid);
  CHECK(v.countermodel->at("p") < 0);
  Verdict id = prove_ga_t(fa("[p] p |- p"));
  REQUIRE(id.valid);
  CHECK(check_proof(*id.proof, CalculusId::GA_t));
}

TEST_CASE("S' application") {
  FocusedHypersequent pp = fa("[p] p |- | |- p");
  std::size_t l = left_index(pp);
  FocusedHypersequent out = apply_s_prime(pp, l, 1 - l, Keep::First);
  CHECK(out.focus == "p");
  CHECK(d_measure(out) < d_measure(pp));

  FocusedHypersequent g = fa("[q] q |- p | p, p |- q, q");
  std::size_t i = left_index(g);
  FocusedHypersequent k = apply_s_prime(g, i, 1 - i, Keep::Second);
  CHECK(d_measure(k) < d_measure(g));
  CHECK_THROWS_AS(apply_s_prime(fa("[p] p |- p | |- p"), 0, 1, Keep::First), std::invalid_argument);
}

TEST_CASE("GL_t") {
  Verdict v = prove_gl_t(fl("[p] |- ((p => q) => q) => ((q => p) => p)"));
  REQUIRE(v.valid);
  CHECK(check_proof(*v.proof, CalculusId::GL_t));
  Verdict b = prove_gl_t(fl("[p] bot |- p"));
  REQUIRE(b.valid);
  CHECK(check_proof(*b.proof, CalculusId::GL_t));
  Verdict e = prove_gl_t(fl("[p] |- p \\/ (p => bot)"));
  REQUIRE_FALSE(e.valid);
  CHECK_FALSE(holds(fl("[p] |- p \\/ (p => bot)").body, *e.countermodel));
}

TEST_CASE("constants reach the atomic stage") {
  Verdict v = prove_ga_t(fa("[q] |- (t \\/ t /\\ t) + q"));
  REQUIRE_FALSE(v.valid);
  CHECK_FALSE(holds(fa("[q] |- (t \\/ t /\\ t) + q").body, *v.countermodel));
}

TEST_CASE("measures") {
  TerminationMeasure a = termination_measure(fa("[p] |- p -> p"));
  TerminationMeasure b = termination_measure(fa("[p] p |- p"));
  CHECK(measure_less(b, a));
  CHECK_FALSE(measure_less(a, a));
  CHECK(component_measure_less(fa("[p] p |- p"), fa("[p] |- p -> p")));
  CHECK(default_focus(parse_hypersequent("|- r -> q", Dialect::Abelian)) == "q");
  CHECK(default_focus(parse_hypersequent("|- t", Dialect::Abelian)) == "p");
}

TEST_CASE("randomized principal order keeps the verdict") {
  const char* goal = "[p] |- (p -> q) \\/ (q -> p) \\/ (p + p -> q)";
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    SearchOptions opts;
    opts.shuffle_seed = seed;
    Verdict v = prove_ga_t(fa(goal), opts);
    REQUIRE(v.valid);
    CHECK(check_proof(*v.proof, CalculusId::GA_t));
  }
}
