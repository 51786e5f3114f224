#include <doctest.h>

#include <random>

#include "hyperlog/hyper.hpp"
#include "hyperlog/labelled.hpp"
#include "oracles.hpp"

using namespace hyperlog;

namespace {

Sequent sa(const char* s) { return parse_sequent(s, Dialect::Abelian); }
Sequent sl(const char* s) { return parse_sequent(s, Dialect::Lukasiewicz); }
LabelledSequent la(const char* s) { return parse_labelled(s, Dialect::Abelian); }

LabelledInequation ineq(const char* left_right) {
  LabelledSequent s = la(left_right);
  return {s.left, s.right, Rel::Gt};
}

std::size_t max_functions(const ProofTree& t) {
  std::size_t best = 0;
  if (t.rule == "success" && t.certificate.is_object() && t.certificate.contains("functions"))
    best = t.certificate["functions"].size();
  for (const auto& p : t.premises) best = std::max(best, max_functions(p));
  return best;
}

}  // namespace

TEST_CASE("GA_l example needing two labelling functions") {
  Sequent goal = sa("|- (p => (p => r)) => ((q => (q => r)) => (p => (q => r)))");
  Verdict v = prove_ga_l(goal);
  REQUIRE(v.valid);
  CHECK(check_proof(*v.proof, CalculusId::GA_l));
  CHECK(max_functions(*v.proof) >= 2);
}

TEST_CASE("GA_l refutes and identifies") {
  Verdict v = prove_ga_l(sa("|- p"));
  REQUIRE_FALSE(v.valid);
  CHECK(v.countermodel->at("p") < 0);
  Verdict id = prove_ga_l(sa("A |- A"));
  REQUIRE(id.valid);
  CHECK(check_proof(*id.proof, CalculusId::GA_l));
}

TEST_CASE("success with two functions") {
  LabelledSequent s = la("x.y:r, z.w:r, 1:p, 1:q |- 1:r, x:p, x.y:p, z:q, z.w:q");
  SuccessResult r = success_check(s, Dialect::Abelian);
  REQUIRE(r.success);
  CHECK(r.functions.size() >= 2);
  CHECK(certificate_holds(s, r.functions, Dialect::Abelian));

  CHECK(success_check(la("1:p |- 1:p"), Dialect::Abelian).success);
  SuccessResult f = success_check(la("1:p |- 1:q"), Dialect::Abelian);
  REQUIRE_FALSE(f.success);
  REQUIRE(f.countermodel);
  CHECK(f.countermodel->at("p") > f.countermodel->at("q"));
}

TEST_CASE("a wrong certificate is rejected") {
  LabelledSequent s = la("x:p |- 1:p");
  CHECK_FALSE(certificate_holds(s, {{{{"x", false}}, 1}}, Dialect::Abelian));
  CHECK(certificate_holds(s, {{{{"x", true}}, 1}}, Dialect::Abelian));
}

TEST_CASE("reduction sizes") {
  std::vector<LabelledInequation> base{ineq("1:p |- 1:q")};
  CHECK(reduce_label_regular(base).rows.size() == 1);

  std::vector<LabelledInequation> one{ineq("1:p, x:q |- 1:q, x:p")};
  LinSystem r1 = reduce_label_regular(one);
  CHECK(r1.rows.size() == 3);
  CHECK(feasible(r1).feasible == oracles::brute_force_consistent(one));

  std::vector<LabelledInequation> chain{ineq("1:p, x:q, x.y:r |- 1:q, x.y:p")};
  LinSystem r2 = reduce_label_regular(chain);
  CHECK(r2.rows.size() == 5);
  CHECK(feasible(r2).feasible == oracles::brute_force_consistent(chain));
}

TEST_CASE("reduction matches brute force on random label-regular systems") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 40; ++i) {
    auto sys = oracles::random_label_regular(rng, 6, 3);
    LinSystem red = reduce_label_regular(sys);
    CHECK(red.rows.size() == 2 * oracles::atomic_label_count(sys) + sys.size());
    CHECK(feasible(red).feasible == oracles::brute_force_consistent(sys));
  }
}

TEST_CASE("non-regular labels are rejected") {
  std::vector<LabelledInequation> bad{ineq("x.y:p |- x.z:q, y.z:p")};
  CHECK_THROWS_AS(reduce_label_regular(bad), std::invalid_argument);
}

TEST_CASE("GL_l") {
  Verdict v = prove_gl_l(sl("|- ((A => B) => B) => ((B => A) => A)"));
  REQUIRE(v.valid);
  CHECK(check_proof(*v.proof, CalculusId::GL_l));
  Verdict b = prove_gl_l(sl("|- bot => p"));
  REQUIRE(b.valid);
  CHECK(check_proof(*b.proof, CalculusId::GL_l));
  Sequent oplus = sl("|- p => (p o+ p)");
  CHECK(prove_gl_l(oplus).valid == prove_gl(Hypersequent{oplus}).valid);
}

TEST_CASE("GA_i keeps a store") {
  Verdict v = prove_ga_i(sa("p => q, p |- q"));
  REQUIRE(v.valid);
  CHECK(check_proof(*v.proof, CalculusId::GA_i));
  Verdict id = prove_ga_i(sa("p |- p"));
  REQUIRE(id.valid);
  CHECK(std::get<LabelledSequent>(id.proof->conclusion).store.empty());
  CHECK_FALSE(prove_ga_i(sa("|- p")).valid);
}

TEST_CASE("branch instrumentation") {
  SearchStats stats;
  SearchOptions opts;
  opts.stats = &stats;
  Sequent goal = sa("|- ((p => q) => q) => ((q => p) => p)");
  REQUIRE(prove_ga_l(goal, opts).valid);
  CHECK(stats.branch_bound_violations == 0);
  CHECK(stats.label_introductions_mismatch == 0);
  CHECK(stats.reduced_rows_violations == 0);
  CHECK(stats.max_branch_rules <= labelled_branch_bound(goal));
}
