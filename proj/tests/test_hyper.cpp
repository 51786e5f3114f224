#include <doctest.h>

#include <fstream>

#include "hyperlog/hyper.hpp"
#include "suites.hpp"

using namespace hyperlog;

namespace {

Hypersequent ha(const char* s) { return parse_hypersequent(s, Dialect::Abelian); }
Hypersequent hl(const char* s) { return parse_hypersequent(s, Dialect::Lukasiewicz); }

Json load(const char* file) {
  std::ifstream in(suites::data_path(file));
  REQUIRE(in);
  return Json::parse(in);
}

}  // namespace

TEST_CASE("prelinearity in GA") {
  Verdict v = prove_ga(ha("|- (A -> B) \\/ (B -> A)"));
  REQUIRE(v.valid);
  REQUIRE(v.proof);
  CHECK(check_proof(*v.proof, CalculusId::GA));
  CHECK(v.proof->rule == "or-r");
}

TEST_CASE("GA countermodel") {
  Verdict v = prove_ga(ha("|- p"));
  REQUIRE_FALSE(v.valid);
  REQUIRE(v.countermodel);
  CHECK(v.countermodel->at("p") < 0);
}

TEST_CASE("identity axiom") {
  Verdict v = prove_ga(ha("A |- A"));
  REQUIRE(v.valid);
  CHECK(v.proof->rule == "ID");
}

TEST_CASE("GL examples") {
  Verdict v = prove_gl(hl("|- ((A => B) => B) => ((B => A) => A)"));
  REQUIRE(v.valid);
  CHECK(check_proof(*v.proof, CalculusId::GL));
  Verdict b = prove_gl(hl("bot |- A"));
  REQUIRE(b.valid);
  CHECK(check_proof(*b.proof, CalculusId::GL));
  Verdict e = prove_gl(hl("|- p \\/ (p => bot)"));
  REQUIRE_FALSE(e.valid);
  CHECK_FALSE(holds(hl("|- p \\/ (p => bot)"), *e.countermodel));
}

TEST_CASE("GA agrees with direct evaluation on small goals") {
  for (const char* s : {"|- -(p + -p)", "|- (p -> q) -> (-q -> -p)", "|- p /\\ q -> p \\/ q", "|- p + q -> p",
                        "|- ((p -> q) -> q) -> p", "|- t -> p \\/ -p", "p, q |- p + q"}) {
    Hypersequent g = ha(s);
    Verdict v = prove_ga(g);
    if (v.valid) {
      CHECK(check_proof(*v.proof, CalculusId::GA));
      CHECK_FALSE(random_refute(g, Model::Q, 300, 3));
    } else {
      CHECK_FALSE(holds(g, *v.countermodel));
    }
  }
}

TEST_CASE("closure synthesis") {
  ProofTree m = synthesize_closure(ha("A, B |- A, B"), {1});
  CHECK(m.rule == "M");
  CHECK(check_proof(m, CalculusId::GA));

  Hypersequent g = ha("p |- q | q |- p");
  ProofTree s = synthesize_closure(g, {1, 1});
  CHECK(check_proof(s, CalculusId::GA));
  CHECK(std::get<Hypersequent>(s.conclusion) == g);

  CHECK(synthesize_closure(ha("|-"), {1}).rule == "Lambda");
  CHECK_THROWS_AS(synthesize_closure(ha("p |- q"), {1}), std::invalid_argument);

  Hypersequent l = hl("bot, bot |- p | p |- bot");
  auto lam = lambda_certificate_l(l);
  REQUIRE(lam);
  CHECK(check_proof(synthesize_closure_l(l, *lam), CalculusId::GL));
}

TEST_CASE("transcribed example proofs") {
  CHECK(check_proof(proof_from_json(load("ga_prelinearity.json"), CalculusId::GA), CalculusId::GA));
  CHECK(check_proof(proof_from_json(load("gl_characteristic.json"), CalculusId::GL), CalculusId::GL));
}

TEST_CASE("corrupted split premise is rejected with its path") {
  Json j = load("ga_prelinearity.json");
  j["premises"][0]["premises"][0]["premises"][0]["conclusion"] = "A, B |- A, A";
  CheckResult r = check_proof(proof_from_json(j, CalculusId::GA), CalculusId::GA);
  REQUIRE_FALSE(r.ok);
  CHECK(r.path.size() >= 2);
  CHECK_FALSE(r.diagnostic.empty());
}

TEST_CASE("proof JSON round trip") {
  Verdict v = prove_ga(ha("|- (p -> q) \\/ (q -> p)"));
  REQUIRE(v.valid);
  Json j = to_json(*v.proof);
  ProofTree back = proof_from_json(j, CalculusId::GA);
  CHECK(to_json(back) == j);
  CHECK(check_proof(back, CalculusId::GA));
}

TEST_CASE("timeouts are reported") {
  SearchOptions opts;
  opts.deadline = Deadline::after(std::chrono::milliseconds(0));
  CHECK_THROWS_AS(prove_ga(ha("|- ((p -> q) -> q) -> ((q -> p) -> p)"), opts), TimeoutError);
}
