#include <doctest.h>

#include <fstream>

#include "hyperlog/hyper.hpp"
#include "hyperlog/labelled.hpp"
#include "hyperlog/single.hpp"
#include "suites.hpp"

using namespace hyperlog;

namespace {

Sequent sa(const char* s) { return parse_sequent(s, Dialect::Abelian); }

Json load(const char* file) {
  std::ifstream in(suites::data_path(file));
  REQUIRE(in);
  return Json::parse(in);
}

ProofTree leaf(const char* rule, Sequent s) { return ProofTree{rule, std::move(s), {}, {}}; }

bool has_c(const ProofTree& t, long n) {
  if (t.rule == "C" && t.certificate.is_object() && t.certificate.value("n", 0L) == n) return true;
  for (const auto& p : t.premises)
    if (has_c(p, n)) return true;
  return false;
}

}  // namespace

TEST_CASE("transcribed single-sequent proofs") {
  CHECK(check_gas_proof(proof_from_json(load("gas_prelinearity.json"), CalculusId::GA_s)));
  CHECK(check_gls_proof(proof_from_json(load("gls_characteristic.json"), CalculusId::GL_s)));
}

TEST_CASE("contraction factor is checked") {
  Json j = load("gas_prelinearity.json");
  j["premises"][0]["premises"][0]["certificate"]["n"] = 3;
  CheckResult r = check_gas_proof(proof_from_json(j, CalculusId::GA_s));
  CHECK_FALSE(r.ok);
  CHECK(r.path == std::vector<std::size_t>{0, 0});
}

TEST_CASE("axioms") {
  CHECK(check_gas_proof(leaf("ID", sa("A |- A"))));
  CHECK(check_gls_proof(leaf("bot", parse_sequent("bot |- p", Dialect::Lukasiewicz))));
  CHECK_FALSE(check_gas_proof(leaf("ID", sa("A |- B"))));
}

TEST_CASE("weakening only on the left") {
  Sequent concl = parse_sequent("p |- p, q", Dialect::Lukasiewicz);
  ProofTree w{"W", concl, {leaf("ID", parse_sequent("p |- p", Dialect::Lukasiewicz))}, {}};
  CHECK_FALSE(check_gls_proof(w));
  ProofTree ok{"W", parse_sequent("p, q |- p", Dialect::Lukasiewicz),
               {leaf("ID", parse_sequent("p |- p", Dialect::Lukasiewicz))}, {}};
  CHECK(check_gls_proof(ok));
}

TEST_CASE("elaborating prelinearity") {
  Verdict gai = prove_ga_i(sa("|- (A -> B) \\/ (B -> A)"));
  REQUIRE(gai.valid);
  ProofTree gas = elaborate_to_gas(*gai.proof);
  CheckResult r = check_gas_proof(gas);
  CHECK_MESSAGE(r.ok, r.diagnostic << " @" << r.where());
  CHECK(std::get<Sequent>(gas.conclusion) == sa("|- (A -> B) \\/ (B -> A)"));
}

TEST_CASE("elaborating the identity") {
  Verdict gai = prove_ga_i(sa("A |- A"));
  REQUIRE(gai.valid);
  CHECK(elaborate_to_gas(*gai.proof).rule == "ID");
}

TEST_CASE("elaborating a two-function proof uses contraction") {
  Verdict v = prove_single_elab(sa("|- (p => (p => r)) => ((q => (q => r)) => (p => (q => r)))"));
  REQUIRE(v.valid);
  CheckResult r = check_gas_proof(*v.proof);
  CHECK_MESSAGE(r.ok, r.diagnostic << " @" << r.where());
  CHECK(has_c(*v.proof, 2));
}

TEST_CASE("invalid goals keep the countermodel") {
  Verdict v = prove_single_elab(sa("|- p -> q"));
  REQUIRE_FALSE(v.valid);
  CHECK_FALSE(holds(sa("|- p -> q"), *v.countermodel));
}

TEST_CASE("elaboration rejects non-GA_i input") {
  ProofTree bogus{"ID", parse_sequent("p |- p", Dialect::Abelian), {}, {}};
  CHECK_THROWS_AS(elaborate_to_gas(bogus), std::invalid_argument);
}
