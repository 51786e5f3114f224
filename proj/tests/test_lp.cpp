#include <doctest.h>

#include <random>

#include "hyperlog/lp.hpp"

using namespace hyperlog;

namespace {

LinInequation row(std::map<std::string, Rational> coeffs, Rel rel, Rational c = 0) {
  return {std::move(coeffs), rel, std::move(c)};
}

Hypersequent ha(const char* s) { return parse_hypersequent(s, Dialect::Abelian); }
Hypersequent hl(const char* s) { return parse_hypersequent(s, Dialect::Lukasiewicz); }

}  // namespace

TEST_CASE("interval") {
  LinSystem sys;
  sys.rows = {row({{"x", 1}}, Rel::Gt), row({{"x", -1}}, Rel::Gt, 1)};
  for (auto r : {feasible_fm(sys), feasible_simplex(sys)}) {
    REQUIRE(r.feasible);
    CHECK(r.witness.at("x") > 0);
    CHECK(r.witness.at("x") < 1);
  }
}

TEST_CASE("strict cycle is infeasible") {
  LinSystem sys;
  sys.rows = {row({{"x", 1}, {"y", -1}}, Rel::Gt), row({{"y", 1}, {"x", -1}}, Rel::Gt)};
  CHECK_FALSE(feasible_fm(sys).feasible);
  CHECK_FALSE(feasible_simplex(sys).feasible);
}

TEST_CASE("refuting p |- q,q | q |- p") {
  LinSystem sys;
  sys.rows = {row({{"p", 1}, {"q", -2}}, Rel::Gt), row({{"q", 1}, {"p", -1}}, Rel::Gt)};
  auto r = feasible(sys);
  REQUIRE(r.feasible);
  CHECK(satisfies(sys, r.witness));
  CHECK(r.witness.at("p") > 2 * r.witness.at("q"));
}

TEST_CASE("equalities and bounds") {
  LinSystem sys;
  sys.rows = {row({{"x", 1}, {"y", 1}}, Rel::Eq, -1), row({{"x", 1}, {"y", -1}}, Rel::Gt)};
  sys.bound("y", Rational(1, 4), std::nullopt);
  auto r = feasible_fm(sys);
  REQUIRE(r.feasible);
  CHECK(satisfies(sys, r.witness));
  sys.bound("y", Rational(1, 2), std::nullopt);
  CHECK_FALSE(feasible_fm(sys).feasible);
  CHECK_FALSE(feasible_simplex(sys).feasible);
}

// A refutation system from a labelled leaf on which redundancy pruning once
// produced a spurious witness.
TEST_CASE("pruned elimination still yields a sound verdict") {
  LinSystem sys;
  auto lam = [](int i) { return "$lam_x" + std::to_string(i); };
  for (int i : {101, 105, 105, 102, 106, 107, 107, 103, 104, 108, 109, 109})
    sys.rows.push_back(row({{lam(i), -1}}, Rel::Ge));
  sys.rows.push_back(row({{lam(101), -1}, {lam(105), 1}, {"p", 1}, {"q", 2}}, Rel::Ge));
  sys.rows.push_back(row({{lam(106), -1}, {"p", 1}, {"q", -1}}, Rel::Ge));
  sys.rows.push_back(row({{lam(102), -1}, {lam(106), 1}, {lam(107), 1}, {"p", -1}, {"q", 1}}, Rel::Ge));
  sys.rows.push_back(row({{lam(103), -1}, {"p", 2}, {"q", -1}}, Rel::Ge));
  sys.rows.push_back(row({{lam(108), -1}, {"p", -1}}, Rel::Ge));
  sys.rows.push_back(row({{lam(104), -1}, {lam(108), 1}, {lam(109), 1}, {"p", 1}, {"q", 1}}, Rel::Ge));
  sys.rows.push_back(
      row({{lam(101), 1}, {lam(102), 1}, {lam(103), 1}, {lam(104), 1}, {"p", -1}, {"q", -2}}, Rel::Gt));
  CHECK_FALSE(feasible_simplex(sys).feasible);
  CHECK_FALSE(feasible_fm(sys).feasible);
}

TEST_CASE("Fourier-Motzkin agrees with simplex on random systems") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> coef(-3, 3), nvars(1, 4), nrows(1, 6), rel(0, 4);
  const char* names[] = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 400; ++trial) {
    LinSystem sys;
    int n = nvars(rng), m = nrows(rng);
    for (int i = 0; i < m; ++i) {
      LinInequation r;
      for (int k = 0; k < n; ++k)
        if (int c = coef(rng)) r.coeffs[names[k]] = c;
      r.constant = coef(rng);
      int x = rel(rng);
      r.rel = x == 0 ? Rel::Eq : x < 3 ? Rel::Gt : Rel::Ge;
      sys.rows.push_back(r);
    }
    auto fm = feasible_fm(sys);
    auto sx = feasible_simplex(sys);
    REQUIRE(fm.feasible == sx.feasible);
    if (fm.feasible) {
      CHECK(satisfies(sys, fm.witness));
      CHECK(satisfies(sys, sx.witness));
    }
  }
}

TEST_CASE("row limit falls back to simplex") {
  LinSystem sys;
  sys.rows = {row({{"x", 1}, {"y", 1}}, Rel::Gt),       row({{"x", 1}, {"y", -1}}, Rel::Gt),
              row({{"x", -1}, {"y", 2}}, Rel::Gt, 5),   row({{"x", -1}, {"y", -2}}, Rel::Gt, 5)};
  CHECK_THROWS_AS(feasible_fm(sys, 0), LpResourceError);
  auto r = feasible(sys, {0, true});
  CHECK(r.feasible);
  CHECK(r.engine == "simplex");
}

TEST_CASE("lambda certificates") {
  auto one = lambda_certificate(ha("A, B |- A, B"));
  REQUIRE(one);
  CHECK(*one == std::vector<Integer>{1});
  auto two = lambda_certificate(ha("p |- q | q |- p"));
  REQUIRE(two);
  CHECK(*two == std::vector<Integer>{1, 1});
  CHECK_FALSE(lambda_certificate(ha("p |- q, q | q |- p")));
  CHECK_THROWS_AS(lambda_certificate(ha("|- p -> q")), std::invalid_argument);
}

TEST_CASE("atomic validity in A") {
  CHECK(atomic_valid_a(ha("p |- q | q |- p")).valid);
  auto np = atomic_valid_a(ha("p |-"));
  CHECK_FALSE(np.valid);
  CHECK(np.countermodel.at("p") > 0);
  CHECK(atomic_valid_a(ha("|-")).valid);
}

TEST_CASE("atomic validity in the unit interval") {
  CHECK(atomic_valid_l(hl("bot |- p")).valid);
  auto p = atomic_valid_l(hl("|- p"));
  REQUIRE_FALSE(p.valid);
  CHECK(p.countermodel.at("p") < 0);
  CHECK(p.countermodel.at("p") >= -1);
  auto pp = atomic_valid_l(hl("p, p |- bot"));
  REQUIRE_FALSE(pp.valid);
  CHECK_FALSE(holds(hl("p, p |- bot"), pp.countermodel));
  CHECK(atomic_valid_l(hl("bot, bot |- p | p |- bot")).valid);
}

TEST_CASE("subset_star") {
  Formula p = Formula::var("p"), q = Formula::var("q"), bot = Formula::bot();
  CHECK(subset_star({q}, {bot}));
  CHECK(subset_star({}, {p}));
  CHECK_FALSE(subset_star({p}, {}));
  CHECK(subset_star(ms_make({p, q}), ms_make({p, bot})));
  CHECK_FALSE(subset_star(ms_make({p, p}), ms_make({p, q})));
}
