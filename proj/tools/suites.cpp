#include "suites.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "hyperlog/hyper.hpp"
#include "hyperlog/labelled.hpp"
#include "hyperlog/single.hpp"
#include "hyperlog/terminating.hpp"
#include "hyperlog/translate.hpp"
#include "oracles.hpp"

namespace hyperlog::suites {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::string trim(std::string s) {
  auto b = s.find_first_not_of(" \t\r");
  auto e = s.find_last_not_of(" \t\r");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

Json read_json(const std::string& file) {
  std::ifstream in(data_path(file));
  if (!in) throw std::runtime_error("cannot open " + data_path(file));
  Json j;
  in >> j;
  return j;
}

// Every binary shape is filled from the smaller sizes; unary shapes add one node.
std::vector<std::vector<Formula>> by_size(Dialect d, std::size_t max_nodes) {
  std::vector<Formula> leaves = {Formula::var("p"), Formula::var("q")};
  std::vector<Kind> binary;
  std::vector<Kind> unary;
  if (d == Dialect::Lukasiewicz) {
    leaves.push_back(Formula::bot());
    binary = {Kind::PosArrow, Kind::And, Kind::Or};
  } else {
    leaves.push_back(Formula::top());
    binary = {Kind::Arrow, Kind::Plus, Kind::And, Kind::Or};
    unary = {Kind::Neg};
  }
  std::vector<std::vector<Formula>> out(max_nodes + 1);
  if (max_nodes >= 1) out[1] = leaves;
  for (std::size_t n = 2; n <= max_nodes; ++n) {
    for (Kind k : unary)
      for (const auto& a : out[n - 1]) out[n].push_back(Formula::unary(k, a));
    for (Kind k : binary)
      for (std::size_t i = 1; i + 1 < n; ++i)
        for (const auto& a : out[i])
          for (const auto& b : out[n - 1 - i]) out[n].push_back(Formula::binary(k, a, b));
  }
  return out;
}

bool in_unit_interval(const Valuation& v) {
  for (const auto& [name, q] : v.values)
    if (q < -1 || q > 0) return false;
  return true;
}

std::string verdict_word(bool valid) { return valid ? "Valid" : "Invalid"; }

}  // namespace

std::string data_path(const std::string& file) { return std::string(HYPERLOG_DATA_DIR) + "/" + file; }

std::vector<Formula> enumerate_formulas(Dialect d, std::size_t max_nodes) {
  std::vector<Formula> out;
  for (auto& level : by_size(d, max_nodes)) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Goal> load_corpus(const std::string& path, Dialect d) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus " + path);
  std::vector<Goal> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == ';') continue;
    auto hash = line.rfind('#');
    if (hash == std::string::npos) throw std::runtime_error(path + ":" + std::to_string(lineno) + ": missing #valid/#invalid");
    std::string goal = trim(line.substr(0, hash));
    std::istringstream tail(line.substr(hash + 1));
    std::string verdict, name;
    tail >> verdict >> name;
    if (verdict != "valid" && verdict != "invalid")
      throw std::runtime_error(path + ":" + std::to_string(lineno) + ": unknown annotation #" + verdict);
    Goal g;
    g.name = name.empty() ? "line " + std::to_string(lineno) : name;
    g.expect_valid = verdict == "valid";
    if (goal.find("|-") != std::string::npos)
      g.sequent = parse_sequent(goal, d);
    else
      g.sequent = Sequent({}, {parse_formula(goal, d)});
    out.push_back(std::move(g));
  }
  return out;
}

std::string to_string(Engine e) {
  switch (e) {
    case Engine::GA: return "GA";
    case Engine::GA_t: return "GA_t";
    case Engine::GA_l: return "GA_l";
    case Engine::SingleElab: return "single-elab";
    case Engine::GL: return "GL";
    case Engine::GL_t: return "GL_t";
    case Engine::GL_l: return "GL_l";
  }
  return "?";
}

Dialect dialect_of(Engine e) {
  switch (e) {
    case Engine::GL:
    case Engine::GL_t:
    case Engine::GL_l:
      return Dialect::Lukasiewicz;
    default:
      return Dialect::Abelian;
  }
}

std::vector<Engine> engines_for(Dialect d) {
  if (d == Dialect::Abelian) return {Engine::GA, Engine::GA_t, Engine::GA_l, Engine::SingleElab};
  return {Engine::GL, Engine::GL_t, Engine::GL_l};
}

Valuation random_valuation(const Sequent& s, Model model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::string> vars;
  for (const auto* side : {&s.left, &s.right})
    for (const auto& f : *side) collect_variables(f, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  Valuation v;
  v.model = model;
  std::uniform_int_distribution<int> den(1, 6);
  for (const auto& x : vars) {
    int q = den(rng);
    int lo = model == Model::Q ? -4 * q : -q;
    int hi = model == Model::Q ? 4 * q : 0;
    int num = std::uniform_int_distribution<int>(lo, hi)(rng);
    v.set(x, Rational(num, q));
  }
  return v;
}

Outcome run_engine(Engine e, const Sequent& goal, const RunConfig& cfg) {
  Outcome out;
  SearchOptions opts;
  opts.deadline = Deadline::after(cfg.timeout);
  opts.stats = cfg.stats;
  opts.shuffle_seed = cfg.shuffle_seed;
  const Hypersequent h{goal};
  const auto t0 = Clock::now();
  try {
    Verdict v;
    CalculusId calc = CalculusId::GA;
    switch (e) {
      case Engine::GA:
        v = prove_ga(h, opts);
        break;
      case Engine::GA_t:
        v = prove_ga_t({default_focus(h), h}, opts);
        calc = CalculusId::GA_t;
        break;
      case Engine::GA_l:
        v = prove_ga_l(goal, opts);
        calc = CalculusId::GA_l;
        break;
      case Engine::SingleElab:
        v = prove_single_elab(goal, opts);
        calc = CalculusId::GA_s;
        break;
      case Engine::GL:
        v = prove_gl(h, opts);
        calc = CalculusId::GL;
        break;
      case Engine::GL_t:
        v = prove_gl_t({default_focus(h), h}, opts);
        calc = CalculusId::GL_t;
        break;
      case Engine::GL_l:
        v = prove_gl_l(goal, opts);
        calc = CalculusId::GL_l;
        break;
    }
    out.seconds = since(t0);
    out.valid = v.valid;
    const Model model = dialect_of(e) == Dialect::Abelian ? Model::Q : Model::UnitIntervalL;
    if (v.valid) {
      if (!v.proof) {
        out.proof_ok = false;
        out.message = "Valid verdict without a proof";
      } else if (cfg.check_proof) {
        auto r = check_proof(*v.proof, calc);
        out.proof_ok = r.ok;
        if (!r.ok) out.message = "checker: " + r.diagnostic + " @" + r.where();
      }
      for (std::size_t i = 0; i < cfg.spot_valuations && out.spot_ok; ++i) {
        Valuation val = random_valuation(goal, model, cfg.seed * 1000003 + i);
        if (!holds(goal, val)) {
          out.spot_ok = false;
          out.message = "spot valuation refutes a Valid goal: " + render(val);
        }
      }
      out.proof = std::move(v.proof);
    } else {
      if (!v.countermodel || v.countermodel->model != model || holds(goal, *v.countermodel) ||
          (model == Model::UnitIntervalL && !in_unit_interval(*v.countermodel))) {
        out.countermodel_ok = false;
        out.message = "countermodel does not refute the goal";
      }
      out.countermodel = std::move(v.countermodel);
    }
  } catch (const TimeoutError&) {
    out.error = true;
    out.message = "timeout";
    out.seconds = since(t0);
  } catch (const std::exception& ex) {
    out.error = true;
    out.message = ex.what();
    out.seconds = since(t0);
  }
  return out;
}

SuiteReport run_axioms(std::chrono::milliseconds per_goal) {
  SuiteReport rep{"axioms"};
  const auto t0 = Clock::now();
  RunConfig cfg;
  cfg.timeout = std::chrono::milliseconds(60000);
  cfg.spot_valuations = 200;
  auto run = [&](const std::string& tag, const Goal& g, Engine e, const Sequent& goal) {
    Outcome o = run_engine(e, goal, cfg);
    std::string who = tag + " " + g.name + " in " + to_string(e);
    if (o.error)
      rep.fail(who + ": " + o.message);
    else if (o.valid != g.expect_valid)
      rep.fail(who + ": " + verdict_word(o.valid));
    else if (!o.proof_ok || !o.countermodel_ok || !o.spot_ok)
      rep.fail(who + ": " + o.message);
    else if (o.seconds * 1000 > per_goal.count())
      rep.fail(who + ": " + std::to_string(o.seconds) + " s");
    else
      ++rep.passed;
  };
  for (const auto& g : load_corpus(data_path("axioms_a.txt"), Dialect::Abelian))
    for (Engine e : engines_for(Dialect::Abelian)) run("A", g, e, g.sequent);
  for (const auto& g : load_corpus(data_path("axioms_l.txt"), Dialect::Lukasiewicz))
    for (Engine e : engines_for(Dialect::Lukasiewicz)) run("Ł", g, e, g.sequent);
  for (const auto& g : load_corpus(data_path("axioms_lplus.txt"), Dialect::Lukasiewicz)) {
    for (Engine e : engines_for(Dialect::Lukasiewicz)) run("Ł+", g, e, g.sequent);
    Sequent translated({}, {enthymematic(g.sequent.right.at(0))});
    run("Ł+ enthymematic", g, Engine::GA, translated);
  }
  rep.seconds = since(t0);
  return rep;
}

SuiteReport run_examples() {
  SuiteReport rep{"examples"};
  const auto t0 = Clock::now();
  RunConfig cfg;
  cfg.spot_valuations = 200;
  struct Case {
    const char* name;
    const char* goal;
    Dialect d;
    Engine e;
  };
  const Case cases[] = {
      {"prelinearity", "(A -> B) \\/ (B -> A)", Dialect::Abelian, Engine::GA},
      {"characteristic axiom", "((A => B) => B) => ((B => A) => A)", Dialect::Lukasiewicz, Engine::GL},
      {"terminating example", "((q + q + q) /\\ (p + p + p)) -> (p + q + q)", Dialect::Abelian, Engine::GA_t},
      {"labelled example", "(p => (p => r)) => ((q => (q => r)) => (p => (q => r)))", Dialect::Abelian, Engine::GA_l},
  };
  for (const auto& c : cases) {
    Outcome o = run_engine(c.e, Sequent({}, {parse_formula(c.goal, c.d)}), cfg);
    if (o.error || !o.valid || !o.proof_ok || !o.spot_ok)
      rep.fail(std::string(c.name) + " in " + to_string(c.e) + ": " + (o.valid ? o.message : "Invalid " + o.message));
    else
      ++rep.passed;
  }
  struct Tree {
    const char* file;
    CalculusId calc;
  };
  const Tree trees[] = {{"ga_prelinearity.json", CalculusId::GA},
                        {"gl_characteristic.json", CalculusId::GL},
                        {"gas_prelinearity.json", CalculusId::GA_s},
                        {"gls_characteristic.json", CalculusId::GL_s}};
  for (const auto& t : trees) {
    try {
      auto r = check_proof(proof_from_json(read_json(t.file), t.calc), t.calc);
      if (r.ok)
        ++rep.passed;
      else
        rep.fail(std::string(t.file) + ": " + r.diagnostic);
    } catch (const std::exception& ex) {
      rep.fail(std::string(t.file) + ": " + ex.what());
    }
  }
  // Negative control: the (C) step with the wrong copy count must be rejected.
  try {
    Json j = read_json("gas_prelinearity.json");
    j["premises"][0]["premises"][0]["certificate"]["n"] = 3;
    if (check_proof(proof_from_json(j, CalculusId::GA_s), CalculusId::GA_s).ok)
      rep.fail("GA_s tree with n = 3 accepted");
    else
      ++rep.passed;
  } catch (const std::exception& ex) {
    rep.fail(std::string("negative control: ") + ex.what());
  }
  rep.seconds = since(t0);
  return rep;
}

EnumeratedReport run_enumerated(std::size_t max_nodes, std::size_t spot_valuations, const Progress& progress) {
  EnumeratedReport rep;
  rep.agreement.name = "cross-calculus agreement";
  rep.countermodels.name = "countermodels";
  rep.soundness.name = "soundness spot checks";
  rep.conp.name = "labelled co-NP shape";
  const auto t0 = Clock::now();
  SearchStats lstats;
  for (Dialect d : {Dialect::Abelian, Dialect::Lukasiewicz}) {
    const auto formulas = enumerate_formulas(d, max_nodes);
    (d == Dialect::Abelian ? rep.a_formulas : rep.l_formulas) = formulas.size();
    std::size_t idx = 0;
    for (const auto& f : formulas) {
      ++idx;
      if (progress && idx % 5000 == 0)
        progress(std::string(d == Dialect::Abelian ? "A" : "Ł") + " " + std::to_string(idx) + "/" +
                 std::to_string(formulas.size()));
      const Sequent goal({}, {f});
      std::optional<bool> verdict;
      bool agree = true;
      std::string detail;
      for (Engine e : engines_for(d)) {
        RunConfig cfg;
        cfg.seed = idx;
        const bool labelled = e == Engine::GA_l || e == Engine::GL_l;
        SearchStats st;
        if (labelled) cfg.stats = &st;
        // One engine per formula runs the spot checks; verdicts must agree anyway.
        cfg.spot_valuations = e == engines_for(d).front() ? spot_valuations : 0;
        Outcome o = run_engine(e, goal, cfg);
        const std::string who = render_formula(f) + " in " + to_string(e);
        if (o.error) {
          agree = false;
          detail += " " + to_string(e) + ": " + o.message;
          continue;
        }
        if (!o.proof_ok) {
          agree = false;
          detail += " " + to_string(e) + ": " + o.message;
        }
        if (!o.valid) {
          if (o.countermodel_ok)
            ++rep.countermodels.passed;
          else
            rep.countermodels.fail(who);
        }
        if (o.valid && cfg.spot_valuations) {
          if (o.spot_ok)
            ++rep.soundness.passed;
          else
            rep.soundness.fail(who + ": " + o.message);
        }
        if (labelled) {
          if (st.branch_bound_violations || st.reduced_rows_violations || st.label_introductions_mismatch)
            rep.conp.fail(who + ": bound " + std::to_string(st.branch_bound_violations) + ", rows " +
                          std::to_string(st.reduced_rows_violations) + ", labels " +
                          std::to_string(st.label_introductions_mismatch));
          else
            ++rep.conp.passed;
          lstats.max_branch_rules = std::max(lstats.max_branch_rules, st.max_branch_rules);
          lstats.max_atomic_labels = std::max(lstats.max_atomic_labels, st.max_atomic_labels);
          lstats.max_reduced_rows = std::max(lstats.max_reduced_rows, st.max_reduced_rows);
        }
        if (!verdict) {
          verdict = o.valid;
        } else if (*verdict != o.valid) {
          agree = false;
        }
        detail += " " + to_string(e) + "=" + verdict_word(o.valid);
      }
      if (agree)
        ++rep.agreement.passed;
      else
        rep.agreement.fail(render_formula(f) + ":" + detail);
    }
  }
  rep.conp.notes.push_back("max rules on a branch " + std::to_string(lstats.max_branch_rules) +
                           ", max atomic labels " + std::to_string(lstats.max_atomic_labels) +
                           ", max reduced rows " + std::to_string(lstats.max_reduced_rows));
  rep.agreement.seconds = since(t0);
  return rep;
}

SuiteReport run_translations(std::size_t max_nodes) {
  SuiteReport rep{"translations"};
  const auto t0 = Clock::now();
  RunConfig cfg;
  cfg.check_proof = false;
  for (const auto& f : enumerate_formulas(Dialect::Lukasiewicz, max_nodes)) {
    const std::string who = render_formula(f);
    Outcome base = run_engine(Engine::GL, Sequent({}, {f}), cfg);
    const Sequent starred({}, {star(f)});
    Outcome st = run_engine(Engine::GA, starred, cfg);
    Outcome mat = run_engine(Engine::GA, Sequent({}, {material(f)}), cfg);
    if (base.error || st.error || mat.error) {
      rep.fail(who + ": " + base.message + st.message + mat.message);
      continue;
    }
    if (base.valid != st.valid || base.valid != mat.valid) {
      rep.fail(who + ": GL " + verdict_word(base.valid) + ", star " + verdict_word(st.valid) + ", material " +
               verdict_word(mat.valid));
      continue;
    }
    if (!st.valid) {
      auto v = transfer_countermodel(*st.countermodel);
      if (!v || holds(Sequent({}, {f}), *v) || !in_unit_interval(*v)) {
        rep.fail(who + ": transferred countermodel does not refute");
        continue;
      }
    }
    ++rep.passed;
  }
  rep.seconds = since(t0);
  return rep;
}

SuiteReport run_reductions(std::size_t systems, std::uint64_t seed) {
  SuiteReport rep{"reductions"};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < systems; ++i) {
    auto ineqs = oracles::random_label_regular(rng, 8, 3);
    const std::size_t n = oracles::atomic_label_count(ineqs);
    try {
      LinSystem reduced = reduce_label_regular(ineqs);
      const bool lhs = feasible(reduced).feasible;
      const bool rhs = oracles::brute_force_consistent(ineqs);
      if (reduced.rows.size() != 2 * n + ineqs.size())
        rep.fail("system " + std::to_string(i) + ": " + std::to_string(reduced.rows.size()) + " rows, expected " +
                 std::to_string(2 * n + ineqs.size()));
      else if (lhs != rhs)
        rep.fail("system " + std::to_string(i) + ": reduced " + (lhs ? "feasible" : "infeasible") +
                 ", brute force " + (rhs ? "consistent" : "inconsistent"));
      else
        ++rep.passed;
    } catch (const std::exception& ex) {
      rep.fail("system " + std::to_string(i) + ": " + ex.what());
    }
  }
  rep.seconds = since(t0);
  return rep;
}

SuiteReport run_termination(std::size_t searches, std::uint64_t seed) {
  SuiteReport rep{"termination"};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(seed);
  const auto a = enumerate_formulas(Dialect::Abelian, 7);
  const auto l = enumerate_formulas(Dialect::Lukasiewicz, 7);
  SearchStats total;
  std::size_t failed_searches = 0;
  for (std::size_t i = 0; i < searches; ++i) {
    const bool luk = i % 2 == 1;
    const auto& pool = luk ? l : a;
    const Formula f = pool[std::uniform_int_distribution<std::size_t>(0, pool.size() - 1)(rng)];
    SearchStats st;
    RunConfig cfg;
    cfg.stats = &st;
    cfg.shuffle_seed = rng();
    Outcome o = run_engine(luk ? Engine::GL_t : Engine::GA_t, Sequent({}, {f}), cfg);
    if (o.error) {
      rep.fail(render_formula(f) + ": " + o.message);
      continue;
    }
    total.measure_checks += st.measure_checks;
    total.literal_measure_violations += st.literal_measure_violations;
    total.component_measure_violations += st.component_measure_violations;
    total.sprime_applications += st.sprime_applications;
    total.sprime_d_violations += st.sprime_d_violations;
    if (st.literal_measure_violations || st.sprime_d_violations) {
      ++failed_searches;
      rep.fail(render_formula(f) + " (" + (luk ? "GL_t" : "GA_t") + "): " +
               std::to_string(st.literal_measure_violations) + " (c,n,d,s) violations, " +
               std::to_string(st.sprime_d_violations) + " S' d violations" +
               (st.violation_notes.empty() ? "" : "; " + st.violation_notes.front()));
    } else {
      ++rep.passed;
    }
  }
  rep.notes.push_back(std::to_string(total.measure_checks) + " measured steps, " +
                      std::to_string(total.literal_measure_violations) + " flat (c,n,d,s) violations, " +
                      std::to_string(total.component_measure_violations) + " component-wise violations, " +
                      std::to_string(total.sprime_applications) + " S' steps, " +
                      std::to_string(total.sprime_d_violations) + " S' d violations, " +
                      std::to_string(failed_searches) + " searches affected");
  rep.seconds = since(t0);
  return rep;
}

SuiteReport run_elaboration(std::size_t goals, std::uint64_t seed) {
  SuiteReport rep{"elaboration"};
  const auto t0 = Clock::now();
  std::mt19937_64 rng(seed);
  std::size_t tried = 0;
  while (rep.passed + rep.failed < goals && tried < 200 * goals) {
    ++tried;
    std::vector<Formula> l, r;
    const std::size_t nl = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    const std::size_t nr = std::uniform_int_distribution<std::size_t>(1, 2)(rng);
    for (std::size_t i = 0; i < nl; ++i) l.push_back(oracles::random_a_formula(rng, 4));
    for (std::size_t i = 0; i < nr; ++i) r.push_back(oracles::random_a_formula(rng, 4));
    const Sequent s(l, r);
    RunConfig quick;
    quick.check_proof = false;
    quick.timeout = std::chrono::milliseconds(5000);
    Outcome decided = run_engine(Engine::GA_l, s, quick);
    if (decided.error || !decided.valid) continue;
    RunConfig cfg;
    cfg.timeout = std::chrono::milliseconds(60000);
    Outcome o = run_engine(Engine::SingleElab, s, cfg);
    if (o.error || !o.valid || !o.proof_ok)
      rep.fail(render(s) + ": " + (o.valid ? o.message : "Invalid " + o.message));
    else
      ++rep.passed;
  }
  rep.notes.push_back(std::to_string(tried) + " random sequents drawn");
  rep.seconds = since(t0);
  return rep;
}

}  // namespace hyperlog::suites
