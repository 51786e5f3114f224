#include "hyperlog/terminating.hpp"

#include <algorithm>

#include "hyper_rules.hpp"
#include "hyperlog/lp.hpp"

namespace hyperlog {

TerminationMeasure termination_measure(const FocusedHypersequent& fg) {
  TerminationMeasure m;
  for (const auto& s : fg.body.components)
    for (const auto* side : {&s.left, &s.right})
      for (const auto& f : *side)
        if (!f.is_atom()) m.c.push_back(complexity_cp(f));
  std::sort(m.c.begin(), m.c.end());
  auto vars = variables(fg.body);
  m.n = vars.size() + (std::binary_search(vars.begin(), vars.end(), fg.focus) ? 0 : 1);
  m.d = d_measure(fg);
  m.s = symbol_count(fg.body);
  return m;
}

bool measure_less(const TerminationMeasure& a, const TerminationMeasure& b) {
  if (multiset_less(a.c, b.c)) return true;
  if (a.c != b.c) return false;
  if (a.n != b.n) return a.n < b.n;
  if (a.d != b.d) return a.d < b.d;
  return a.s < b.s;
}

namespace {

Hypersequent strip_atoms(const Hypersequent& g) {
  std::vector<Sequent> comps;
  for (const auto& s : g.components) {
    Sequent t;
    for (const auto& f : s.left)
      if (!f.is_atom()) t.left.push_back(f);
    for (const auto& f : s.right)
      if (!f.is_atom()) t.right.push_back(f);
    comps.push_back(std::move(t));
  }
  return Hypersequent(std::move(comps));
}

}  // namespace

bool component_measure_less(const FocusedHypersequent& a, const FocusedHypersequent& b) {
  Hypersequent ca = strip_atoms(a.body), cb = strip_atoms(b.body);
  if (detail::component_measure_less(ca, cb)) return true;
  if (detail::component_measure_less(cb, ca)) return false;
  TerminationMeasure ma = termination_measure(a), mb = termination_measure(b);
  if (ma.n != mb.n) return ma.n < mb.n;
  if (ma.d != mb.d) return ma.d < mb.d;
  return ma.s < mb.s;
}

FocusedHypersequent apply_s_prime(const FocusedHypersequent& fg, std::size_t comp1, std::size_t comp2, Keep keep) {
  const auto& comps = fg.body.components;
  if (comp1 >= comps.size() || comp2 >= comps.size() || comp1 == comp2)
    throw std::invalid_argument("S': component indices out of range");
  const Formula p = Formula::var(fg.focus);
  const Sequent& s1 = comps[comp1];
  const Sequent& s2 = comps[comp2];
  if (!s1.atomic() || !s2.atomic()) throw std::invalid_argument("S': components must be atomic");
  const std::size_t n = count(s1.left, p), m = count(s2.right, p);
  if (n == 0 || m == 0) throw std::invalid_argument("S': focus must occur left in the first and right in the second");
  if (count(s1.right, p) != 0 || count(s2.left, p) != 0)
    throw std::invalid_argument("S': focus occurs in the side formulas");
  Sequent g1{ms_diff(s1.left, ms_scale({p}, n)), s1.right};
  Sequent g2{s2.left, ms_diff(s2.right, ms_scale({p}, m))};
  Sequent merged = merge(scale(g1, m), scale(g2, n));
  std::size_t hi = std::max(comp1, comp2), lo = std::min(comp1, comp2);
  Hypersequent rest = fg.body.without(hi).without(lo);
  rest = rest.plus(merged).plus(keep == Keep::First ? s1 : s2);
  return {fg.focus, rest};
}

std::string default_focus(const Hypersequent& g) {
  auto vars = variables(g);
  return vars.empty() ? std::string("p") : vars.front();
}

namespace {

ProofTree refocus(ProofTree t, const std::string& focus) {
  if (auto* h = std::get_if<Hypersequent>(&t.conclusion)) t.conclusion = FocusedHypersequent{focus, *h};
  for (auto& p : t.premises) p = refocus(std::move(p), focus);
  return t;
}

const FocusedHypersequent& fh(const ProofTree& t) { return std::get<FocusedHypersequent>(t.conclusion); }

bool mentions(const Hypersequent& g, const std::string& v) {
  auto vars = variables(g);
  return std::binary_search(vars.begin(), vars.end(), v);
}

class FocusedEngine {
 public:
  FocusedEngine(Dialect d, const SearchOptions& opts) : d_(d), opts_(opts) {
    if (opts.shuffle_seed) rng_.emplace(*opts.shuffle_seed);
  }

  std::variant<ProofTree, Valuation> run(const FocusedHypersequent& fg) {
    opts_.deadline.check();
    auto step = detail::next_step(fg.body, d_, rng_ ? &*rng_ : nullptr);
    if (!step) return atomic_entry(fg);
    if (step->rule.empty()) return closed(fg, std::get<ProofTree>(std::move(step->premises.front())));
    if (fg.body.atomic() && !step->principal) return atomic_entry(fg);
    if (opts_.stats) ++opts_.stats->rule_applications;
    ProofTree node{step->rule, fg, {}, {}};
    for (auto& p : step->premises) {
      ProofTree sub;
      if (auto* t = std::get_if<ProofTree>(&p)) {
        sub = closed(FocusedHypersequent{fg.focus, std::get<Hypersequent>(t->conclusion)}, std::move(*t));
      } else {
        auto r = run(FocusedHypersequent{fg.focus, std::get<Hypersequent>(p)});
        if (auto* v = std::get_if<Valuation>(&r)) return std::move(*v);
        sub = std::get<ProofTree>(std::move(r));
      }
      edge(node, fh(sub));
      node.premises.push_back(std::move(sub));
    }
    return node;
  }

 private:
  // Edges of a finished hypersequent-level subproof.
  ProofTree closed(const FocusedHypersequent& fg, ProofTree t) {
    ProofTree f = refocus(std::move(t), fg.focus);
    audit(f);
    return f;
  }

  void audit(const ProofTree& t) {
    for (const auto& p : t.premises) {
      edge(t, fh(p));
      audit(p);
    }
  }

  void edge(const ProofTree& parent, const FocusedHypersequent& child) {
    const FocusedHypersequent& c = fh(parent);
    if (opts_.trace) {
      auto m = termination_measure(child);
      opts_.trace->push_back(
          {{"rule", parent.rule}, {"premise", render(child)}, {"measure", {{"c", m.c}, {"n", m.n}, {"d", m.d}, {"s", m.s}}}});
    }
    if (!opts_.stats) return;
    auto& st = *opts_.stats;
    ++st.measure_checks;
    if (!measure_less(termination_measure(child), termination_measure(c))) {
      ++st.literal_measure_violations;
      st.note("(c,n,d,s) not decreased by " + parent.rule + ": " + render(c) + "  =>  " + render(child));
    }
    if (!component_measure_less(child, c)) {
      ++st.component_measure_violations;
      st.note("component-wise measure not decreased by " + parent.rule + ": " + render(c));
    }
    if (parent.rule == rules::SPrime) {
      ++st.sprime_applications;
      if (d_measure(child) >= d_measure(c)) ++st.sprime_d_violations;
    }
  }

  std::variant<ProofTree, Valuation> atomic_entry(const FocusedHypersequent& fg) {
    if (auto t = atomic(fg)) return std::move(*t);
    Hypersequent body = fg.body;
    for (auto& c : body.components)
      for (auto* side : {&c.left, &c.right}) std::erase_if(*side, [](const Formula& f) { return f.is(Kind::Top); });
    AtomicVerdict av = d_ == Dialect::Abelian ? atomic_valid_a(body) : atomic_valid_l(body);
    if (av.valid) throw std::logic_error("terminating strategy failed on a valid hypersequent: " + render(fg));
    return av.countermodel;
  }

  ProofTree node1(const char* rule, const FocusedHypersequent& fg, ProofTree sub) {
    ProofTree n{rule, fg, {}, {}};
    edge(n, fh(sub));
    n.premises.push_back(std::move(sub));
    return n;
  }

  std::optional<ProofTree> atomic(const FocusedHypersequent& fg) {
    opts_.deadline.check();
    if (opts_.stats) ++opts_.stats->rule_applications;
    const Hypersequent& g = fg.body;
    if (auto step = detail::next_step(g, d_, nullptr)) {
      if (step->rule.empty()) return closed(fg, std::get<ProofTree>(std::move(step->premises.front())));
      if (step->premises.size() != 1 || !std::holds_alternative<Hypersequent>(step->premises.front()) ||
          (step->rule != rules::EW && !step->principal))
        throw std::logic_error("unexpected step on an atomic hypersequent");
      auto sub = atomic({fg.focus, std::get<Hypersequent>(step->premises.front())});
      if (!sub) return std::nullopt;
      return node1(step->rule.c_str(), fg, std::move(*sub));
    }
    // Cancel an atom occurring on both sides of a component.
    for (std::size_t i = 0; i < g.size(); ++i) {
      const Sequent& c = g.components[i];
      for (const auto& a : c.left) {
        if (count(c.right, a) == 0) continue;
        Sequent rest{ms_erase_one(c.left, a), ms_erase_one(c.right, a)};
        Sequent id{{a}, {a}};
        auto sub = atomic({fg.focus, g.replace(i, {rest})});
        if (!sub) return std::nullopt;
        ProofTree side = closed({fg.focus, g.replace(i, {id})},
                                detail::weaken_to(g.replace(i, {id}), id, ProofTree{rules::ID, Hypersequent{id}, {}, {}}));
        ProofTree n{rules::M, fg, {}, {}};
        edge(n, fh(*sub));
        edge(n, fh(side));
        n.premises = {std::move(*sub), std::move(side)};
        return n;
      }
    }
    const Formula p = Formula::var(fg.focus);
    if (!mentions(g, fg.focus)) {
      auto vars = variables(g);
      if (!vars.empty()) {
        auto sub = atomic({vars.front(), g});
        if (!sub) return std::nullopt;
        return node1(rules::Shift, fg, std::move(*sub));
      }
      // Only constants remain: in Ł, weaken ⊥ away from a component with an empty right side.
      if (d_ == Dialect::Lukasiewicz) {
        for (std::size_t i = 0; i < g.size(); ++i) {
          const Sequent& c = g.components[i];
          if (!c.right.empty()) continue;
          auto sub = atomic({fg.focus, g.replace(i, {Sequent{ms_erase_one(c.left, c.left.front()), {}}})});
          if (!sub) return std::nullopt;
          return node1(rules::IW, fg, std::move(*sub));
        }
      }
      return std::nullopt;
    }
    std::vector<std::size_t> surplus_left, surplus_right;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (count(g.components[i].left, p) > 0) surplus_left.push_back(i);
      if (count(g.components[i].right, p) > 0) surplus_right.push_back(i);
    }
    if (surplus_right.empty()) {
      std::size_t i = surplus_left.front();
      if (d_ == Dialect::Abelian) {
        auto sub = atomic({fg.focus, g.without(i)});
        if (!sub) return std::nullopt;
        return node1(rules::EW, fg, std::move(*sub));
      }
      const Sequent& c = g.components[i];
      auto sub = atomic({fg.focus, g.replace(i, {Sequent{ms_erase_one(c.left, p), c.right}})});
      if (!sub) return std::nullopt;
      return node1(rules::IW, fg, std::move(*sub));
    }
    if (surplus_left.empty()) {
      if (d_ == Dialect::Abelian) {
        auto sub = atomic({fg.focus, g.without(surplus_right.front())});
        if (!sub) return std::nullopt;
        return node1(rules::EW, fg, std::move(*sub));
      }
      const Formula bot = Formula::bot();
      for (std::size_t i : surplus_right) {
        const Sequent& c = g.components[i];
        if (count(c.left, bot) == 0) continue;
        Sequent ax{{bot}, {p}};
        if (c == ax) return closed(fg, detail::weaken_to(g, ax, ProofTree{rules::Bot, Hypersequent{ax}, {}, {}}));
        Sequent rest{ms_erase_one(c.left, bot), ms_erase_one(c.right, p)};
        auto sub = atomic({fg.focus, g.replace(i, {rest})});
        if (!sub) return std::nullopt;
        ProofTree side = closed({fg.focus, g.replace(i, {ax})},
                                detail::weaken_to(g.replace(i, {ax}), ax, ProofTree{rules::Bot, Hypersequent{ax}, {}, {}}));
        ProofTree n{rules::M, fg, {}, {}};
        edge(n, fh(*sub));
        edge(n, fh(side));
        n.premises = {std::move(*sub), std::move(side)};
        return n;
      }
      if (!atomic_valid_l(g).valid) return std::nullopt;
      if (opts_.stats) ++opts_.stats->semantic_closures;
      return ProofTree{rules::Closure, fg, {}, Json{{"lp", "infeasible"}}};
    }
    for (Keep keep : {Keep::First, Keep::Second}) {
      FocusedHypersequent next = apply_s_prime(fg, surplus_left.front(), surplus_right.front(), keep);
      if (auto sub = atomic(next)) return node1(rules::SPrime, fg, std::move(*sub));
    }
    return std::nullopt;
  }

  Dialect d_;
  const SearchOptions& opts_;
  std::optional<std::mt19937_64> rng_;
};

Verdict prove_focused(const FocusedHypersequent& g, CalculusId calc, const SearchOptions& opts) {
  const Dialect d = dialect_of(calc);
  for (const auto& s : g.body.components)
    for (const auto* side : {&s.left, &s.right})
      for (const auto& f : *side) check_dialect(f, d);
  FocusedHypersequent n{g.focus, normalize(g.body, calc)};
  FocusedEngine e(d, opts);
  auto r = e.run(n);
  if (auto* t = std::get_if<ProofTree>(&r)) return Verdict::proved(std::move(*t));
  Valuation v = std::get<Valuation>(std::move(r));
  detail::complete_valuation(v, variables(g.body));
  if (holds(g.body, v) || holds(n.body, v))
    throw std::logic_error("extracted countermodel does not refute " + render(g));
  return Verdict::refuted(std::move(v));
}

CheckResult check_focused(const ProofTree& pt, CalculusId calc, std::vector<std::size_t>& path) {
  const Dialect d = dialect_of(calc);
  const auto* c = std::get_if<FocusedHypersequent>(&pt.conclusion);
  if (!c) return {false, "conclusion is not a focused hypersequent", path};
  std::vector<FocusedHypersequent> prem;
  for (const auto& p : pt.premises) {
    const auto* h = std::get_if<FocusedHypersequent>(&p.conclusion);
    if (!h) return {false, "premise is not a focused hypersequent", path};
    prem.push_back(*h);
  }
  auto fail = [&](const std::string& why) { return CheckResult{false, why + " at " + render(*c), path}; };
  if (pt.rule == rules::Shift) {
    if (prem.size() != 1) return fail("shift expects one premise");
    if (prem[0].body != c->body) return fail("shift must not change the hypersequent");
    if (!mentions(c->body, prem[0].focus)) return fail("new focus does not occur");
    if (mentions(c->body, c->focus)) return fail("old focus still occurs");
  } else if (pt.rule == rules::SPrime) {
    if (prem.size() != 1) return fail("S' expects one premise");
    bool ok = false;
    for (std::size_t i = 0; i < c->body.size() && !ok; ++i)
      for (std::size_t j = 0; j < c->body.size() && !ok; ++j)
        for (Keep k : {Keep::First, Keep::Second}) {
          if (i == j) continue;
          try {
            if (apply_s_prime(*c, i, j, k) == prem[0]) ok = true;
          } catch (const std::invalid_argument&) {
          }
        }
    if (!ok) return fail("premise is not an S' instance");
  } else {
    if (pt.rule == rules::EC || pt.rule == rules::S) return fail("rule " + pt.rule + " is not part of this calculus");
    for (const auto& p : prem)
      if (p.focus != c->focus) return fail("focus changed outside shift");
    std::vector<Hypersequent> bodies;
    for (const auto& p : prem) bodies.push_back(p.body);
    std::string err;
    try {
      err = detail::check_hyper_step(pt.rule, c->body, bodies, pt.certificate, d);
    } catch (const std::exception& ex) {
      err = ex.what();
    }
    if (!err.empty()) return fail(err);
  }
  for (std::size_t i = 0; i < pt.premises.size(); ++i) {
    path.push_back(i);
    auto r = check_focused(pt.premises[i], calc, path);
    if (!r.ok) return r;
    path.pop_back();
  }
  return {};
}

}  // namespace

Verdict prove_ga_t(const FocusedHypersequent& g, const SearchOptions& opts) {
  return prove_focused(g, CalculusId::GA_t, opts);
}

Verdict prove_gl_t(const FocusedHypersequent& g, const SearchOptions& opts) {
  return prove_focused(g, CalculusId::GL_t, opts);
}

CheckResult check_focused_proof(const ProofTree& pt, CalculusId calculus) {
  std::vector<std::size_t> path;
  return check_focused(pt, calculus, path);
}

}  // namespace hyperlog
