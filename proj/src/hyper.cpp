#include "hyperlog/hyper.hpp"

#include <algorithm>
#include <map>

#include "hyper_rules.hpp"
#include "hyperlog/labelled.hpp"
#include "hyperlog/single.hpp"
#include "hyperlog/terminating.hpp"

namespace hyperlog {

namespace detail {

std::string logical_rule_name(Kind k, bool left, Dialect d) {
  std::string base;
  if (d == Dialect::Abelian) {
    switch (k) {
      case Kind::Top: base = "t"; break;
      case Kind::Neg: base = "neg"; break;
      case Kind::Arrow: base = "arrow"; break;
      case Kind::Plus: base = "plus"; break;
      case Kind::And: base = "and"; break;
      case Kind::Or: base = "or"; break;
      default: break;
    }
  } else {
    switch (k) {
      case Kind::PosArrow: base = "imp"; break;
      case Kind::And: base = "and"; break;
      case Kind::Or: base = "or"; break;
      default: break;
    }
  }
  if (base.empty()) return base;
  return base + (left ? "-l" : "-r");
}

bool duplicates_context(Kind k, bool left, Dialect d) {
  return (k == Kind::And && left) || (k == Kind::Or && !left) ||
         (d == Dialect::Lukasiewicz && k == Kind::PosArrow && left);
}

std::vector<Occurrence> compound_occurrences(const Hypersequent& g) {
  std::vector<Occurrence> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (bool left : {true, false}) {
      const Multiset& side = left ? g.components[i].left : g.components[i].right;
      for (std::size_t k = 0; k < side.size(); ++k) {
        if (side[k].is_atom() && !side[k].is(Kind::Top)) continue;
        if (k > 0 && side[k] == side[k - 1]) continue;
        out.push_back({i, left, side[k]});
      }
    }
  }
  return out;
}

namespace {

Sequent extend(const Multiset& gamma, const Multiset& delta, std::vector<Formula> l, std::vector<Formula> r) {
  Sequent s;
  s.left = ms_sum(gamma, ms_make(std::move(l)));
  s.right = ms_sum(delta, ms_make(std::move(r)));
  return s;
}

}  // namespace

std::vector<Hypersequent> logical_premises(const Hypersequent& g, const Occurrence& o, Dialect d) {
  const Sequent& c = g.components.at(o.component);
  Multiset gam = c.left, del = c.right;
  if (o.left)
    gam = ms_erase_one(gam, o.formula);
  else
    del = ms_erase_one(del, o.formula);
  const Formula& f = o.formula;
  auto one = [&](std::vector<Sequent> comps) { return std::vector<Hypersequent>{g.replace(o.component, comps)}; };
  auto two = [&](Sequent a, Sequent b) {
    return std::vector<Hypersequent>{g.replace(o.component, {std::move(a)}), g.replace(o.component, {std::move(b)})};
  };
  const bool l = o.left;
  switch (f.kind()) {
    case Kind::Top:
      if (d == Dialect::Abelian) return one({extend(gam, del, {}, {})});
      break;
    case Kind::Neg:
      if (d != Dialect::Abelian) break;
      return l ? one({extend(gam, del, {}, {f.lhs()})}) : one({extend(gam, del, {f.lhs()}, {})});
    case Kind::Arrow:
      if (d != Dialect::Abelian) break;
      return l ? one({extend(gam, del, {f.rhs()}, {f.lhs()})}) : one({extend(gam, del, {f.lhs()}, {f.rhs()})});
    case Kind::Plus:
      if (d != Dialect::Abelian) break;
      return l ? one({extend(gam, del, {f.lhs(), f.rhs()}, {})}) : one({extend(gam, del, {}, {f.lhs(), f.rhs()})});
    case Kind::PosArrow:
      if (d != Dialect::Lukasiewicz) break;
      if (l) return one({extend(gam, del, {f.rhs()}, {f.lhs()}), extend(gam, del, {}, {})});
      return two(extend(gam, del, {f.lhs()}, {f.rhs()}), extend(gam, del, {}, {}));
    case Kind::And:
      if (l) return one({extend(gam, del, {f.lhs()}, {}), extend(gam, del, {f.rhs()}, {})});
      return two(extend(gam, del, {}, {f.lhs()}), extend(gam, del, {}, {f.rhs()}));
    case Kind::Or:
      if (l) return two(extend(gam, del, {f.lhs()}, {}), extend(gam, del, {f.rhs()}, {}));
      return one({extend(gam, del, {}, {f.lhs()}), extend(gam, del, {}, {f.rhs()})});
    default:
      break;
  }
  throw DialectError("no logical rule for '" + render_formula(f) + "' in this calculus");
}

ProofTree weaken_to(const Hypersequent& g, const Sequent& keep, ProofTree leaf) {
  std::vector<Hypersequent> chain;
  Hypersequent cur = g;
  while (cur.size() > 1) {
    std::size_t j = 0;
    while (j < cur.size() && cur.components[j] == keep) ++j;
    if (j == cur.size()) j = 0;
    chain.push_back(cur);
    cur = cur.without(j);
  }
  if (cur.components.front() != keep) throw std::logic_error("weaken_to: component not present");
  ProofTree t = std::move(leaf);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) t = ProofTree{rules::EW, *it, {std::move(t)}, {}};
  return t;
}

namespace {

ProofTree leaf(const char* rule, const Sequent& s) { return ProofTree{rule, Hypersequent{s}, {}, {}}; }

bool is_identity(const Sequent& s) { return s.left.size() == 1 && s.right.size() == 1 && s.left[0] == s.right[0]; }

}  // namespace

std::optional<Step> next_step(const Hypersequent& g, Dialect d, std::mt19937_64* rng) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Sequent& c = g.components[i];
    if (c.empty()) return Step{"", {weaken_to(g, c, leaf(rules::Lambda, c))}, std::nullopt};
    if (is_identity(c)) return Step{"", {weaken_to(g, c, leaf(rules::ID, c))}, std::nullopt};
  }
  for (std::size_t i = 1; i < g.size(); ++i)
    if (g.components[i] == g.components[i - 1]) return Step{rules::EW, {g.without(i)}, std::nullopt};
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Sequent& c = g.components[i];
    for (const auto& f : c.left) {
      if (f.is_atom() || count(c.right, f) == 0) continue;
      Sequent rest{ms_erase_one(c.left, f), ms_erase_one(c.right, f)};
      Sequent id{{f}, {f}};
      Hypersequent side = g.replace(i, {id});
      return Step{rules::M, {g.replace(i, {rest}), weaken_to(side, id, leaf(rules::ID, id))}, std::nullopt};
    }
  }
  auto occs = compound_occurrences(g);
  if (occs.empty()) return std::nullopt;
  std::size_t pick = 0;
  if (rng) pick = std::uniform_int_distribution<std::size_t>(0, occs.size() - 1)(*rng);
  const Occurrence& o = occs[pick];
  std::string name = logical_rule_name(o.formula.kind(), o.left, d);
  if (name.empty()) throw DialectError("no logical rule for '" + render_formula(o.formula) + "' in this calculus");
  Step s{name, {}, o};
  for (auto& h : logical_premises(g, o, d)) s.premises.emplace_back(std::move(h));
  return s;
}

namespace {

std::vector<std::size_t> component_mc(const Sequent& s) {
  std::vector<std::size_t> out;
  for (const auto* side : {&s.left, &s.right})
    for (const auto& f : *side) out.push_back(complexity_cp(f));
  std::sort(out.begin(), out.end());
  return out;
}

// Dershowitz–Manna extension of a strict total order.
template <class T, class Less>
bool dm_less(std::vector<T> x, std::vector<T> y, Less less) {
  for (auto it = x.begin(); it != x.end();) {
    auto jt = std::find(y.begin(), y.end(), *it);
    if (jt != y.end()) {
      y.erase(jt);
      it = x.erase(it);
    } else {
      ++it;
    }
  }
  if (y.empty()) return false;
  return std::all_of(x.begin(), x.end(), [&](const T& a) {
    return std::any_of(y.begin(), y.end(), [&](const T& b) { return less(a, b); });
  });
}

}  // namespace

bool component_measure_less(const Hypersequent& a, const Hypersequent& b) {
  std::vector<std::vector<std::size_t>> x, y;
  for (const auto& s : a.components) x.push_back(component_mc(s));
  for (const auto& s : b.components) y.push_back(component_mc(s));
  return dm_less(x, y, [](const auto& u, const auto& v) { return multiset_less(u, v); });
}

void record_measures(SearchStats* stats, const Hypersequent& conclusion, const std::vector<Premise>& premises,
                     const std::string& rule) {
  if (!stats) return;
  const auto mc = multiset_complexity_mc(conclusion);
  for (const auto& p : premises) {
    const auto* h = std::get_if<Hypersequent>(&p);
    if (!h) continue;
    ++stats->measure_checks;
    if (!multiset_less(multiset_complexity_mc(*h), mc)) {
      ++stats->literal_measure_violations;
      stats->note("mc not decreased by " + rule + ": " + render(conclusion) + "  =>  " + render(*h));
    }
    if (!component_measure_less(*h, conclusion)) {
      ++stats->component_measure_violations;
      stats->note("component measure not decreased by " + rule + ": " + render(conclusion));
    }
  }
}

std::string check_hyper_step(const std::string& rule, const Hypersequent& c, const std::vector<Hypersequent>& p,
                             const Json& certificate, Dialect d) {
  (void)certificate;
  auto arity = [&](std::size_t n) -> std::string {
    if (p.size() != n) return rule + " expects " + std::to_string(n) + " premise(s), found " + std::to_string(p.size());
    return "";
  };
  if (rule == rules::ID || rule == rules::Lambda || rule == rules::Bot) {
    if (auto e = arity(0); !e.empty()) return e;
    if (c.size() != 1) return rule + " conclusion must have one component";
    const Sequent& s = c.components[0];
    if (rule == rules::ID) return is_identity(s) ? "" : "ID conclusion is not A |- A";
    if (rule == rules::Lambda) return s.empty() ? "" : "Lambda conclusion is not |-";
    if (d != Dialect::Lukasiewicz) return "bot axiom is not a rule of this calculus";
    return s.left.size() == 1 && s.left[0].is(Kind::Bot) && s.right.size() == 1 ? "" : "bot conclusion is not bot |- A";
  }
  if (rule == rules::EW) {
    if (auto e = arity(1); !e.empty()) return e;
    if (c.size() == p[0].size() + 1)
      for (std::size_t i = 0; i < c.size(); ++i)
        if (c.without(i) == p[0]) return "";
    return "EW premise is not the conclusion minus one component";
  }
  if (rule == rules::EC) {
    if (auto e = arity(1); !e.empty()) return e;
    if (p[0].size() == c.size() + 1)
      for (std::size_t i = 0; i < p[0].size(); ++i)
        if (p[0].without(i) == c &&
            std::find(c.components.begin(), c.components.end(), p[0].components[i]) != c.components.end())
          return "";
    return "EC premise is not the conclusion with one component duplicated";
  }
  if (rule == rules::S) {
    if (auto e = arity(1); !e.empty()) return e;
    if (p[0].size() + 1 == c.size())
      for (std::size_t j = 1; j < c.size(); ++j)
        for (std::size_t i = 0; i < j; ++i)
          if (c.without(j).without(i).plus(merge(c.components[i], c.components[j])) == p[0]) return "";
    return "S premise does not merge two conclusion components";
  }
  if (rule == rules::M) {
    if (auto e = arity(2); !e.empty()) return e;
    for (std::size_t a = 0; a < p[0].size(); ++a) {
      Hypersequent ctx = p[0].without(a);
      for (std::size_t b = 0; b < p[1].size(); ++b)
        if (p[1].without(b) == ctx && ctx.plus(merge(p[0].components[a], p[1].components[b])) == c) return "";
    }
    return "M conclusion is not the merge of the premises' active components";
  }
  if (rule == rules::IW) {
    if (d != Dialect::Lukasiewicz) return "IW is not a rule of this calculus";
    if (auto e = arity(1); !e.empty()) return e;
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Sequent& s = c.components[i];
      for (const auto& f : s.left)
        if (c.replace(i, {Sequent{ms_erase_one(s.left, f), s.right}}) == p[0]) return "";
    }
    return "IW premise is not the conclusion minus one left formula";
  }
  if (rule == rules::Closure) {
    if (auto e = arity(0); !e.empty()) return e;
    try {
      if (d == Dialect::Abelian) return lambda_certificate(c) ? "" : "closure leaf has no lambda certificate";
      return atomic_valid_l(c).valid ? "" : "closure leaf is refutable";
    } catch (const std::exception& ex) {
      return std::string("closure leaf rejected: ") + ex.what();
    }
  }
  bool known = false;
  for (const auto& o : compound_occurrences(c)) {
    if (logical_rule_name(o.formula.kind(), o.left, d) != rule) continue;
    known = true;
    auto expect = logical_premises(c, o, d);
    if (expect.size() != p.size()) continue;
    if (expect == p) return "";
    if (p.size() == 2 && expect[0] == p[1] && expect[1] == p[0]) return "";
  }
  if (!known) return "no instance of rule '" + rule + "' matches the conclusion";
  return "premises do not match any instance of " + rule;
}

void complete_valuation(Valuation& v, const std::vector<std::string>& vars) {
  for (const auto& x : vars)
    if (!v.values.count(x)) v.set(x, Rational(0));
}

}  // namespace detail

namespace {

using detail::Premise;

ProofTree close_identity(const Sequent& s) {
  if (s.empty()) return ProofTree{rules::Lambda, Hypersequent{s}, {}, {}};
  if (s.left.size() == 1) return ProofTree{rules::ID, Hypersequent{s}, {}, {}};
  const Formula& a = s.left[0];
  Sequent id{{a}, {a}};
  Sequent rest{ms_erase_one(s.left, a), ms_erase_one(s.right, a)};
  return ProofTree{rules::M, Hypersequent{s}, {close_identity(id), close_identity(rest)}, {}};
}

ProofTree close_star(const Sequent& s) {
  Hypersequent h{s};
  if (s.empty()) return ProofTree{rules::Lambda, h, {}, {}};
  for (const auto& a : s.left) {
    if (count(s.right, a) == 0) continue;
    Sequent id{{a}, {a}};
    if (s == id) return ProofTree{rules::ID, h, {}, {}};
    Sequent rest{ms_erase_one(s.left, a), ms_erase_one(s.right, a)};
    return ProofTree{rules::M, h, {ProofTree{rules::ID, Hypersequent{id}, {}, {}}, close_star(rest)}, {}};
  }
  const Formula bot = Formula::bot();
  if (!s.right.empty() && count(s.left, bot) > 0) {
    Sequent ax{{bot}, {s.right[0]}};
    if (s == ax) return ProofTree{rules::Bot, h, {}, {}};
    Sequent rest{ms_erase_one(s.left, bot), ms_erase_one(s.right, s.right[0])};
    return ProofTree{rules::M, h, {ProofTree{rules::Bot, Hypersequent{ax}, {}, {}}, close_star(rest)}, {}};
  }
  if (s.right.empty()) {
    Sequent rest{ms_erase_one(s.left, s.left[0]), {}};
    return ProofTree{rules::IW, h, {close_star(rest)}, {}};
  }
  throw std::logic_error("close_star: " + render(s) + " is not closable");
}

// EW / EC / S steps merging the λ-weighted components into one sequent.
ProofTree merge_by_certificate(const Hypersequent& g, const std::vector<Integer>& lambda,
                               ProofTree (*close)(const Sequent&)) {
  if (lambda.size() != g.size()) throw std::invalid_argument("certificate length does not match the hypersequent");
  std::map<Sequent, Integer> need;
  Integer total = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (lambda[i] < 0) throw std::invalid_argument("negative multiplier");
    need[g.components[i]] += lambda[i];
    total += lambda[i];
  }
  if (total == 0) throw std::invalid_argument("certificate is zero");
  std::vector<std::pair<const char*, Hypersequent>> chain;
  Hypersequent cur = g;
  for (std::size_t i = 0; i < cur.size();) {
    auto& want = need[cur.components[i]];
    std::size_t have = std::count(cur.components.begin(), cur.components.end(), cur.components[i]);
    if (want < have) {
      chain.emplace_back(rules::EW, cur);
      cur = cur.without(i);
      i = 0;
    } else {
      ++i;
    }
  }
  for (const auto& [s, want] : need) {
    while (true) {
      std::size_t have = std::count(cur.components.begin(), cur.components.end(), s);
      if (have == 0 || want <= have) break;
      chain.emplace_back(rules::EC, cur);
      cur = cur.plus(s);
    }
  }
  while (cur.size() > 1) {
    chain.emplace_back(rules::S, cur);
    Sequent m = merge(cur.components[0], cur.components[1]);
    cur = cur.without(1).without(0).plus(m);
  }
  ProofTree t = close(cur.components[0]);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) t = ProofTree{it->first, it->second, {std::move(t)}, {}};
  Json cert = Json::array();
  for (const auto& l : lambda) cert.push_back(l.get_str());
  t.certificate = Json{{"lambda", cert}};
  return t;
}

class Engine {
 public:
  Engine(Dialect d, const SearchOptions& opts) : d_(d), opts_(opts) {
    if (opts.shuffle_seed) rng_.emplace(*opts.shuffle_seed);
  }

  std::variant<ProofTree, Valuation> run(const Hypersequent& g) {
    opts_.deadline.check();
    auto step = detail::next_step(g, d_, rng_ ? &*rng_ : nullptr);
    if (!step) return close_atomic(g);
    if (step->rule.empty()) return std::get<ProofTree>(std::move(step->premises.front()));
    if (opts_.stats) {
      ++opts_.stats->rule_applications;
      if (step->principal) detail::record_measures(opts_.stats, g, step->premises, step->rule);
    }
    ProofTree node{step->rule, g, {}, {}};
    for (auto& p : step->premises) {
      if (auto* t = std::get_if<ProofTree>(&p)) {
        node.premises.push_back(std::move(*t));
        continue;
      }
      auto r = run(std::get<Hypersequent>(p));
      if (auto* v = std::get_if<Valuation>(&r)) return std::move(*v);
      node.premises.push_back(std::get<ProofTree>(std::move(r)));
    }
    return node;
  }

 private:
  std::variant<ProofTree, Valuation> close_atomic(const Hypersequent& g) {
    if (d_ == Dialect::Abelian) {
      auto av = atomic_valid_a(g);
      if (av.valid) return synthesize_closure(g, av.lambda);
      return av.countermodel;
    }
    auto av = atomic_valid_l(g);
    if (av.valid) return synthesize_closure_l(g, av.lambda);
    return av.countermodel;
  }

  Dialect d_;
  const SearchOptions& opts_;
  std::optional<std::mt19937_64> rng_;
};

Verdict prove_hyper(const Hypersequent& g, CalculusId calc, const SearchOptions& opts) {
  const Dialect d = dialect_of(calc);
  for (const auto& s : g.components)
    for (const auto* side : {&s.left, &s.right})
      for (const auto& f : *side) check_dialect(f, d);
  Hypersequent n = normalize(g, calc);
  Engine e(d, opts);
  auto r = e.run(n);
  if (auto* t = std::get_if<ProofTree>(&r)) return Verdict::proved(std::move(*t));
  Valuation v = std::get<Valuation>(std::move(r));
  detail::complete_valuation(v, variables(g));
  if (holds(g, v) || holds(n, v)) throw std::logic_error("extracted countermodel does not refute " + render(g));
  return Verdict::refuted(std::move(v));
}

CheckResult check_tree(const ProofTree& pt, Dialect d, std::vector<std::size_t>& path) {
  const auto* c = std::get_if<Hypersequent>(&pt.conclusion);
  if (!c) return {false, "conclusion is not a hypersequent", path};
  std::vector<Hypersequent> prem;
  for (const auto& p : pt.premises) {
    const auto* h = std::get_if<Hypersequent>(&p.conclusion);
    if (!h) return {false, "premise conclusion is not a hypersequent", path};
    prem.push_back(*h);
  }
  std::string err;
  try {
    err = detail::check_hyper_step(pt.rule, *c, prem, pt.certificate, d);
  } catch (const std::exception& ex) {
    err = ex.what();
  }
  if (!err.empty()) return {false, err + " at " + render(*c), path};
  for (std::size_t i = 0; i < pt.premises.size(); ++i) {
    path.push_back(i);
    auto r = check_tree(pt.premises[i], d, path);
    if (!r.ok) return r;
    path.pop_back();
  }
  return {};
}

}  // namespace

Verdict prove_ga(const Hypersequent& g, const SearchOptions& opts) { return prove_hyper(g, CalculusId::GA, opts); }

Verdict prove_gl(const Hypersequent& g, const SearchOptions& opts) { return prove_hyper(g, CalculusId::GL, opts); }

ProofTree synthesize_closure(const Hypersequent& g, const std::vector<Integer>& lambda) {
  if (!g.atomic()) throw std::invalid_argument("closure synthesis needs an atomic hypersequent");
  Sequent all;
  for (std::size_t i = 0; i < g.size() && i < lambda.size(); ++i)
    if (lambda[i] > 0) all = merge(all, scale(g.components[i], lambda[i].get_ui()));
  if (all.left != all.right) throw std::invalid_argument("lambda is not a certificate for " + render(g));
  return merge_by_certificate(g, lambda, close_identity);
}

ProofTree synthesize_closure_l(const Hypersequent& g, const std::vector<Integer>& lambda) {
  if (!g.atomic()) throw std::invalid_argument("closure synthesis needs an atomic hypersequent");
  Sequent all;
  for (std::size_t i = 0; i < g.size() && i < lambda.size(); ++i)
    if (lambda[i] > 0) all = merge(all, scale(g.components[i], lambda[i].get_ui()));
  if (!subset_star(all.right, all.left)) throw std::invalid_argument("lambda is not a certificate for " + render(g));
  return merge_by_certificate(g, lambda, close_star);
}

CheckResult check_proof(const ProofTree& pt, CalculusId calculus) {
  std::vector<std::size_t> path;
  switch (calculus) {
    case CalculusId::GA:
    case CalculusId::GL:
      return check_tree(pt, dialect_of(calculus), path);
    case CalculusId::GA_t:
    case CalculusId::GL_t:
      return check_focused_proof(pt, calculus);
    case CalculusId::GA_l:
    case CalculusId::GL_l:
      return check_labelled_proof(pt, calculus);
    case CalculusId::GA_i:
      return check_gai_proof(pt);
    case CalculusId::GA_s:
      return check_gas_proof(pt);
    case CalculusId::GL_s:
      return check_gls_proof(pt);
  }
  return {false, "unknown calculus", path};
}

}  // namespace hyperlog
