#include "hyperlog/labelled.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

namespace hyperlog {

namespace {

// One atom of a labelled inequation: coefficient-1 variable or a constant.
struct Term {
  Label label;
  std::string var;  // empty for constants
  Rational constant = 0;
};

struct Work {
  std::vector<Term> left, right;
  Rel rel = Rel::Gt;
};

std::vector<Term> to_terms(const LabelledMultiset& xs, Model model) {
  std::vector<Term> out;
  for (const auto& lf : xs) {
    const Formula& f = lf.formula;
    if (f.is_var())
      out.push_back({lf.label, f.name(), 0});
    else if (f.is(Kind::Top))
      out.push_back({lf.label, "", 0});
    else if (f.is(Kind::Bot) && model == Model::UnitIntervalL)
      out.push_back({lf.label, "", -1});
    else
      throw std::invalid_argument("labelled inequation must be atomic: " + render(lf));
  }
  return out;
}

std::vector<std::string> atoms_of(const Work& w) {
  std::vector<std::string> out;
  for (const auto* side : {&w.left, &w.right})
    for (const auto& t : *side) out.insert(out.end(), t.label.atoms.begin(), t.label.atoms.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LinExpr to_expr(const std::vector<Term>& ts) {
  LinExpr e;
  for (const auto& t : ts) {
    if (t.var.empty())
      e.constant += t.constant;
    else
      e.add(t.var, 1);
  }
  return e;
}

std::vector<Label> labels_of(const std::vector<LabelledInequation>& ineqs) {
  std::vector<Label> out;
  for (const auto& q : ineqs)
    for (const auto* side : {&q.left, &q.right})
      for (const auto& lf : *side) out.push_back(lf.label);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

LabelTree reconstruct_tree(const std::vector<LabelledInequation>& ineqs) {
  const auto labels = labels_of(ineqs);
  std::map<std::string, std::vector<std::size_t>> occ;  // atom -> labels containing it
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (const auto& a : labels[i].atoms) occ[a].push_back(i);
  // Rank: atoms in more labels first, then by name; ancestors precede descendants.
  std::vector<std::string> order;
  for (const auto& [a, _] : occ) order.push_back(a);
  auto rank_less = [&](const std::string& a, const std::string& b) {
    if (occ[a].size() != occ[b].size()) return occ[a].size() > occ[b].size();
    return a < b;
  };
  std::sort(order.begin(), order.end(), rank_less);
  LabelTree tree;
  for (std::size_t j = 0; j < order.size(); ++j) {
    const auto& b = order[j];
    std::string parent;
    for (std::size_t i = 0; i < j; ++i) {
      const auto& a = order[i];
      if (std::includes(occ[a].begin(), occ[a].end(), occ[b].begin(), occ[b].end())) parent = a;
    }
    tree.add(b, parent);
  }
  for (const auto& l : labels)
    if (!tree.is_path(l)) throw std::invalid_argument("label " + render(l) + " is not a path of a label tree");
  return tree;
}

LinSystem reduce_label_regular(const std::vector<LabelledInequation>& ineqs, Model model) {
  return reduce_label_regular(ineqs, reconstruct_tree(ineqs), model);
}

LinSystem reduce_label_regular(const std::vector<LabelledInequation>& ineqs, const LabelTree& tree, Model model) {
  std::map<std::string, std::string> parent;
  std::map<std::string, std::size_t> owner;
  std::vector<Work> todo;
  for (std::size_t i = 0; i < ineqs.size(); ++i) {
    const auto& q = ineqs[i];
    Work w{to_terms(q.left, model), to_terms(q.right, model), q.rel};
    for (const auto* side : {&w.left, &w.right})
      for (const auto& t : *side)
        if (!tree.is_path(t.label))
          throw std::invalid_argument("inequation is not label-regular at label " + render(t.label));
    for (const auto& a : atoms_of(w)) {
      auto [it, fresh] = owner.emplace(a, i);
      if (!fresh && it->second != i) throw std::invalid_argument("atomic label " + a + " occurs in two inequations");
      parent[a] = tree.parent(a);
    }
    todo.push_back(std::move(w));
  }
  const std::size_t n = parent.size(), m = ineqs.size();
  std::reverse(todo.begin(), todo.end());
  std::vector<Work> done;
  while (!todo.empty()) {
    Work w = std::move(todo.back());
    todo.pop_back();
    std::string x;
    for (const auto& a : atoms_of(w))
      if (parent.at(a).empty()) {
        x = a;
        break;
      }
    if (x.empty()) {
      if (!atoms_of(w).empty()) throw std::logic_error("label reduction: no maximal label");
      done.push_back(std::move(w));
      continue;
    }
    const Term lam{Label::unit(), std::string(kLambdaPrefix) + x, 0};
    Work s1{{}, {}, w.rel}, s2{{}, {}, Rel::Ge}, s3{{}, {lam}, Rel::Ge};
    auto split = [&](const std::vector<Term>& ts, std::vector<Term>& keep, std::vector<Term>& strip) {
      for (const auto& t : ts) {
        if (t.label.contains(x))
          strip.push_back({t.label.without(x), t.var, t.constant});
        else
          keep.push_back(t);
      }
    };
    split(w.left, s1.left, s2.left);
    split(w.right, s1.right, s2.right);
    s1.left.push_back(lam);
    s2.right.push_back(lam);
    for (auto& [c, p] : parent)
      if (p == x) p.clear();
    parent.erase(x);
    done.push_back(std::move(s3));
    todo.push_back(std::move(s1));
    todo.push_back(std::move(s2));
  }
  if (done.size() != 2 * n + m)
    throw std::logic_error("label reduction produced " + std::to_string(done.size()) + " rows, expected 2n+m");
  LinSystem sys;
  for (const auto& w : done) sys.add(to_expr(w.left), w.rel, to_expr(w.right));
  return sys;
}

// ---------------------------------------------------------------------------
// (success)

namespace {

Sequent strip_top(Sequent s) {
  auto drop = [](Multiset& xs) {
    xs.erase(std::remove_if(xs.begin(), xs.end(), [](const Formula& f) { return f.is(Kind::Top); }), xs.end());
  };
  drop(s.left);
  drop(s.right);
  return s;
}

std::vector<std::string> formula_variables(const LabelledSequent& s) {
  std::vector<std::string> vars;
  for (const auto* side : {&s.left, &s.right})
    for (const auto& lf : *side) collect_variables(lf.formula, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

// Labelling functions and multiplicities from a certificate on the distinct images.
// Column generation: the λ certificate is sought over a growing set of
// functions; a refutation of the current images prices the next function by a
// best-subtree pass over the label tree.
std::vector<WeightedLabelling> recover_functions(const LabelledSequent& s, Dialect d, const LabelTree& tree) {
  const auto labels = s.atomic_labels();
  const Model model = d == Dialect::Abelian ? Model::Q : Model::UnitIntervalL;
  std::map<std::string, std::size_t> depth;
  for (const auto& a : labels) {
    std::size_t k = 0;
    for (std::string x = a; !x.empty(); x = tree.parent(x)) ++k;
    depth[a] = k;
  }
  auto node_of = [&](const Label& l) {
    std::string best;
    for (const auto& a : l.atoms)
      if (best.empty() || depth.at(a) > depth.at(best)) best = a;
    return best;
  };
  std::vector<Sequent> images;
  std::vector<LabellingFunction> witness;
  LabellingFunction all;
  for (const auto& a : labels) all[a] = true;
  images.push_back(strip_top(apply_labelling(all, s)));
  witness.push_back(all);
  for (std::size_t round = 0; round < 100000; ++round) {
    Hypersequent h(images);
    auto lam = d == Dialect::Abelian ? lambda_certificate(h) : lambda_certificate_l(h);
    if (lam) {
      std::vector<WeightedLabelling> out;
      for (std::size_t i = 0; i < h.size(); ++i) {
        if ((*lam)[i] == 0) continue;
        auto it = std::find(images.begin(), images.end(), h.components[i]);
        out.push_back({witness[static_cast<std::size_t>(it - images.begin())], (*lam)[i]});
      }
      return out;
    }
    auto res = feasible(refutation_system(h, model));
    if (!res.feasible) throw std::logic_error("images have neither a certificate nor a refutation");
    auto value = [&](const Formula& f) -> Rational {
      if (f.is(Kind::Bot)) return Rational(-1);
      if (!f.is_var()) return Rational(0);
      auto it = res.witness.find(f.name());
      return it == res.witness.end() ? Rational(0) : it->second;
    };
    std::map<std::string, Rational> weight;  // "" = root
    for (const auto& lf : s.right) weight[node_of(lf.label)] += value(lf.formula);
    for (const auto& lf : s.left) weight[node_of(lf.label)] -= value(lf.formula);
    std::map<std::string, Rational> best;
    std::function<Rational(const std::string&)> solve = [&](const std::string& x) {
      Rational b = weight[x];
      for (const auto& c : tree.children(x)) {
        Rational sub = solve(c);
        if (sub > 0) b += sub;
      }
      best[x] = b;
      return b;
    };
    if (solve("") < 0) throw std::logic_error("labelled sequent is refuted although the reduced system is infeasible");
    LabellingFunction f;
    for (const auto& a : labels) f[a] = false;
    std::function<void(const std::string&)> pick = [&](const std::string& x) {
      for (const auto& c : tree.children(x))
        if (best[c] > 0) {
          f[c] = true;
          pick(c);
        }
    };
    pick("");
    Sequent img = strip_top(apply_labelling(f, s));
    if (std::find(images.begin(), images.end(), img) != images.end())
      throw std::logic_error("column generation repeated an image");
    images.push_back(std::move(img));
    witness.push_back(std::move(f));
  }
  throw std::logic_error("column generation did not converge");
}

}  // namespace

bool certificate_holds(const LabelledSequent& s, const std::vector<WeightedLabelling>& fs, Dialect d) {
  if (fs.empty()) return false;
  Sequent all;
  for (const auto& w : fs) {
    if (w.multiplicity <= 0) return false;
    all = merge(all, scale(strip_top(apply_labelling(w.f, s)), w.multiplicity.get_ui()));
  }
  return d == Dialect::Abelian ? all.left == all.right : subset_star(all.right, all.left);
}

SuccessResult success_check(const LabelledSequent& s, Dialect d) {
  LabelledInequation q{s.left, s.right, Rel::Gt};
  return success_check(s, d, reconstruct_tree({q}));
}

SuccessResult success_check(const LabelledSequent& s, Dialect d, const LabelTree& tree) {
  if (!s.atomic()) throw std::invalid_argument("success needs an atomic labelled sequent: " + render(s));
  const Model model = d == Dialect::Abelian ? Model::Q : Model::UnitIntervalL;
  LinSystem sys = reduce_label_regular({LabelledInequation{s.left, s.right, Rel::Gt}}, tree, model);
  SuccessResult out;
  out.reduced_rows = sys.rows.size();
  const auto vars = formula_variables(s);
  if (model == Model::UnitIntervalL)
    for (const auto& v : vars) sys.bound(v, Rational(-1), Rational(0));
  auto res = feasible(sys);
  const auto labels = s.atomic_labels();
  if (res.feasible) {
    Valuation v;
    v.model = model;
    for (const auto& name : vars) {
      auto it = res.witness.find(name);
      v.set(name, it == res.witness.end() ? Rational(0) : it->second);
    }
    if (labels.size() <= 20 && holds(s, v))
      throw std::logic_error("reduced-system witness does not refute " + render(s));
    out.countermodel = std::move(v);
    return out;
  }
  out.success = true;
  out.functions = recover_functions(s, d, tree);
  if (!certificate_holds(s, out.functions, d))
    throw std::logic_error("recovered labelling functions fail the success condition");
  out.certificate = {{"rows", out.reduced_rows}, {"engine", res.engine}};
  if (!out.functions.empty()) out.certificate["functions"] = to_json(out.functions);
  return out;
}

Json to_json(const std::vector<WeightedLabelling>& fs) {
  Json arr = Json::array();
  for (const auto& w : fs) {
    Json f = Json::object();
    for (const auto& [k, b] : w.f) f[k] = b ? 1 : 0;
    arr.push_back({{"f", f}, {"n", w.multiplicity.get_str()}});
  }
  return arr;
}

std::vector<WeightedLabelling> labellings_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("labelling functions must be an array");
  std::vector<WeightedLabelling> out;
  for (const auto& e : j) {
    if (!e.is_object() || !e.contains("f") || !e.contains("n") || !e["f"].is_object() || !e["n"].is_string())
      throw std::invalid_argument("malformed labelling function");
    WeightedLabelling w;
    for (const auto& [k, v] : e["f"].items()) {
      if (!v.is_number_integer() || (v != 0 && v != 1)) throw std::invalid_argument("labels map to 0 or 1");
      w.f[k] = v == 1;
    }
    w.multiplicity = Integer(e["n"].get<std::string>());
    out.push_back(std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Logical rules on labelled sequents

namespace {

enum class Mode { GA_l, GL_l, GA_i };

Dialect dialect_of(Mode m) { return m == Mode::GL_l ? Dialect::Lukasiewicz : Dialect::Abelian; }

std::string rule_name(Kind k, bool left) {
  std::string base;
  switch (k) {
    case Kind::Top: base = "t"; break;
    case Kind::Neg: base = "neg"; break;
    case Kind::Plus: base = "plus"; break;
    case Kind::Arrow: base = "arrow"; break;
    case Kind::PosArrow: base = "imp"; break;
    case Kind::And: base = "and"; break;
    case Kind::Or: base = "or"; break;
    default: return "";
  }
  return base + (left ? "-l" : "-r");
}

bool has_rule(Kind k, Mode m) {
  if (m == Mode::GL_l) return k == Kind::PosArrow;
  return !rule_name(k, true).empty();
}

bool introduces_label(Kind k, bool left, Mode m) {
  if (k == Kind::PosArrow) return left;
  if (m != Mode::GA_l) return false;
  return (k == Kind::And && left) || (k == Kind::Or && !left);
}

bool branches(Kind k, bool left) {
  return (k == Kind::PosArrow && !left) || (k == Kind::And && !left) || (k == Kind::Or && left);
}

struct Occ {
  bool left;
  LabelledFormula lf;
};

// Premises of the rule with principal `o`; y is the fresh atomic label for
// label-introducing rules.
std::vector<LabelledSequent> premises(const LabelledSequent& s, const Occ& o, const std::string& y, Mode m) {
  LabelledMultiset l = s.left, r = s.right;
  Multiset st = s.store;
  (o.left ? l : r) = lms_erase_one(o.left ? l : r, o.lf);
  const Label& x = o.lf.label;
  const Label xy = y.empty() ? x : x.with(y);
  const Formula& f = o.lf.formula;
  auto mk = [&](std::vector<LabelledFormula> addl, std::vector<LabelledFormula> addr, Multiset adds = {}) {
    LabelledMultiset nl = l, nr = r;
    for (auto& e : addl) nl.push_back(std::move(e));
    for (auto& e : addr) nr.push_back(std::move(e));
    return LabelledSequent(std::move(nl), std::move(nr), ms_sum(st, ms_make(std::move(adds))));
  };
  switch (f.kind()) {
    case Kind::Top:
      return {mk({}, {})};
    case Kind::Neg:
      return o.left ? std::vector{mk({}, {{x, f.lhs()}})} : std::vector{mk({{x, f.lhs()}}, {})};
    case Kind::Plus:
      return o.left ? std::vector{mk({{x, f.lhs()}, {x, f.rhs()}}, {})}
                    : std::vector{mk({}, {{x, f.lhs()}, {x, f.rhs()}})};
    case Kind::Arrow:
      return o.left ? std::vector{mk({{x, f.rhs()}}, {{x, f.lhs()}})} : std::vector{mk({{x, f.lhs()}}, {{x, f.rhs()}})};
    case Kind::PosArrow:
      if (o.left) {
        Multiset store;
        if (m == Mode::GA_i) store.push_back(imp(f.rhs(), f.lhs()));
        return {mk({{xy, f.rhs()}}, {{xy, f.lhs()}}, store)};
      }
      return {mk({{x, f.lhs()}}, {{x, f.rhs()}}), mk({}, {})};
    case Kind::And:
      if (!o.left) return {mk({}, {{x, f.lhs()}}), mk({}, {{x, f.rhs()}})};
      if (m == Mode::GA_i) return {mk({{x, f.lhs()}, {x, imp(f.lhs(), f.rhs())}}, {})};
      return {mk({{x, f.lhs()}, {xy, f.rhs()}}, {{xy, f.lhs()}})};
    case Kind::Or:
      if (o.left) return {mk({{x, f.lhs()}}, {}), mk({{x, f.rhs()}}, {})};
      if (m == Mode::GA_i) return {mk({{x, imp(f.rhs(), f.lhs())}}, {{x, f.lhs()}})};
      return {mk({{xy, f.lhs()}}, {{x, f.lhs()}, {xy, f.rhs()}})};
    default:
      throw DialectError("no labelled rule for '" + render_formula(f) + "'");
  }
}

// Distinct compound occurrences, left side first.
std::vector<Occ> compound(const LabelledSequent& s) {
  std::vector<Occ> out;
  for (bool left : {true, false}) {
    const auto& side = left ? s.left : s.right;
    for (std::size_t i = 0; i < side.size(); ++i) {
      const Formula& f = side[i].formula;
      if (f.is_atom() && !f.is(Kind::Top)) continue;
      if (i > 0 && side[i] == side[i - 1]) continue;
      out.push_back({left, side[i]});
    }
  }
  return out;
}

// Atom of x deepest in the tree (root "" for the unit label).
std::string deepest(const Label& x, const LabelTree& tree) {
  std::string best;
  std::size_t best_depth = 0;
  for (const auto& a : x.atoms) {
    std::size_t depth = 0;
    for (std::string cur = a; !cur.empty(); cur = tree.parent(cur)) ++depth;
    if (depth > best_depth) {
      best_depth = depth;
      best = a;
    }
  }
  return best;
}

std::size_t ecc(const Formula& f) {
  if (f.is_atom()) return f.is(Kind::Top) ? 1 : 0;
  if (f.arity() == 1) return 1 + ecc(f.lhs());
  if (f.is(Kind::And) || f.is(Kind::Or)) return 2 + 2 * ecc(f.lhs()) + ecc(f.rhs());
  return 1 + ecc(f.lhs()) + ecc(f.rhs());
}

class LabelledEngine {
 public:
  LabelledEngine(Mode mode, const SearchOptions& opts, std::size_t bound)
      : mode_(mode), opts_(opts), bound_(bound) {
    if (opts.shuffle_seed) rng_.emplace(*opts.shuffle_seed);
  }

  struct Result {
    std::optional<ProofTree> proof;
    std::optional<Valuation> countermodel;
  };

  Result run(const LabelledSequent& s) { return search(s, LabelTree{}, 0, 0); }

 private:
  std::optional<Occ> choose(const LabelledSequent& s) {
    std::vector<Occ> tiers[3];
    for (auto& o : compound(s)) {
      Kind k = o.lf.formula.kind();
      if (!has_rule(k, mode_)) throw DialectError("no labelled rule for '" + render_formula(o.lf.formula) + "'");
      int tier = branches(k, o.left) ? 1 : 0;
      if (mode_ == Mode::GA_i && k == Kind::PosArrow && o.left) tier = 2;
      tiers[tier].push_back(std::move(o));
    }
    for (auto& t : tiers) {
      if (t.empty()) continue;
      if (rng_) return t[std::uniform_int_distribution<std::size_t>(0, t.size() - 1)(*rng_)];
      return t.front();
    }
    return std::nullopt;
  }

  Result search(const LabelledSequent& s, const LabelTree& tree, std::size_t depth, std::size_t intros) {
    opts_.deadline.check();
    auto o = choose(s);
    if (!o) return leaf(s, tree, depth, intros);
    const Kind k = o->lf.formula.kind();
    std::string y;
    LabelTree next = tree;
    if (introduces_label(k, o->left, mode_)) {
      y = "x" + std::to_string(++fresh_);
      next.add(y, deepest(o->lf.label, tree));
      ++intros;
    }
    if (opts_.stats) ++opts_.stats->rule_applications;
    ProofTree pt{rule_name(k, o->left), s, {}, nullptr};
    for (const auto& p : premises(s, *o, y, mode_)) {
      auto r = search(p, next, depth + 1, intros);
      if (!r.proof) return r;
      pt.premises.push_back(std::move(*r.proof));
    }
    return {std::move(pt), std::nullopt};
  }

  Result leaf(const LabelledSequent& s, const LabelTree& tree, std::size_t depth, std::size_t intros) {
    auto res = success_check(s, dialect_of(mode_), tree);
    if (auto* st = opts_.stats) {
      ++st->labelled_leaves;
      st->max_branch_rules = std::max(st->max_branch_rules, depth);
      st->max_atomic_labels = std::max(st->max_atomic_labels, tree.size());
      st->max_reduced_rows = std::max(st->max_reduced_rows, res.reduced_rows);
      if (tree.size() != intros) ++st->label_introductions_mismatch;
      if (depth > bound_) {
        ++st->branch_bound_violations;
        st->note("branch of " + std::to_string(depth) + " rules exceeds bound " + std::to_string(bound_));
      }
      if (res.reduced_rows > 2 * bound_ + 1) ++st->reduced_rows_violations;
    }
    if (opts_.trace)
      opts_.trace->push_back({{"leaf", render(s)}, {"rules", depth}, {"labels", tree.size()},
                              {"rows", res.reduced_rows}, {"success", res.success}});
    if (!res.success) return {std::nullopt, std::move(res.countermodel)};
    return {ProofTree{rules::Success, s, {}, std::move(res.certificate)}, std::nullopt};
  }

  Mode mode_;
  const SearchOptions& opts_;
  std::size_t bound_;
  std::size_t fresh_ = 0;
  std::optional<std::mt19937_64> rng_;
};

Verdict prove_labelled(const Sequent& goal, Mode mode, const SearchOptions& opts) {
  const Dialect d = dialect_of(mode);
  for (const auto* side : {&goal.left, &goal.right})
    for (const auto& f : *side) check_dialect(f, d);
  const CalculusId calc = mode == Mode::GL_l ? CalculusId::GL_l : mode == Mode::GA_i ? CalculusId::GA_i : CalculusId::GA_l;
  Sequent n = normalize(goal, calc);
  LabelledEngine e(mode, opts, labelled_branch_bound(n));
  auto r = e.run(LabelledSequent::lift(n));
  if (r.proof) return Verdict::proved(std::move(*r.proof));
  Valuation v = std::move(*r.countermodel);
  std::vector<std::string> vars;
  for (const auto* side : {&goal.left, &goal.right})
    for (const auto& f : *side) collect_variables(f, vars);
  for (const auto& x : vars)
    if (!v.values.count(x)) v.set(x, 0);
  if (holds(goal, v) || holds(n, v)) throw std::logic_error("extracted countermodel does not refute " + render(goal));
  return Verdict::refuted(std::move(v));
}

}  // namespace

std::size_t labelled_branch_bound(const Sequent& s) {
  std::size_t n = 0;
  for (const auto* side : {&s.left, &s.right})
    for (const auto& f : *side) n += ecc(f);
  return n;
}

Verdict prove_ga_l(const Sequent& s, const SearchOptions& opts) { return prove_labelled(s, Mode::GA_l, opts); }
Verdict prove_gl_l(const Sequent& s, const SearchOptions& opts) { return prove_labelled(s, Mode::GL_l, opts); }
Verdict prove_ga_i(const Sequent& s, const SearchOptions& opts) { return prove_labelled(s, Mode::GA_i, opts); }

// ---------------------------------------------------------------------------
// Checking

namespace {

bool premises_match(const std::vector<LabelledSequent>& want, const std::vector<LabelledSequent>& got) {
  if (want.size() != got.size()) return false;
  if (want == got) return true;
  return want.size() == 2 && want[0] == got[1] && want[1] == got[0];
}

std::string check_node(const ProofTree& pt, Mode m) {
  const auto* c = std::get_if<LabelledSequent>(&pt.conclusion);
  if (!c) return "conclusion is not a labelled sequent";
  const Dialect d = dialect_of(m);
  for (const auto* side : {&c->left, &c->right})
    for (const auto& lf : *side) check_dialect(lf.formula, d);
  if (m != Mode::GA_i && !c->store.empty()) return "store is only used in GA_i";
  std::vector<LabelledSequent> prem;
  for (const auto& p : pt.premises) {
    const auto* h = std::get_if<LabelledSequent>(&p.conclusion);
    if (!h) return "premise is not a labelled sequent";
    prem.push_back(*h);
  }
  if (pt.rule == rules::Success) {
    if (!prem.empty()) return "success has no premises";
    if (!c->atomic()) return "success needs an atomic sequent";
    SuccessResult r;
    try {
      r = success_check(*c, d);
    } catch (const std::invalid_argument& ex) {
      return std::string("success: ") + ex.what();
    }
    if (!r.success) return "success: the labelled inequation is consistent";
    if (pt.certificate.is_object() && pt.certificate.contains("functions")) {
      auto fs = labellings_from_json(pt.certificate["functions"]);
      for (const auto& w : fs)
        for (const auto& a : c->atomic_labels())
          if (!w.f.count(a)) return "labelling function leaves " + a + " unassigned";
      if (!certificate_holds(*c, fs, d)) return "success: labelling functions do not balance";
    }
    return "";
  }
  if (pt.rule == rules::WImp) {
    if (prem.size() != 1) return "W=> has one premise";
    const auto& p = prem[0];
    if (p.right != c->right || p.store != c->store) return "W=> changes only the left side";
    LabelledMultiset extra;
    std::set_difference(c->left.begin(), c->left.end(), p.left.begin(), p.left.end(), std::back_inserter(extra));
    if (extra.size() != 1 || c->left.size() != p.left.size() + 1 || !extra[0].formula.is(Kind::PosArrow))
      return "W=> removes exactly one ⇒-formula";
    return "";
  }
  for (const auto& o : compound(*c)) {
    const Kind k = o.lf.formula.kind();
    if (!has_rule(k, m) || rule_name(k, o.left) != pt.rule) continue;
    std::string y;
    if (introduces_label(k, o.left, m)) {
      if (prem.size() != 1) continue;
      auto before = c->atomic_labels(), after = prem[0].atomic_labels();
      std::vector<std::string> fresh;
      std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(fresh));
      if (fresh.size() != 1) continue;
      y = fresh[0];
      if (m == Mode::GA_i) {
        bool delta_atomic = std::all_of(c->right.begin(), c->right.end(),
                                        [](const LabelledFormula& lf) { return lf.formula.is_atom(); });
        bool gamma_ok = std::all_of(c->left.begin(), c->left.end(), [](const LabelledFormula& lf) {
          return lf.formula.is_atom() || lf.formula.is(Kind::PosArrow);
        });
        if (!delta_atomic || !gamma_ok) return "imp-l side conditions fail in GA_i";
      }
    }
    if (premises_match(premises(*c, o, y, m), prem)) return "";
  }
  return "no instance of " + pt.rule + " matches";
}

CheckResult check_rec(const ProofTree& pt, Mode m, std::vector<std::size_t>& path) {
  std::string err;
  try {
    err = check_node(pt, m);
  } catch (const std::exception& ex) {
    err = ex.what();
  }
  if (!err.empty()) return {false, err + " at " + render(pt.conclusion), path};
  for (std::size_t i = 0; i < pt.premises.size(); ++i) {
    path.push_back(i);
    auto r = check_rec(pt.premises[i], m, path);
    if (!r.ok) return r;
    path.pop_back();
  }
  return {};
}

}  // namespace

CheckResult check_labelled_proof(const ProofTree& pt, CalculusId calculus) {
  std::vector<std::size_t> path;
  if (calculus == CalculusId::GA_i) return check_rec(pt, Mode::GA_i, path);
  if (calculus != CalculusId::GA_l && calculus != CalculusId::GL_l)
    return {false, "not a labelled calculus", path};
  return check_rec(pt, calculus == CalculusId::GA_l ? Mode::GA_l : Mode::GL_l, path);
}

CheckResult check_gai_proof(const ProofTree& pt) { return check_labelled_proof(pt, CalculusId::GA_i); }

}  // namespace hyperlog
