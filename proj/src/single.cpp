#include "hyperlog/single.hpp"

#include <algorithm>

#include "hyperlog/labelled.hpp"

namespace hyperlog {

// ---------------------------------------------------------------------------
// Checkers

namespace {

Sequent add(Sequent s, std::vector<Formula> l, std::vector<Formula> r) {
  return Sequent(ms_sum(s.left, ms_make(std::move(l))), ms_sum(s.right, ms_make(std::move(r))));
}

Sequent remove(const Sequent& s, bool left, const Formula& f) {
  Sequent out = s;
  (left ? out.left : out.right) = ms_erase_one(left ? s.left : s.right, f);
  return out;
}

// Premises of a GA_s/GŁ_s logical rule with principal f.
std::vector<Sequent> single_premises(const Sequent& c, bool left, const Formula& f) {
  const Sequent rest = remove(c, left, f);
  const Formula& a = f.arity() >= 1 ? f.lhs() : f;
  switch (f.kind()) {
    case Kind::Top:
      return {rest};
    case Kind::Neg:
      return {left ? add(rest, {}, {a}) : add(rest, {a}, {})};
    case Kind::Plus:
      return {left ? add(rest, {a, f.rhs()}, {}) : add(rest, {}, {a, f.rhs()})};
    case Kind::Arrow:
      return {left ? add(rest, {f.rhs()}, {a}) : add(rest, {a}, {f.rhs()})};
    case Kind::PosArrow:
      if (left) return {add(rest, {f.rhs(), imp(f.rhs(), a)}, {a})};
      return {rest, add(rest, {a}, {f.rhs()})};
    case Kind::And:
      if (left) return {add(rest, {a, imp(a, f.rhs())}, {})};
      return {add(rest, {}, {a}), add(rest, {}, {f.rhs()})};
    case Kind::Or:
      if (left) return {add(rest, {a}, {}), add(rest, {f.rhs()}, {})};
      return {add(rest, {imp(f.rhs(), a)}, {a})};
    default:
      return {};
  }
}

Kind rule_kind(const std::string& base) {
  if (base == "t") return Kind::Top;
  if (base == "neg") return Kind::Neg;
  if (base == "plus") return Kind::Plus;
  if (base == "arrow") return Kind::Arrow;
  if (base == "imp") return Kind::PosArrow;
  if (base == "and") return Kind::And;
  if (base == "or") return Kind::Or;
  throw std::invalid_argument("unknown rule " + base);
}

std::string check_single_node(const ProofTree& pt, Dialect d) {
  const auto* c = std::get_if<Sequent>(&pt.conclusion);
  if (!c) return "conclusion is not a sequent";
  for (const auto* side : {&c->left, &c->right})
    for (const auto& f : *side) check_dialect(f, d);
  std::vector<Sequent> p;
  for (const auto& q : pt.premises) {
    const auto* s = std::get_if<Sequent>(&q.conclusion);
    if (!s) return "premise is not a sequent";
    p.push_back(*s);
  }
  const bool luk = d == Dialect::Lukasiewicz;
  const std::string& r = pt.rule;
  if (r == rules::ID) {
    if (!p.empty() || c->left.size() != 1 || c->right.size() != 1 || c->left != c->right) return "ID is A ⊢ A";
    return "";
  }
  if (r == rules::Lambda) return p.empty() && c->empty() ? "" : "Lambda is the empty sequent";
  if (r == rules::Bot) {
    if (!luk) return "bot is not a rule of GA_s";
    if (!p.empty() || c->left.size() != 1 || !c->left[0].is(Kind::Bot) || c->right.size() != 1)
      return "bot axiom is ⊥ ⊢ A";
    return "";
  }
  if (r == rules::W) {
    if (p.size() != 1 || p[0].right != c->right || c->left.size() != p[0].left.size() + 1 ||
        !ms_includes(c->left, p[0].left))
      return "W adds one formula on the left";
    Multiset extra = ms_diff(c->left, p[0].left);
    if (!luk && !extra[0].is(Kind::PosArrow)) return "W adds a ⇒-formula in GA_s";
    return "";
  }
  if (r == rules::C) {
    if (p.size() != 1) return "C has one premise";
    if (!pt.certificate.is_object() || !pt.certificate.contains("n") || !pt.certificate["n"].is_number_integer())
      return "C needs its copy count n";
    auto n = pt.certificate["n"].get<long long>();
    if (n < 1) return "C needs n > 0";
    if (scale(*c, static_cast<std::size_t>(n)) != p[0]) return "C premise is not n copies of the conclusion";
    return "";
  }
  if (r == rules::M) {
    if (p.size() != 2 || merge(p[0], p[1]) != *c) return "M conclusion is not the union of its premises";
    return "";
  }
  auto dash = r.rfind('-');
  if (dash == std::string::npos || (r.substr(dash) != "-l" && r.substr(dash) != "-r")) return "unknown rule " + r;
  const Kind k = rule_kind(r.substr(0, dash));
  if (luk && k != Kind::PosArrow) return r + " is not a rule of GŁ_s";
  const bool left = r.substr(dash) == "-l";
  const Multiset& side = left ? c->left : c->right;
  for (std::size_t i = 0; i < side.size(); ++i) {
    if (!side[i].is(k) || (i > 0 && side[i] == side[i - 1])) continue;
    auto want = single_premises(*c, left, side[i]);
    if (want == p || (want.size() == 2 && p.size() == 2 && want[0] == p[1] && want[1] == p[0])) return "";
  }
  return "no instance of " + r + " matches";
}

CheckResult check_single(const ProofTree& pt, Dialect d, std::vector<std::size_t>& path) {
  std::string err;
  try {
    err = check_single_node(pt, d);
  } catch (const std::exception& ex) {
    err = ex.what();
  }
  if (!err.empty()) return {false, err + " at " + render(pt.conclusion), path};
  for (std::size_t i = 0; i < pt.premises.size(); ++i) {
    path.push_back(i);
    auto res = check_single(pt.premises[i], d, path);
    if (!res.ok) return res;
    path.pop_back();
  }
  return {};
}

}  // namespace

CheckResult check_gas_proof(const ProofTree& pt) {
  std::vector<std::size_t> path;
  return check_single(pt, Dialect::Abelian, path);
}

CheckResult check_gls_proof(const ProofTree& pt) {
  std::vector<std::size_t> path;
  return check_single(pt, Dialect::Lukasiewicz, path);
}

// ---------------------------------------------------------------------------
// Elaboration

namespace {

// A formula occurrence of the GA_i branch and how the branch decomposed it.
struct Item {
  Formula f;
  bool left = true;  // side of the decomposed copy
  Label label;
  bool store = false;
  std::string rule;  // empty while undecomposed
  bool vanish = false;  // imp-r premise without the subformulas
  std::vector<std::size_t> children;
};

using Forest = std::vector<Item>;

Item make_item(Formula f, bool left, Label label, bool store = false) {
  Item it;
  it.f = std::move(f);
  it.left = left;
  it.label = std::move(label);
  it.store = store;
  return it;
}

ProofTree node(std::string rule, Sequent concl, std::vector<ProofTree> prem = {}, Json cert = nullptr) {
  return ProofTree{std::move(rule), std::move(concl), std::move(prem), std::move(cert)};
}

const Sequent& concl(const ProofTree& p) { return std::get<Sequent>(p.conclusion); }

ProofTree id(const Formula& f) { return node(rules::ID, Sequent({f}, {f})); }
ProofTree lambda() { return node(rules::Lambda, Sequent()); }
ProofTree m(ProofTree a, ProofTree b) {
  Sequent s = merge(concl(a), concl(b));
  return node(rules::M, std::move(s), {std::move(a), std::move(b)});
}
ProofTree m_all(std::vector<ProofTree> ps) {
  if (ps.empty()) return lambda();
  ProofTree acc = std::move(ps.back());
  ps.pop_back();
  while (!ps.empty()) {
    acc = m(std::move(ps.back()), std::move(acc));
    ps.pop_back();
  }
  return acc;
}
ProofTree w(ProofTree p, const Formula& f) {
  Sequent s = add(concl(p), {f}, {});
  return node(rules::W, std::move(s), {std::move(p)});
}
// One-premise logical rule whose conclusion replaces the pieces by principal f.
ProofTree step(const std::string& rule, ProofTree p, bool left, const Formula& f) {
  Sequent s = concl(p);
  auto prem = single_premises(add(Sequent(), left ? std::vector{f} : std::vector<Formula>{},
                                  left ? std::vector<Formula>{} : std::vector{f}),
                              left, f);
  const Sequent& pieces = prem.at(0);
  s.left = ms_diff(s.left, pieces.left);
  s.right = ms_diff(s.right, pieces.right);
  if (!ms_includes(concl(p).left, pieces.left) || !ms_includes(concl(p).right, pieces.right))
    throw std::logic_error("elaboration: premise lacks the pieces of " + render_formula(f));
  s = add(s, left ? std::vector{f} : std::vector<Formula>{}, left ? std::vector<Formula>{} : std::vector{f});
  return node(rule, std::move(s), {std::move(p)});
}
class Elaborator {
 public:
  explicit Elaborator(const Forest& items) : it_(items) {}

  // Pieces of the decomposed copy: what the branch left of the occurrence.
  Sequent pieces(std::size_t i) const {
    const Item& x = it_[i];
    if (x.store) return Sequent({x.f}, {});
    if (x.rule.empty()) return x.left ? Sequent({x.f}, {}) : Sequent({}, {x.f});
    Sequent out;
    for (auto c : x.children) out = merge(out, pieces(c));
    return out;
  }

  // Pieces plus the intact formula on the opposite side.
  ProofTree pair(std::size_t i) const {
    const Item& x = it_[i];
    const Formula& f = x.f;
    if (x.rule.empty()) return id(f);
    auto ch = [&](std::size_t k) { return x.children.at(k); };
    if (!x.left) {  // intact copy on the left
      if (x.rule == "t-r") return step("t-l", lambda(), true, f);
      if (x.rule == "neg-r") return step("neg-l", pair(ch(0)), true, f);
      if (x.rule == "plus-r") return step("plus-l", m(pair(ch(0)), pair(ch(1))), true, f);
      if (x.rule == "arrow-r") return step("arrow-l", m(pair(ch(0)), pair(ch(1))), true, f);
      if (x.rule == "imp-r") {
        if (x.vanish) return w(lambda(), f);
        ProofTree q = w(m(pair(ch(0)), pair(ch(1))), imp(f.rhs(), f.lhs()));
        return step("imp-l", std::move(q), true, f);
      }
      if (x.rule == "and-r") {
        const Formula &a = f.lhs(), &b = f.rhs();
        if (it_[ch(0)].f == a) return step("and-l", w(pair(ch(0)), imp(a, b)), true, f);
        ProofTree q = w(m(id(a), pair(ch(0))), imp(b, a));
        return step("and-l", step("imp-l", std::move(q), true, imp(a, b)), true, f);
      }
      if (x.rule == "or-r") return or_r(x);
    } else {  // intact copy on the right
      if (x.rule == "t-l") return step("t-r", lambda(), false, f);
      if (x.rule == "neg-l") return step("neg-r", pair(ch(0)), false, f);
      if (x.rule == "plus-l") return step("plus-r", m(pair(ch(0)), pair(ch(1))), false, f);
      if (x.rule == "arrow-l") return step("arrow-r", m(pair(ch(0)), pair(ch(1))), false, f);
      if (x.rule == "imp-l") {
        // children: D (left), store D⇒C, C (right)
        ProofTree zero = zero_imp(x);
        ProofTree with = w(m(pair(ch(0)), pair(ch(2))), it_[ch(1)].f);
        Sequent s = concl(zero);
        s = add(s, {}, {f});
        return node("imp-r", std::move(s), {std::move(zero), std::move(with)});
      }
      if (x.rule == "and-l") return and_l(x);
      if (x.rule == "or-l") {
        const Formula &a = f.lhs(), &b = f.rhs();
        if (it_[ch(0)].f == a) return step("or-r", w(pair(ch(0)), imp(b, a)), false, f);
        ProofTree q = w(m(id(a), pair(ch(0))), imp(a, b));
        return step("or-r", step("imp-l", std::move(q), true, imp(b, a)), false, f);
      }
    }
    throw std::invalid_argument("elaboration: unexpected rule " + x.rule + " on " + render_formula(f));
  }

  // Proof of the pieces of a left ⇒-occurrence alone.
  ProofTree zero(std::size_t i) const {
    const Item& x = it_[i];
    if (x.rule.empty() || x.store) return w(lambda(), x.f);
    if (x.rule != "imp-l") throw std::logic_error("elaboration: zero on " + x.rule);
    return zero_imp(x);
  }

 private:
  // B⇒A (store, intact left) with B decomposed on the left and A on the right.
  ProofTree zero_imp(const Item& x) const {
    const std::size_t d = x.children.at(0), st = x.children.at(1), c = x.children.at(2);
    const Formula& ba = it_[st].f;  // D⇒C
    ProofTree q = w(m(pair(d), pair(c)), imp(ba.rhs(), ba.lhs()));
    return step("imp-l", std::move(q), true, ba);
  }

  // D, D⇒C, pieces(c) ⊢ … with c a right-decomposed C.
  ProofTree d_dc_c(const Formula& c_f, const Formula& d_f, std::size_t c) const {
    ProofTree q = w(m(id(d_f), pair(c)), imp(c_f, d_f));
    return step("imp-l", std::move(q), true, imp(d_f, c_f));
  }

  ProofTree or_r(const Item& x) const {
    const Formula &cf = x.f.lhs(), &df = x.f.rhs();
    const std::size_t dc = x.children.at(0), c = x.children.at(1);
    ProofTree a = m(pair(c), zero(dc));
    ProofTree b;
    const Item& dci = it_[dc];
    if (dci.rule.empty()) {
      b = d_dc_c(cf, df, c);
    } else {
      // dc decomposed: children C (left), store C⇒D, D (right).
      const std::size_t c2 = dci.children.at(0), d2 = dci.children.at(2);
      ProofTree t2 = m(pair(c2), d_dc_c(cf, df, c));
      ProofTree t3 = step("imp-l", std::move(t2), true, imp(cf, df));
      b = m(pair(d2), std::move(t3));
    }
    Sequent s = concl(a);
    s.left = ms_erase_one(s.left, cf);
    s = add(s, {x.f}, {});
    return node("or-l", std::move(s), {std::move(a), std::move(b)});
  }

  // pieces(c) with c a left-decomposed C, intact C⇒D on the left, D on the right.
  ProofTree c_cd_d(const Formula& c_f, const Formula& d_f, std::size_t c) const {
    ProofTree q = w(m(id(d_f), pair(c)), imp(d_f, c_f));
    return step("imp-l", std::move(q), true, imp(c_f, d_f));
  }

  ProofTree and_l(const Item& x) const {
    const Formula &cf = x.f.lhs(), &df = x.f.rhs();
    const std::size_t c = x.children.at(0), cd = x.children.at(1);
    ProofTree a = m(pair(c), zero(cd));
    ProofTree b;
    const Item& cdi = it_[cd];
    if (cdi.rule.empty()) {
      b = c_cd_d(cf, df, c);
    } else {
      // cd decomposed: children D (left), store D⇒C, C (right).
      const std::size_t d2 = cdi.children.at(0), c2 = cdi.children.at(2);
      ProofTree t2 = m(pair(c2), c_cd_d(cf, df, c));
      ProofTree t3 = step("imp-l", std::move(t2), true, imp(df, cf));
      b = m(pair(d2), std::move(t3));
    }
    Sequent s = concl(a);
    s.right = ms_erase_one(s.right, cf);
    s = add(s, {}, {x.f});
    return node("and-r", std::move(s), {std::move(a), std::move(b)});
  }

  const Forest& it_;
};

Sequent unlabel(const LabelledSequent& s) {
  Sequent out;
  for (const auto& lf : s.left) out.left.push_back(lf.formula);
  for (const auto& lf : s.right) out.right.push_back(lf.formula);
  return Sequent(ms_sum(ms_make(out.left), s.store), out.right);
}

LabelledMultiset lms_diff(const LabelledMultiset& a, const LabelledMultiset& b) {
  LabelledMultiset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

class Replayer {
 public:
  ProofTree run(const ProofTree& root) {
    const auto* s = std::get_if<LabelledSequent>(&root.conclusion);
    if (!s) throw std::invalid_argument("elaboration needs a GA_i proof");
    if (!s->store.empty()) throw std::invalid_argument("GA_i proofs start from an empty store");
    Forest items;
    std::vector<std::size_t> frontier;
    for (bool left : {true, false})
      for (const auto& lf : left ? s->left : s->right) {
        if (!lf.label.is_unit()) throw std::invalid_argument("GA_i proofs start from unit labels");
        frontier.push_back(items.size());
        items.push_back(make_item(lf.formula, left, lf.label));
      }
    roots_ = frontier;
    return walk(root, items, frontier);
  }

 private:
  ProofTree walk(const ProofTree& pt, Forest items, std::vector<std::size_t> frontier) {
    const auto& c = std::get<LabelledSequent>(pt.conclusion);
    if (pt.rule == rules::Success) return leaf(pt, c, items);
    if (pt.premises.empty()) throw std::invalid_argument("elaboration: unexpected leaf rule " + pt.rule);
    const auto* p0 = std::get_if<LabelledSequent>(&pt.premises[0].conclusion);
    if (!p0) throw std::invalid_argument("elaboration: premise is not labelled");
    const bool left = pt.rule.size() > 2 && pt.rule.substr(pt.rule.size() - 2) == "-l";
    auto gone = lms_diff(left ? c.left : c.right, left ? p0->left : p0->right);
    if (gone.size() != 1) throw std::invalid_argument("elaboration: cannot find the principal formula of " + pt.rule);
    const LabelledFormula principal = gone[0];
    auto pos = std::find_if(frontier.begin(), frontier.end(), [&](std::size_t i) {
      return items[i].left == left && items[i].f == principal.formula && items[i].label == principal.label;
    });
    if (pos == frontier.end()) throw std::logic_error("elaboration: principal formula is not tracked");
    const std::size_t idx = *pos;
    frontier.erase(pos);
    const Formula& f = principal.formula;
    const Label& x = principal.label;
    std::vector<ProofTree> out;
    for (std::size_t k = 0; k < pt.premises.size(); ++k) {
      Forest its = items;
      auto fr = frontier;
      auto child = [&](const Formula& g, bool l, const Label& lab) {
        its[idx].children.push_back(its.size());
        fr.push_back(its.size());
        its.push_back(make_item(g, l, lab));
      };
      its[idx].rule = pt.rule;
      switch (f.kind()) {
        case Kind::Top:
          break;
        case Kind::Neg:
          child(f.lhs(), !left, x);
          break;
        case Kind::Plus:
          child(f.lhs(), left, x);
          child(f.rhs(), left, x);
          break;
        case Kind::Arrow:
          if (left) {
            child(f.rhs(), true, x);
            child(f.lhs(), false, x);
          } else {
            child(f.lhs(), true, x);
            child(f.rhs(), false, x);
          }
          break;
        case Kind::PosArrow:
          if (left) {
            auto before = c.atomic_labels(), after = p0->atomic_labels();
            std::vector<std::string> fresh;
            std::set_difference(after.begin(), after.end(), before.begin(), before.end(), std::back_inserter(fresh));
            if (fresh.size() != 1) throw std::invalid_argument("elaboration: imp-l without a fresh label");
            Label xy = x.with(fresh[0]);
            child(f.rhs(), true, xy);
            its[idx].children.push_back(its.size());
            its.push_back(make_item(imp(f.rhs(), f.lhs()), true, xy, true));
            child(f.lhs(), false, xy);
          } else {
            const auto* pk = std::get_if<LabelledSequent>(&pt.premises[k].conclusion);
            bool with = pk && pk->left.size() > c.left.size();
            if (with) {
              child(f.lhs(), true, x);
              child(f.rhs(), false, x);
            } else {
              its[idx].vanish = true;
            }
          }
          break;
        case Kind::And:
          if (left) {
            child(f.lhs(), true, x);
            child(imp(f.lhs(), f.rhs()), true, x);
          } else {
            child(which(pt, k, f, false), false, x);
          }
          break;
        case Kind::Or:
          if (left) {
            child(which(pt, k, f, true), true, x);
          } else {
            child(imp(f.rhs(), f.lhs()), true, x);
            child(f.lhs(), false, x);
          }
          break;
        default:
          throw std::invalid_argument("elaboration: no rule for " + render_formula(f));
      }
      out.push_back(walk(pt.premises[k], std::move(its), std::move(fr)));
    }
    return node(pt.rule, unlabel(c), std::move(out));
  }

  // Which immediate subformula a two-premise ∧/∨ premise k carries.
  static Formula which(const ProofTree& pt, std::size_t k, const Formula& f, bool left) {
    const auto& c = std::get<LabelledSequent>(pt.conclusion);
    const auto& p = std::get<LabelledSequent>(pt.premises[k].conclusion);
    auto added = lms_diff(left ? p.left : p.right, left ? c.left : c.right);
    if (added.size() != 1) throw std::invalid_argument("elaboration: malformed premise of " + pt.rule);
    if (added[0].formula != f.lhs() && added[0].formula != f.rhs())
      throw std::invalid_argument("elaboration: premise of " + pt.rule + " does not carry a subformula");
    return added[0].formula;
  }

  ProofTree leaf(const ProofTree& pt, const LabelledSequent& c, const Forest& items) {
    std::vector<WeightedLabelling> fs;
    if (pt.certificate.is_object() && pt.certificate.contains("functions"))
      fs = labellings_from_json(pt.certificate["functions"]);
    else
      fs = success_check(c, Dialect::Abelian).functions;
    if (fs.empty() || !certificate_holds(c, fs, Dialect::Abelian))
      throw std::invalid_argument("elaboration: success leaf without usable labelling functions");
    // Labels whose formulas all vanished on the branch are not assigned by the
    // certificate; their store entries are weakened away.
    for (auto& wf : fs)
      for (const auto& it : items)
        for (const auto& a : it.label.atoms) wf.f.emplace(a, true);
    Elaborator el(items);
    std::size_t n = 0;
    Multiset al, ar, weakened;
    std::vector<ProofTree> groups;
    for (const auto& wf : fs) {
      const std::size_t k = wf.multiplicity.get_ui();
      n += k;
      for (std::size_t rep = 0; rep < k; ++rep)
        for (auto r : roots_) visit(r, wf.f, items, el, al, ar, weakened, groups);
    }
    al = ms_make(al);
    ar = ms_make(ar);
    if (al != ar) throw std::logic_error("elaboration: labelled atoms do not balance");
    std::vector<ProofTree> parts;
    for (const auto& a : al) parts.push_back(id(a));
    ProofTree atoms = m_all(std::move(parts));
    groups.insert(groups.begin(), std::move(atoms));
    ProofTree body = m_all(std::move(groups));
    for (const auto& f : weakened) body = w(std::move(body), f);
    const Sequent goal = unlabel(c);
    if (concl(body) != scale(goal, n)) throw std::logic_error("elaboration: assembled leaf does not match");
    if (n == 1) return body;
    return node(rules::C, goal, {std::move(body)}, Json{{"n", n}});
  }

  void visit(std::size_t i, const LabellingFunction& f, const Forest& items, const Elaborator& el, Multiset& al,
             Multiset& ar, Multiset& weakened, std::vector<ProofTree>& groups) const {
    const Item& x = items[i];
    if (x.store) {
      weakened.push_back(x.f);
      return;
    }
    if (x.rule.empty()) {
      if (!x.f.is_atom()) throw std::logic_error("elaboration: compound formula at a leaf");
      if (!x.f.is(Kind::Top)) (x.left ? al : ar).push_back(x.f);
      return;
    }
    if (x.rule == "imp-l") {
      const Label& xy = items[x.children.at(0)].label;
      if (!label_value(f, xy)) {
        groups.push_back(el.zero(i));
        return;
      }
    }
    for (auto ch : x.children) visit(ch, f, items, el, al, ar, weakened, groups);
  }

  std::vector<std::size_t> roots_;
};

}  // namespace

ProofTree elaborate_to_gas(const ProofTree& gai) {
  Replayer r;
  return r.run(gai);
}

Verdict prove_single_elab(const Sequent& s, const SearchOptions& opts) {
  Verdict v = prove_ga_i(s, opts);
  if (!v.valid) return v;
  return Verdict::proved(elaborate_to_gas(*v.proof));
}

}  // namespace hyperlog
