#include "hyperlog/structures.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "parser.hpp"

namespace hyperlog {

// ---------------------------------------------------------------------------
// Multisets

Multiset ms_make(std::vector<Formula> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

Multiset ms_sum(const Multiset& a, const Multiset& b) {
  Multiset out;
  out.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Multiset ms_diff(const Multiset& a, const Multiset& b) {
  Multiset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Multiset ms_scale(const Multiset& a, std::size_t n) {
  Multiset out;
  out.reserve(a.size() * n);
  for (const auto& f : a)
    for (std::size_t i = 0; i < n; ++i) out.push_back(f);
  return out;
}

bool ms_includes(const Multiset& big, const Multiset& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Multiset ms_insert(Multiset a, const Formula& f) {
  a.insert(std::upper_bound(a.begin(), a.end(), f), f);
  return a;
}

Multiset ms_erase_one(Multiset a, const Formula& f) {
  auto it = std::lower_bound(a.begin(), a.end(), f);
  if (it == a.end() || !(*it == f)) throw std::logic_error("multiset erase: element absent");
  a.erase(it);
  return a;
}

std::size_t count(const Multiset& g, const Formula& p) {
  auto r = std::equal_range(g.begin(), g.end(), p);
  return static_cast<std::size_t>(r.second - r.first);
}

// ---------------------------------------------------------------------------
// Sequents and hypersequents

Sequent::Sequent(std::vector<Formula> l, std::vector<Formula> r)
    : left(ms_make(std::move(l))), right(ms_make(std::move(r))) {}

bool Sequent::atomic() const {
  auto at = [](const Formula& f) { return f.is_atom(); };
  return std::all_of(left.begin(), left.end(), at) && std::all_of(right.begin(), right.end(), at);
}

std::strong_ordering operator<=>(const Sequent& x, const Sequent& y) {
  if (auto c = x.left <=> y.left; c != 0) return c;
  return x.right <=> y.right;
}

Sequent merge(const Sequent& a, const Sequent& b) {
  Sequent s;
  s.left = ms_sum(a.left, b.left);
  s.right = ms_sum(a.right, b.right);
  return s;
}

Sequent scale(const Sequent& a, std::size_t n) {
  Sequent s;
  s.left = ms_scale(a.left, n);
  s.right = ms_scale(a.right, n);
  return s;
}

Hypersequent::Hypersequent(std::vector<Sequent> comps) : components(std::move(comps)) {
  std::sort(components.begin(), components.end());
}

bool Hypersequent::atomic() const {
  return std::all_of(components.begin(), components.end(), [](const Sequent& s) { return s.atomic(); });
}

Hypersequent Hypersequent::without(std::size_t i) const {
  Hypersequent h;
  h.components = components;
  h.components.erase(h.components.begin() + static_cast<std::ptrdiff_t>(i));
  return h;
}

Hypersequent Hypersequent::replace(std::size_t i, std::vector<Sequent> with) const {
  std::vector<Sequent> cs;
  cs.reserve(components.size() + with.size());
  for (std::size_t j = 0; j < components.size(); ++j)
    if (j != i) cs.push_back(components[j]);
  for (auto& s : with) cs.push_back(std::move(s));
  return Hypersequent(std::move(cs));
}

Hypersequent Hypersequent::plus(const Sequent& s) const {
  Hypersequent h;
  h.components = components;
  h.components.insert(std::upper_bound(h.components.begin(), h.components.end(), s), s);
  return h;
}

// ---------------------------------------------------------------------------
// Labels

bool Label::contains(const std::string& a) const { return std::binary_search(atoms.begin(), atoms.end(), a); }

Label Label::with(const std::string& a) const {
  Label l = *this;
  auto it = std::lower_bound(l.atoms.begin(), l.atoms.end(), a);
  if (it == l.atoms.end() || *it != a) l.atoms.insert(it, a);
  return l;
}

Label Label::without(const std::string& a) const {
  Label l = *this;
  l.atoms.erase(std::remove(l.atoms.begin(), l.atoms.end(), a), l.atoms.end());
  return l;
}

std::strong_ordering operator<=>(const LabelledFormula& x, const LabelledFormula& y) {
  if (auto c = x.label <=> y.label; c != 0) return c;
  return x.formula <=> y.formula;
}

LabelledMultiset lms_make(std::vector<LabelledFormula> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}

LabelledMultiset lms_erase_one(LabelledMultiset a, const LabelledFormula& f) {
  auto it = std::lower_bound(a.begin(), a.end(), f);
  if (it == a.end() || !(*it == f)) throw std::logic_error("labelled multiset erase: element absent");
  a.erase(it);
  return a;
}

LabelledMultiset lms_insert(LabelledMultiset a, LabelledFormula f) {
  auto it = std::upper_bound(a.begin(), a.end(), f);
  a.insert(it, std::move(f));
  return a;
}

LabelledSequent::LabelledSequent(LabelledMultiset l, LabelledMultiset r, Multiset s)
    : left(lms_make(std::move(l))), right(lms_make(std::move(r))), store(ms_make(std::move(s))) {}

LabelledSequent LabelledSequent::lift(const Sequent& s) {
  LabelledSequent out;
  for (const auto& f : s.left) out.left.push_back({Label::unit(), f});
  for (const auto& f : s.right) out.right.push_back({Label::unit(), f});
  out.left = lms_make(std::move(out.left));
  out.right = lms_make(std::move(out.right));
  return out;
}

bool LabelledSequent::atomic() const {
  auto at = [](const LabelledFormula& f) { return f.formula.is_atom(); };
  return std::all_of(left.begin(), left.end(), at) && std::all_of(right.begin(), right.end(), at);
}

std::vector<std::string> LabelledSequent::atomic_labels() const {
  std::vector<std::string> out;
  for (const auto* side : {&left, &right})
    for (const auto& lf : *side) out.insert(out.end(), lf.label.atoms.begin(), lf.label.atoms.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void LabelTree::add(const std::string& child, const std::string& parent) {
  if (child.empty()) throw std::invalid_argument("label tree: empty atomic label");
  if (!parent.empty() && !has(parent)) throw std::invalid_argument("label tree: unknown parent " + parent);
  auto [it, inserted] = parent_.emplace(child, parent);
  if (!inserted && it->second != parent) throw std::invalid_argument("label tree: label reintroduced: " + child);
}

std::vector<std::string> LabelTree::children(const std::string& a) const {
  std::vector<std::string> out;
  for (const auto& [c, p] : parent_)
    if (p == a) out.push_back(c);
  return out;
}

bool LabelTree::is_path(const Label& l) const {
  if (l.is_unit()) return true;
  // The deepest node must be the unique element whose ancestors cover the rest.
  for (const auto& a : l.atoms) {
    if (!has(a)) return false;
  }
  for (const auto& leaf : l.atoms) {
    std::size_t depth = 0;
    bool ok = true;
    for (std::string cur = leaf; !cur.empty(); cur = parent(cur)) {
      if (!l.contains(cur)) {
        ok = false;
        break;
      }
      ++depth;
    }
    if (ok && depth == l.atoms.size()) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Measures

std::size_t complexity_cp(const Formula& f) {
  if (f.is_atom()) return 0;
  std::size_t c = 1 + complexity_cp(f.lhs());
  if (f.arity() == 2) c += complexity_cp(f.rhs());
  return c;
}

std::vector<std::size_t> multiset_complexity_mc(const Hypersequent& g) {
  std::vector<std::size_t> out;
  for (const auto& s : g.components) {
    for (const auto& f : s.left) out.push_back(complexity_cp(f));
    for (const auto& f : s.right) out.push_back(complexity_cp(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool multiset_less(std::vector<std::size_t> a, std::vector<std::size_t> b) {
  std::map<std::size_t, long> diff;  // count_b - count_a
  for (auto x : a) --diff[x];
  for (auto x : b) ++diff[x];
  bool any = false;
  for (const auto& [x, d] : diff) {
    if (d == 0) continue;
    any = true;
    if (d < 0) {
      // x is in excess in a: some larger y must be in excess in b.
      bool dominated = false;
      for (auto it = diff.upper_bound(x); it != diff.end(); ++it)
        if (it->second > 0) {
          dominated = true;
          break;
        }
      if (!dominated) return false;
    }
  }
  return any;
}

std::size_t d_measure(const FocusedHypersequent& fg) {
  Formula p = Formula::var(fg.focus);
  std::size_t d = 0;
  for (const auto& s : fg.body.components) {
    std::size_t l = count(s.left, p), r = count(s.right, p);
    d += l > r ? l - r : r - l;
  }
  return d;
}

std::size_t symbol_count(const Hypersequent& g) {
  std::size_t n = 0;
  for (const auto& s : g.components) {
    ++n;
    for (const auto& f : s.left) n += f.size();
    for (const auto& f : s.right) n += f.size();
  }
  return n;
}

bool label_value(const LabellingFunction& f, const Label& l) {
  for (const auto& a : l.atoms) {
    auto it = f.find(a);
    if (it == f.end()) throw std::invalid_argument("labelling function: unassigned label " + a);
    if (!it->second) return false;
  }
  return true;
}

Sequent apply_labelling(const LabellingFunction& f, const LabelledSequent& s) {
  Sequent out;
  for (const auto& lf : s.left)
    if (label_value(f, lf.label)) out.left.push_back(lf.formula);
  for (const auto& lf : s.right)
    if (label_value(f, lf.label)) out.right.push_back(lf.formula);
  out.left = ms_make(std::move(out.left));
  out.right = ms_make(std::move(out.right));
  return out;
}

// ---------------------------------------------------------------------------
// Rendering

std::string render(const Multiset& g) {
  std::string out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i) out += ", ";
    out += render_formula(g[i]);
  }
  return out;
}

std::string render(const Sequent& s) {
  std::string out = render(s.left);
  out += out.empty() ? "|-" : " |-";
  if (!s.right.empty()) out += " " + render(s.right);
  return out;
}

std::string render(const Hypersequent& g) {
  std::string out;
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    if (i) out += " | ";
    out += render(g.components[i]);
  }
  return out;
}

std::string render(const FocusedHypersequent& g) { return "[" + g.focus + "] " + render(g.body); }

std::string render(const Label& l) {
  if (l.is_unit()) return "1";
  std::string out;
  for (std::size_t i = 0; i < l.atoms.size(); ++i) {
    if (i) out += '.';
    out += l.atoms[i];
  }
  return out;
}

std::string render(const LabelledFormula& lf) { return render(lf.label) + ":" + render_formula(lf.formula); }

std::string render(const LabelledSequent& s) {
  auto list = [](const LabelledMultiset& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) out += ", ";
      out += render(xs[i]);
    }
    return out;
  };
  std::string out = list(s.left);
  if (!s.store.empty()) out += (out.empty() ? "|| " : " || ") + render(s.store);
  out += out.empty() ? "|-" : " |-";
  if (!s.right.empty()) out += " " + list(s.right);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using detail::Parser;
using detail::Tok;

bool list_end(const Parser& p) {
  return p.at(Tok::Turnstile) || p.at(Tok::Bar) || p.at(Tok::End) || p.at(Tok::DoubleBar);
}

std::vector<Formula> formula_list(Parser& p) {
  std::vector<Formula> out;
  if (list_end(p)) return out;
  out.push_back(p.formula());
  while (p.at(Tok::Comma)) {
    p.take();
    out.push_back(p.formula());
  }
  return out;
}

Sequent component(Parser& p) {
  auto l = formula_list(p);
  p.expect(Tok::Turnstile, "'|-'");
  auto r = formula_list(p);
  return Sequent(std::move(l), std::move(r));
}

Hypersequent hypersequent(Parser& p) {
  std::vector<Sequent> comps{component(p)};
  while (p.at(Tok::Bar)) {
    p.take();
    comps.push_back(component(p));
  }
  if (!p.at(Tok::End)) p.fail("trailing input");
  return Hypersequent(std::move(comps));
}

std::optional<Label> try_label(Parser& p) {
  auto saved = p.save();
  if (p.at(Tok::Number)) {
    if (p.take().text == "1" && p.at(Tok::Colon)) {
      p.take();
      return Label::unit();
    }
    p.restore(saved);
    return std::nullopt;
  }
  Label l;
  while (p.at(Tok::Ident)) {
    l = l.with(p.take().text);
    if (p.at(Tok::Colon)) {
      p.take();
      return l;
    }
    if (!p.at(Tok::Dot)) break;
    p.take();
  }
  p.restore(saved);
  return std::nullopt;
}

std::vector<LabelledFormula> labelled_list(Parser& p) {
  std::vector<LabelledFormula> out;
  if (list_end(p)) return out;
  while (true) {
    auto l = try_label(p);
    Formula f = p.formula();
    out.push_back({l.value_or(Label::unit()), f});
    if (!p.at(Tok::Comma)) break;
    p.take();
  }
  return out;
}

}  // namespace

Sequent parse_sequent(std::string_view text, Dialect dialect, ParseOptions opts) {
  Parser p(text, dialect, opts);
  Sequent s = component(p);
  if (!p.at(Tok::End)) p.fail("trailing input");
  return s;
}

Hypersequent parse_hypersequent(std::string_view text, Dialect dialect, ParseOptions opts) {
  Parser p(text, dialect, opts);
  return hypersequent(p);
}

FocusedHypersequent parse_focused(std::string_view text, Dialect dialect, ParseOptions opts) {
  Parser p(text, dialect, opts);
  p.expect(Tok::LBracket, "'[' focus");
  if (!p.at(Tok::Ident)) p.fail("expected focus variable");
  std::string focus = p.take().text;
  p.expect(Tok::RBracket, "']'");
  return {focus, hypersequent(p)};
}

LabelledSequent parse_labelled(std::string_view text, Dialect dialect, ParseOptions opts) {
  Parser p(text, dialect, opts);
  auto l = labelled_list(p);
  std::vector<Formula> store;
  if (p.at(Tok::DoubleBar)) {
    p.take();
    store = formula_list(p);
  }
  p.expect(Tok::Turnstile, "'|-'");
  auto r = labelled_list(p);
  if (!p.at(Tok::End)) p.fail("trailing input");
  return LabelledSequent(std::move(l), std::move(r), std::move(store));
}

// ---------------------------------------------------------------------------

Sequent normalize(const Sequent& s, CalculusId target) {
  std::vector<Formula> l, r;
  for (const auto& f : s.left) l.push_back(normalize(f, target));
  for (const auto& f : s.right) r.push_back(normalize(f, target));
  return Sequent(std::move(l), std::move(r));
}

Hypersequent normalize(const Hypersequent& g, CalculusId target) {
  std::vector<Sequent> cs;
  for (const auto& s : g.components) cs.push_back(normalize(s, target));
  return Hypersequent(std::move(cs));
}

LabelledSequent normalize(const LabelledSequent& s, CalculusId target) {
  std::vector<LabelledFormula> l, r;
  std::vector<Formula> st;
  for (const auto& lf : s.left) l.push_back({lf.label, normalize(lf.formula, target)});
  for (const auto& lf : s.right) r.push_back({lf.label, normalize(lf.formula, target)});
  for (const auto& f : s.store) st.push_back(normalize(f, target));
  return LabelledSequent(std::move(l), std::move(r), std::move(st));
}

void collect_variables(const Hypersequent& g, std::vector<std::string>& out) {
  for (const auto& s : g.components) {
    for (const auto& f : s.left) collect_variables(f, out);
    for (const auto& f : s.right) collect_variables(f, out);
  }
}

std::vector<std::string> variables(const Hypersequent& g) {
  std::vector<std::string> out;
  collect_variables(g, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace hyperlog
