#include "hyperlog/semantics.hpp"

#include <algorithm>
#include <random>

namespace hyperlog {

const Rational& Valuation::at(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw EvalError("unassigned variable " + name);
  return it->second;
}

namespace {

Rational min0(Rational x) { return x < 0 ? x : Rational(0); }

}  // namespace

Rational eval_a(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Kind::Var: return v.at(f.name());
    case Kind::Top: return 0;
    case Kind::Bot: return v.at(std::string(kMBot));
    case Kind::Neg: return -eval_a(f.lhs(), v);
    default: break;
  }
  if (f.is(Kind::Tilde) || f.is(Kind::OPlus)) throw EvalError("connective not in the A language");
  Rational a = eval_a(f.lhs(), v);
  Rational b = eval_a(f.rhs(), v);
  switch (f.kind()) {
    case Kind::Plus: return a + b;
    case Kind::Arrow: return b - a;
    case Kind::PosArrow: return min0(b - a);
    case Kind::EnthArrow: return b - min0(a);
    case Kind::MatArrow: {
      const Rational& bot = v.at(std::string(kMBot));
      return (b > bot ? b : bot) - min0(a);
    }
    case Kind::And: return a < b ? a : b;
    case Kind::Or: return a < b ? b : a;
    default: throw EvalError("unexpected connective");
  }
}

Rational eval_l(const Formula& f, const Valuation& v) {
  switch (f.kind()) {
    case Kind::Var: {
      const Rational& q = v.at(f.name());
      if (q < -1 || q > 0) throw EvalError("value of " + f.name() + " outside [-1,0]");
      return q;
    }
    case Kind::Top: return 0;
    case Kind::Bot: return -1;
    case Kind::Tilde: return -1 - eval_l(f.lhs(), v);
    case Kind::Neg:
    case Kind::Plus:
    case Kind::Arrow:
      throw EvalError("connective not in the Ł language");
    default: break;
  }
  Rational a = eval_l(f.lhs(), v);
  Rational b = eval_l(f.rhs(), v);
  switch (f.kind()) {
    case Kind::PosArrow:
    case Kind::MatArrow:
    case Kind::EnthArrow:
      return min0(b - a);
    case Kind::OPlus: return min0(a + b + 1);
    case Kind::And: return a < b ? a : b;
    case Kind::Or: return a < b ? b : a;
    default: throw EvalError("unexpected connective");
  }
}

Rational eval(const Formula& f, const Valuation& v) {
  return v.model == Model::Q ? eval_a(f, v) : eval_l(f, v);
}

bool holds_component(const Multiset& gamma, const Multiset& delta, const Valuation& v) {
  Rational l = 0, r = 0;
  for (const auto& f : gamma) l += eval(f, v);
  for (const auto& f : delta) r += eval(f, v);
  return l <= r;
}

bool holds(const Sequent& s, const Valuation& v) { return holds_component(s.left, s.right, v); }

bool holds(const Hypersequent& g, const Valuation& v) {
  return std::any_of(g.components.begin(), g.components.end(), [&](const Sequent& s) { return holds(s, v); });
}

bool holds(const LabelledSequent& s, const Valuation& v) {
  auto labels = s.atomic_labels();
  if (labels.size() > 24) throw std::length_error("too many atomic labels to enumerate");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << labels.size()); ++mask) {
    LabellingFunction f;
    for (std::size_t i = 0; i < labels.size(); ++i) f[labels[i]] = (mask >> i) & 1;
    if (holds(apply_labelling(f, s), v)) return true;
  }
  return false;
}

namespace {

template <class Goal>
std::optional<Valuation> refute(const Goal& goal, const std::vector<std::string>& vars, Model model,
                                std::size_t budget, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> den(1, 4);
  for (std::size_t k = 0; k < budget; ++k) {
    Valuation v;
    v.model = model;
    for (const auto& x : vars) {
      int d = den(rng);
      int n = model == Model::Q ? std::uniform_int_distribution<int>(-8, 8)(rng)
                                : std::uniform_int_distribution<int>(-d, 0)(rng);
      Rational q(n, d);
      q.canonicalize();
      v.set(x, q);
    }
    if (!holds(goal, v)) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Valuation> random_refute(const Hypersequent& goal, Model model, std::size_t budget,
                                       std::uint64_t seed) {
  return refute(goal, variables(goal), model, budget, seed);
}

std::optional<Valuation> random_refute(const LabelledSequent& goal, Model model, std::size_t budget,
                                       std::uint64_t seed) {
  std::vector<std::string> vars;
  for (const auto* side : {&goal.left, &goal.right})
    for (const auto& lf : *side) collect_variables(lf.formula, vars);
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return refute(goal, vars, model, budget, seed);
}

std::string render(const Valuation& v) {
  std::string out;
  for (const auto& [k, q] : v.values) {
    if (!out.empty()) out += ", ";
    out += k + "=" + to_string(q);
  }
  return out;
}

}  // namespace hyperlog
