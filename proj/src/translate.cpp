#include "hyperlog/translate.hpp"

namespace hyperlog {

namespace {

Formula qbot() { return Formula::var(std::string(kQBot)); }
Formula mbot() { return Formula::var(std::string(kMBot)); }

Formula star_rec(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
      return land(lor(f, qbot()), Formula::top());
    case Kind::Bot:
      return land(qbot(), Formula::top());
    case Kind::PosArrow:
      return land(Formula::top(), arrow(star_rec(f.lhs()), star_rec(f.rhs())));
    case Kind::And:
      return land(star_rec(f.lhs()), star_rec(f.rhs()));
    case Kind::Or:
      return lor(star_rec(f.lhs()), star_rec(f.rhs()));
    default:
      throw DialectError("star: unexpanded connective in '" + render_formula(f) + "'");
  }
}

Formula material_rec(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
      return f;
    case Kind::Bot:
      return mbot();
    case Kind::PosArrow:
      return arrow(land(Formula::top(), material_rec(f.lhs())), lor(mbot(), material_rec(f.rhs())));
    case Kind::And:
      return land(material_rec(f.lhs()), material_rec(f.rhs()));
    case Kind::Or:
      return lor(material_rec(f.lhs()), material_rec(f.rhs()));
    default:
      throw DialectError("material: connective outside the fragment in '" + render_formula(f) + "'");
  }
}

bool has_enth(const Formula& f) {
  if (f.is(Kind::EnthArrow)) return true;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (has_enth(i == 0 ? f.lhs() : f.rhs())) return true;
  return false;
}

Formula enth_rec(const Formula& f) {
  switch (f.kind()) {
    case Kind::Var:
    case Kind::Top:
      return f;
    case Kind::EnthArrow:
    case Kind::PosArrow:
      return arrow(land(Formula::top(), enth_rec(f.lhs())), enth_rec(f.rhs()));
    case Kind::And:
      return land(enth_rec(f.lhs()), enth_rec(f.rhs()));
    case Kind::Or:
      return lor(enth_rec(f.lhs()), enth_rec(f.rhs()));
    default:
      throw DialectError("enthymematic: connective outside the positive fragment in '" + render_formula(f) + "'");
  }
}

Multiset star_all(const Multiset& m) {
  Multiset out;
  for (const auto& f : m) out.push_back(star(f));
  return ms_make(std::move(out));
}

}  // namespace

Formula star(const Formula& f) {
  check_dialect(f, Dialect::Lukasiewicz);
  return star_rec(normalize(f, CalculusId::GL));
}

Sequent star(const Sequent& s) { return Sequent(star_all(s.left), star_all(s.right)); }

Hypersequent star(const Hypersequent& g) {
  std::vector<Sequent> comps;
  for (const auto& c : g.components) comps.push_back(star(c));
  return Hypersequent(std::move(comps));
}

LabelledSequent star(const LabelledSequent& s) {
  auto lift = [](const LabelledMultiset& m) {
    std::vector<LabelledFormula> out;
    for (const auto& lf : m) out.push_back({lf.label, star(lf.formula)});
    return lms_make(std::move(out));
  };
  return LabelledSequent(lift(s.left), lift(s.right), star_all(s.store));
}

Formula material(const Formula& f) {
  check_dialect(f, Dialect::Lukasiewicz);
  if (has_enth(f)) throw DialectError("material: ⊇ is outside the fragment");
  return material_rec(normalize(f, CalculusId::GL));
}

Formula enthymematic(const Formula& f) {
  check_dialect(f, Dialect::Lukasiewicz);
  return enth_rec(f);
}

std::optional<Valuation> transfer_countermodel(const Valuation& a_model) {
  const std::string qb(kQBot);
  auto it = a_model.values.find(qb);
  if (it == a_model.values.end() || it->second >= 0) return std::nullopt;
  const Rational factor = Rational(-1) / it->second;
  Valuation scaled;
  for (const auto& [name, q] : a_model.values) scaled.set(name, q * factor);
  Valuation out;
  out.model = Model::UnitIntervalL;
  for (const auto& [name, q] : scaled.values)
    if (name != qb) out.set(name, eval_a(star_rec(Formula::var(name)), scaled));
  return out;
}

}  // namespace hyperlog
