#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace hyperlog::oracles {

namespace {

std::vector<std::string> atoms_of(const std::vector<LabelledInequation>& ineqs) {
  std::set<std::string> out;
  for (const auto& e : ineqs)
    for (const auto* side : {&e.left, &e.right})
      for (const auto& lf : *side) out.insert(lf.label.atoms.begin(), lf.label.atoms.end());
  return {out.begin(), out.end()};
}

void add_terms(LinExpr& e, const LabelledMultiset& side, const LabellingFunction& f) {
  for (const auto& lf : side) {
    if (!label_value(f, lf.label)) continue;
    if (lf.formula.is_var()) e.add(lf.formula.name(), 1);
  }
}

}  // namespace

std::size_t atomic_label_count(const std::vector<LabelledInequation>& ineqs) { return atoms_of(ineqs).size(); }

bool brute_force_consistent(const std::vector<LabelledInequation>& ineqs) {
  const auto atoms = atoms_of(ineqs);
  LinSystem sys;
  for (std::size_t mask = 0; mask < (std::size_t{1} << atoms.size()); ++mask) {
    LabellingFunction f;
    for (std::size_t i = 0; i < atoms.size(); ++i) f[atoms[i]] = (mask >> i) & 1;
    for (const auto& e : ineqs) {
      LinExpr l, r;
      add_terms(l, e.left, f);
      add_terms(r, e.right, f);
      sys.add(l, e.rel, r);
    }
  }
  return feasible_simplex(sys).feasible;
}

std::vector<LabelledInequation> random_label_regular(std::mt19937_64& rng, std::size_t max_labels,
                                                     std::size_t max_ineqs) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  const std::size_t m = pick(1, max_ineqs);
  std::size_t budget = pick(0, max_labels);
  const Formula terms[] = {Formula::var("p"), Formula::var("q"), Formula::var("r"), Formula::top()};
  std::vector<LabelledInequation> out;
  std::size_t next = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const std::size_t n = k + 1 == m ? budget : pick(0, budget);
    budget -= n;
    // Paths of a random tree: node i hangs below a random earlier node or the root.
    std::vector<Label> paths{Label::unit()};
    std::vector<std::string> names{""};
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back("a" + std::to_string(next++));
      paths.push_back(paths[pick(0, paths.size() - 1)].with(names.back()));
    }
    LabelledInequation e;
    e.rel = pick(0, 1) ? Rel::Gt : Rel::Ge;
    for (auto* side : {&e.left, &e.right}) {
      const std::size_t len = pick(0, 4);
      std::vector<LabelledFormula> xs;
      for (std::size_t i = 0; i < len; ++i) xs.push_back({paths[pick(0, paths.size() - 1)], terms[pick(0, 3)]});
      *side = lms_make(std::move(xs));
    }
    // Every atomic label of the tree occurs, so n counts exactly the labels used.
    for (std::size_t i = 1; i < paths.size(); ++i) {
      bool used = false;
      for (const auto* side : {&e.left, &e.right})
        for (const auto& lf : *side) used = used || lf.label.contains(names[i]);
      if (!used) e.right = lms_insert(e.right, {paths[i], terms[pick(0, 3)]});
    }
    out.push_back(std::move(e));
  }
  return out;
}

Formula random_a_formula(std::mt19937_64& rng, std::size_t depth) {
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  if (depth == 0 || pick(0, 3) == 0) {
    switch (pick(0, 4)) {
      case 0:
      case 1:
        return Formula::var("p");
      case 2:
      case 3:
        return Formula::var("q");
      default:
        return Formula::top();
    }
  }
  switch (pick(0, 5)) {
    case 0:
      return neg(random_a_formula(rng, depth - 1));
    case 1:
      return plus(random_a_formula(rng, depth - 1), random_a_formula(rng, depth - 1));
    case 2:
      return arrow(random_a_formula(rng, depth - 1), random_a_formula(rng, depth - 1));
    case 3:
      return land(random_a_formula(rng, depth - 1), random_a_formula(rng, depth - 1));
    case 4:
      return lor(random_a_formula(rng, depth - 1), random_a_formula(rng, depth - 1));
    default:
      return imp(random_a_formula(rng, depth - 1), random_a_formula(rng, depth - 1));
  }
}

}  // namespace hyperlog::oracles
