#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlog/formula.hpp"

namespace hyperlog {

// Multisets are kept as sorted vectors; equal elements are adjacent.
using Multiset = std::vector<Formula>;

Multiset ms_make(std::vector<Formula> xs);
Multiset ms_sum(const Multiset& a, const Multiset& b);
Multiset ms_diff(const Multiset& a, const Multiset& b);
Multiset ms_scale(const Multiset& a, std::size_t n);
bool ms_includes(const Multiset& big, const Multiset& small);
Multiset ms_insert(Multiset a, const Formula& f);
// Removes one occurrence; throws std::logic_error if absent.
Multiset ms_erase_one(Multiset a, const Formula& f);
std::size_t count(const Multiset& g, const Formula& p);

struct Sequent {
  Multiset left;
  Multiset right;

  Sequent() = default;
  Sequent(std::vector<Formula> l, std::vector<Formula> r);

  bool empty() const { return left.empty() && right.empty(); }
  bool atomic() const;
  friend bool operator==(const Sequent&, const Sequent&) = default;
  friend std::strong_ordering operator<=>(const Sequent& x, const Sequent& y);
};

Sequent merge(const Sequent& a, const Sequent& b);
Sequent scale(const Sequent& a, std::size_t n);

struct Hypersequent {
  std::vector<Sequent> components;  // sorted

  Hypersequent() = default;
  explicit Hypersequent(std::vector<Sequent> comps);
  Hypersequent(std::initializer_list<Sequent> comps) : Hypersequent(std::vector<Sequent>(comps)) {}

  std::size_t size() const { return components.size(); }
  bool atomic() const;
  // Copy with component i removed / with extra components appended.
  Hypersequent without(std::size_t i) const;
  Hypersequent replace(std::size_t i, std::vector<Sequent> with) const;
  Hypersequent plus(const Sequent& s) const;
  friend bool operator==(const Hypersequent&, const Hypersequent&) = default;
};

struct FocusedHypersequent {
  std::string focus;
  Hypersequent body;
  friend bool operator==(const FocusedHypersequent&, const FocusedHypersequent&) = default;
};

// Atomic labels are names; a label is the set of atomic labels in a product.
struct Label {
  std::vector<std::string> atoms;  // sorted, unique; empty = unit label 1

  static Label unit() { return {}; }
  bool is_unit() const { return atoms.empty(); }
  bool contains(const std::string& a) const;
  Label with(const std::string& a) const;
  Label without(const std::string& a) const;
  friend bool operator==(const Label&, const Label&) = default;
  friend auto operator<=>(const Label&, const Label&) = default;
};

struct LabelledFormula {
  Label label;
  Formula formula;
  friend bool operator==(const LabelledFormula&, const LabelledFormula&) = default;
  friend std::strong_ordering operator<=>(const LabelledFormula& x, const LabelledFormula& y);
};

using LabelledMultiset = std::vector<LabelledFormula>;  // sorted

struct LabelledSequent {
  LabelledMultiset left;
  LabelledMultiset right;
  Multiset store;

  LabelledSequent() = default;
  LabelledSequent(LabelledMultiset l, LabelledMultiset r, Multiset s = {});
  static LabelledSequent lift(const Sequent& s);
  bool atomic() const;
  std::vector<std::string> atomic_labels() const;  // sorted, unique, store excluded
  friend bool operator==(const LabelledSequent&, const LabelledSequent&) = default;
};

LabelledMultiset lms_make(std::vector<LabelledFormula> xs);
LabelledMultiset lms_erase_one(LabelledMultiset a, const LabelledFormula& f);
LabelledMultiset lms_insert(LabelledMultiset a, LabelledFormula f);

// Rooted tree over atomic labels; the root is the unit label.
class LabelTree {
 public:
  void add(const std::string& child, const std::string& parent);  // parent "" = root
  bool has(const std::string& a) const { return parent_.count(a) != 0; }
  const std::string& parent(const std::string& a) const { return parent_.at(a); }
  std::vector<std::string> children(const std::string& a) const;  // a "" = root
  // True iff the label is exactly the node set of a root-to-node path.
  bool is_path(const Label& l) const;
  std::size_t size() const { return parent_.size(); }

 private:
  std::map<std::string, std::string> parent_;
};

// Measures.
std::size_t complexity_cp(const Formula& f);
std::vector<std::size_t> multiset_complexity_mc(const Hypersequent& g);
bool multiset_less(std::vector<std::size_t> a, std::vector<std::size_t> b);
std::size_t d_measure(const FocusedHypersequent& fg);
std::size_t symbol_count(const Hypersequent& g);

using LabellingFunction = std::map<std::string, bool>;
// Throws std::invalid_argument on an unassigned atomic label.
Sequent apply_labelling(const LabellingFunction& f, const LabelledSequent& s);
bool label_value(const LabellingFunction& f, const Label& l);

// Concrete syntax.
std::string render(const Multiset& g);
std::string render(const Sequent& s);
std::string render(const Hypersequent& g);
std::string render(const FocusedHypersequent& g);
std::string render(const Label& l);
std::string render(const LabelledFormula& lf);
std::string render(const LabelledSequent& s);

Sequent parse_sequent(std::string_view text, Dialect dialect, ParseOptions opts = {});
Hypersequent parse_hypersequent(std::string_view text, Dialect dialect, ParseOptions opts = {});
FocusedHypersequent parse_focused(std::string_view text, Dialect dialect, ParseOptions opts = {});
LabelledSequent parse_labelled(std::string_view text, Dialect dialect, ParseOptions opts = {});

// Applies normalize to every formula.
Sequent normalize(const Sequent& s, CalculusId target);
Hypersequent normalize(const Hypersequent& g, CalculusId target);
LabelledSequent normalize(const LabelledSequent& s, CalculusId target);

void collect_variables(const Hypersequent& g, std::vector<std::string>& out);
std::vector<std::string> variables(const Hypersequent& g);

}  // namespace hyperlog
