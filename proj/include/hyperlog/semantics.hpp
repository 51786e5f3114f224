#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "hyperlog/formula.hpp"
#include "hyperlog/rational.hpp"
#include "hyperlog/structures.hpp"

namespace hyperlog {

enum class Model { Q, UnitIntervalL };

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Valuation {
  std::map<std::string, Rational> values;
  Model model = Model::Q;

  const Rational& at(const std::string& name) const;
  void set(const std::string& name, Rational q) { values[name] = std::move(q); }
  friend bool operator==(const Valuation&, const Valuation&) = default;
};

Rational eval_a(const Formula& f, const Valuation& v);
Rational eval_l(const Formula& f, const Valuation& v);
Rational eval(const Formula& f, const Valuation& v);  // dispatches on v.model

bool holds_component(const Multiset& gamma, const Multiset& delta, const Valuation& v);
bool holds(const Sequent& s, const Valuation& v);
bool holds(const Hypersequent& g, const Valuation& v);
// Labelled interpretation: some labelling function makes the image hold.
bool holds(const LabelledSequent& s, const Valuation& v);

std::optional<Valuation> random_refute(const Hypersequent& goal, Model model, std::size_t budget,
                                       std::uint64_t seed);
std::optional<Valuation> random_refute(const LabelledSequent& goal, Model model, std::size_t budget,
                                       std::uint64_t seed);

// "p=-1, q=1/2"
std::string render(const Valuation& v);

}  // namespace hyperlog
