#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyperlog/rational.hpp"
#include "hyperlog/semantics.hpp"
#include "hyperlog/structures.hpp"

namespace hyperlog {

enum class Rel { Gt, Ge, Eq };

// Affine expression Σ c_v·v + constant.
struct LinExpr {
  std::map<std::string, Rational> coeffs;
  Rational constant = 0;

  LinExpr& add(const std::string& var, const Rational& c);
  LinExpr& add(const LinExpr& e, const Rational& scale = 1);
};

// Σ c_v·v + constant ▷ 0.
struct LinInequation {
  std::map<std::string, Rational> coeffs;
  Rel rel = Rel::Ge;
  Rational constant = 0;
};

struct Bounds {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

struct LinSystem {
  std::vector<LinInequation> rows;
  std::map<std::string, Bounds> bounds;

  // lhs ▷ rhs
  void add(const LinExpr& lhs, Rel rel, const LinExpr& rhs);
  void bound(const std::string& var, std::optional<Rational> lower, std::optional<Rational> upper);
  std::vector<std::string> variables() const;  // first-occurrence order
  std::string dump() const;
};

class LpResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FeasibilityResult {
  bool feasible = false;
  std::map<std::string, Rational> witness;
  std::string engine;  // "fm" or "simplex"
};

struct LpOptions {
  std::size_t fm_row_limit = 20000;
  bool simplex_fallback = true;
};

// Fourier–Motzkin with strictness tracking; switches to exact simplex when
// the elimination exceeds the row limit and fallback is enabled.
FeasibilityResult feasible(const LinSystem& sys, const LpOptions& opts = {});
FeasibilityResult feasible_fm(const LinSystem& sys, std::size_t row_limit = 20000);
FeasibilityResult feasible_simplex(const LinSystem& sys);
bool satisfies(const LinSystem& sys, const std::map<std::string, Rational>& x);

// Basic solution of A·z = b, z ≥ 0 (exact, Bland's rule), if any.
std::optional<std::vector<Rational>> solve_nonneg(const std::vector<std::vector<Rational>>& a,
                                                  const std::vector<Rational>& b);

// Integer multipliers with ∪λᵢΓᵢ = ∪λᵢΔᵢ; atoms must be variables.
std::optional<std::vector<Integer>> lambda_certificate(const Hypersequent& g);
// Integer multipliers with ∪λᵢΔᵢ ⊆* ∪λᵢΓᵢ (variables and ⊥).
std::optional<std::vector<Integer>> lambda_certificate_l(const Hypersequent& g);

// {ΣΓᵢ > ΣΔᵢ} for every component; bounds and ⊥ = −1 under the Ł model.
LinSystem refutation_system(const Hypersequent& g, Model model);

struct AtomicVerdict {
  bool valid = false;
  std::vector<Integer> lambda;  // certificate when valid
  Valuation countermodel;       // when invalid
};

AtomicVerdict atomic_valid_a(const Hypersequent& g);
AtomicVerdict atomic_valid_l(const Hypersequent& g);

bool subset_star(const Multiset& delta, const Multiset& gamma);

}  // namespace hyperlog
