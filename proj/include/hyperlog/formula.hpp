#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hyperlog {

enum class Kind : std::uint8_t {
  Var,
  Top,        // t
  Bot,        // ⊥
  Neg,        // ¬, A-dialect
  Tilde,      // ∼, Ł-dialect
  Plus,       // +
  Arrow,      // →
  PosArrow,   // ⇒
  MatArrow,   // ⊃
  EnthArrow,  // ⊇
  OPlus,      // ⊕
  And,
  Or,
};

enum class Dialect { Abelian, Lukasiewicz };

enum class CalculusId { GA, GL, GA_t, GL_t, GA_l, GL_l, GA_s, GL_s, GA_i };

Dialect dialect_of(CalculusId c);
std::string_view to_string(CalculusId c);
CalculusId parse_calculus_id(std::string_view name);

// Reserved variable names; never accepted from user input.
inline constexpr std::string_view kQBot = "$qbot";
inline constexpr std::string_view kMBot = "$mbot";

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class DialectError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Formula {
 public:
  Formula() = default;

  static Formula var(std::string name);
  static Formula top();
  static Formula bot();
  static Formula unary(Kind k, Formula a);
  static Formula binary(Kind k, Formula a, Formula b);

  bool null() const { return node_ == nullptr; }
  Kind kind() const;
  const std::string& name() const;
  std::size_t arity() const;
  const Formula& lhs() const;
  const Formula& rhs() const;
  std::size_t size() const;
  std::size_t hash() const;

  bool is_var() const { return kind() == Kind::Var; }
  bool is_atom() const { return kind() == Kind::Var || kind() == Kind::Top || kind() == Kind::Bot; }
  bool is(Kind k) const { return kind() == k; }

  friend bool operator==(const Formula& x, const Formula& y);
  friend std::strong_ordering operator<=>(const Formula& x, const Formula& y);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  static std::strong_ordering compare(const Node* x, const Node* y);

  std::shared_ptr<const Node> node_;
};

struct Formula::Node {
  Kind kind;
  std::string name;
  Formula a, b;
  std::size_t size;
  std::size_t hash;
};

inline Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }
inline const Formula& Formula::lhs() const { return node_->a; }
inline const Formula& Formula::rhs() const { return node_->b; }
inline std::size_t Formula::size() const { return node_->size; }
inline std::size_t Formula::hash() const { return node_->hash; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

Formula neg(Formula a);
Formula tilde(Formula a);
Formula plus(Formula a, Formula b);
Formula arrow(Formula a, Formula b);
Formula imp(Formula a, Formula b);  // ⇒
Formula mat(Formula a, Formula b);  // ⊃
Formula enth(Formula a, Formula b);  // ⊇
Formula oplus(Formula a, Formula b);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);

struct ParseOptions {
  bool allow_reserved = false;
};

Formula parse_formula(std::string_view text, Dialect dialect, ParseOptions opts = {});
std::string render_formula(const Formula& f);

// Throws DialectError if f uses a connective outside the dialect.
void check_dialect(const Formula& f, Dialect dialect);
bool in_dialect(const Formula& f, Dialect dialect);

// Expands every connective that is not primitive in the target calculus.
Formula normalize(const Formula& f, CalculusId target);

// Sorted, duplicate-free variable names.
std::vector<std::string> variables(const Formula& f);
void collect_variables(const Formula& f, std::vector<std::string>& out);

// Number of non-atomic nodes.
std::size_t connective_count(const Formula& f);

}  // namespace hyperlog
