#include <algorithm>
#include <cctype>
#include <functional>

#include "hyperlog/formula.hpp"
#include "parser.hpp"

namespace hyperlog {

namespace {

std::size_t arity_of(Kind k) {
  switch (k) {
    case Kind::Var:
    case Kind::Top:
    case Kind::Bot:
      return 0;
    case Kind::Neg:
    case Kind::Tilde:
      return 1;
    default:
      return 2;
  }
}

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

const char* symbol(Kind k) {
  switch (k) {
    case Kind::Neg: return "-";
    case Kind::Tilde: return "~";
    case Kind::Plus: return "+";
    case Kind::OPlus: return "o+";
    case Kind::Arrow: return "->";
    case Kind::PosArrow: return "=>";
    case Kind::MatArrow: return ".>";
    case Kind::EnthArrow: return "=>>";
    case Kind::And: return "/\\";
    case Kind::Or: return "\\/";
    default: return "";
  }
}

int level(Kind k) {
  switch (k) {
    case Kind::Var:
    case Kind::Top:
    case Kind::Bot:
      return 5;
    case Kind::Neg:
    case Kind::Tilde:
      return 4;
    case Kind::Plus:
    case Kind::OPlus:
      return 3;
    case Kind::And:
    case Kind::Or:
      return 2;
    default:
      return 1;
  }
}

bool allowed(Kind k, Dialect d) {
  if (d == Dialect::Abelian)
    return k != Kind::Tilde && k != Kind::OPlus && k != Kind::MatArrow && k != Kind::Bot;
  return k != Kind::Neg && k != Kind::Plus && k != Kind::Arrow;
}

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Top: return "t";
    case Kind::Bot: return "bot";
    case Kind::Neg: return "negation '-'";
    case Kind::Tilde: return "'~'";
    case Kind::Plus: return "'+'";
    case Kind::OPlus: return "'o+'";
    case Kind::Arrow: return "'->'";
    case Kind::PosArrow: return "'=>'";
    case Kind::MatArrow: return "'.>'";
    case Kind::EnthArrow: return "'=>>'";
    case Kind::And: return "'/\\'";
    case Kind::Or: return "'\\/'";
    default: return "variable";
  }
}

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

Dialect dialect_of(CalculusId c) {
  switch (c) {
    case CalculusId::GL:
    case CalculusId::GL_t:
    case CalculusId::GL_l:
    case CalculusId::GL_s:
      return Dialect::Lukasiewicz;
    default:
      return Dialect::Abelian;
  }
}

std::string_view to_string(CalculusId c) {
  switch (c) {
    case CalculusId::GA: return "GA";
    case CalculusId::GL: return "GL";
    case CalculusId::GA_t: return "GA_t";
    case CalculusId::GL_t: return "GL_t";
    case CalculusId::GA_l: return "GA_l";
    case CalculusId::GL_l: return "GL_l";
    case CalculusId::GA_s: return "GA_s";
    case CalculusId::GL_s: return "GL_s";
    case CalculusId::GA_i: return "GA_i";
  }
  return "?";
}

CalculusId parse_calculus_id(std::string_view name) {
  for (auto c : {CalculusId::GA, CalculusId::GL, CalculusId::GA_t, CalculusId::GL_t, CalculusId::GA_l,
                 CalculusId::GL_l, CalculusId::GA_s, CalculusId::GL_s, CalculusId::GA_i})
    if (to_string(c) == name) return c;
  throw std::invalid_argument("unknown calculus: " + std::string(name));
}

// ---------------------------------------------------------------------------
// Formula

std::size_t Formula::arity() const { return arity_of(kind()); }

Formula Formula::var(std::string name) {
  std::size_t h = mix(std::hash<std::string>{}(name), static_cast<std::size_t>(Kind::Var));
  return Formula(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}, {}, 1, h}));
}

Formula Formula::top() {
  static const Formula t(std::make_shared<const Node>(Node{Kind::Top, "", {}, {}, 1, 0x7001}));
  return t;
}

Formula Formula::bot() {
  static const Formula b(std::make_shared<const Node>(Node{Kind::Bot, "", {}, {}, 1, 0xb07}));
  return b;
}

Formula Formula::unary(Kind k, Formula a) {
  if (arity_of(k) != 1) throw std::invalid_argument("unary: wrong arity");
  std::size_t h = mix(static_cast<std::size_t>(k) * 131, a.hash());
  std::size_t s = a.size() + 1;
  return Formula(std::make_shared<const Node>(Node{k, "", std::move(a), {}, s, h}));
}

Formula Formula::binary(Kind k, Formula a, Formula b) {
  if (arity_of(k) != 2) throw std::invalid_argument("binary: wrong arity");
  std::size_t h = mix(mix(static_cast<std::size_t>(k) * 131, a.hash()), b.hash());
  std::size_t s = a.size() + b.size() + 1;
  return Formula(std::make_shared<const Node>(Node{k, "", std::move(a), std::move(b), s, h}));
}

std::strong_ordering Formula::compare(const Node* x, const Node* y) {
  while (true) {
    if (x == y) return std::strong_ordering::equal;
    if (x->kind != y->kind) return x->kind <=> y->kind;
    std::size_t ar = arity_of(x->kind);
    if (ar == 0) {
      int c = x->name.compare(y->name);
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
    if (ar == 2) {
      auto c = compare(x->a.node_.get(), y->a.node_.get());
      if (c != 0) return c;
      x = x->b.node_.get();
      y = y->b.node_.get();
    } else {
      x = x->a.node_.get();
      y = y->a.node_.get();
    }
  }
}

bool operator==(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return true;
  if (!x.node_ || !y.node_) return false;
  if (x.node_->hash != y.node_->hash || x.node_->size != y.node_->size) return false;
  return Formula::compare(x.node_.get(), y.node_.get()) == 0;
}

std::strong_ordering operator<=>(const Formula& x, const Formula& y) {
  if (x.node_ == y.node_) return std::strong_ordering::equal;
  if (!x.node_) return std::strong_ordering::less;
  if (!y.node_) return std::strong_ordering::greater;
  return Formula::compare(x.node_.get(), y.node_.get());
}

Formula neg(Formula a) { return Formula::unary(Kind::Neg, std::move(a)); }
Formula tilde(Formula a) { return Formula::unary(Kind::Tilde, std::move(a)); }
Formula plus(Formula a, Formula b) { return Formula::binary(Kind::Plus, std::move(a), std::move(b)); }
Formula arrow(Formula a, Formula b) { return Formula::binary(Kind::Arrow, std::move(a), std::move(b)); }
Formula imp(Formula a, Formula b) { return Formula::binary(Kind::PosArrow, std::move(a), std::move(b)); }
Formula mat(Formula a, Formula b) { return Formula::binary(Kind::MatArrow, std::move(a), std::move(b)); }
Formula enth(Formula a, Formula b) { return Formula::binary(Kind::EnthArrow, std::move(a), std::move(b)); }
Formula oplus(Formula a, Formula b) { return Formula::binary(Kind::OPlus, std::move(a), std::move(b)); }
Formula land(Formula a, Formula b) { return Formula::binary(Kind::And, std::move(a), std::move(b)); }
Formula lor(Formula a, Formula b) { return Formula::binary(Kind::Or, std::move(a), std::move(b)); }

// ---------------------------------------------------------------------------
// Lexer / parser

namespace detail {

Parser::Parser(std::string_view text, Dialect dialect, ParseOptions opts)
    : src_(text), dialect_(dialect), opts_(opts) {
  tok_ = lex();
}

void Parser::fail(const std::string& msg) const { throw SyntaxError(msg, tok_.pos); }

Token Parser::take() {
  Token t = tok_;
  tok_ = lex();
  return t;
}

void Parser::expect(Tok k, const char* what) {
  if (tok_.kind != k) fail(std::string("expected ") + what);
  take();
}

Token Parser::lex() {
  while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  Token t;
  t.pos = i_;
  if (i_ >= src_.size()) return t;
  auto rest = src_.substr(i_);
  auto starts = [&](std::string_view p) { return rest.substr(0, p.size()) == p; };
  auto make = [&](Tok k, std::size_t len) {
    t.kind = k;
    t.text = std::string(rest.substr(0, len));
    i_ += len;
    return t;
  };
  char c = rest[0];
  switch (c) {
    case '(': return make(Tok::LParen, 1);
    case ')': return make(Tok::RParen, 1);
    case '[': return make(Tok::LBracket, 1);
    case ']': return make(Tok::RBracket, 1);
    case ',': return make(Tok::Comma, 1);
    case ':': return make(Tok::Colon, 1);
    case '+': return make(Tok::Plus, 1);
    case '~': return make(Tok::Tilde, 1);
    case '|':
      if (starts("|-")) return make(Tok::Turnstile, 2);
      if (starts("||")) return make(Tok::DoubleBar, 2);
      return make(Tok::Bar, 1);
    case '-':
      if (starts("->")) return make(Tok::Arrow, 2);
      return make(Tok::Minus, 1);
    case '=':
      if (starts("=>>")) return make(Tok::Enth, 3);
      if (starts("=>")) return make(Tok::PosArrow, 2);
      break;
    case '.':
      if (starts(".>")) return make(Tok::Mat, 2);
      return make(Tok::Dot, 1);
    case '<':
      if (starts("<->")) return make(Tok::Iff, 3);
      break;
    case '/':
      if (starts("/\\")) return make(Tok::And, 2);
      break;
    case '\\':
      if (starts("\\/")) return make(Tok::Or, 2);
      break;
    default:
      break;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::size_t n = 1;
    while (n < rest.size() && std::isdigit(static_cast<unsigned char>(rest[n]))) ++n;
    return make(Tok::Number, n);
  }
  if (ident_start(c) || c == '$') {
    std::size_t n = 1;
    while (n < rest.size() && ident_char(rest[n])) ++n;
    if (c == '$') {
      if (!opts_.allow_reserved) throw SyntaxError("reserved variable name", i_);
      if (n == 1) throw SyntaxError("malformed reserved name", i_);
    }
    std::string_view word = rest.substr(0, n);
    if (word == "o" && n < rest.size() && rest[n] == '+') return make(Tok::OPlus, 2);
    if (word == "t") return make(Tok::T, 1);
    if (word == "bot") return make(Tok::Bot, 3);
    return make(Tok::Ident, n);
  }
  throw SyntaxError(std::string("unexpected character '") + c + "'", i_);
}

Formula Parser::build(Kind k, Formula a, Formula b, std::size_t pos) const {
  if (!allowed(k, dialect_))
    throw SyntaxError(std::string("connective ") + kind_name(k) + " not in dialect", pos);
  if (b.null()) return Formula::unary(k, std::move(a));
  return Formula::binary(k, std::move(a), std::move(b));
}

Formula Parser::formula() { return implication(); }

Formula Parser::implication() {
  Formula lhs = lattice();
  Kind k;
  switch (tok_.kind) {
    case Tok::Arrow: k = Kind::Arrow; break;
    case Tok::PosArrow: k = Kind::PosArrow; break;
    case Tok::Enth: k = Kind::EnthArrow; break;
    case Tok::Mat: k = Kind::MatArrow; break;
    case Tok::Iff: {
      std::size_t pos = take().pos;
      Formula rhs = implication();
      Kind dir = dialect_ == Dialect::Abelian ? Kind::Arrow : Kind::MatArrow;
      return land(build(dir, lhs, rhs, pos), build(dir, rhs, lhs, pos));
    }
    default:
      return lhs;
  }
  std::size_t pos = take().pos;
  Formula rhs = implication();
  return build(k, std::move(lhs), std::move(rhs), pos);
}

Formula Parser::lattice() {
  Formula lhs = additive();
  while (at(Tok::And) || at(Tok::Or)) {
    Kind k = at(Tok::And) ? Kind::And : Kind::Or;
    std::size_t pos = take().pos;
    lhs = build(k, std::move(lhs), additive(), pos);
  }
  return lhs;
}

Formula Parser::additive() {
  Formula lhs = unary();
  while (at(Tok::Plus) || at(Tok::OPlus)) {
    Kind k = at(Tok::Plus) ? Kind::Plus : Kind::OPlus;
    std::size_t pos = take().pos;
    lhs = build(k, std::move(lhs), unary(), pos);
  }
  return lhs;
}

Formula Parser::unary() {
  if (at(Tok::Minus) || at(Tok::Tilde)) {
    Kind k = at(Tok::Minus) ? Kind::Neg : Kind::Tilde;
    std::size_t pos = take().pos;
    return build(k, unary(), Formula(), pos);
  }
  return atom();
}

Formula Parser::atom() {
  switch (tok_.kind) {
    case Tok::LParen: {
      take();
      Formula f = implication();
      expect(Tok::RParen, "')'");
      return f;
    }
    case Tok::T:
      take();
      return Formula::top();
    case Tok::Bot:
      take();
      if (dialect_ == Dialect::Abelian) return Formula::var(std::string(kMBot));
      return Formula::bot();
    case Tok::Ident:
      return Formula::var(take().text);
    case Tok::End:
      fail("unexpected end of input");
    default:
      fail("unexpected token '" + tok_.text + "'");
  }
}

}  // namespace detail

Formula parse_formula(std::string_view text, Dialect dialect, ParseOptions opts) {
  detail::Parser p(text, dialect, opts);
  Formula f = p.formula();
  if (!p.at(detail::Tok::End)) p.fail("trailing input");
  return f;
}

// ---------------------------------------------------------------------------
// Rendering

namespace {

void render_into(const Formula& f, std::string& out) {
  auto child = [&](const Formula& c, bool parens) {
    if (parens) out += '(';
    render_into(c, out);
    if (parens) out += ')';
  };
  switch (f.kind()) {
    case Kind::Var: out += f.name(); return;
    case Kind::Top: out += 't'; return;
    case Kind::Bot: out += "bot"; return;
    case Kind::Neg:
    case Kind::Tilde:
      out += symbol(f.kind());
      child(f.lhs(), level(f.lhs().kind()) < 4);
      return;
    default:
      break;
  }
  int l = level(f.kind());
  int ll = level(f.lhs().kind());
  int rl = level(f.rhs().kind());
  bool right_assoc = l == 1;
  child(f.lhs(), right_assoc ? ll <= l : ll < l);
  out += ' ';
  out += symbol(f.kind());
  out += ' ';
  child(f.rhs(), right_assoc ? rl < l : rl <= l);
}

}  // namespace

std::string render_formula(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

// ---------------------------------------------------------------------------
// Dialects and normalization

bool in_dialect(const Formula& f, Dialect d) {
  if (!allowed(f.kind(), d)) return false;
  for (std::size_t i = 0; i < f.arity(); ++i)
    if (!in_dialect(i == 0 ? f.lhs() : f.rhs(), d)) return false;
  return true;
}

void check_dialect(const Formula& f, Dialect d) {
  if (!in_dialect(f, d))
    throw DialectError(std::string("formula '") + render_formula(f) + "' is not in the " +
                       (d == Dialect::Abelian ? "A" : "Ł") + " dialect");
}

namespace {

Formula normalize_rec(const Formula& f, bool luk, bool expand_lattice, bool expand_pos) {
  auto rec = [&](const Formula& g) { return normalize_rec(g, luk, expand_lattice, expand_pos); };
  auto reject = [&]() -> Formula {
    throw DialectError(std::string("connective ") + kind_name(f.kind()) +
                       " has no expansion in the target calculus");
  };
  switch (f.kind()) {
    case Kind::Var:
      return f;
    case Kind::Top:
      return luk ? imp(Formula::bot(), Formula::bot()) : f;
    case Kind::Bot:
      return luk ? f : Formula::var(std::string(kMBot));
    case Kind::Neg: {
      if (luk) return reject();
      Formula a = rec(f.lhs());
      return a == f.lhs() ? f : neg(a);
    }
    case Kind::Tilde:
      if (!luk) return reject();
      return imp(rec(f.lhs()), Formula::bot());
    default:
      break;
  }
  Formula a = rec(f.lhs());
  Formula b = rec(f.rhs());
  bool same = a == f.lhs() && b == f.rhs();
  switch (f.kind()) {
    case Kind::Plus:
    case Kind::Arrow:
      if (luk) return reject();
      return same ? f : Formula::binary(f.kind(), a, b);
    case Kind::PosArrow:
      if (expand_pos) return land(arrow(a, b), Formula::top());
      return same ? f : imp(a, b);
    case Kind::MatArrow:
      if (luk) return imp(a, b);
      return arrow(land(Formula::top(), a), lor(Formula::var(std::string(kMBot)), b));
    case Kind::EnthArrow:
      if (luk) return imp(a, b);
      return arrow(land(Formula::top(), a), b);
    case Kind::OPlus:
      if (!luk) return reject();
      return imp(imp(a, Formula::bot()), b);
    case Kind::And:
      if (luk && expand_lattice) {
        Formula na = imp(a, Formula::bot());
        Formula nb = imp(b, Formula::bot());
        return imp(imp(imp(na, nb), nb), Formula::bot());
      }
      return same ? f : land(a, b);
    case Kind::Or:
      if (luk && expand_lattice) return imp(imp(a, b), b);
      return same ? f : lor(a, b);
    default:
      return reject();
  }
}

}  // namespace

Formula normalize(const Formula& f, CalculusId target) {
  bool luk = dialect_of(target) == Dialect::Lukasiewicz;
  bool expand = target == CalculusId::GL_l || target == CalculusId::GL_s;
  // GA and GA_t have no rules for ⇒.
  bool expand_pos = target == CalculusId::GA || target == CalculusId::GA_t;
  return normalize_rec(f, luk, expand, expand_pos);
}

void collect_variables(const Formula& f, std::vector<std::string>& out) {
  if (f.is_var()) {
    out.push_back(f.name());
    return;
  }
  if (f.arity() >= 1) collect_variables(f.lhs(), out);
  if (f.arity() == 2) collect_variables(f.rhs(), out);
}

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  collect_variables(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t connective_count(const Formula& f) {
  if (f.is_atom()) return 0;
  std::size_t n = 1 + connective_count(f.lhs());
  if (f.arity() == 2) n += connective_count(f.rhs());
  return n;
}

}  // namespace hyperlog
