#pragma once

// Shared lexer and formula parser; structures.cpp builds the sequent
// grammars on top of it.

#include <string>
#include <string_view>

#include "hyperlog/formula.hpp"

namespace hyperlog::detail {

enum class Tok {
  End,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Ident,
  Number,
  T,
  Bot,
  Tilde,
  Minus,
  Plus,
  OPlus,
  Arrow,
  PosArrow,
  Enth,
  Mat,
  Iff,
  And,
  Or,
  Comma,
  Bar,
  Turnstile,
  DoubleBar,
  Colon,
  Dot,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::size_t pos = 0;
};

class Parser {
 public:
  Parser(std::string_view text, Dialect dialect, ParseOptions opts);

  const Token& peek() const { return tok_; }
  bool at(Tok k) const { return tok_.kind == k; }
  Token take();
  void expect(Tok k, const char* what);
  [[noreturn]] void fail(const std::string& msg) const;

  Formula formula();
  Dialect dialect() const { return dialect_; }

  struct State {
    std::size_t i;
    Token tok;
  };
  State save() const { return {i_, tok_}; }
  void restore(const State& s) {
    i_ = s.i;
    tok_ = s.tok;
  }

 private:
  Token lex();
  Formula implication();
  Formula lattice();
  Formula additive();
  Formula unary();
  Formula atom();
  Formula build(Kind k, Formula a, Formula b, std::size_t pos) const;

  std::string_view src_;
  std::size_t i_ = 0;
  Dialect dialect_;
  ParseOptions opts_;
  Token tok_;
};

}  // namespace hyperlog::detail
