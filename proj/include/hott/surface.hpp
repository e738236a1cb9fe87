#ifndef HOTT_SURFACE_HPP
#define HOTT_SURFACE_HPP

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "hott/term.hpp"

namespace hott {

struct LexError : std::runtime_error {
  Span span;
  LexError(const std::string& msg, Span s)
      : std::runtime_error(msg), span(s) {}
};

struct ParseError : std::runtime_error {
  Span span;
  std::vector<std::string> expected;
  ParseError(const std::string& msg, Span s, std::vector<std::string> exp = {})
      : std::runtime_error(msg), span(s), expected(std::move(exp)) {}
};

enum class Tok {
  KwDef, KwAxiom, KwFun, KwLet, KwIn, KwId, KwRefl, KwJ, KwType,
  Ident, Nat,
  LParen, RParen, Colon, ColonEq, Arrow, DArrow, Star, Comma,
  Proj1, Proj2, Eof,
};

struct Token {
  Tok kind;
  std::string text;   // identifier text
  uint64_t nat = 0;   // numeral value
  Span span;
};

std::string token_name(Tok t);

// Lexes the whole input. `--` starts a line comment; identifiers are
// ASCII alphanumerics plus `_` and `'`.
std::vector<Token> tokenize(const std::string& input);

// Surface syntax with user-written names; elaboration to core terms
// happens during checking, when the signature is known.
struct SExpr;
using SExprPtr = std::shared_ptr<const SExpr>;

struct SExpr {
  struct Name { std::string name; };
  struct Universe { int level; };
  struct Pi { std::string name; SExprPtr domain, codomain; };
  struct Lam { std::string name; SExprPtr body; };
  struct App { SExprPtr fn, arg; };
  struct Sigma { std::string name; SExprPtr first, second; };
  struct Pair { SExprPtr fst, snd; };
  struct Proj1 { SExprPtr tuple; };
  struct Proj2 { SExprPtr tuple; };
  struct Id { SExprPtr type, lhs, rhs; };
  struct Refl { SExprPtr arg; };
  struct J { SExprPtr type, base, motive, branch, other, path; };
  struct Let { std::string name; SExprPtr annot, bound, body; };

  using Node = std::variant<Name, Universe, Pi, Lam, App, Sigma, Pair, Proj1,
                            Proj2, Id, Refl, J, Let>;
  Node node;
  Span span;
  SExpr(Node n, Span s) : node(std::move(n)), span(s) {}
};

struct SDecl {
  bool is_axiom = false;
  std::string name;
  SExprPtr type;
  SExprPtr body;  // null for axioms
  Span span;
};

struct SourceModule {
  std::string path;
  std::vector<SDecl> decls;
};

// Parses a token stream produced by tokenize. Parameter groups in
// declaration heads are desugared into Pi types and lambdas.
SourceModule parse_module(const std::vector<Token>& tokens,
                          const std::string& path = "<input>");
SourceModule parse_module(const std::string& input,
                          const std::string& path = "<input>");

// A single term, for tooling.
SExprPtr parse_term(const std::string& input);

// Printers. Output re-parses to an alpha-equal structure.
std::string print(const SExprPtr& e);
std::string print(const SourceModule& m);
// Core terms print with fresh names derived from hints; clashes get
// numeric suffixes.
std::string print(const TermPtr& t, const std::vector<std::string>& names = {});

bool alpha_equal(const SExprPtr& a, const SExprPtr& b);
bool structurally_equal(const SourceModule& a, const SourceModule& b);

}  // namespace hott

#endif
