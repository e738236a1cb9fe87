#include "hott/surface.hpp"

namespace hott {

namespace {

SExprPtr se(SExpr::Node n, Span s) {
  return std::make_shared<SExpr>(std::move(n), s);
}

Span join(Span a, Span b) {
  if (!a.valid()) return b;
  if (!b.valid()) return a;
  return Span{a.line, a.col, b.end_line, b.end_col};
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& toks) : toks_(toks) {}

  SourceModule module(const std::string& path) {
    SourceModule m;
    m.path = path;
    while (peek().kind != Tok::Eof) m.decls.push_back(decl());
    return m;
  }

  SExprPtr single_term() {
    auto t = term();
    expect(Tok::Eof, "end of input");
    return t;
  }

 private:
  const std::vector<Token>& toks_;
  size_t pos_ = 0;

  const Token& peek(size_t ahead = 0) const {
    size_t i = pos_ + ahead;
    if (i >= toks_.size()) i = toks_.size() - 1;
    return toks_[i];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (t.kind != Tok::Eof) pos_++;
    return t;
  }
  [[noreturn]] void fail(const std::string& what,
                         std::vector<std::string> expected = {}) {
    throw ParseError("expected " + what + ", found " +
                         token_name(peek().kind),
                     peek().span, std::move(expected));
  }
  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail(what, {token_name(kind)});
    return next();
  }

  std::string ident() {
    return expect(Tok::Ident, "an identifier").text;
  }

  // decl ::= "def" ident params? ":" term ":=" term
  //        | "axiom" ident params? ":" term
  SDecl decl() {
    SDecl d;
    d.span = peek().span;
    if (peek().kind == Tok::KwDef) {
      next();
    } else if (peek().kind == Tok::KwAxiom) {
      next();
      d.is_axiom = true;
    } else {
      fail("'def' or 'axiom'", {"'def'", "'axiom'"});
    }
    d.name = ident();
    // params ::= ("(" ident+ ":" term ")")+
    std::vector<std::pair<std::string, SExprPtr>> params;
    while (peek().kind == Tok::LParen) {
      next();
      std::vector<std::string> names;
      while (peek().kind == Tok::Ident) names.push_back(next().text);
      if (names.empty()) fail("parameter names");
      expect(Tok::Colon, "':'");
      auto ty = term();
      expect(Tok::RParen, "')'");
      for (auto& nm : names) params.emplace_back(nm, ty);
    }
    expect(Tok::Colon, "':'");
    auto ty = term();
    SExprPtr body;
    if (!d.is_axiom) {
      expect(Tok::ColonEq, "':='");
      body = term();
    }
    // Desugar parameter groups into Pis and lambdas.
    for (auto it = params.rbegin(); it != params.rend(); ++it) {
      ty = se(SExpr::Pi{it->first, it->second, ty}, join(it->second->span,
                                                         ty->span));
      if (body)
        body = se(SExpr::Lam{it->first, body}, body->span);
    }
    d.type = ty;
    d.body = body;
    return d;
  }

  // term ::= "fun" ident+ "=>" term
  //        | "let" ident ":" term ":=" term "in" term
  //        | arrow-level
  SExprPtr term() {
    if (peek().kind == Tok::KwFun) {
      Span s0 = next().span;
      std::vector<std::string> names;
      while (peek().kind == Tok::Ident) names.push_back(next().text);
      if (names.empty()) fail("binder names");
      expect(Tok::DArrow, "'=>'");
      auto body = term();
      for (auto it = names.rbegin(); it != names.rend(); ++it)
        body = se(SExpr::Lam{*it, body}, join(s0, body->span));
      return body;
    }
    if (peek().kind == Tok::KwLet) {
      Span s0 = next().span;
      std::string name = ident();
      expect(Tok::Colon, "':'");
      auto annot = term();
      expect(Tok::ColonEq, "':='");
      auto bound = term();
      expect(Tok::KwIn, "'in'");
      auto body = term();
      return se(SExpr::Let{name, annot, bound, body}, join(s0, body->span));
    }
    return arrow_term();
  }

  bool at_binder() const {
    return peek().kind == Tok::LParen && peek(1).kind == Tok::Ident &&
           peek(2).kind == Tok::Colon;
  }

  // arrow-level: star-level ("->" arrow-level)?      (right associative)
  SExprPtr arrow_term() {
    auto lhs = star_term();
    if (peek().kind == Tok::Arrow) {
      next();
      auto rhs = term();
      return se(SExpr::Pi{"_", lhs, rhs}, join(lhs->span, rhs->span));
    }
    return lhs;
  }

  // star-level: "(" x ":" T ")" ("->" arrow-level | "*" star-level)
  //           | application-level
  SExprPtr star_term() {
    if (at_binder()) {
      Span s0 = peek().span;
      next();
      std::string name = next().text;
      expect(Tok::Colon, "':'");
      auto dom = term();
      expect(Tok::RParen, "')'");
      if (peek().kind == Tok::Arrow) {
        next();
        auto cod = term();
        return se(SExpr::Pi{name, dom, cod}, join(s0, cod->span));
      }
      if (peek().kind == Tok::Star) {
        next();
        auto snd = star_term();
        return se(SExpr::Sigma{name, dom, snd}, join(s0, snd->span));
      }
      fail("'->' or '*' after a binder", {"'->'", "'*'"});
    }
    return app_term();
  }

  bool at_atom() const {
    return peek().kind == Tok::Ident || peek().kind == Tok::LParen;
  }

  // application-level: keyword form or an atom spine, then postfix
  // projections.
  SExprPtr app_term() {
    SExprPtr t;
    switch (peek().kind) {
      case Tok::KwId: {
        Span s0 = next().span;
        auto a = atom();
        auto b = atom();
        auto c = atom();
        t = se(SExpr::Id{a, b, c}, join(s0, c->span));
        break;
      }
      case Tok::KwRefl: {
        Span s0 = next().span;
        auto a = atom();
        t = se(SExpr::Refl{a}, join(s0, a->span));
        break;
      }
      case Tok::KwJ: {
        Span s0 = next().span;
        auto a = atom();
        auto b = atom();
        auto c = atom();
        auto d = atom();
        auto e = atom();
        auto f = atom();
        t = se(SExpr::J{a, b, c, d, e, f}, join(s0, f->span));
        break;
      }
      case Tok::KwType: {
        Span s0 = next().span;
        const Token& n = expect(Tok::Nat, "a universe level");
        t = se(SExpr::Universe{static_cast<int>(n.nat)}, join(s0, n.span));
        break;
      }
      default: {
        t = atom();
        while (at_atom()) {
          auto arg = atom();
          t = se(SExpr::App{t, arg}, join(t->span, arg->span));
        }
        break;
      }
    }
    while (peek().kind == Tok::Proj1 || peek().kind == Tok::Proj2) {
      const Token& p = next();
      if (p.kind == Tok::Proj1)
        t = se(SExpr::Proj1{t}, join(t->span, p.span));
      else
        t = se(SExpr::Proj2{t}, join(t->span, p.span));
    }
    return t;
  }

  // atom ::= ident | "(" term ")" | "(" term "," term ")"
  SExprPtr atom() {
    if (peek().kind == Tok::Ident) {
      const Token& t = next();
      return se(SExpr::Name{t.text}, t.span);
    }
    if (peek().kind == Tok::LParen) {
      Span s0 = next().span;
      auto t = term();
      if (peek().kind == Tok::Comma) {
        next();
        auto u = term();
        Span s1 = expect(Tok::RParen, "')'").span;
        return se(SExpr::Pair{t, u}, join(s0, s1));
      }
      expect(Tok::RParen, "')'");
      return t;
    }
    fail("a term", {"identifier", "'('"});
  }
};

}  // namespace

SourceModule parse_module(const std::vector<Token>& tokens,
                          const std::string& path) {
  Parser p(tokens);
  return p.module(path);
}

SourceModule parse_module(const std::string& input, const std::string& path) {
  return parse_module(tokenize(input), path);
}

SExprPtr parse_term(const std::string& input) {
  auto toks = tokenize(input);
  Parser p(toks);
  return p.single_term();
}

}  // namespace hott
