#include "hott/surface.hpp"

namespace hott {

std::string token_name(Tok t) {
  switch (t) {
    case Tok::KwDef: return "'def'";
    case Tok::KwAxiom: return "'axiom'";
    case Tok::KwFun: return "'fun'";
    case Tok::KwLet: return "'let'";
    case Tok::KwIn: return "'in'";
    case Tok::KwId: return "'Id'";
    case Tok::KwRefl: return "'refl'";
    case Tok::KwJ: return "'J'";
    case Tok::KwType: return "'Type'";
    case Tok::Ident: return "identifier";
    case Tok::Nat: return "numeral";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Colon: return "':'";
    case Tok::ColonEq: return "':='";
    case Tok::Arrow: return "'->'";
    case Tok::DArrow: return "'=>'";
    case Tok::Star: return "'*'";
    case Tok::Comma: return "','";
    case Tok::Proj1: return "'.1'";
    case Tok::Proj2: return "'.2'";
    case Tok::Eof: return "end of input";
  }
  return "?";
}

namespace {

bool ident_start(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' ||
         c == '\'';
}
bool ident_char(char c) { return ident_start(c) || (c >= '0' && c <= '9'); }
bool digit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::vector<Token> tokenize(const std::string& input) {
  std::vector<Token> out;
  uint32_t line = 1, col = 1;
  size_t i = 0;
  const size_t n = input.size();

  auto here = [&](uint32_t l, uint32_t c) {
    return Span{l, c, line, col};
  };
  auto push = [&](Tok kind, uint32_t l, uint32_t c, std::string text = {},
                  uint64_t nat = 0) {
    out.push_back(Token{kind, std::move(text), nat, here(l, c)});
  };
  auto advance = [&]() {
    if (input[i] == '\n') {
      line++;
      col = 1;
    } else {
      col++;
    }
    i++;
  };

  while (i < n) {
    char c = input[i];
    uint32_t l0 = line, c0 = col;
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '-' && i + 1 < n && input[i + 1] == '-') {
      while (i < n && input[i] != '\n') advance();
      continue;
    }
    switch (c) {
      case '(': advance(); push(Tok::LParen, l0, c0); continue;
      case ')': advance(); push(Tok::RParen, l0, c0); continue;
      case ',': advance(); push(Tok::Comma, l0, c0); continue;
      case '*': advance(); push(Tok::Star, l0, c0); continue;
      case ':':
        advance();
        if (i < n && input[i] == '=') {
          advance();
          push(Tok::ColonEq, l0, c0);
        } else {
          push(Tok::Colon, l0, c0);
        }
        continue;
      case '-':
        advance();
        if (i < n && input[i] == '>') {
          advance();
          push(Tok::Arrow, l0, c0);
          continue;
        }
        throw LexError("unexpected character '-'", Span{l0, c0, l0, c0 + 1});
      case '=':
        advance();
        if (i < n && input[i] == '>') {
          advance();
          push(Tok::DArrow, l0, c0);
          continue;
        }
        throw LexError("unexpected character '='", Span{l0, c0, l0, c0 + 1});
      case '.':
        advance();
        if (i < n && input[i] == '1') {
          advance();
          push(Tok::Proj1, l0, c0);
          continue;
        }
        if (i < n && input[i] == '2') {
          advance();
          push(Tok::Proj2, l0, c0);
          continue;
        }
        throw LexError("expected '.1' or '.2'", Span{l0, c0, l0, c0 + 1});
      default: break;
    }
    if (digit(c)) {
      uint64_t v = 0;
      while (i < n && digit(input[i])) {
        v = v * 10 + static_cast<uint64_t>(input[i] - '0');
        advance();
      }
      if (i < n && ident_start(input[i]))
        throw LexError("identifiers may not start with a digit",
                       Span{l0, c0, line, col});
      push(Tok::Nat, l0, c0, {}, v);
      continue;
    }
    if (ident_start(c)) {
      std::string s;
      while (i < n && ident_char(input[i])) {
        s.push_back(input[i]);
        advance();
      }
      Tok kind = Tok::Ident;
      if (s == "def") kind = Tok::KwDef;
      else if (s == "axiom") kind = Tok::KwAxiom;
      else if (s == "fun") kind = Tok::KwFun;
      else if (s == "let") kind = Tok::KwLet;
      else if (s == "in") kind = Tok::KwIn;
      else if (s == "Id") kind = Tok::KwId;
      else if (s == "refl") kind = Tok::KwRefl;
      else if (s == "J") kind = Tok::KwJ;
      else if (s == "Type") kind = Tok::KwType;
      push(kind, l0, c0, kind == Tok::Ident ? s : std::string{});
      continue;
    }
    throw LexError(std::string("unexpected character '") + c + "'",
                   Span{l0, c0, l0, c0 + 1});
  }
  push(Tok::Eof, line, col);
  return out;
}

}  // namespace hott
