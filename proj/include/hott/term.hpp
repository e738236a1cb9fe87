#ifndef HOTT_TERM_HPP
#define HOTT_TERM_HPP

#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>

namespace hott {

// Half-open source range, 1-based lines and columns. A zero line means
// "no location" (terms built programmatically).
struct Span {
  uint32_t line = 0, col = 0;
  uint32_t end_line = 0, end_col = 0;
  bool valid() const { return line != 0; }
  std::string to_string() const;
};

struct InternalError : std::logic_error {
  explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

struct Term;
using TermPtr = std::shared_ptr<const Term>;

// Core syntax. Variables are de Bruijn indices; binder names are hints
// only and never affect alpha_equal. `J` is based (Paulin-Mohring) path
// induction: J A a C d x p : C x p with C : (x : A) -> Id A a x -> Type.
struct Term {
  struct Var { int index; };
  struct Universe { int level; };
  struct Pi { std::string name; TermPtr domain, codomain; };
  struct Lambda { std::string name; TermPtr body; };
  struct App { TermPtr fn, arg; };
  struct Sigma { std::string name; TermPtr first, second; };
  struct Pair { TermPtr fst, snd; };
  struct Proj1 { TermPtr tuple; };
  struct Proj2 { TermPtr tuple; };
  struct Id { TermPtr type, lhs, rhs; };
  struct Refl { TermPtr arg; };
  struct J { TermPtr type, base, motive, branch, other, path; };
  struct Let { std::string name; TermPtr annot, bound, body; };
  struct Const { std::string name; };

  using Node = std::variant<Var, Universe, Pi, Lambda, App, Sigma, Pair, Proj1,
                            Proj2, Id, Refl, J, Let, Const>;

  Node node;
  Span span;

  Term(Node n, Span s) : node(std::move(n)), span(s) {}
};

namespace mk {
TermPtr var(int index, Span s = {});
TermPtr universe(int level, Span s = {});
TermPtr pi(std::string name, TermPtr domain, TermPtr codomain, Span s = {});
TermPtr lam(std::string name, TermPtr body, Span s = {});
TermPtr app(TermPtr fn, TermPtr arg, Span s = {});
TermPtr sigma(std::string name, TermPtr first, TermPtr second, Span s = {});
TermPtr pair(TermPtr fst, TermPtr snd, Span s = {});
TermPtr proj1(TermPtr tuple, Span s = {});
TermPtr proj2(TermPtr tuple, Span s = {});
TermPtr id(TermPtr type, TermPtr lhs, TermPtr rhs, Span s = {});
TermPtr refl(TermPtr arg, Span s = {});
TermPtr j(TermPtr type, TermPtr base, TermPtr motive, TermPtr branch,
          TermPtr other, TermPtr path, Span s = {});
TermPtr let_(std::string name, TermPtr annot, TermPtr bound, TermPtr body,
             Span s = {});
TermPtr cnst(std::string name, Span s = {});
}  // namespace mk

// Adjusts every free Var with index >= cutoff by `amount`. Throws
// InternalError if an index would go negative.
TermPtr shift(const TermPtr& t, int cutoff, int amount);

// Structural equality up to name hints and spans.
bool alpha_equal(const TermPtr& a, const TermPtr& b);

// True if Var 0 occurs free in t (used by the printer for `A -> B`).
bool uses_var0(const TermPtr& t);

// Every Const name occurring in t, in sorted order.
void collect_consts(const TermPtr& t, std::set<std::string>& out);

}  // namespace hott

#endif
