#include "hott/term.hpp"

#include <sstream>

namespace hott {

std::string Span::to_string() const {
  if (!valid()) return "<no location>";
  std::ostringstream os;
  os << line << ":" << col;
  return os.str();
}

namespace mk {
TermPtr var(int index, Span s) {
  return std::make_shared<Term>(Term::Var{index}, s);
}
TermPtr universe(int level, Span s) {
  return std::make_shared<Term>(Term::Universe{level}, s);
}
TermPtr pi(std::string name, TermPtr domain, TermPtr codomain, Span s) {
  return std::make_shared<Term>(
      Term::Pi{std::move(name), std::move(domain), std::move(codomain)}, s);
}
TermPtr lam(std::string name, TermPtr body, Span s) {
  return std::make_shared<Term>(Term::Lambda{std::move(name), std::move(body)},
                                s);
}
TermPtr app(TermPtr fn, TermPtr arg, Span s) {
  return std::make_shared<Term>(Term::App{std::move(fn), std::move(arg)}, s);
}
TermPtr sigma(std::string name, TermPtr first, TermPtr second, Span s) {
  return std::make_shared<Term>(
      Term::Sigma{std::move(name), std::move(first), std::move(second)}, s);
}
TermPtr pair(TermPtr fst, TermPtr snd, Span s) {
  return std::make_shared<Term>(Term::Pair{std::move(fst), std::move(snd)}, s);
}
TermPtr proj1(TermPtr tuple, Span s) {
  return std::make_shared<Term>(Term::Proj1{std::move(tuple)}, s);
}
TermPtr proj2(TermPtr tuple, Span s) {
  return std::make_shared<Term>(Term::Proj2{std::move(tuple)}, s);
}
TermPtr id(TermPtr type, TermPtr lhs, TermPtr rhs, Span s) {
  return std::make_shared<Term>(
      Term::Id{std::move(type), std::move(lhs), std::move(rhs)}, s);
}
TermPtr refl(TermPtr arg, Span s) {
  return std::make_shared<Term>(Term::Refl{std::move(arg)}, s);
}
TermPtr j(TermPtr type, TermPtr base, TermPtr motive, TermPtr branch,
          TermPtr other, TermPtr path, Span s) {
  return std::make_shared<Term>(
      Term::J{std::move(type), std::move(base), std::move(motive),
              std::move(branch), std::move(other), std::move(path)},
      s);
}
TermPtr let_(std::string name, TermPtr annot, TermPtr bound, TermPtr body,
             Span s) {
  return std::make_shared<Term>(Term::Let{std::move(name), std::move(annot),
                                          std::move(bound), std::move(body)},
                                s);
}
TermPtr cnst(std::string name, Span s) {
  return std::make_shared<Term>(Term::Const{std::move(name)}, s);
}
}  // namespace mk

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

TermPtr shift_rec(const TermPtr& t, int cutoff, int amount) {
  return std::visit(
      overloaded{
          [&](const Term::Var& v) -> TermPtr {
            if (v.index < cutoff) return t;
            int moved = v.index + amount;
            if (moved < 0)
              throw InternalError("shift: variable index underflow");
            return mk::var(moved, t->span);
          },
          [&](const Term::Universe&) -> TermPtr { return t; },
          [&](const Term::Const&) -> TermPtr { return t; },
          [&](const Term::Pi& n) -> TermPtr {
            return mk::pi(n.name, shift_rec(n.domain, cutoff, amount),
                          shift_rec(n.codomain, cutoff + 1, amount), t->span);
          },
          [&](const Term::Lambda& n) -> TermPtr {
            return mk::lam(n.name, shift_rec(n.body, cutoff + 1, amount),
                           t->span);
          },
          [&](const Term::App& n) -> TermPtr {
            return mk::app(shift_rec(n.fn, cutoff, amount),
                           shift_rec(n.arg, cutoff, amount), t->span);
          },
          [&](const Term::Sigma& n) -> TermPtr {
            return mk::sigma(n.name, shift_rec(n.first, cutoff, amount),
                             shift_rec(n.second, cutoff + 1, amount), t->span);
          },
          [&](const Term::Pair& n) -> TermPtr {
            return mk::pair(shift_rec(n.fst, cutoff, amount),
                            shift_rec(n.snd, cutoff, amount), t->span);
          },
          [&](const Term::Proj1& n) -> TermPtr {
            return mk::proj1(shift_rec(n.tuple, cutoff, amount), t->span);
          },
          [&](const Term::Proj2& n) -> TermPtr {
            return mk::proj2(shift_rec(n.tuple, cutoff, amount), t->span);
          },
          [&](const Term::Id& n) -> TermPtr {
            return mk::id(shift_rec(n.type, cutoff, amount),
                          shift_rec(n.lhs, cutoff, amount),
                          shift_rec(n.rhs, cutoff, amount), t->span);
          },
          [&](const Term::Refl& n) -> TermPtr {
            return mk::refl(shift_rec(n.arg, cutoff, amount), t->span);
          },
          [&](const Term::J& n) -> TermPtr {
            return mk::j(shift_rec(n.type, cutoff, amount),
                         shift_rec(n.base, cutoff, amount),
                         shift_rec(n.motive, cutoff, amount),
                         shift_rec(n.branch, cutoff, amount),
                         shift_rec(n.other, cutoff, amount),
                         shift_rec(n.path, cutoff, amount), t->span);
          },
          [&](const Term::Let& n) -> TermPtr {
            return mk::let_(n.name, shift_rec(n.annot, cutoff, amount),
                            shift_rec(n.bound, cutoff, amount),
                            shift_rec(n.body, cutoff + 1, amount), t->span);
          },
      },
      t->node);
}

}  // namespace

TermPtr shift(const TermPtr& t, int cutoff, int amount) {
  if (amount == 0) return t;
  return shift_rec(t, cutoff, amount);
}

bool alpha_equal(const TermPtr& a, const TermPtr& b) {
  if (a.get() == b.get()) return true;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      overloaded{
          [&](const Term::Var& x) {
            return x.index == std::get<Term::Var>(b->node).index;
          },
          [&](const Term::Universe& x) {
            return x.level == std::get<Term::Universe>(b->node).level;
          },
          [&](const Term::Const& x) {
            return x.name == std::get<Term::Const>(b->node).name;
          },
          [&](const Term::Pi& x) {
            const auto& y = std::get<Term::Pi>(b->node);
            return alpha_equal(x.domain, y.domain) &&
                   alpha_equal(x.codomain, y.codomain);
          },
          [&](const Term::Lambda& x) {
            return alpha_equal(x.body, std::get<Term::Lambda>(b->node).body);
          },
          [&](const Term::App& x) {
            const auto& y = std::get<Term::App>(b->node);
            return alpha_equal(x.fn, y.fn) && alpha_equal(x.arg, y.arg);
          },
          [&](const Term::Sigma& x) {
            const auto& y = std::get<Term::Sigma>(b->node);
            return alpha_equal(x.first, y.first) &&
                   alpha_equal(x.second, y.second);
          },
          [&](const Term::Pair& x) {
            const auto& y = std::get<Term::Pair>(b->node);
            return alpha_equal(x.fst, y.fst) && alpha_equal(x.snd, y.snd);
          },
          [&](const Term::Proj1& x) {
            return alpha_equal(x.tuple, std::get<Term::Proj1>(b->node).tuple);
          },
          [&](const Term::Proj2& x) {
            return alpha_equal(x.tuple, std::get<Term::Proj2>(b->node).tuple);
          },
          [&](const Term::Id& x) {
            const auto& y = std::get<Term::Id>(b->node);
            return alpha_equal(x.type, y.type) && alpha_equal(x.lhs, y.lhs) &&
                   alpha_equal(x.rhs, y.rhs);
          },
          [&](const Term::Refl& x) {
            return alpha_equal(x.arg, std::get<Term::Refl>(b->node).arg);
          },
          [&](const Term::J& x) {
            const auto& y = std::get<Term::J>(b->node);
            return alpha_equal(x.type, y.type) && alpha_equal(x.base, y.base) &&
                   alpha_equal(x.motive, y.motive) &&
                   alpha_equal(x.branch, y.branch) &&
                   alpha_equal(x.other, y.other) && alpha_equal(x.path, y.path);
          },
          [&](const Term::Let& x) {
            const auto& y = std::get<Term::Let>(b->node);
            return alpha_equal(x.annot, y.annot) &&
                   alpha_equal(x.bound, y.bound) && alpha_equal(x.body, y.body);
          },
      },
      a->node);
}

namespace {

bool uses_var(const TermPtr& t, int index) {
  return std::visit(
      overloaded{
          [&](const Term::Var& v) { return v.index == index; },
          [&](const Term::Universe&) { return false; },
          [&](const Term::Const&) { return false; },
          [&](const Term::Pi& n) {
            return uses_var(n.domain, index) || uses_var(n.codomain, index + 1);
          },
          [&](const Term::Lambda& n) { return uses_var(n.body, index + 1); },
          [&](const Term::App& n) {
            return uses_var(n.fn, index) || uses_var(n.arg, index);
          },
          [&](const Term::Sigma& n) {
            return uses_var(n.first, index) || uses_var(n.second, index + 1);
          },
          [&](const Term::Pair& n) {
            return uses_var(n.fst, index) || uses_var(n.snd, index);
          },
          [&](const Term::Proj1& n) { return uses_var(n.tuple, index); },
          [&](const Term::Proj2& n) { return uses_var(n.tuple, index); },
          [&](const Term::Id& n) {
            return uses_var(n.type, index) || uses_var(n.lhs, index) ||
                   uses_var(n.rhs, index);
          },
          [&](const Term::Refl& n) { return uses_var(n.arg, index); },
          [&](const Term::J& n) {
            return uses_var(n.type, index) || uses_var(n.base, index) ||
                   uses_var(n.motive, index) || uses_var(n.branch, index) ||
                   uses_var(n.other, index) || uses_var(n.path, index);
          },
          [&](const Term::Let& n) {
            return uses_var(n.annot, index) || uses_var(n.bound, index) ||
                   uses_var(n.body, index + 1);
          },
      },
      t->node);
}

}  // namespace

bool uses_var0(const TermPtr& t) { return uses_var(t, 0); }

void collect_consts(const TermPtr& t, std::set<std::string>& out) {
  std::visit(
      overloaded{
          [&](const Term::Var&) {},
          [&](const Term::Universe&) {},
          [&](const Term::Const& c) { out.insert(c.name); },
          [&](const Term::Pi& n) {
            collect_consts(n.domain, out);
            collect_consts(n.codomain, out);
          },
          [&](const Term::Lambda& n) { collect_consts(n.body, out); },
          [&](const Term::App& n) {
            collect_consts(n.fn, out);
            collect_consts(n.arg, out);
          },
          [&](const Term::Sigma& n) {
            collect_consts(n.first, out);
            collect_consts(n.second, out);
          },
          [&](const Term::Pair& n) {
            collect_consts(n.fst, out);
            collect_consts(n.snd, out);
          },
          [&](const Term::Proj1& n) { collect_consts(n.tuple, out); },
          [&](const Term::Proj2& n) { collect_consts(n.tuple, out); },
          [&](const Term::Id& n) {
            collect_consts(n.type, out);
            collect_consts(n.lhs, out);
            collect_consts(n.rhs, out);
          },
          [&](const Term::Refl& n) { collect_consts(n.arg, out); },
          [&](const Term::J& n) {
            collect_consts(n.type, out);
            collect_consts(n.base, out);
            collect_consts(n.motive, out);
            collect_consts(n.branch, out);
            collect_consts(n.other, out);
            collect_consts(n.path, out);
          },
          [&](const Term::Let& n) {
            collect_consts(n.annot, out);
            collect_consts(n.bound, out);
            collect_consts(n.body, out);
          },
      },
      t->node);
}

}  // namespace hott
