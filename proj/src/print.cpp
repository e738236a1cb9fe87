#include <algorithm>
#include <map>
#include <sstream>

#include "hott/surface.hpp"

namespace hott {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

enum class Pos { Term, ArrowLhs, StarBody, AppFn, AppArg, ProjSubject };

// --- surface printer ---------------------------------------------------

bool sexpr_free_in(const SExprPtr& e, const std::string& name);

bool sfree(const SExprPtr& e, const std::string& name) {
  return sexpr_free_in(e, name);
}

bool sexpr_free_in(const SExprPtr& e, const std::string& name) {
  return std::visit(
      overloaded{
          [&](const SExpr::Name& n) { return n.name == name; },
          [&](const SExpr::Universe&) { return false; },
          [&](const SExpr::Pi& n) {
            return sfree(n.domain, name) ||
                   (n.name != name && sfree(n.codomain, name));
          },
          [&](const SExpr::Lam& n) {
            return n.name != name && sfree(n.body, name);
          },
          [&](const SExpr::App& n) {
            return sfree(n.fn, name) || sfree(n.arg, name);
          },
          [&](const SExpr::Sigma& n) {
            return sfree(n.first, name) ||
                   (n.name != name && sfree(n.second, name));
          },
          [&](const SExpr::Pair& n) {
            return sfree(n.fst, name) || sfree(n.snd, name);
          },
          [&](const SExpr::Proj1& n) { return sfree(n.tuple, name); },
          [&](const SExpr::Proj2& n) { return sfree(n.tuple, name); },
          [&](const SExpr::Id& n) {
            return sfree(n.type, name) || sfree(n.lhs, name) ||
                   sfree(n.rhs, name);
          },
          [&](const SExpr::Refl& n) { return sfree(n.arg, name); },
          [&](const SExpr::J& n) {
            return sfree(n.type, name) || sfree(n.base, name) ||
                   sfree(n.motive, name) || sfree(n.branch, name) ||
                   sfree(n.other, name) || sfree(n.path, name);
          },
          [&](const SExpr::Let& n) {
            return sfree(n.annot, name) || sfree(n.bound, name) ||
                   (n.name != name && sfree(n.body, name));
          },
      },
      e->node);
}

struct SPrinter {
  std::ostringstream out;

  void print(const SExprPtr& e, Pos pos) {
    std::visit(
        overloaded{
            [&](const SExpr::Name& n) { out << n.name; },
            [&](const SExpr::Universe& n) {
              wrap(pos, Pos::StarBody, [&] { out << "Type " << n.level; });
            },
            [&](const SExpr::Pi& n) {
              wrap(pos, Pos::Term, [&] {
                if (n.name == "_" && !sexpr_free_in(n.codomain, "_")) {
                  print(n.domain, Pos::ArrowLhs);
                  out << " -> ";
                  print(n.codomain, Pos::Term);
                } else {
                  out << "(" << n.name << " : ";
                  print(n.domain, Pos::Term);
                  out << ") -> ";
                  print(n.codomain, Pos::Term);
                }
              });
            },
            [&](const SExpr::Lam& n) {
              wrap(pos, Pos::Term, [&] {
                out << "fun " << n.name;
                const SExpr* body = n.body.get();
                SExprPtr cur = n.body;
                while (auto* l = std::get_if<SExpr::Lam>(&cur->node)) {
                  out << " " << l->name;
                  cur = l->body;
                  body = cur.get();
                }
                (void)body;
                out << " => ";
                print(cur, Pos::Term);
              });
            },
            [&](const SExpr::App& n) {
              wrap(pos, Pos::AppFn, [&] {
                print(n.fn, Pos::AppFn);
                out << " ";
                print(n.arg, Pos::AppArg);
              });
            },
            [&](const SExpr::Sigma& n) {
              wrap(pos, Pos::StarBody, [&] {
                out << "(" << n.name << " : ";
                print(n.first, Pos::Term);
                out << ") * ";
                print(n.second, Pos::StarBody);
              });
            },
            [&](const SExpr::Pair& n) {
              out << "(";
              print(n.fst, Pos::Term);
              out << ", ";
              print(n.snd, Pos::Term);
              out << ")";
            },
            [&](const SExpr::Proj1& n) {
              wrap(pos, Pos::ProjSubject, [&] {
                print(n.tuple, Pos::ProjSubject);
                out << ".1";
              });
            },
            [&](const SExpr::Proj2& n) {
              wrap(pos, Pos::ProjSubject, [&] {
                print(n.tuple, Pos::ProjSubject);
                out << ".2";
              });
            },
            [&](const SExpr::Id& n) {
              wrap(pos, Pos::StarBody, [&] {
                out << "Id ";
                print(n.type, Pos::AppArg);
                out << " ";
                print(n.lhs, Pos::AppArg);
                out << " ";
                print(n.rhs, Pos::AppArg);
              });
            },
            [&](const SExpr::Refl& n) {
              wrap(pos, Pos::StarBody, [&] {
                out << "refl ";
                print(n.arg, Pos::AppArg);
              });
            },
            [&](const SExpr::J& n) {
              wrap(pos, Pos::StarBody, [&] {
                out << "J ";
                print(n.type, Pos::AppArg);
                out << " ";
                print(n.base, Pos::AppArg);
                out << " ";
                print(n.motive, Pos::AppArg);
                out << " ";
                print(n.branch, Pos::AppArg);
                out << " ";
                print(n.other, Pos::AppArg);
                out << " ";
                print(n.path, Pos::AppArg);
              });
            },
            [&](const SExpr::Let& n) {
              wrap(pos, Pos::Term, [&] {
                out << "let " << n.name << " : ";
                print(n.annot, Pos::Term);
                out << " := ";
                print(n.bound, Pos::Term);
                out << " in ";
                print(n.body, Pos::Term);
              });
            },
        },
        e->node);
  }

  // Parenthesizes when a construct of strength `have` sits in a
  // position demanding at least `pos`.
  template <class F>
  void wrap(Pos pos, Pos have, F&& f) {
    bool parens = needs_parens(pos, have);
    if (parens) out << "(";
    f();
    if (parens) out << ")";
  }

  static bool needs_parens(Pos pos, Pos have) {
    auto rank = [](Pos p) {
      switch (p) {
        case Pos::Term: return 0;
        case Pos::ArrowLhs: return 1;
        case Pos::StarBody: return 2;
        case Pos::ProjSubject: return 3;
        case Pos::AppFn: return 4;
        case Pos::AppArg: return 5;
      }
      return 0;
    };
    // `have` is the loosest position this construct may appear in
    // without parentheses.
    return rank(pos) > rank(have);
  }
};

}  // namespace

std::string print(const SExprPtr& e) {
  SPrinter p;
  p.print(e, Pos::Term);
  return p.out.str();
}

std::string print(const SourceModule& m) {
  std::ostringstream out;
  for (const auto& d : m.decls) {
    out << (d.is_axiom ? "axiom " : "def ") << d.name << " : "
        << print(d.type);
    if (d.body) out << " := " << print(d.body);
    out << "\n\n";
  }
  return out.str();
}

// --- core term printer --------------------------------------------------

namespace {

struct TPrinter {
  std::ostringstream out;
  std::vector<std::string> names;  // binder stack, innermost last
  std::set<std::string> avoid;     // constants mentioned anywhere

  std::string freshen(const std::string& hint) {
    std::string base = hint.empty() ? "x" : hint;
    auto taken = [&](const std::string& s) {
      return avoid.count(s) ||
             std::find(names.begin(), names.end(), s) != names.end();
    };
    if (!taken(base)) return base;
    for (int k = 1;; k++) {
      std::string cand = base + std::to_string(k);
      if (!taken(cand)) return cand;
    }
  }

  void print(const TermPtr& t, Pos pos) {
    std::visit(
        overloaded{
            [&](const Term::Var& v) {
              size_t i = names.size() - 1 - static_cast<size_t>(v.index);
              if (v.index < 0 || static_cast<size_t>(v.index) >= names.size())
                out << "#" << v.index;
              else
                out << names[i];
            },
            [&](const Term::Universe& n) {
              wrap(pos, Pos::StarBody, [&] { out << "Type " << n.level; });
            },
            [&](const Term::Const& c) { out << c.name; },
            [&](const Term::Pi& n) {
              wrap(pos, Pos::Term, [&] {
                if (n.name == "_" && !uses_var0(n.codomain)) {
                  print(n.domain, Pos::ArrowLhs);
                  out << " -> ";
                  names.push_back("_");
                  print(n.codomain, Pos::Term);
                  names.pop_back();
                } else {
                  std::string x = freshen(n.name == "_" ? "x" : n.name);
                  out << "(" << x << " : ";
                  print(n.domain, Pos::Term);
                  out << ") -> ";
                  names.push_back(x);
                  print(n.codomain, Pos::Term);
                  names.pop_back();
                }
              });
            },
            [&](const Term::Lambda&) {
              wrap(pos, Pos::Term, [&] {
                out << "fun";
                size_t pushed = 0;
                TermPtr cur = t;
                while (auto* l = std::get_if<Term::Lambda>(&cur->node)) {
                  std::string x = freshen(l->name);
                  out << " " << x;
                  names.push_back(x);
                  pushed++;
                  cur = l->body;
                }
                out << " => ";
                print(cur, Pos::Term);
                while (pushed--) names.pop_back();
              });
            },
            [&](const Term::App& n) {
              wrap(pos, Pos::AppFn, [&] {
                print(n.fn, Pos::AppFn);
                out << " ";
                print(n.arg, Pos::AppArg);
              });
            },
            [&](const Term::Sigma& n) {
              wrap(pos, Pos::StarBody, [&] {
                std::string x =
                    n.name == "_" && !uses_var0(n.second) ? "_" : freshen(
                        n.name == "_" ? "x" : n.name);
                out << "(" << x << " : ";
                print(n.first, Pos::Term);
                out << ") * ";
                names.push_back(x);
                print(n.second, Pos::StarBody);
                names.pop_back();
              });
            },
            [&](const Term::Pair& n) {
              out << "(";
              print(n.fst, Pos::Term);
              out << ", ";
              print(n.snd, Pos::Term);
              out << ")";
            },
            [&](const Term::Proj1& n) {
              wrap(pos, Pos::ProjSubject, [&] {
                print(n.tuple, Pos::ProjSubject);
                out << ".1";
              });
            },
            [&](const Term::Proj2& n) {
              wrap(pos, Pos::ProjSubject, [&] {
                print(n.tuple, Pos::ProjSubject);
                out << ".2";
              });
            },
            [&](const Term::Id& n) {
              wrap(pos, Pos::StarBody, [&] {
                out << "Id ";
                print(n.type, Pos::AppArg);
                out << " ";
                print(n.lhs, Pos::AppArg);
                out << " ";
                print(n.rhs, Pos::AppArg);
              });
            },
            [&](const Term::Refl& n) {
              wrap(pos, Pos::StarBody, [&] {
                out << "refl ";
                print(n.arg, Pos::AppArg);
              });
            },
            [&](const Term::J& n) {
              wrap(pos, Pos::StarBody, [&] {
                out << "J ";
                print(n.type, Pos::AppArg);
                out << " ";
                print(n.base, Pos::AppArg);
                out << " ";
                print(n.motive, Pos::AppArg);
                out << " ";
                print(n.branch, Pos::AppArg);
                out << " ";
                print(n.other, Pos::AppArg);
                out << " ";
                print(n.path, Pos::AppArg);
              });
            },
            [&](const Term::Let& n) {
              wrap(pos, Pos::Term, [&] {
                std::string x = freshen(n.name);
                out << "let " << x << " : ";
                print(n.annot, Pos::Term);
                out << " := ";
                print(n.bound, Pos::Term);
                out << " in ";
                names.push_back(x);
                print(n.body, Pos::Term);
                names.pop_back();
              });
            },
        },
        t->node);
  }

  template <class F>
  void wrap(Pos pos, Pos have, F&& f) {
    bool parens = SPrinter::needs_parens(pos, have);
    if (parens) out << "(";
    f();
    if (parens) out << ")";
  }
};

}  // namespace

std::string print(const TermPtr& t, const std::vector<std::string>& names) {
  TPrinter p;
  collect_consts(t, p.avoid);
  p.names = names;
  p.print(t, Pos::Term);
  return p.out.str();
}

// --- structural comparison ----------------------------------------------

namespace {

bool sexpr_alpha(const SExprPtr& a, const SExprPtr& b,
                 std::vector<std::pair<std::string, std::string>>& env) {
  if (a->node.index() != b->node.index()) return false;
  auto bound = [&](const std::string& x, const std::string& y) {
    for (auto it = env.rbegin(); it != env.rend(); ++it) {
      if (it->first == x || it->second == y)
        return it->first == x && it->second == y;
    }
    return x == y;  // both free
  };
  return std::visit(
      overloaded{
          [&](const SExpr::Name& n) {
            return bound(n.name, std::get<SExpr::Name>(b->node).name);
          },
          [&](const SExpr::Universe& n) {
            return n.level == std::get<SExpr::Universe>(b->node).level;
          },
          [&](const SExpr::Pi& n) {
            const auto& m = std::get<SExpr::Pi>(b->node);
            if (!sexpr_alpha(n.domain, m.domain, env)) return false;
            env.emplace_back(n.name, m.name);
            bool ok = sexpr_alpha(n.codomain, m.codomain, env);
            env.pop_back();
            return ok;
          },
          [&](const SExpr::Lam& n) {
            const auto& m = std::get<SExpr::Lam>(b->node);
            env.emplace_back(n.name, m.name);
            bool ok = sexpr_alpha(n.body, m.body, env);
            env.pop_back();
            return ok;
          },
          [&](const SExpr::App& n) {
            const auto& m = std::get<SExpr::App>(b->node);
            return sexpr_alpha(n.fn, m.fn, env) &&
                   sexpr_alpha(n.arg, m.arg, env);
          },
          [&](const SExpr::Sigma& n) {
            const auto& m = std::get<SExpr::Sigma>(b->node);
            if (!sexpr_alpha(n.first, m.first, env)) return false;
            env.emplace_back(n.name, m.name);
            bool ok = sexpr_alpha(n.second, m.second, env);
            env.pop_back();
            return ok;
          },
          [&](const SExpr::Pair& n) {
            const auto& m = std::get<SExpr::Pair>(b->node);
            return sexpr_alpha(n.fst, m.fst, env) &&
                   sexpr_alpha(n.snd, m.snd, env);
          },
          [&](const SExpr::Proj1& n) {
            return sexpr_alpha(n.tuple, std::get<SExpr::Proj1>(b->node).tuple,
                               env);
          },
          [&](const SExpr::Proj2& n) {
            return sexpr_alpha(n.tuple, std::get<SExpr::Proj2>(b->node).tuple,
                               env);
          },
          [&](const SExpr::Id& n) {
            const auto& m = std::get<SExpr::Id>(b->node);
            return sexpr_alpha(n.type, m.type, env) &&
                   sexpr_alpha(n.lhs, m.lhs, env) &&
                   sexpr_alpha(n.rhs, m.rhs, env);
          },
          [&](const SExpr::Refl& n) {
            return sexpr_alpha(n.arg, std::get<SExpr::Refl>(b->node).arg, env);
          },
          [&](const SExpr::J& n) {
            const auto& m = std::get<SExpr::J>(b->node);
            return sexpr_alpha(n.type, m.type, env) &&
                   sexpr_alpha(n.base, m.base, env) &&
                   sexpr_alpha(n.motive, m.motive, env) &&
                   sexpr_alpha(n.branch, m.branch, env) &&
                   sexpr_alpha(n.other, m.other, env) &&
                   sexpr_alpha(n.path, m.path, env);
          },
          [&](const SExpr::Let& n) {
            const auto& m = std::get<SExpr::Let>(b->node);
            if (!sexpr_alpha(n.annot, m.annot, env) ||
                !sexpr_alpha(n.bound, m.bound, env))
              return false;
            env.emplace_back(n.name, m.name);
            bool ok = sexpr_alpha(n.body, m.body, env);
            env.pop_back();
            return ok;
          },
      },
      a->node);
}

}  // namespace

bool alpha_equal(const SExprPtr& a, const SExprPtr& b) {
  std::vector<std::pair<std::string, std::string>> env;
  return sexpr_alpha(a, b, env);
}

bool structurally_equal(const SourceModule& a, const SourceModule& b) {
  if (a.decls.size() != b.decls.size()) return false;
  for (size_t i = 0; i < a.decls.size(); i++) {
    const auto& x = a.decls[i];
    const auto& y = b.decls[i];
    if (x.is_axiom != y.is_axiom || x.name != y.name) return false;
    if (!alpha_equal(x.type, y.type)) return false;
    if ((x.body == nullptr) != (y.body == nullptr)) return false;
    if (x.body && !alpha_equal(x.body, y.body)) return false;
  }
  return true;
}

}  // namespace hott
