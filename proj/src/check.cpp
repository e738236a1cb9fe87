#include "hott/check.hpp"

#include <algorithm>
#include <iostream>
#include <sstream>

namespace hott {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void err(TypeError::Kind k, const std::string& msg, Span s) {
  throw TypeError(k, msg, s);
}

std::string show_value(const Signature& sig, const Context& ctx,
                       const ValuePtr& type, const ValuePtr& v) {
  return print(readback(sig, static_cast<int>(ctx.depth()), type, v),
               ctx.names());
}

std::string show_type(const Signature& sig, const Context& ctx,
                      const ValuePtr& v) {
  return print(readback_type(sig, static_cast<int>(ctx.depth()), v),
               ctx.names());
}

}  // namespace

TermPtr elaborate(const Signature& sig, const std::vector<std::string>& bound,
                  const SExprPtr& e) {
  struct El {
    const Signature& sig;
    std::vector<std::string> bound;

    TermPtr go(const SExprPtr& e) {
      Span s = e->span;
      return std::visit(
          overloaded{
              [&](const SExpr::Name& n) -> TermPtr {
                for (size_t i = 0; i < bound.size(); i++) {
                  size_t j = bound.size() - 1 - i;
                  if (bound[j] == n.name)
                    return mk::var(static_cast<int>(i), s);
                }
                if (sig.contains(n.name)) return mk::cnst(n.name, s);
                err(TypeError::Kind::UnboundName,
                    "unbound name '" + n.name + "'", s);
              },
              [&](const SExpr::Universe& n) -> TermPtr {
                return mk::universe(n.level, s);
              },
              [&](const SExpr::Pi& n) -> TermPtr {
                auto d = go(n.domain);
                bound.push_back(n.name);
                auto c = go(n.codomain);
                bound.pop_back();
                return mk::pi(n.name, d, c, s);
              },
              [&](const SExpr::Lam& n) -> TermPtr {
                bound.push_back(n.name);
                auto b = go(n.body);
                bound.pop_back();
                return mk::lam(n.name, b, s);
              },
              [&](const SExpr::App& n) -> TermPtr {
                return mk::app(go(n.fn), go(n.arg), s);
              },
              [&](const SExpr::Sigma& n) -> TermPtr {
                auto f = go(n.first);
                bound.push_back(n.name);
                auto sec = go(n.second);
                bound.pop_back();
                return mk::sigma(n.name, f, sec, s);
              },
              [&](const SExpr::Pair& n) -> TermPtr {
                return mk::pair(go(n.fst), go(n.snd), s);
              },
              [&](const SExpr::Proj1& n) -> TermPtr {
                return mk::proj1(go(n.tuple), s);
              },
              [&](const SExpr::Proj2& n) -> TermPtr {
                return mk::proj2(go(n.tuple), s);
              },
              [&](const SExpr::Id& n) -> TermPtr {
                return mk::id(go(n.type), go(n.lhs), go(n.rhs), s);
              },
              [&](const SExpr::Refl& n) -> TermPtr {
                return mk::refl(go(n.arg), s);
              },
              [&](const SExpr::J& n) -> TermPtr {
                return mk::j(go(n.type), go(n.base), go(n.motive),
                             go(n.branch), go(n.other), go(n.path), s);
              },
              [&](const SExpr::Let& n) -> TermPtr {
                auto a = go(n.annot);
                auto b = go(n.bound);
                bound.push_back(n.name);
                auto body = go(n.body);
                bound.pop_back();
                return mk::let_(n.name, a, b, body, s);
              },
          },
          e->node);
    }
  };
  El el{sig, bound};
  return el.go(e);
}

namespace {

int expect_universe(const Signature& sig, const Context& ctx, const TermPtr& t,
                    const Options& opts) {
  auto ty = infer(sig, ctx, t, opts);
  if (auto* u = std::get_if<Value::VUniverse>(&ty->node)) return u->level;
  err(TypeError::Kind::UniverseExpected,
      "expected a type, but the term has type " + show_type(sig, ctx, ty),
      t->span);
}

// Validates the motive of J and returns its value. Lambda motives are
// checked against the telescope (x : A) -> Id A a x -> Type directly,
// inferring the universe from the innermost body.
ValuePtr check_j_motive(const Signature& sig, const Context& ctx,
                        const TermPtr& motive, const ValuePtr& av,
                        const ValuePtr& basev, const Options& opts) {
  if (auto* l1 = std::get_if<Term::Lambda>(&motive->node)) {
    Context c1 = ctx.bind(l1->name, av);
    auto xvar = c1.entries.back().value;
    auto id_ty = vmk::id(av, basev, xvar);
    if (auto* l2 = std::get_if<Term::Lambda>(&l1->body->node)) {
      Context c2 = c1.bind(l2->name, id_ty);
      expect_universe(sig, c2, l2->body, opts);
    } else {
      auto inner = infer(sig, c1, l1->body, opts);
      auto* pi = std::get_if<Value::VPi>(&inner->node);
      if (!pi)
        err(TypeError::Kind::NotAFunction,
            "J motive must abstract over the path", l1->body->span);
      if (!conv_type(sig, static_cast<int>(c1.depth()), pi->domain, id_ty,
                     opts))
        err(TypeError::Kind::Mismatch,
            "J motive's second argument has type " +
                show_type(sig, c1, pi->domain) + " but should be " +
                show_type(sig, c1, id_ty),
            l1->body->span);
      auto pvar = vmk::fresh(static_cast<int>(c1.depth()), id_ty);
      auto res = closure_apply(sig, pi->codomain, pvar);
      if (!std::get_if<Value::VUniverse>(&res->node))
        err(TypeError::Kind::UniverseExpected,
            "J motive must land in a universe", l1->body->span);
    }
    return eval(sig, ctx.env(), motive);
  }
  auto cty = infer(sig, ctx, motive, opts);
  auto* pi1 = std::get_if<Value::VPi>(&cty->node);
  if (!pi1)
    err(TypeError::Kind::NotAFunction, "J motive must be a function",
        motive->span);
  if (!conv_type(sig, static_cast<int>(ctx.depth()), pi1->domain, av, opts))
    err(TypeError::Kind::Mismatch,
        "J motive's first argument has type " +
            show_type(sig, ctx, pi1->domain) + " but should be " +
            show_type(sig, ctx, av),
        motive->span);
  auto xvar = vmk::fresh(static_cast<int>(ctx.depth()), av);
  auto rest = closure_apply(sig, pi1->codomain, xvar);
  auto* pi2 = std::get_if<Value::VPi>(&rest->node);
  if (!pi2)
    err(TypeError::Kind::NotAFunction,
        "J motive must abstract over the path", motive->span);
  auto id_ty = vmk::id(av, basev, xvar);
  if (!conv_type(sig, static_cast<int>(ctx.depth()) + 1, pi2->domain, id_ty,
                 opts))
    err(TypeError::Kind::Mismatch,
        "J motive's second argument has the wrong identity type",
        motive->span);
  auto pvar = vmk::fresh(static_cast<int>(ctx.depth()) + 1, id_ty);
  auto res = closure_apply(sig, pi2->codomain, pvar);
  if (!std::get_if<Value::VUniverse>(&res->node))
    err(TypeError::Kind::UniverseExpected, "J motive must land in a universe",
        motive->span);
  return eval(sig, ctx.env(), motive);
}

}  // namespace

ValuePtr infer(const Signature& sig, const Context& ctx, const TermPtr& t,
               const Options& opts) {
  return std::visit(
      overloaded{
          [&](const Term::Var& v) -> ValuePtr {
            return ctx.lookup(v.index).type;
          },
          [&](const Term::Universe& u) -> ValuePtr {
            return vmk::universe(u.level + 1);
          },
          [&](const Term::Const& c) -> ValuePtr {
            const DeclInfo* d = sig.find(c.name);
            if (!d)
              err(TypeError::Kind::UnboundName,
                  "unbound name '" + c.name + "'", t->span);
            return d->type;
          },
          [&](const Term::Pi& n) -> ValuePtr {
            int l1 = expect_universe(sig, ctx, n.domain, opts);
            Context c = ctx.bind(n.name, eval(sig, ctx.env(), n.domain));
            int l2 = expect_universe(sig, c, n.codomain, opts);
            return vmk::universe(std::max(l1, l2));
          },
          [&](const Term::Sigma& n) -> ValuePtr {
            int l1 = expect_universe(sig, ctx, n.first, opts);
            Context c = ctx.bind(n.name, eval(sig, ctx.env(), n.first));
            int l2 = expect_universe(sig, c, n.second, opts);
            return vmk::universe(std::max(l1, l2));
          },
          [&](const Term::Id& n) -> ValuePtr {
            int l = expect_universe(sig, ctx, n.type, opts);
            auto av = eval(sig, ctx.env(), n.type);
            check(sig, ctx, n.lhs, av, opts);
            check(sig, ctx, n.rhs, av, opts);
            return vmk::universe(l);
          },
          [&](const Term::App& n) -> ValuePtr {
            auto fn_ty = infer(sig, ctx, n.fn, opts);
            auto* pi = std::get_if<Value::VPi>(&fn_ty->node);
            if (!pi)
              err(TypeError::Kind::NotAFunction,
                  "applied term has non-function type " +
                      show_type(sig, ctx, fn_ty),
                  n.fn->span);
            check(sig, ctx, n.arg, pi->domain, opts);
            return closure_apply(sig, pi->codomain,
                                 eval(sig, ctx.env(), n.arg));
          },
          [&](const Term::Proj1& n) -> ValuePtr {
            auto ty = infer(sig, ctx, n.tuple, opts);
            auto* sg = std::get_if<Value::VSigma>(&ty->node);
            if (!sg)
              err(TypeError::Kind::NotAPair,
                  "projected term has non-pair type " +
                      show_type(sig, ctx, ty),
                  n.tuple->span);
            return sg->first;
          },
          [&](const Term::Proj2& n) -> ValuePtr {
            auto ty = infer(sig, ctx, n.tuple, opts);
            auto* sg = std::get_if<Value::VSigma>(&ty->node);
            if (!sg)
              err(TypeError::Kind::NotAPair,
                  "projected term has non-pair type " +
                      show_type(sig, ctx, ty),
                  n.tuple->span);
            auto fst = vproj1(sig, eval(sig, ctx.env(), n.tuple));
            return closure_apply(sig, sg->second, std::move(fst));
          },
          [&](const Term::Lambda&) -> ValuePtr {
            err(TypeError::Kind::NotInferable,
                "cannot infer the type of a bare function; add an annotation",
                t->span);
          },
          [&](const Term::Pair&) -> ValuePtr {
            err(TypeError::Kind::NotInferable,
                "cannot infer the type of a bare pair; add an annotation",
                t->span);
          },
          [&](const Term::Refl&) -> ValuePtr {
            err(TypeError::Kind::NotInferable,
                "cannot infer the type of refl; add an annotation", t->span);
          },
          [&](const Term::J& n) -> ValuePtr {
            expect_universe(sig, ctx, n.type, opts);
            auto av = eval(sig, ctx.env(), n.type);
            check(sig, ctx, n.base, av, opts);
            auto basev = eval(sig, ctx.env(), n.base);
            auto cv = check_j_motive(sig, ctx, n.motive, av, basev, opts);
            auto branch_ty =
                vapply(sig, vapply(sig, cv, basev), vmk::refl(basev));
            check(sig, ctx, n.branch, branch_ty, opts);
            check(sig, ctx, n.other, av, opts);
            auto otherv = eval(sig, ctx.env(), n.other);
            auto path_ty = vmk::id(av, basev, otherv);
            check(sig, ctx, n.path, path_ty, opts);
            auto pathv = eval(sig, ctx.env(), n.path);
            return vapply(sig, vapply(sig, cv, otherv), std::move(pathv));
          },
          [&](const Term::Let& n) -> ValuePtr {
            expect_universe(sig, ctx, n.annot, opts);
            auto ty = eval(sig, ctx.env(), n.annot);
            check(sig, ctx, n.bound, ty, opts);
            Context c =
                ctx.define(n.name, ty, eval(sig, ctx.env(), n.bound));
            return infer(sig, c, n.body, opts);
          },
      },
      t->node);
}

void check(const Signature& sig, const Context& ctx, const TermPtr& t,
           const ValuePtr& expected, const Options& opts) {
  if (auto* l = std::get_if<Term::Lambda>(&t->node)) {
    auto* pi = std::get_if<Value::VPi>(&expected->node);
    if (!pi)
      err(TypeError::Kind::Mismatch,
          "a function cannot have type " + show_type(sig, ctx, expected),
          t->span);
    Context c = ctx.bind(l->name, pi->domain);
    auto body_ty =
        closure_apply(sig, pi->codomain, c.entries.back().value);
    check(sig, c, l->body, body_ty, opts);
    return;
  }
  if (auto* p = std::get_if<Term::Pair>(&t->node)) {
    auto* sg = std::get_if<Value::VSigma>(&expected->node);
    if (!sg)
      err(TypeError::Kind::Mismatch,
          "a pair cannot have type " + show_type(sig, ctx, expected),
          t->span);
    check(sig, ctx, p->fst, sg->first, opts);
    auto fst = eval(sig, ctx.env(), p->fst);
    check(sig, ctx, p->snd, closure_apply(sig, sg->second, std::move(fst)),
          opts);
    return;
  }
  if (auto* r = std::get_if<Term::Refl>(&t->node)) {
    auto* idt = std::get_if<Value::VId>(&expected->node);
    if (!idt)
      err(TypeError::Kind::Mismatch,
          "refl cannot have type " + show_type(sig, ctx, expected), t->span);
    check(sig, ctx, r->arg, idt->type, opts);
    auto a = eval(sig, ctx.env(), r->arg);
    int depth = static_cast<int>(ctx.depth());
    if (!conv(sig, depth, idt->type, a, idt->lhs, opts) ||
        !conv(sig, depth, idt->type, a, idt->rhs, opts)) {
      if (opts.trace_conversion)
        std::cout << "conv failed at refl:\n  argument: "
                  << show_value(sig, ctx, idt->type, a)
                  << "\n  endpoints: " << show_value(sig, ctx, idt->type,
                                                     idt->lhs)
                  << "  " << show_value(sig, ctx, idt->type, idt->rhs)
                  << "\n";
      err(TypeError::Kind::Mismatch,
          "refl " + show_value(sig, ctx, idt->type, a) +
              " does not prove " + show_type(sig, ctx, expected),
          t->span);
    }
    return;
  }
  if (auto* l = std::get_if<Term::Let>(&t->node)) {
    expect_universe(sig, ctx, l->annot, opts);
    auto ty = eval(sig, ctx.env(), l->annot);
    check(sig, ctx, l->bound, ty, opts);
    Context c = ctx.define(l->name, ty, eval(sig, ctx.env(), l->bound));
    check(sig, c, l->body, expected, opts);
    return;
  }
  auto actual = infer(sig, ctx, t, opts);
  if (!conv_type(sig, static_cast<int>(ctx.depth()), actual, expected, opts)) {
    std::string exp_s = show_type(sig, ctx, expected);
    std::string got_s = show_type(sig, ctx, actual);
    if (opts.trace_conversion)
      std::cout << "conv failed:\n  expected: " << exp_s
                << "\n  actual:   " << got_s << "\n";
    err(TypeError::Kind::Mismatch,
        "type mismatch: expected " + exp_s + " but got " + got_s, t->span);
  }
}

DeclInfo check_declaration(Signature& sig, const Declaration& d,
                           const Options& opts) {
  if (sig.contains(d.name))
    err(TypeError::Kind::DuplicateName,
        "duplicate declaration '" + d.name + "'", d.span);
  Context ctx;
  expect_universe(sig, ctx, d.type, opts);
  auto type_v = eval(sig, Env{}, d.type);

  DeclInfo info;
  info.name = d.name;
  info.is_axiom = d.is_axiom;
  info.type_term = d.type;
  info.type = type_v;
  if (d.is_axiom) {
    info.axioms = {d.name};
  } else {
    check(sig, ctx, d.body, type_v, opts);
    info.body_term = d.body;
    info.value = eval(sig, Env{}, d.body);
    std::set<std::string> used;
    collect_consts(d.body, used);
    for (const auto& c : used) {
      const DeclInfo* dep = sig.find(c);
      if (!dep) continue;
      if (dep->is_axiom)
        info.axioms.insert(c);
      else
        info.axioms.insert(dep->axioms.begin(), dep->axioms.end());
    }
  }
  sig.add(info);
  return info;
}

namespace {

std::string format_error(const std::exception& e, const Span& s) {
  std::string msg = e.what();
  if (s.valid()) return s.to_string() + ": " + msg;
  return msg;
}

}  // namespace

Report check_modules(Signature& sig, const std::vector<SourceModule>& files,
                     const Options& opts) {
  Report report;
  for (const auto& file : files) {
    for (const auto& sd : file.decls) {
      DeclResult r;
      r.name = sd.name;
      r.file = file.path;
      try {
        Declaration d;
        d.is_axiom = sd.is_axiom;
        d.name = sd.name;
        d.span = sd.span;
        d.type = elaborate(sig, {}, sd.type);
        if (sd.body) d.body = elaborate(sig, {}, sd.body);
        auto info = check_declaration(sig, d, opts);
        r.ok = true;
        r.axioms = info.axioms;
        report.decls.push_back(std::move(r));
      } catch (const TypeError& e) {
        r.ok = false;
        r.error = format_error(e, e.span);
        report.decls.push_back(std::move(r));
        report.all_ok = false;
        break;  // abort this file, keep going with the next one
      }
    }
  }
  return report;
}

}  // namespace hott
