#include "oracle.hpp"

#include <map>
#include <stdexcept>

namespace hott::oracle {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Substitute `s` for Var (cutoff) in t; free variables above the
// cutoff drop by one.
TermPtr subst(const TermPtr& t, int cutoff, const TermPtr& s) {
  return std::visit(
      overloaded{
          [&](const Term::Var& v) -> TermPtr {
            if (v.index == cutoff) return shift(s, 0, cutoff);
            if (v.index > cutoff) return mk::var(v.index - 1);
            return t;
          },
          [&](const Term::Universe&) -> TermPtr { return t; },
          [&](const Term::Const&) -> TermPtr { return t; },
          [&](const Term::Pi& n) -> TermPtr {
            return mk::pi(n.name, subst(n.domain, cutoff, s),
                          subst(n.codomain, cutoff + 1, s));
          },
          [&](const Term::Lambda& n) -> TermPtr {
            return mk::lam(n.name, subst(n.body, cutoff + 1, s));
          },
          [&](const Term::App& n) -> TermPtr {
            return mk::app(subst(n.fn, cutoff, s), subst(n.arg, cutoff, s));
          },
          [&](const Term::Sigma& n) -> TermPtr {
            return mk::sigma(n.name, subst(n.first, cutoff, s),
                             subst(n.second, cutoff + 1, s));
          },
          [&](const Term::Pair& n) -> TermPtr {
            return mk::pair(subst(n.fst, cutoff, s), subst(n.snd, cutoff, s));
          },
          [&](const Term::Proj1& n) -> TermPtr {
            return mk::proj1(subst(n.tuple, cutoff, s));
          },
          [&](const Term::Proj2& n) -> TermPtr {
            return mk::proj2(subst(n.tuple, cutoff, s));
          },
          [&](const Term::Id& n) -> TermPtr {
            return mk::id(subst(n.type, cutoff, s), subst(n.lhs, cutoff, s),
                          subst(n.rhs, cutoff, s));
          },
          [&](const Term::Refl& n) -> TermPtr {
            return mk::refl(subst(n.arg, cutoff, s));
          },
          [&](const Term::J& n) -> TermPtr {
            return mk::j(subst(n.type, cutoff, s), subst(n.base, cutoff, s),
                         subst(n.motive, cutoff, s),
                         subst(n.branch, cutoff, s),
                         subst(n.other, cutoff, s), subst(n.path, cutoff, s));
          },
          [&](const Term::Let& n) -> TermPtr {
            return mk::let_(n.name, subst(n.annot, cutoff, s),
                            subst(n.bound, cutoff, s),
                            subst(n.body, cutoff + 1, s));
          },
      },
      t->node);
}

}  // namespace

TermPtr subst_top(const TermPtr& body, const TermPtr& s) {
  return subst(body, 0, s);
}

TermPtr beta_normalize(const Signature& sig, const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Term::Var&) -> TermPtr { return t; },
          [&](const Term::Universe&) -> TermPtr { return t; },
          [&](const Term::Const& c) -> TermPtr {
            const DeclInfo* d = sig.find(c.name);
            if (!d) throw std::runtime_error("oracle: unknown constant");
            if (d->is_axiom) return t;
            return beta_normalize(sig, d->body_term);
          },
          [&](const Term::Pi& n) -> TermPtr {
            return mk::pi(n.name, beta_normalize(sig, n.domain),
                          beta_normalize(sig, n.codomain));
          },
          [&](const Term::Lambda& n) -> TermPtr {
            return mk::lam(n.name, beta_normalize(sig, n.body));
          },
          [&](const Term::App& n) -> TermPtr {
            auto fn = beta_normalize(sig, n.fn);
            if (auto* l = std::get_if<Term::Lambda>(&fn->node))
              return beta_normalize(sig, subst_top(l->body, n.arg));
            return mk::app(fn, beta_normalize(sig, n.arg));
          },
          [&](const Term::Sigma& n) -> TermPtr {
            return mk::sigma(n.name, beta_normalize(sig, n.first),
                             beta_normalize(sig, n.second));
          },
          [&](const Term::Pair& n) -> TermPtr {
            return mk::pair(beta_normalize(sig, n.fst),
                            beta_normalize(sig, n.snd));
          },
          [&](const Term::Proj1& n) -> TermPtr {
            auto tup = beta_normalize(sig, n.tuple);
            if (auto* p = std::get_if<Term::Pair>(&tup->node)) return p->fst;
            return mk::proj1(tup);
          },
          [&](const Term::Proj2& n) -> TermPtr {
            auto tup = beta_normalize(sig, n.tuple);
            if (auto* p = std::get_if<Term::Pair>(&tup->node)) return p->snd;
            return mk::proj2(tup);
          },
          [&](const Term::Id& n) -> TermPtr {
            return mk::id(beta_normalize(sig, n.type),
                          beta_normalize(sig, n.lhs),
                          beta_normalize(sig, n.rhs));
          },
          [&](const Term::Refl& n) -> TermPtr {
            return mk::refl(beta_normalize(sig, n.arg));
          },
          [&](const Term::J& n) -> TermPtr {
            auto path = beta_normalize(sig, n.path);
            if (std::get_if<Term::Refl>(&path->node))
              return beta_normalize(sig, n.branch);
            return mk::j(beta_normalize(sig, n.type),
                         beta_normalize(sig, n.base),
                         beta_normalize(sig, n.motive),
                         beta_normalize(sig, n.branch),
                         beta_normalize(sig, n.other), path);
          },
          [&](const Term::Let& n) -> TermPtr {
            return beta_normalize(sig, subst_top(n.body, n.bound));
          },
      },
      t->node);
}

namespace {

TermPtr eta_type(const Signature& sig, const std::vector<TermPtr>& ctx,
                 const TermPtr& ty);

// Type of a variable in ctx (outermost first), shifted into scope.
TermPtr var_type(const std::vector<TermPtr>& ctx, int index) {
  size_t pos = ctx.size() - 1 - static_cast<size_t>(index);
  return shift(ctx[pos], 0, index + 1);
}

// Synthesizes the type of a beta-normal neutral term while
// eta-expanding its arguments. Returns (expanded term, its type).
std::pair<TermPtr, TermPtr> eta_neutral(const Signature& sig,
                                        const std::vector<TermPtr>& ctx,
                                        const TermPtr& t) {
  if (auto* v = std::get_if<Term::Var>(&t->node))
    return {t, beta_normalize(sig, var_type(ctx, v->index))};
  if (auto* c = std::get_if<Term::Const>(&t->node)) {
    const DeclInfo* d = sig.find(c->name);
    if (!d) throw std::runtime_error("oracle: unknown constant");
    return {t, beta_normalize(sig, d->type_term)};
  }
  if (auto* a = std::get_if<Term::App>(&t->node)) {
    auto [fn, fn_ty] = eta_neutral(sig, ctx, a->fn);
    auto* pi = std::get_if<Term::Pi>(&fn_ty->node);
    if (!pi) throw std::runtime_error("oracle: neutral app head not a Pi");
    auto arg = eta_expand(sig, ctx, a->arg, pi->domain);
    auto res = beta_normalize(sig, subst_top(pi->codomain, a->arg));
    return {mk::app(fn, arg), res};
  }
  if (auto* p = std::get_if<Term::Proj1>(&t->node)) {
    auto [tup, ty] = eta_neutral(sig, ctx, p->tuple);
    auto* sg = std::get_if<Term::Sigma>(&ty->node);
    if (!sg) throw std::runtime_error("oracle: projection not from a Sigma");
    return {mk::proj1(tup), sg->first};
  }
  if (auto* p = std::get_if<Term::Proj2>(&t->node)) {
    auto [tup, ty] = eta_neutral(sig, ctx, p->tuple);
    auto* sg = std::get_if<Term::Sigma>(&ty->node);
    if (!sg) throw std::runtime_error("oracle: projection not from a Sigma");
    auto res =
        beta_normalize(sig, subst_top(sg->second, mk::proj1(p->tuple)));
    return {mk::proj2(tup), res};
  }
  if (auto* j = std::get_if<Term::J>(&t->node)) {
    auto type = eta_type(sig, ctx, j->type);
    auto base = eta_expand(sig, ctx, j->base, j->type);
    // Motive eta-expands through two binders into a type.
    std::vector<TermPtr> ctx2 = ctx;
    ctx2.push_back(j->type);
    ctx2.push_back(mk::id(shift(j->type, 0, 1), shift(j->base, 0, 1),
                          mk::var(0)));
    auto applied = beta_normalize(
        sig, mk::app(mk::app(shift(j->motive, 0, 2), mk::var(1)),
                     mk::var(0)));
    auto motive = mk::lam("x", mk::lam("p", eta_type(sig, ctx2, applied)));
    auto branch_ty = beta_normalize(
        sig,
        mk::app(mk::app(j->motive, j->base), mk::refl(j->base)));
    auto branch = eta_expand(sig, ctx, j->branch, branch_ty);
    auto other = eta_expand(sig, ctx, j->other, j->type);
    auto [path, path_ty] = eta_neutral(sig, ctx, j->path);
    (void)path_ty;
    auto res = beta_normalize(
        sig, mk::app(mk::app(j->motive, j->other), j->path));
    return {mk::j(type, base, motive, branch, other, path), res};
  }
  throw std::runtime_error("oracle: not a neutral term");
}

TermPtr eta_type(const Signature& sig, const std::vector<TermPtr>& ctx,
                 const TermPtr& ty) {
  if (auto* u = std::get_if<Term::Universe>(&ty->node)) {
    (void)u;
    return ty;
  }
  if (auto* pi = std::get_if<Term::Pi>(&ty->node)) {
    std::vector<TermPtr> ctx2 = ctx;
    ctx2.push_back(pi->domain);
    return mk::pi(pi->name, eta_type(sig, ctx, pi->domain),
                  eta_type(sig, ctx2, pi->codomain));
  }
  if (auto* sg = std::get_if<Term::Sigma>(&ty->node)) {
    std::vector<TermPtr> ctx2 = ctx;
    ctx2.push_back(sg->first);
    return mk::sigma(sg->name, eta_type(sig, ctx, sg->first),
                     eta_type(sig, ctx2, sg->second));
  }
  if (auto* idt = std::get_if<Term::Id>(&ty->node)) {
    return mk::id(eta_type(sig, ctx, idt->type),
                  eta_expand(sig, ctx, idt->lhs, idt->type),
                  eta_expand(sig, ctx, idt->rhs, idt->type));
  }
  return eta_neutral(sig, ctx, ty).first;
}

}  // namespace

TermPtr eta_expand(const Signature& sig, const std::vector<TermPtr>& ctx,
                   const TermPtr& normal, const TermPtr& normal_type) {
  if (auto* pi = std::get_if<Term::Pi>(&normal_type->node)) {
    std::vector<TermPtr> ctx2 = ctx;
    ctx2.push_back(pi->domain);
    auto applied = beta_normalize(sig, mk::app(shift(normal, 0, 1), mk::var(0)));
    std::string hint = "x";
    if (auto* l = std::get_if<Term::Lambda>(&normal->node))
      if (!l->name.empty()) hint = l->name;
    return mk::lam(hint, eta_expand(sig, ctx2, applied, pi->codomain));
  }
  if (auto* sg = std::get_if<Term::Sigma>(&normal_type->node)) {
    auto fst = beta_normalize(sig, mk::proj1(normal));
    auto snd = beta_normalize(sig, mk::proj2(normal));
    auto snd_ty =
        beta_normalize(sig, subst_top(sg->second, mk::proj1(normal)));
    return mk::pair(eta_expand(sig, ctx, fst, sg->first),
                    eta_expand(sig, ctx, snd, snd_ty));
  }
  if (std::get_if<Term::Universe>(&normal_type->node))
    return eta_type(sig, ctx, normal);
  if (auto* idt = std::get_if<Term::Id>(&normal_type->node)) {
    if (auto* r = std::get_if<Term::Refl>(&normal->node))
      return mk::refl(eta_expand(sig, ctx, r->arg, idt->type));
    return eta_neutral(sig, ctx, normal).first;
  }
  return eta_neutral(sig, ctx, normal).first;
}

TermPtr normal_form(const Signature& sig, const TermPtr& t,
                    const TermPtr& type) {
  return eta_expand(sig, {}, beta_normalize(sig, t),
                    beta_normalize(sig, type));
}

// ---------------------------------------------------------------------
// Random well-typed term generation.
//
// Every term is generated against a fixed telescope
//   (A : Type 0) (x : A) (f : A -> A) (q : Id A x x)
// so generated bodies can use a base type, an inhabitant, a stuck
// function and a stuck path. Indices inside the body (before any
// generated binders): q=0, f=1, x=2, A=3.

namespace {

struct Gen {
  std::mt19937_64& rng;
  int pick(int n) {
    return static_cast<int>(rng() % static_cast<uint64_t>(n));
  }

  // Generates a type in the given context depth (0 = right inside the
  // telescope). Types only use the telescope's A (suitably shifted).
  TermPtr gen_type(int depth, int budget) {
    int a = 3 + depth;  // index of A
    int x = 2 + depth;  // index of x
    switch (budget <= 0 ? 0 : pick(5)) {
      case 0:
        return mk::var(a);
      case 1:  // A -> A
        return mk::pi("_", mk::var(a), mk::var(a + 1));
      case 2:  // Id A x x
        return mk::id(mk::var(a), mk::var(x), mk::var(x));
      case 3: {  // (z : A) * T
        auto t2 = gen_type(depth + 1, budget - 1);
        return mk::sigma("z", mk::var(a), t2);
      }
      default: {  // (z : A) -> T
        auto t2 = gen_type(depth + 1, budget - 1);
        return mk::pi("z", mk::var(a), t2);
      }
    }
  }

  // Generates a term of the given (generated) type. `depth` counts
  // binders under the telescope.
  TermPtr gen_term(int depth, const TermPtr& type, int budget) {
    // Redex injections, type-independent.
    if (budget > 0) {
      switch (pick(6)) {
        case 0: {  // let h : A -> T := fun z => body in h arg
          int a = 3 + depth;
          auto body = gen_term(depth + 1, shift(type, 0, 1), budget - 1);
          auto arg = gen_term(depth + 1, mk::var(a + 1), 0);
          auto fn_ty = mk::pi("z", mk::var(a), shift(type, 0, 1));
          return mk::let_("h", fn_ty, mk::lam("z", body),
                          mk::app(mk::var(0), arg));
        }
        case 1: {  // let z : A := arg in body
          int a = 3 + depth;
          auto body = gen_term(depth + 1, shift(type, 0, 1), budget - 1);
          auto arg = gen_term(depth, mk::var(a), 0);
          return mk::let_("z", mk::var(a), arg, body);
        }
        case 2: {  // J on refl x computing to the branch
          int a = 3 + depth, x = 2 + depth;
          auto branch = gen_term(depth, type, budget - 1);
          auto motive =
              mk::lam("y", mk::lam("p", shift(type, 0, 2)));
          return mk::j(mk::var(a), mk::var(x), motive, branch, mk::var(x),
                       mk::refl(mk::var(x)));
        }
        case 3: {  // let w : (z : A) * A := (a1, a2) in let v : A := w.1 in body
          int a = 3 + depth;
          auto sigma_ty = mk::sigma("z", mk::var(a), mk::var(a + 1));
          auto a1 = gen_term(depth, mk::var(a), 0);
          auto a2 = gen_term(depth, mk::var(a), 0);
          auto body = gen_term(depth + 2, shift(type, 0, 2), budget - 1);
          auto inner = mk::let_("v", mk::var(a + 1), mk::proj1(mk::var(0)),
                                body);
          return mk::let_("w", sigma_ty, mk::pair(a1, a2), inner);
        }
        default:
          break;
      }
    }
    // Type-directed construction.
    if (auto* pi = std::get_if<Term::Pi>(&type->node)) {
      auto body = gen_term(depth + 1, pi->codomain, budget - 1);
      return mk::lam("w", body);
    }
    if (auto* sg = std::get_if<Term::Sigma>(&type->node)) {
      auto fst = gen_term(depth, sg->first, budget / 2);
      auto snd =
          gen_term(depth, beta_normalize(Signature{},
                                         subst_top(sg->second, fst)),
                   budget / 2);
      return mk::pair(fst, snd);
    }
    if (std::get_if<Term::Id>(&type->node)) {
      // Both endpoints are x by construction (gen_type only builds
      // Id A x x), so refl x or the stuck q both fit; q only at the
      // telescope level.
      int x = 2 + depth;
      if (pick(2) == 0) return mk::var(depth);  // q
      if (pick(3) == 0) {
        // J on the stuck path q, eliminating into Id A x x.
        int a = 3 + depth, q = 0 + depth;
        auto motive = mk::lam(
            "y", mk::lam("p", mk::id(shift(mk::var(a), 0, 2),
                                     shift(mk::var(x), 0, 2),
                                     shift(mk::var(x), 0, 2))));
        return mk::j(mk::var(a), mk::var(x), motive,
                     mk::refl(mk::var(x)), mk::var(x), mk::var(q));
      }
      return mk::refl(mk::var(x));
    }
    // type is A (a variable) or something neutral: produce an element
    // of A.
    int a = 3 + depth, x = 2 + depth, f = 1 + depth;
    switch (pick(3)) {
      case 0:
        return mk::var(x);
      case 1:  // f applied to something of type A
        return mk::app(mk::var(f), gen_term(depth, mk::var(a), 0));
      default: {  // J transporting x along q (stuck) or refl
        int q = 0 + depth;
        auto motive = mk::lam("y", mk::lam("p", shift(mk::var(a), 0, 2)));
        auto path = pick(2) == 0 ? mk::var(q)
                                 : TermPtr(mk::refl(mk::var(x)));
        return mk::j(mk::var(a), mk::var(x), motive,
                     gen_term(depth, mk::var(a), 0), mk::var(x), path);
      }
    }
  }
};

}  // namespace

std::pair<TermPtr, TermPtr> generate(std::mt19937_64& rng, int budget) {
  Gen g{rng};
  // Telescope: (A : Type 0) (x : A) (f : A -> A) (q : Id A x x)
  auto inner_ty = g.gen_type(0, 2);
  auto inner = g.gen_term(0, inner_ty, budget);
  auto type = mk::pi(
      "A", mk::universe(0),
      mk::pi("x", mk::var(0),
             mk::pi("f", mk::pi("_", mk::var(1), mk::var(2)),
                    mk::pi("q",
                           mk::id(mk::var(2), mk::var(1), mk::var(1)),
                           inner_ty))));
  auto term = mk::lam(
      "A", mk::lam("x", mk::lam("f", mk::lam("q", inner))));
  return {term, type};
}

}  // namespace hott::oracle
