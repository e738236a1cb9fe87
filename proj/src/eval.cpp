#include "hott/eval.hpp"

#include <iostream>

namespace hott {

namespace {
template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;
}  // namespace

namespace vmk {
ValuePtr universe(int level) {
  return std::make_shared<Value>(Value::VUniverse{level});
}
ValuePtr pi(std::string name, ValuePtr domain, Closure codomain) {
  return std::make_shared<Value>(
      Value::VPi{std::move(name), std::move(domain), std::move(codomain)});
}
ValuePtr lam(std::string name, Closure body) {
  return std::make_shared<Value>(
      Value::VLambda{std::move(name), std::move(body)});
}
ValuePtr sigma(std::string name, ValuePtr first, Closure second) {
  return std::make_shared<Value>(
      Value::VSigma{std::move(name), std::move(first), std::move(second)});
}
ValuePtr pair(ValuePtr fst, ValuePtr snd) {
  return std::make_shared<Value>(Value::VPair{std::move(fst), std::move(snd)});
}
ValuePtr id(ValuePtr type, ValuePtr lhs, ValuePtr rhs) {
  return std::make_shared<Value>(
      Value::VId{std::move(type), std::move(lhs), std::move(rhs)});
}
ValuePtr refl(ValuePtr arg) {
  return std::make_shared<Value>(Value::VRefl{std::move(arg)});
}
ValuePtr neutral(NeutralPtr n, ValuePtr type) {
  return std::make_shared<Value>(
      Value::VNeutral{std::move(n), std::move(type)});
}
ValuePtr fresh(int level, ValuePtr type) {
  auto ne = std::make_shared<Neutral>(Neutral::NVar{level, type});
  return neutral(std::move(ne), std::move(type));
}
}  // namespace vmk

ValuePtr closure_apply(const Signature& sig, const Closure& cl, ValuePtr arg) {
  return eval(sig, cl.env.extended(std::move(arg)), cl.body);
}

ValuePtr vapply(const Signature& sig, const ValuePtr& fn, ValuePtr arg) {
  if (auto* l = std::get_if<Value::VLambda>(&fn->node))
    return closure_apply(sig, l->body, std::move(arg));
  if (auto* n = std::get_if<Value::VNeutral>(&fn->node)) {
    auto* pi = std::get_if<Value::VPi>(&n->type->node);
    if (!pi) throw InternalError("application head has a non-Pi type");
    auto result_ty = closure_apply(sig, pi->codomain, arg);
    auto ne = std::make_shared<Neutral>(
        Neutral::NApp{n->neutral, Normal{pi->domain, std::move(arg)}});
    return vmk::neutral(std::move(ne), std::move(result_ty));
  }
  throw InternalError("application of a non-function value");
}

ValuePtr vproj1(const Signature& sig, const ValuePtr& v) {
  (void)sig;
  if (auto* p = std::get_if<Value::VPair>(&v->node)) return p->fst;
  if (auto* n = std::get_if<Value::VNeutral>(&v->node)) {
    auto* sg = std::get_if<Value::VSigma>(&n->type->node);
    if (!sg) throw InternalError("projection from a non-Sigma type");
    auto ne = std::make_shared<Neutral>(Neutral::NProj1{n->neutral});
    return vmk::neutral(std::move(ne), sg->first);
  }
  throw InternalError("first projection of a non-pair value");
}

ValuePtr vproj2(const Signature& sig, const ValuePtr& v) {
  if (auto* p = std::get_if<Value::VPair>(&v->node)) return p->snd;
  if (auto* n = std::get_if<Value::VNeutral>(&v->node)) {
    auto* sg = std::get_if<Value::VSigma>(&n->type->node);
    if (!sg) throw InternalError("projection from a non-Sigma type");
    auto fst = vproj1(sig, v);
    auto snd_ty = closure_apply(sig, sg->second, std::move(fst));
    auto ne = std::make_shared<Neutral>(Neutral::NProj2{n->neutral});
    return vmk::neutral(std::move(ne), std::move(snd_ty));
  }
  throw InternalError("second projection of a non-pair value");
}

ValuePtr eval(const Signature& sig, const Env& env, const TermPtr& t) {
  return std::visit(
      overloaded{
          [&](const Term::Var& v) -> ValuePtr { return env.lookup(v.index); },
          [&](const Term::Universe& u) -> ValuePtr {
            return vmk::universe(u.level);
          },
          [&](const Term::Pi& n) -> ValuePtr {
            return vmk::pi(n.name, eval(sig, env, n.domain),
                           Closure{env, n.codomain});
          },
          [&](const Term::Lambda& n) -> ValuePtr {
            return vmk::lam(n.name, Closure{env, n.body});
          },
          [&](const Term::App& n) -> ValuePtr {
            return vapply(sig, eval(sig, env, n.fn), eval(sig, env, n.arg));
          },
          [&](const Term::Sigma& n) -> ValuePtr {
            return vmk::sigma(n.name, eval(sig, env, n.first),
                              Closure{env, n.second});
          },
          [&](const Term::Pair& n) -> ValuePtr {
            return vmk::pair(eval(sig, env, n.fst), eval(sig, env, n.snd));
          },
          [&](const Term::Proj1& n) -> ValuePtr {
            return vproj1(sig, eval(sig, env, n.tuple));
          },
          [&](const Term::Proj2& n) -> ValuePtr {
            return vproj2(sig, eval(sig, env, n.tuple));
          },
          [&](const Term::Id& n) -> ValuePtr {
            return vmk::id(eval(sig, env, n.type), eval(sig, env, n.lhs),
                           eval(sig, env, n.rhs));
          },
          [&](const Term::Refl& n) -> ValuePtr {
            return vmk::refl(eval(sig, env, n.arg));
          },
          [&](const Term::J& n) -> ValuePtr {
            auto pv = eval(sig, env, n.path);
            if (std::get_if<Value::VRefl>(&pv->node))
              return eval(sig, env, n.branch);
            if (auto* ne = std::get_if<Value::VNeutral>(&pv->node)) {
              auto av = eval(sig, env, n.type);
              auto basev = eval(sig, env, n.base);
              auto motivev = eval(sig, env, n.motive);
              auto branchv = eval(sig, env, n.branch);
              auto otherv = eval(sig, env, n.other);
              auto result_ty =
                  vapply(sig, vapply(sig, motivev, otherv), pv);
              auto stuck = std::make_shared<Neutral>(
                  Neutral::NJ{std::move(av), std::move(basev),
                              std::move(motivev), std::move(branchv),
                              std::move(otherv), ne->neutral});
              return vmk::neutral(std::move(stuck), std::move(result_ty));
            }
            throw InternalError("J applied to a non-path value");
          },
          [&](const Term::Let& n) -> ValuePtr {
            return eval(sig, env.extended(eval(sig, env, n.bound)), n.body);
          },
          [&](const Term::Const& c) -> ValuePtr {
            const DeclInfo* d = sig.find(c.name);
            if (!d) throw InternalError("eval: unknown constant " + c.name);
            if (d->is_axiom) {
              auto ne = std::make_shared<Neutral>(Neutral::NConst{c.name});
              return vmk::neutral(std::move(ne), d->type);
            }
            return d->value;
          },
      },
      t->node);
}

namespace {

TermPtr readback_neutral(const Signature& sig, int depth, const NeutralPtr& ne);

TermPtr readback_stuck(const Signature& sig, int depth, const ValuePtr& v) {
  auto* n = std::get_if<Value::VNeutral>(&v->node);
  if (!n) throw InternalError("readback: expected a neutral value");
  return readback_neutral(sig, depth, n->neutral);
}

TermPtr readback_neutral(const Signature& sig, int depth,
                         const NeutralPtr& ne) {
  return std::visit(
      overloaded{
          [&](const Neutral::NVar& v) -> TermPtr {
            int index = depth - 1 - v.level;
            if (index < 0)
              throw InternalError("readback: level out of scope");
            return mk::var(index);
          },
          [&](const Neutral::NConst& c) -> TermPtr { return mk::cnst(c.name); },
          [&](const Neutral::NApp& a) -> TermPtr {
            return mk::app(readback_neutral(sig, depth, a.fn),
                           readback(sig, depth, a.arg.type, a.arg.value));
          },
          [&](const Neutral::NProj1& p) -> TermPtr {
            return mk::proj1(readback_neutral(sig, depth, p.tuple));
          },
          [&](const Neutral::NProj2& p) -> TermPtr {
            return mk::proj2(readback_neutral(sig, depth, p.tuple));
          },
          [&](const Neutral::NJ& j) -> TermPtr {
            auto type_term = readback_type(sig, depth, j.type);
            auto base_term = readback(sig, depth, j.type, j.base);
            // Motive: eta-expand two binders; the codomain is a type.
            std::string xh = "x", ph = "p";
            if (auto* l = std::get_if<Value::VLambda>(&j.motive->node))
              xh = l->name.empty() ? "x" : l->name;
            auto xvar = vmk::fresh(depth, j.type);
            auto pvar =
                vmk::fresh(depth + 1, vmk::id(j.type, j.base, xvar));
            auto motive_body = readback_type(
                sig, depth + 2,
                vapply(sig, vapply(sig, j.motive, xvar), pvar));
            auto motive_term = mk::lam(xh, mk::lam(ph, motive_body));
            auto branch_ty = vapply(sig, vapply(sig, j.motive, j.base),
                                    vmk::refl(j.base));
            auto branch_term = readback(sig, depth, branch_ty, j.branch);
            auto other_term = readback(sig, depth, j.type, j.other);
            auto path_term = readback_neutral(sig, depth, j.path);
            return mk::j(type_term, base_term, motive_term, branch_term,
                         other_term, path_term);
          },
      },
      ne->node);
}

}  // namespace

TermPtr readback(const Signature& sig, int depth, const ValuePtr& type,
                 const ValuePtr& value) {
  if (auto* pi = std::get_if<Value::VPi>(&type->node)) {
    auto var = vmk::fresh(depth, pi->domain);
    auto body_ty = closure_apply(sig, pi->codomain, var);
    auto body = vapply(sig, value, var);
    std::string hint =
        pi->name.empty() || pi->name == "_" ? "x" : pi->name;
    if (auto* l = std::get_if<Value::VLambda>(&value->node))
      if (!l->name.empty()) hint = l->name;
    return mk::lam(hint, readback(sig, depth + 1, body_ty, body));
  }
  if (auto* sg = std::get_if<Value::VSigma>(&type->node)) {
    auto fst = vproj1(sig, value);
    auto snd = vproj2(sig, value);
    auto snd_ty = closure_apply(sig, sg->second, fst);
    return mk::pair(readback(sig, depth, sg->first, fst),
                    readback(sig, depth, snd_ty, snd));
  }
  if (std::get_if<Value::VUniverse>(&type->node))
    return readback_type(sig, depth, value);
  if (auto* idt = std::get_if<Value::VId>(&type->node)) {
    if (auto* r = std::get_if<Value::VRefl>(&value->node))
      return mk::refl(readback(sig, depth, idt->type, r->arg));
    return readback_stuck(sig, depth, value);
  }
  if (std::get_if<Value::VNeutral>(&type->node))
    return readback_stuck(sig, depth, value);
  throw InternalError("readback: value of a non-type");
}

TermPtr readback_type(const Signature& sig, int depth, const ValuePtr& v) {
  return std::visit(
      overloaded{
          [&](const Value::VUniverse& u) -> TermPtr {
            return mk::universe(u.level);
          },
          [&](const Value::VPi& pi) -> TermPtr {
            auto var = vmk::fresh(depth, pi.domain);
            return mk::pi(
                pi.name.empty() ? "x" : pi.name,
                readback_type(sig, depth, pi.domain),
                readback_type(sig, depth + 1,
                              closure_apply(sig, pi.codomain, var)));
          },
          [&](const Value::VSigma& sg) -> TermPtr {
            auto var = vmk::fresh(depth, sg.first);
            return mk::sigma(
                sg.name.empty() ? "x" : sg.name,
                readback_type(sig, depth, sg.first),
                readback_type(sig, depth + 1,
                              closure_apply(sig, sg.second, var)));
          },
          [&](const Value::VId& idt) -> TermPtr {
            return mk::id(readback_type(sig, depth, idt.type),
                          readback(sig, depth, idt.type, idt.lhs),
                          readback(sig, depth, idt.type, idt.rhs));
          },
          [&](const Value::VNeutral&) -> TermPtr {
            return readback_stuck(sig, depth, v);
          },
          [&](const auto&) -> TermPtr {
            throw InternalError("readback_type: not a type value");
          },
      },
      v->node);
}

namespace {

// Structural comparison of neutrals. Returns the spine's type on
// success so argument comparison stays type-directed.
std::optional<ValuePtr> conv_neutral(const Signature& sig, int depth,
                                     const NeutralPtr& a, const NeutralPtr& b,
                                     const Options& opts) {
  if (a->node.index() != b->node.index()) return std::nullopt;
  if (auto* x = std::get_if<Neutral::NVar>(&a->node)) {
    auto* y = std::get_if<Neutral::NVar>(&b->node);
    if (x->level != y->level) return std::nullopt;
    return x->type;
  }
  if (auto* x = std::get_if<Neutral::NConst>(&a->node)) {
    auto* y = std::get_if<Neutral::NConst>(&b->node);
    if (x->name != y->name) return std::nullopt;
    const DeclInfo* d = sig.find(x->name);
    if (!d) throw InternalError("conv: unknown constant " + x->name);
    return d->type;
  }
  if (auto* x = std::get_if<Neutral::NApp>(&a->node)) {
    auto* y = std::get_if<Neutral::NApp>(&b->node);
    auto fn_ty = conv_neutral(sig, depth, x->fn, y->fn, opts);
    if (!fn_ty) return std::nullopt;
    auto* pi = std::get_if<Value::VPi>(&(*fn_ty)->node);
    if (!pi) throw InternalError("conv: application head has a non-Pi type");
    if (!conv(sig, depth, pi->domain, x->arg.value, y->arg.value, opts))
      return std::nullopt;
    return closure_apply(sig, pi->codomain, x->arg.value);
  }
  if (auto* x = std::get_if<Neutral::NProj1>(&a->node)) {
    auto* y = std::get_if<Neutral::NProj1>(&b->node);
    auto ty = conv_neutral(sig, depth, x->tuple, y->tuple, opts);
    if (!ty) return std::nullopt;
    auto* sg = std::get_if<Value::VSigma>(&(*ty)->node);
    if (!sg) throw InternalError("conv: projection from a non-Sigma type");
    return sg->first;
  }
  if (auto* x = std::get_if<Neutral::NProj2>(&a->node)) {
    auto* y = std::get_if<Neutral::NProj2>(&b->node);
    auto ty = conv_neutral(sig, depth, x->tuple, y->tuple, opts);
    if (!ty) return std::nullopt;
    auto* sg = std::get_if<Value::VSigma>(&(*ty)->node);
    if (!sg) throw InternalError("conv: projection from a non-Sigma type");
    auto fst = vproj1(
        sig, vmk::neutral(std::make_shared<Neutral>(Neutral::NProj1{x->tuple}),
                          *ty));
    // Reconstruct the first projection neutral to index the family.
    auto ne1 = std::make_shared<Neutral>(Neutral::NProj1{x->tuple});
    auto fst_v = vmk::neutral(std::move(ne1), sg->first);
    (void)fst;
    return closure_apply(sig, sg->second, std::move(fst_v));
  }
  auto* x = std::get_if<Neutral::NJ>(&a->node);
  auto* y = std::get_if<Neutral::NJ>(&b->node);
  if (!conv_type(sig, depth, x->type, y->type, opts)) return std::nullopt;
  if (!conv(sig, depth, x->type, x->base, y->base, opts)) return std::nullopt;
  auto xvar = vmk::fresh(depth, x->type);
  auto pvar = vmk::fresh(depth + 1, vmk::id(x->type, x->base, xvar));
  auto mx = vapply(sig, vapply(sig, x->motive, xvar), pvar);
  auto my = vapply(sig, vapply(sig, y->motive, xvar), pvar);
  if (!conv_type(sig, depth + 2, mx, my, opts)) return std::nullopt;
  auto branch_ty =
      vapply(sig, vapply(sig, x->motive, x->base), vmk::refl(x->base));
  if (!conv(sig, depth, branch_ty, x->branch, y->branch, opts))
    return std::nullopt;
  if (!conv(sig, depth, x->type, x->other, y->other, opts))
    return std::nullopt;
  if (!conv_neutral(sig, depth, x->path, y->path, opts)) return std::nullopt;
  auto path_v = vmk::neutral(x->path, vmk::id(x->type, x->base, x->other));
  return vapply(sig, vapply(sig, x->motive, x->other), std::move(path_v));
}

bool both_neutral_conv(const Signature& sig, int depth, const ValuePtr& v,
                       const ValuePtr& w, const Options& opts) {
  auto* nv = std::get_if<Value::VNeutral>(&v->node);
  auto* nw = std::get_if<Value::VNeutral>(&w->node);
  if (!nv || !nw) return false;
  return conv_neutral(sig, depth, nv->neutral, nw->neutral, opts).has_value();
}

}  // namespace

bool conv(const Signature& sig, int depth, const ValuePtr& type,
          const ValuePtr& v, const ValuePtr& w, const Options& opts) {
  if (v.get() == w.get()) return true;
  if (auto* pi = std::get_if<Value::VPi>(&type->node)) {
    if (!opts.eta) {
      bool vl = std::holds_alternative<Value::VLambda>(v->node);
      bool wl = std::holds_alternative<Value::VLambda>(w->node);
      if (vl != wl) return false;
      if (!vl) return both_neutral_conv(sig, depth, v, w, opts);
    }
    auto var = vmk::fresh(depth, pi->domain);
    auto body_ty = closure_apply(sig, pi->codomain, var);
    return conv(sig, depth + 1, body_ty, vapply(sig, v, var),
                vapply(sig, w, var), opts);
  }
  if (auto* sg = std::get_if<Value::VSigma>(&type->node)) {
    if (!opts.eta) {
      bool vp = std::holds_alternative<Value::VPair>(v->node);
      bool wp = std::holds_alternative<Value::VPair>(w->node);
      if (vp != wp) return false;
      if (!vp) return both_neutral_conv(sig, depth, v, w, opts);
    }
    auto v1 = vproj1(sig, v);
    auto w1 = vproj1(sig, w);
    if (!conv(sig, depth, sg->first, v1, w1, opts)) return false;
    auto snd_ty = closure_apply(sig, sg->second, v1);
    return conv(sig, depth, snd_ty, vproj2(sig, v), vproj2(sig, w), opts);
  }
  if (std::get_if<Value::VUniverse>(&type->node))
    return conv_type(sig, depth, v, w, opts);
  if (auto* idt = std::get_if<Value::VId>(&type->node)) {
    auto* rv = std::get_if<Value::VRefl>(&v->node);
    auto* rw = std::get_if<Value::VRefl>(&w->node);
    if (rv && rw) return conv(sig, depth, idt->type, rv->arg, rw->arg, opts);
    if (rv || rw) return false;
    return both_neutral_conv(sig, depth, v, w, opts);
  }
  if (std::get_if<Value::VNeutral>(&type->node))
    return both_neutral_conv(sig, depth, v, w, opts);
  throw InternalError("conv: comparison at a non-type");
}

bool conv_type(const Signature& sig, int depth, const ValuePtr& v,
               const ValuePtr& w, const Options& opts) {
  if (v.get() == w.get()) return true;
  if (v->node.index() != w->node.index())
    return both_neutral_conv(sig, depth, v, w, opts);
  if (auto* x = std::get_if<Value::VUniverse>(&v->node))
    return x->level == std::get<Value::VUniverse>(w->node).level;
  if (auto* x = std::get_if<Value::VPi>(&v->node)) {
    const auto& y = std::get<Value::VPi>(w->node);
    if (!conv_type(sig, depth, x->domain, y.domain, opts)) return false;
    auto var = vmk::fresh(depth, x->domain);
    return conv_type(sig, depth + 1, closure_apply(sig, x->codomain, var),
                     closure_apply(sig, y.codomain, var), opts);
  }
  if (auto* x = std::get_if<Value::VSigma>(&v->node)) {
    const auto& y = std::get<Value::VSigma>(w->node);
    if (!conv_type(sig, depth, x->first, y.first, opts)) return false;
    auto var = vmk::fresh(depth, x->first);
    return conv_type(sig, depth + 1, closure_apply(sig, x->second, var),
                     closure_apply(sig, y.second, var), opts);
  }
  if (auto* x = std::get_if<Value::VId>(&v->node)) {
    const auto& y = std::get<Value::VId>(w->node);
    return conv_type(sig, depth, x->type, y.type, opts) &&
           conv(sig, depth, x->type, x->lhs, y.lhs, opts) &&
           conv(sig, depth, x->type, x->rhs, y.rhs, opts);
  }
  if (std::get_if<Value::VNeutral>(&v->node))
    return both_neutral_conv(sig, depth, v, w, opts);
  return false;
}

TermPtr normalize(const Signature& sig, const TermPtr& t,
                  const ValuePtr& type) {
  return readback(sig, 0, type, eval(sig, Env{}, t));
}

}  // namespace hott
