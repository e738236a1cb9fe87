#ifndef HOTT_VALUE_HPP
#define HOTT_VALUE_HPP

#include <memory>
#include <variant>
#include <vector>

#include "hott/term.hpp"

namespace hott {

struct Value;
struct Neutral;
using ValuePtr = std::shared_ptr<const Value>;
using NeutralPtr = std::shared_ptr<const Neutral>;

// Evaluation environment: one value per binder, innermost last.
struct Env {
  std::vector<ValuePtr> items;

  const ValuePtr& lookup(int index) const {
    if (index < 0 || index >= static_cast<int>(items.size()))
      throw InternalError("environment lookup out of range");
    return items[items.size() - 1 - static_cast<size_t>(index)];
  }
  Env extended(ValuePtr v) const {
    Env e = *this;
    e.items.push_back(std::move(v));
    return e;
  }
  size_t size() const { return items.size(); }
};

// A suspended body: evaluating `body` in `env` extended by the argument.
struct Closure {
  Env env;
  TermPtr body;
};

// A value together with its type, as stored in neutral spines so that
// readback and conversion can stay type-directed under applications.
struct Normal {
  ValuePtr type;
  ValuePtr value;
};

// Neutral heads are variables (de Bruijn levels) and axiom constants;
// transparent definitions are unfolded by eval and never appear here.
struct Neutral {
  struct NVar {
    int level;
    ValuePtr type;
  };
  struct NConst { std::string name; };
  struct NApp {
    NeutralPtr fn;
    Normal arg;
  };
  struct NProj1 { NeutralPtr tuple; };
  struct NProj2 { NeutralPtr tuple; };
  // J stuck on a neutral path. Enough is kept to read every argument
  // back type-directed; the motive's codomain is always a universe, so
  // it reads back through its eta-expansion as a type.
  struct NJ {
    ValuePtr type;    // A
    ValuePtr base;    // a : A
    ValuePtr motive;  // C : (x : A) -> Id A a x -> Type
    ValuePtr branch;  // d : C a (refl a)
    ValuePtr other;   // x : A
    NeutralPtr path;  // p : Id A a x, stuck
  };

  using Node = std::variant<NVar, NConst, NApp, NProj1, NProj2, NJ>;
  Node node;

  explicit Neutral(Node n) : node(std::move(n)) {}
};

struct Value {
  struct VUniverse { int level; };
  struct VPi {
    std::string name;
    ValuePtr domain;
    Closure codomain;
  };
  struct VLambda {
    std::string name;
    Closure body;
  };
  struct VSigma {
    std::string name;
    ValuePtr first;
    Closure second;
  };
  struct VPair {
    ValuePtr fst, snd;
  };
  struct VId {
    ValuePtr type, lhs, rhs;
  };
  struct VRefl { ValuePtr arg; };
  struct VNeutral {
    NeutralPtr neutral;
    ValuePtr type;
  };

  using Node = std::variant<VUniverse, VPi, VLambda, VSigma, VPair, VId, VRefl,
                            VNeutral>;
  Node node;

  explicit Value(Node n) : node(std::move(n)) {}
};

namespace vmk {
ValuePtr universe(int level);
ValuePtr pi(std::string name, ValuePtr domain, Closure codomain);
ValuePtr lam(std::string name, Closure body);
ValuePtr sigma(std::string name, ValuePtr first, Closure second);
ValuePtr pair(ValuePtr fst, ValuePtr snd);
ValuePtr id(ValuePtr type, ValuePtr lhs, ValuePtr rhs);
ValuePtr refl(ValuePtr arg);
ValuePtr neutral(NeutralPtr n, ValuePtr type);
// Fresh variable of the given type at the given level.
ValuePtr fresh(int level, ValuePtr type);
}  // namespace vmk

}  // namespace hott

#endif
