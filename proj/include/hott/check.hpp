#ifndef HOTT_CHECK_HPP
#define HOTT_CHECK_HPP

#include <optional>
#include <string>
#include <vector>

#include "hott/eval.hpp"
#include "hott/signature.hpp"
#include "hott/surface.hpp"
#include "hott/value.hpp"

namespace hott {

struct TypeError : std::runtime_error {
  enum class Kind {
    NotInferable,
    NotAFunction,
    NotAPair,
    UniverseExpected,
    UnboundName,
    Mismatch,
    DuplicateName,
    NotAnIdentity,
  };
  Kind kind;
  Span span;
  TypeError(Kind k, const std::string& msg, Span s)
      : std::runtime_error(msg), kind(k), span(s) {}
};

// Typing context. Each entry also carries the value the variable is
// bound to in the evaluation environment: a fresh neutral for ordinary
// binders, the actual definiens for transparent lets.
struct Context {
  struct Entry {
    std::string name;
    ValuePtr type;
    ValuePtr value;
  };
  std::vector<Entry> entries;

  size_t depth() const { return entries.size(); }
  Env env() const {
    Env e;
    e.items.reserve(entries.size());
    for (const auto& en : entries) e.items.push_back(en.value);
    return e;
  }
  std::vector<std::string> names() const {
    std::vector<std::string> ns;
    ns.reserve(entries.size());
    for (const auto& en : entries) ns.push_back(en.name);
    return ns;
  }
  const Entry& lookup(int index) const {
    if (index < 0 || index >= static_cast<int>(entries.size()))
      throw InternalError("context lookup out of range");
    return entries[entries.size() - 1 - static_cast<size_t>(index)];
  }
  // Ordinary binder: fresh neutral variable of the given type.
  Context bind(const std::string& name, ValuePtr type) const {
    Context c = *this;
    auto var = vmk::fresh(static_cast<int>(depth()), type);
    c.entries.push_back(Entry{name, std::move(type), std::move(var)});
    return c;
  }
  // Transparent let binding.
  Context define(const std::string& name, ValuePtr type, ValuePtr value) const {
    Context c = *this;
    c.entries.push_back(Entry{name, std::move(type), std::move(value)});
    return c;
  }
};

// Elaborates surface syntax to core terms, resolving names against the
// binder stack and the signature. Unknown names raise UnboundName.
TermPtr elaborate(const Signature& sig, const std::vector<std::string>& bound,
                  const SExprPtr& e);

// Bidirectional checking over the evaluator.
ValuePtr infer(const Signature& sig, const Context& ctx, const TermPtr& t,
               const Options& opts = {});
void check(const Signature& sig, const Context& ctx, const TermPtr& t,
           const ValuePtr& expected, const Options& opts = {});

// Declaration-level checking; returns the info entered into the
// signature (with computed axiom footprint).
struct Declaration {
  bool is_axiom = false;
  std::string name;
  TermPtr type;
  TermPtr body;  // null for axioms
  Span span;
};

DeclInfo check_declaration(Signature& sig, const Declaration& d,
                           const Options& opts = {});

// Whole-module checking with per-declaration outcomes.
struct DeclResult {
  std::string name;
  std::string file;
  bool ok = false;
  std::string error;
  std::set<std::string> axioms;
};

struct Report {
  std::vector<DeclResult> decls;
  bool all_ok = true;
};

// Checks files in order. A type error aborts the rest of its file;
// later files are still processed against the signature built so far.
Report check_modules(Signature& sig, const std::vector<SourceModule>& files,
                     const Options& opts = {});

}  // namespace hott

#endif
