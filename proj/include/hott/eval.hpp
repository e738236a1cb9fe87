#ifndef HOTT_EVAL_HPP
#define HOTT_EVAL_HPP

#include "hott/signature.hpp"
#include "hott/value.hpp"

namespace hott {

// Kernel options. `eta` controls eta rules for Pi and Sigma during
// conversion only; readback always produces eta-long forms.
struct Options {
  bool eta = true;
  bool trace_conversion = false;
};

ValuePtr eval(const Signature& sig, const Env& env, const TermPtr& t);

ValuePtr closure_apply(const Signature& sig, const Closure& cl, ValuePtr arg);
ValuePtr vapply(const Signature& sig, const ValuePtr& fn, ValuePtr arg);
ValuePtr vproj1(const Signature& sig, const ValuePtr& v);
ValuePtr vproj2(const Signature& sig, const ValuePtr& v);

// Reads a value of the given type back to an eta-long beta-normal term.
// `depth` is the number of free levels in scope.
TermPtr readback(const Signature& sig, int depth, const ValuePtr& type,
                 const ValuePtr& value);
// Reads a type value back to a normal type term.
TermPtr readback_type(const Signature& sig, int depth, const ValuePtr& v);

// Type-directed conversion: eta for Pi and Sigma (unless disabled),
// structural comparison under neutral spines.
bool conv(const Signature& sig, int depth, const ValuePtr& type,
          const ValuePtr& v, const ValuePtr& w, const Options& opts = {});
bool conv_type(const Signature& sig, int depth, const ValuePtr& v,
               const ValuePtr& w, const Options& opts = {});

// Convenience: evaluate in the empty environment and read back at type.
TermPtr normalize(const Signature& sig, const TermPtr& t, const ValuePtr& type);

}  // namespace hott

#endif
