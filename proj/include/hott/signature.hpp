#ifndef HOTT_SIGNATURE_HPP
#define HOTT_SIGNATURE_HPP

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hott/term.hpp"

namespace hott {

struct Value;
using ValuePtr = std::shared_ptr<const Value>;

// A checked declaration. For definitions `value` holds the evaluated
// body, so eval can unfold constants in O(1). `axioms` is the
// transitively closed axiom footprint of the body.
struct DeclInfo {
  std::string name;
  bool is_axiom = false;
  TermPtr type_term;
  TermPtr body_term;  // null for axioms
  ValuePtr type;
  ValuePtr value;  // null for axioms
  std::set<std::string> axioms;
};

// Checked declarations in dependency order.
class Signature {
 public:
  const DeclInfo* find(const std::string& name) const {
    auto it = index_.find(name);
    return it == index_.end() ? nullptr : decls_[it->second].get();
  }
  bool contains(const std::string& name) const { return index_.count(name); }
  void add(DeclInfo info) {
    index_[info.name] = decls_.size();
    decls_.push_back(std::make_shared<DeclInfo>(std::move(info)));
  }
  const std::vector<std::shared_ptr<DeclInfo>>& decls() const {
    return decls_;
  }
  size_t size() const { return decls_.size(); }

 private:
  std::vector<std::shared_ptr<DeclInfo>> decls_;
  std::map<std::string, size_t> index_;
};

}  // namespace hott

#endif
