#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace fpr {

using SymbolId = uint32_t;
using VarId = uint32_t;

enum class SymbolKind : uint8_t { Function, Predicate };

struct SymbolInfo {
  std::string name;
  uint32_t arity = 0;
  SymbolKind kind = SymbolKind::Function;
};

class SymbolError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Per-problem symbol interning. Names map to dense ids; the arity and kind of
// a name are fixed at first use and clash on later disagreement. Interning is
// single-writer while a problem is being parsed or proposed; afterwards the
// table is read-only and safe to share.
class SymbolTable {
 public:
  SymbolId intern(std::string_view name, uint32_t arity, SymbolKind kind) {
    auto it = by_name_.find(std::string(name));
    if (it != by_name_.end()) {
      const SymbolInfo& info = symbols_[it->second];
      if (info.kind != kind)
        throw SymbolError("symbol '" + std::string(name) +
                          "' used as both function and predicate");
      if (info.arity != arity)
        throw SymbolError("arity clash for symbol '" + std::string(name) +
                          "': " + std::to_string(info.arity) + " vs " +
                          std::to_string(arity));
      return it->second;
    }
    SymbolId id = static_cast<SymbolId>(symbols_.size());
    symbols_.push_back(SymbolInfo{std::string(name), arity, kind});
    by_name_.emplace(std::string(name), id);
    return id;
  }

  std::optional<SymbolId> lookup(std::string_view name) const {
    auto it = by_name_.find(std::string(name));
    if (it == by_name_.end()) return std::nullopt;
    return it->second;
  }

  const SymbolInfo& info(SymbolId id) const { return symbols_.at(id); }
  const std::string& name(SymbolId id) const { return symbols_.at(id).name; }
  uint32_t arity(SymbolId id) const { return symbols_.at(id).arity; }
  SymbolKind kind(SymbolId id) const { return symbols_.at(id).kind; }
  size_t size() const { return symbols_.size(); }

  // Fresh constant named sk<counter>, skipping any taken names.
  SymbolId fresh_skolem_constant() {
    for (;;) {
      std::string candidate = "sk" + std::to_string(skolem_counter_++);
      if (!by_name_.count(candidate))
        return intern(candidate, 0, SymbolKind::Function);
    }
  }

  bool has_equality_predicate() const {
    for (const auto& s : symbols_)
      if (s.kind == SymbolKind::Predicate && (s.name == "=" || s.name == "equal"))
        return true;
    return false;
  }

 private:
  std::vector<SymbolInfo> symbols_;
  std::unordered_map<std::string, SymbolId> by_name_;
  uint32_t skolem_counter_ = 0;
};

}  // namespace fpr
