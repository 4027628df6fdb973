#include "tabletrie/symbol.hpp"

#include <stdexcept>

namespace tabletrie {

SymbolId SymbolTable::intern(std::string_view name) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = ids_.find(std::string(name));
  if (it != ids_.end()) return it->second;
  SymbolId id = static_cast<SymbolId>(names_.size());
  names_.emplace_back(name);
  ids_.emplace(names_.back(), id);
  return id;
}

const std::string& SymbolTable::name(SymbolId id) const {
  std::lock_guard<std::mutex> lock(mu_);
  if (id >= names_.size()) throw std::out_of_range("unknown symbol id");
  return names_[id];
}

size_t SymbolTable::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return names_.size();
}

SymbolTable& symbols() {
  static SymbolTable table;
  return table;
}

}  // namespace tabletrie
