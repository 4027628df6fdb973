#pragma once

#include <cstdint>
#include <deque>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace tabletrie {

using SymbolId = uint32_t;

/// Process-wide atom table. Interning turns every later comparison into a
/// single integer compare.
class SymbolTable {
public:
  SymbolId intern(std::string_view name);
  const std::string& name(SymbolId id) const;
  size_t size() const;

private:
  mutable std::mutex mu_;
  std::unordered_map<std::string, SymbolId> ids_;
  std::deque<std::string> names_;  // stable addresses, indexed by id
};

/// The table shared by the parser, printer and tries.
SymbolTable& symbols();

}  // namespace tabletrie
