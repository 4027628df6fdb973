#include "tabletrie/token.hpp"

namespace tabletrie {

uint64_t token_hash(const Token& t) {
  // splitmix64 finalizer over kind-salted payload
  uint64_t x = t.payload + 0x9e3779b97f4a7c15ULL * (static_cast<uint64_t>(t.kind) + 1);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

std::string to_string(const Token& t) {
  switch (t.kind) {
    case TokenKind::Root:
      return "<root>";
    case TokenKind::Atom:
      return symbols().name(t.atom_symbol());
    case TokenKind::Int:
      return std::to_string(t.int_value());
    case TokenKind::Var:
      return "VAR" + std::to_string(t.var_index());
    case TokenKind::Functor:
      return symbols().name(t.functor_name()) + "/" + std::to_string(t.functor_arity());
    case TokenKind::ListCell:
      return "<lc>";
    case TokenKind::Nil:
      return "<nil>";
    case TokenKind::GTRef:
      return "<gt>";
  }
  return "<?>";
}

}  // namespace tabletrie
