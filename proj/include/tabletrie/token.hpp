#pragma once

#include <cstdint>
#include <string>

#include "tabletrie/symbol.hpp"

namespace tabletrie {

struct TrieNode;

enum class TokenKind : uint8_t {
  Root,      // reserved marker on trie roots, never produced by tokenize
  Atom,
  Int,
  Var,       // standardized variable index
  Functor,   // name/arity, opens a compound
  ListCell,  // opens one list element
  Nil,       // closes a list
  GTRef,     // reference to a global-trie leaf
};

/// One trie-edge label. Functor packs name and arity into the payload;
/// GTRef carries the leaf identity of an interned path, so GTRef equality
/// is leaf identity.
struct Token {
  TokenKind kind = TokenKind::Root;
  uint64_t payload = 0;

  static Token root() { return {}; }
  static Token atom(SymbolId s) { return {TokenKind::Atom, s}; }
  static Token integer(int64_t v) {
    return {TokenKind::Int, static_cast<uint64_t>(v)};
  }
  static Token var(uint32_t index) { return {TokenKind::Var, index}; }
  static Token functor(SymbolId name, uint32_t arity) {
    return {TokenKind::Functor, (static_cast<uint64_t>(name) << 32) | arity};
  }
  static Token list_cell() { return {TokenKind::ListCell, 0}; }
  static Token nil() { return {TokenKind::Nil, 0}; }
  static Token gt_ref(const TrieNode* leaf) {
    return {TokenKind::GTRef, reinterpret_cast<uint64_t>(leaf)};
  }

  SymbolId atom_symbol() const { return static_cast<SymbolId>(payload); }
  int64_t int_value() const { return static_cast<int64_t>(payload); }
  uint32_t var_index() const { return static_cast<uint32_t>(payload); }
  SymbolId functor_name() const { return static_cast<SymbolId>(payload >> 32); }
  uint32_t functor_arity() const { return static_cast<uint32_t>(payload); }
  TrieNode* gt_leaf() const {
    return reinterpret_cast<TrieNode*>(static_cast<uintptr_t>(payload));
  }

  friend bool operator==(const Token&, const Token&) = default;
};

/// 64-bit mix of kind and payload; feeds the sibling hash buckets.
uint64_t token_hash(const Token& t);

std::string to_string(const Token& t);

}  // namespace tabletrie
