#pragma once

#include <cstdint>

#include "tabletrie/term.hpp"
#include "tabletrie/trie.hpp"

namespace tabletrie {

enum class GtMode : uint8_t {
  Terms,     // whole argument/substitution terms as flat token paths
  Subterms,  // compound subterms interned as their own paths, held by reference
};

/// Shared trie interning compound terms once. Leaves carry a reference count;
/// a path lives exactly as long as tokens reference its leaf.
class GlobalTrie {
public:
  explicit GlobalTrie(GtMode mode, size_t hash_threshold = Trie::kDefaultHashThreshold);

  GtMode mode() const { return mode_; }
  Trie& trie() { return trie_; }
  const Trie& trie() const { return trie_; }

  /// Interns a standardized non-simple term and returns its path leaf with
  /// one fresh reference. The caller either stores the leaf in a GTRef token
  /// or gives the reference back via release().
  TrieNode* check_insert(const Term& t);

  /// Rebuilds the term a leaf stands for, loading referenced subterms
  /// through their own leaves.
  Term load(const TrieNode* leaf) const;

  /// Drops one reference. At zero the path is deleted bottom-up until a node
  /// with other children (or the root) is reached; every GTRef node removed
  /// on the way releases its target in turn.
  void release(TrieNode* leaf);

private:
  TrieNode* insert_flat(const Term& t);
  TrieNode* insert_spine(const Term& t);
  TrieNode* insert_arg(TrieNode* at, const Term& t);

  GtMode mode_;
  Trie trie_;
};

}  // namespace tabletrie
