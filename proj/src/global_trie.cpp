#include "tabletrie/global_trie.hpp"

#include <stdexcept>

namespace tabletrie {

GlobalTrie::GlobalTrie(GtMode mode, size_t hash_threshold)
    : mode_(mode), trie_(TrieCategory::Global, hash_threshold) {}

TrieNode* GlobalTrie::check_insert(const Term& t) {
  if (t.is_simple())
    throw std::invalid_argument("the global trie holds compound terms only");
  TrieNode* leaf = mode_ == GtMode::Terms ? insert_flat(t) : insert_spine(t);
  ++leaf->refcount;
  return leaf;
}

TrieNode* GlobalTrie::insert_flat(const Term& t) {
  std::vector<Token> toks;
  tokenize(t, toks);
  TrieNode* n = trie_.root();
  for (const Token& tok : toks) n = trie_.check_insert(n, tok);
  return n;
}

// Lays the term out as its own path from the root. Compound arguments are
// interned first and referenced; lists stay inline in the owning path.
TrieNode* GlobalTrie::insert_spine(const Term& t) {
  TrieNode* n = trie_.root();
  if (t.kind() == Term::Kind::Compound) {
    n = trie_.check_insert(n, Token::functor(t.symbol(), t.arity()));
    for (const Term& a : t.args()) n = insert_arg(n, a);
  } else {
    for (const Term& a : t.args()) {
      n = trie_.check_insert(n, Token::list_cell());
      n = insert_arg(n, a);
    }
    n = trie_.check_insert(n, Token::nil());
  }
  return n;
}

TrieNode* GlobalTrie::insert_arg(TrieNode* at, const Term& t) {
  if (t.is_simple()) return trie_.check_insert(at, simple_token(t));
  if (t.kind() == Term::Kind::List) {
    TrieNode* n = at;
    for (const Term& a : t.args()) {
      n = trie_.check_insert(n, Token::list_cell());
      n = insert_arg(n, a);
    }
    return trie_.check_insert(n, Token::nil());
  }
  // compound subterm: suspend, intern it as a distinct path, resume with a
  // node referencing its leaf
  TrieNode* sub = insert_spine(t);
  ++sub->refcount;
  bool created = false;
  TrieNode* n = trie_.check_insert(at, Token::gt_ref(sub), &created);
  if (!created) release(sub);  // the existing node already holds a reference
  return n;
}

Term GlobalTrie::load(const TrieNode* leaf) const {
  if (!leaf || leaf->refcount == 0)
    throw std::logic_error("dangling global-trie reference");
  std::vector<Token> toks = Trie::path_tokens(leaf);
  size_t pos = 0;
  Term t = decode_term(std::span<const Token>(toks), pos,
                       [this](const TrieNode* l) { return load(l); });
  if (pos != toks.size())
    throw std::logic_error("trailing tokens on global-trie path");
  return t;
}

void GlobalTrie::release(TrieNode* leaf) {
  if (!leaf || leaf->refcount == 0)
    throw std::logic_error("release of an unreferenced global-trie path");
  if (--leaf->refcount > 0) return;

  // Unlink first, cascade after: releasing mid-walk could delete ancestors
  // of this very path when a subterm shares its prefix.
  std::vector<TrieNode*> targets;
  TrieNode* node = leaf;
  while (node != trie_.root() && !node->has_children() && node->refcount == 0) {
    TrieNode* parent = node->parent;
    if (node->token.kind == TokenKind::GTRef)
      targets.push_back(node->token.gt_leaf());
    trie_.remove_child(parent, node);
    node = parent;
  }
  for (TrieNode* target : targets) release(target);
}

}  // namespace tabletrie
