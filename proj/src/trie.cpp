#include "tabletrie/trie.hpp"

#include <algorithm>
#include <stdexcept>

namespace tabletrie {

Trie::Trie(TrieCategory category, size_t hash_threshold)
    : category_(category), hash_threshold_(hash_threshold) {
  root_.token = Token::root();
}

TrieNode* Trie::allocate(const Token& tok, TrieNode* parent) {
  TrieNode* n;
  if (!free_.empty()) {
    n = free_.back();
    free_.pop_back();
  } else {
    n = &arena_.emplace_back();
  }
  n->token = tok;
  n->parent = parent;
  n->sibling = nullptr;
  n->child = nullptr;
  n->refcount = 0;
  n->code = AnswerCode::None;
  n->is_answer = false;
  return n;
}

void Trie::recycle(TrieNode* n) {
  n->index.reset();
  n->parent = nullptr;
  n->sibling = nullptr;
  n->child = nullptr;
  n->refcount = 0;
  n->code = AnswerCode::None;
  n->is_answer = false;
  free_.push_back(n);
}

size_t Trie::bucket_of(const SiblingIndex& idx, const Token& tok) {
  return token_hash(tok) & (idx.buckets.size() - 1);
}

void Trie::promote(TrieNode* parent) {
  auto idx = std::make_unique<SiblingIndex>();
  idx->buckets.assign(kInitialBuckets, nullptr);
  TrieNode* n = parent->child;
  parent->child = nullptr;
  while (n) {
    TrieNode* next = n->sibling;
    size_t b = bucket_of(*idx, n->token);
    n->sibling = idx->buckets[b];
    idx->buckets[b] = n;
    ++idx->entries;
    n = next;
  }
  parent->index = std::move(idx);
}

void Trie::expand(SiblingIndex& idx) {
  std::vector<TrieNode*> all;
  all.reserve(idx.entries);
  for (TrieNode* head : idx.buckets)
    for (TrieNode* n = head; n;) {
      TrieNode* next = n->sibling;
      all.push_back(n);
      n = next;
    }
  idx.buckets.assign(idx.buckets.size() * 2, nullptr);
  for (TrieNode* n : all) {
    size_t b = bucket_of(idx, n->token);
    n->sibling = idx.buckets[b];
    idx.buckets[b] = n;
  }
}

TrieNode* Trie::check_insert(TrieNode* parent, const Token& tok, bool* created) {
  assert(parent != nullptr);
  if (parent->index) {
    SiblingIndex& idx = *parent->index;
    size_t b = bucket_of(idx, tok);
    for (TrieNode* n = idx.buckets[b]; n; n = n->sibling) {
      if (n->token == tok) {
        if (created) *created = false;
        return n;
      }
    }
    TrieNode* n = allocate(tok, parent);
    n->sibling = idx.buckets[b];
    idx.buckets[b] = n;
    ++idx.entries;
    if (idx.entries > kMaxLoadFactor * idx.buckets.size()) expand(idx);
    if (created) *created = true;
    return n;
  }

  size_t count = 0;
  for (TrieNode* n = parent->child; n; n = n->sibling) {
    if (n->token == tok) {
      if (created) *created = false;
      return n;
    }
    ++count;
  }
  TrieNode* n = allocate(tok, parent);
  n->sibling = parent->child;
  parent->child = n;
  if (count + 1 > hash_threshold_) promote(parent);
  if (created) *created = true;
  return n;
}

TrieNode* Trie::find(const TrieNode* parent, const Token& tok) const {
  if (parent->index) {
    const SiblingIndex& idx = *parent->index;
    for (TrieNode* n = idx.buckets[bucket_of(idx, tok)]; n; n = n->sibling)
      if (n->token == tok) return n;
    return nullptr;
  }
  for (TrieNode* n = parent->child; n; n = n->sibling)
    if (n->token == tok) return n;
  return nullptr;
}

size_t Trie::child_count(const TrieNode* n) const {
  if (n->index) return n->index->entries;
  size_t count = 0;
  for (TrieNode* c = n->child; c; c = c->sibling) ++count;
  return count;
}

TrieNode* Trie::first_child(const TrieNode* n) const {
  if (n->index) {
    for (TrieNode* head : n->index->buckets)
      if (head) return head;
    return nullptr;
  }
  return n->child;
}

TrieNode* Trie::next_in_group(const TrieNode* parent, const TrieNode* n) const {
  if (n->sibling) return n->sibling;
  if (!parent->index) return nullptr;
  const SiblingIndex& idx = *parent->index;
  for (size_t b = bucket_of(idx, n->token) + 1; b < idx.buckets.size(); ++b)
    if (idx.buckets[b]) return idx.buckets[b];
  return nullptr;
}

std::vector<Token> Trie::path_tokens(const TrieNode* leaf) {
  std::vector<Token> toks;
  for (const TrieNode* n = leaf; n && n->parent; n = n->parent)
    toks.push_back(n->token);
  std::reverse(toks.begin(), toks.end());
  return toks;
}

TrieCounts Trie::counts() const {
  TrieCounts c;
  if (root_.index) c.hash_buckets += root_.index->buckets.size();
  std::vector<std::pair<const TrieNode*, uint64_t>> stack;
  for_each_child(&root_, [&](const TrieNode* n) { stack.emplace_back(n, 1); });
  while (!stack.empty()) {
    auto [n, depth] = stack.back();
    stack.pop_back();
    ++c.nodes;
    c.max_depth = std::max(c.max_depth, depth);
    if (n->index) c.hash_buckets += n->index->buckets.size();
    for_each_child(n, [&](const TrieNode* ch) { stack.emplace_back(ch, depth + 1); });
  }
  return c;
}

void Trie::push_children(const TrieNode* n, std::vector<const TrieNode*>& stack) {
  if (n->index) {
    for (TrieNode* head : n->index->buckets)
      for (TrieNode* c = head; c; c = c->sibling) stack.push_back(c);
  } else {
    for (TrieNode* c = n->child; c; c = c->sibling) stack.push_back(c);
  }
}

void Trie::remove_child(TrieNode* parent, TrieNode* node) {
  assert(node->parent == parent);
  assert(!node->has_children());
  if (parent->index) {
    SiblingIndex& idx = *parent->index;
    size_t b = bucket_of(idx, node->token);
    TrieNode** link = &idx.buckets[b];
    while (*link && *link != node) link = &(*link)->sibling;
    if (!*link) throw std::logic_error("node missing from its hash bucket");
    *link = node->sibling;
    --idx.entries;
    if (idx.entries == 0) parent->index.reset();
  } else {
    TrieNode** link = &parent->child;
    while (*link && *link != node) link = &(*link)->sibling;
    if (!*link) throw std::logic_error("node missing from its sibling list");
    *link = node->sibling;
  }
  recycle(node);
}

void Trie::clear() {
  root_.child = nullptr;
  root_.index.reset();
  root_.is_answer = false;
  root_.code = AnswerCode::None;
  arena_.clear();
  free_.clear();
}

}  // namespace tabletrie
