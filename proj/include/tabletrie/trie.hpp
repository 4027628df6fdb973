#pragma once

#include <cassert>
#include <cstdint>
#include <deque>
#include <memory>
#include <vector>

#include "tabletrie/token.hpp"

namespace tabletrie {

enum class TrieCategory : uint8_t { Subgoal, Answer, Global };

enum class AnswerCode : uint8_t {
  None,
  DoSimple,
  DoCompound,
  TrySimple,
  TryCompound,
  RetrySimple,
  RetryCompound,
  TrustSimple,
  TrustCompound,
};

struct TrieNode;

/// Hash index over one node's children, created once the sibling list grows
/// past the threshold. Chains run through TrieNode::sibling.
struct SiblingIndex {
  std::vector<TrieNode*> buckets;
  size_t entries = 0;
};

struct TrieNode {
  Token token;
  TrieNode* parent = nullptr;
  TrieNode* sibling = nullptr;
  TrieNode* child = nullptr;            // head of the child list; unused once indexed
  std::unique_ptr<SiblingIndex> index;  // non-null iff children are hash-indexed
  uint64_t refcount = 0;                // global-trie leaves: references to this path
  AnswerCode code = AnswerCode::None;   // answer tries only
  bool is_answer = false;               // answer tries: an answer ends here

  bool has_children() const { return child != nullptr || index != nullptr; }
};

struct TrieCounts {
  uint64_t nodes = 0;  // root excluded
  uint64_t hash_buckets = 0;
  uint64_t max_depth = 0;
};

/// Node store with first-child / parent / next-sibling linking. New children
/// go to the head of the sibling list; crossing the threshold promotes the
/// list to a SiblingIndex, which changes lookup only, never the trie shape.
class Trie {
public:
  static constexpr size_t kDefaultHashThreshold = 8;
  static constexpr size_t kNoHashing = static_cast<size_t>(-1);
  static constexpr size_t kInitialBuckets = 8;
  static constexpr size_t kMaxLoadFactor = 4;  // expand when entries > 4 * buckets

  explicit Trie(TrieCategory category, size_t hash_threshold = kDefaultHashThreshold);
  Trie(const Trie&) = delete;
  Trie& operator=(const Trie&) = delete;

  TrieCategory category() const { return category_; }
  size_t hash_threshold() const { return hash_threshold_; }
  TrieNode* root() { return &root_; }
  const TrieNode* root() const { return &root_; }

  /// Returns the child of `parent` labelled `tok`, creating it if absent.
  TrieNode* check_insert(TrieNode* parent, const Token& tok, bool* created = nullptr);
  TrieNode* find(const TrieNode* parent, const Token& tok) const;

  size_t child_count(const TrieNode* n) const;
  TrieNode* first_child(const TrieNode* n) const;
  /// Next child of `parent` after `n` in iteration order (list order, or
  /// bucket-by-bucket once indexed). Null past the last child.
  TrieNode* next_in_group(const TrieNode* parent, const TrieNode* n) const;

  /// Tokens from root (exclusive) to `leaf` (inclusive), top-down.
  static std::vector<Token> path_tokens(const TrieNode* leaf);

  /// Exact counts by full walk; nodes excludes the root.
  TrieCounts counts() const;

  template <class F>
  void for_each_child(const TrieNode* n, F&& f) const {
    if (n->index) {
      for (TrieNode* head : n->index->buckets)
        for (TrieNode* c = head; c; c = c->sibling) f(c);
    } else {
      for (TrieNode* c = n->child; c; c = c->sibling) f(c);
    }
  }

  /// Preorder walk over every node below the root.
  template <class F>
  void for_each_node(F&& f) const {
    std::vector<const TrieNode*> stack;
    push_children(&root_, stack);
    while (!stack.empty()) {
      const TrieNode* n = stack.back();
      stack.pop_back();
      f(n);
      push_children(n, stack);
    }
  }

  /// Unlinks a childless node from its parent and recycles it. Empties the
  /// parent's SiblingIndex when the last child goes.
  void remove_child(TrieNode* parent, TrieNode* node);

  void clear();

private:
  TrieNode* allocate(const Token& tok, TrieNode* parent);
  void recycle(TrieNode* n);
  void promote(TrieNode* parent);
  void expand(SiblingIndex& idx);
  static size_t bucket_of(const SiblingIndex& idx, const Token& tok);
  static void push_children(const TrieNode* n, std::vector<const TrieNode*>& stack);

  TrieCategory category_;
  size_t hash_threshold_;
  TrieNode root_;
  std::deque<TrieNode> arena_;
  std::vector<TrieNode*> free_;
};

}  // namespace tabletrie
