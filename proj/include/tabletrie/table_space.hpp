#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tabletrie/global_trie.hpp"
#include "tabletrie/term.hpp"
#include "tabletrie/trie.hpp"

namespace tabletrie {

enum class Design : uint8_t { Original, GtTerms, GtSubterms };

const char* design_name(Design d);      // "original" / "gt-t" / "gt-st"
Design parse_design(const std::string& s);

/// Per-call record: the answer trie plus the chronological order of its
/// answers. free_var_count is the call's distinct-variable count; in the GT
/// designs every answer path has exactly that many nodes.
struct SubgoalFrame {
  explicit SubgoalFrame(size_t hash_threshold)
      : answer_trie(TrieCategory::Answer, hash_threshold) {}

  Trie answer_trie;
  std::vector<const TrieNode*> answer_order;
  uint32_t free_var_count = 0;
  bool compiled = false;
  TrieNode* leaf = nullptr;  // anchor in the subgoal trie
};

struct TableEntry {
  TableEntry(SymbolId predicate, uint32_t arity, Design design, size_t hash_threshold)
      : predicate(predicate),
        arity(arity),
        design(design),
        subgoal_trie(TrieCategory::Subgoal, hash_threshold) {}

  SymbolId predicate;
  uint32_t arity;
  Design design;
  Trie subgoal_trie;
  std::unordered_map<const TrieNode*, std::unique_ptr<SubgoalFrame>> frames;
  std::vector<SubgoalFrame*> frame_order;  // creation order, for deterministic walks
};

/// The table space under one design: table entries, subgoal tries, subgoal
/// frames, answer tries and (in the GT designs) one shared global trie.
/// Single writer; snapshots and loads require a quiescent store.
class TableSpace {
public:
  explicit TableSpace(Design design, size_t hash_threshold = Trie::kDefaultHashThreshold);

  Design design() const { return design_; }
  size_t hash_threshold() const { return hash_threshold_; }
  GlobalTrie* global_trie() { return gt_.get(); }
  const GlobalTrie* global_trie() const { return gt_.get(); }

  /// Idempotent per (name, arity). The design argument must match the
  /// store's design; a mismatch on re-lookup (or creation) throws.
  TableEntry& table_entry(SymbolId name, uint32_t arity, Design design);
  TableEntry& table_entry(SymbolId name, uint32_t arity) {
    return table_entry(name, arity, design_);
  }

  const std::vector<TableEntry*>& tables() const { return table_order_; }

  /// Inserts a standardized call into the subgoal trie. Returns the frame
  /// anchored at the path's leaf and whether it is new.
  std::pair<SubgoalFrame*, bool> subgoal_check_insert(TableEntry& te,
                                                      const CallSignature& call);

  /// Inserts one answer's substitution tuple (standardized per answer).
  /// Repeated answers return new=false and allocate nothing.
  std::pair<const TrieNode*, bool> answer_check_insert(SubgoalFrame& sf,
                                                       const std::vector<Term>& subs);

  /// Yields every stored answer in chronological order, walking each answer
  /// path bottom-up and materializing GT references.
  template <class F>
  void for_each_answer_bottom_up(const SubgoalFrame& sf, F&& f) const {
    for (const TrieNode* leaf : sf.answer_order) f(decode_answer(sf, leaf));
  }
  std::vector<std::vector<Term>> load_answers_bottom_up(const SubgoalFrame& sf) const;

  /// Sets every answer-trie node's code: do for single children, otherwise
  /// try / retry... / trust over the sibling group, with the _compound
  /// variant on structure-opening and GT-reference tokens. Idempotent.
  void compile_answer_trie(SubgoalFrame& sf);

  /// Top-down traversal driven by the code fields with an explicit
  /// choice-point stack. Yields the same answer set as the bottom-up loader,
  /// in trie order. Requires a compiled frame.
  template <class F>
  void for_each_answer_compiled(const SubgoalFrame& sf, F&& f) const {
    if (!sf.compiled) throw std::logic_error("answer trie not compiled");
    const Trie& trie = sf.answer_trie;
    const TrieNode* root = trie.root();
    if (root->is_answer) f(std::vector<Term>{});  // zero free variables
    const TrieNode* cur = trie.first_child(root);
    if (!cur) return;
    std::vector<const TrieNode*> choice_points;
    for (;;) {
      switch (cur->code) {
        case AnswerCode::DoSimple:
        case AnswerCode::DoCompound:
          break;
        case AnswerCode::TrySimple:
        case AnswerCode::TryCompound:
          choice_points.push_back(trie.next_in_group(cur->parent, cur));
          break;
        case AnswerCode::RetrySimple:
        case AnswerCode::RetryCompound:
          if (choice_points.empty())
            throw std::logic_error("retry without a choice point");
          choice_points.back() = trie.next_in_group(cur->parent, cur);
          break;
        case AnswerCode::TrustSimple:
        case AnswerCode::TrustCompound:
          if (choice_points.empty())
            throw std::logic_error("trust without a choice point");
          choice_points.pop_back();
          break;
        case AnswerCode::None:
          throw std::logic_error("answer-trie node without code");
      }
      if (!cur->has_children()) {
        f(decode_answer(sf, cur));
        if (choice_points.empty()) return;
        cur = choice_points.back();
      } else {
        cur = trie.first_child(cur);
      }
    }
  }
  std::vector<std::vector<Term>> load_answers_compiled(const SubgoalFrame& sf) const;

  /// Frees the table's subgoal and answer tries; every GTRef token seen on
  /// the way releases its global-trie path. The entry survives, empty.
  void abolish_table(TableEntry& te);
  void abolish_all();

  /// Substitution tuple stored at one answer leaf.
  std::vector<Term> decode_answer(const SubgoalFrame& sf, const TrieNode* leaf) const;

private:
  TrieNode* insert_term_nodes(Trie& trie, TrieNode* at, const Term& t);

  Design design_;
  size_t hash_threshold_;
  std::unique_ptr<GlobalTrie> gt_;
  std::map<std::pair<SymbolId, uint32_t>, std::unique_ptr<TableEntry>> tables_;
  std::vector<TableEntry*> table_order_;
};

}  // namespace tabletrie
