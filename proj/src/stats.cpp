#include "tabletrie/stats.hpp"

#include <sstream>
#include <unordered_map>

namespace tabletrie {

MemoryReport snapshot(const TableSpace& store, uint32_t word_bytes) {
  MemoryReport r;
  r.word_bytes = word_bytes;
  for (const TableEntry* te : store.tables()) {
    TrieCounts sc = te->subgoal_trie.counts();
    r.nodes_subgoal += sc.nodes;
    r.hash_buckets += sc.hash_buckets;
    for (const SubgoalFrame* sf : te->frame_order) {
      TrieCounts ac = sf->answer_trie.counts();
      r.nodes_answer += ac.nodes;
      r.hash_buckets += ac.hash_buckets;
    }
  }
  if (const GlobalTrie* gt = store.global_trie()) {
    TrieCounts gc = gt->trie().counts();
    r.nodes_gt += gc.nodes;
    r.hash_buckets += gc.hash_buckets;
  }
  // 4 fields per subgoal/GT node, 5 per answer node, 1 word per bucket
  r.bytes_subgoal = r.nodes_subgoal * 4 * word_bytes;
  r.bytes_answer = r.nodes_answer * 5 * word_bytes;
  r.bytes_gt = r.nodes_gt * 4 * word_bytes;
  r.bytes_hash = r.hash_buckets * word_bytes;
  r.bytes_total = r.bytes_subgoal + r.bytes_answer + r.bytes_gt + r.bytes_hash;
  return r;
}

ConservationReport check_refcount_conservation(const TableSpace& store) {
  const GlobalTrie* gt = store.global_trie();
  if (!gt) return {};

  std::unordered_map<const TrieNode*, uint64_t> refs;
  auto scan = [&refs](const Trie& trie) {
    trie.for_each_node([&refs](const TrieNode* n) {
      if (n->token.kind == TokenKind::GTRef) ++refs[n->token.gt_leaf()];
    });
  };
  for (const TableEntry* te : store.tables()) {
    scan(te->subgoal_trie);
    for (const SubgoalFrame* sf : te->frame_order) scan(sf->answer_trie);
  }
  scan(gt->trie());

  ConservationReport rep;
  uint64_t leaf_total = 0;
  uint64_t ref_total = 0;
  for (const auto& [leaf, count] : refs) ref_total += count;

  gt->trie().for_each_node([&](const TrieNode* n) {
    if (!rep.ok) return;
    if (n->has_children()) {
      if (n->refcount != 0) {
        rep.ok = false;
        rep.detail = "interior global-trie node carries a refcount";
      }
      return;
    }
    leaf_total += n->refcount;
    auto it = refs.find(n);
    uint64_t counted = it == refs.end() ? 0 : it->second;
    if (n->refcount != counted) {
      std::ostringstream os;
      os << "leaf refcount " << n->refcount << " vs " << counted
         << " referencing tokens";
      rep.ok = false;
      rep.detail = os.str();
    }
  });

  if (rep.ok && leaf_total != ref_total) {
    std::ostringstream os;
    os << "refcount sum " << leaf_total << " vs " << ref_total << " GT-reference tokens";
    rep.ok = false;
    rep.detail = os.str();
  }
  return rep;
}

}  // namespace tabletrie
