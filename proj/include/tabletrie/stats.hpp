#pragma once

#include <cstdint>
#include <string>

#include "tabletrie/table_space.hpp"
#include "tabletrie/workload.hpp"

namespace tabletrie {

/// Exact per-category node counts plus a byte model: 4 words per subgoal/GT
/// node, 5 per answer node (code field), 1 word per hash bucket.
struct MemoryReport {
  uint64_t nodes_subgoal = 0;
  uint64_t nodes_answer = 0;
  uint64_t nodes_gt = 0;
  uint64_t hash_buckets = 0;
  uint32_t word_bytes = 8;
  uint64_t bytes_subgoal = 0;
  uint64_t bytes_answer = 0;
  uint64_t bytes_gt = 0;
  uint64_t bytes_hash = 0;
  uint64_t bytes_total = 0;

  uint64_t total_nodes() const { return nodes_subgoal + nodes_answer + nodes_gt; }
};

/// Full walk over every trie in the store. Requires a quiescent store.
MemoryReport snapshot(const TableSpace& store, uint32_t word_bytes = 8);

/// Expected node counts from a reference model that never touches the trie
/// code: distinct (state, token) transitions per trie, with each design's
/// interning rules applied to plain token sequences.
struct OracleCount {
  uint64_t nodes_subgoal = 0;
  uint64_t nodes_answer = 0;
  uint64_t nodes_gt = 0;
};

OracleCount oracle_counts(const Workload& w, Design design);

struct ConservationReport {
  bool ok = true;
  std::string detail;
};

/// Verifies that every global-trie leaf's refcount equals the number of
/// GTRef tokens referencing it, across the subgoal tries, answer tries and
/// the GT itself, and that no interior GT node carries a refcount.
ConservationReport check_refcount_conservation(const TableSpace& store);

}  // namespace tabletrie
