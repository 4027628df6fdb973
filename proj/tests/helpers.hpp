#pragma once

#include <functional>
#include <unordered_map>
#include <vector>

#include "tabletrie/table_space.hpp"
#include "tabletrie/workload.hpp"

namespace tabletrie::testing {

struct StoredWorkload {
  std::vector<SubgoalFrame*> frames;
  std::unordered_map<const SubgoalFrame*, std::vector<std::vector<Term>>> inserted;
};

/// Replays a workload into a store, recording the per-frame insertion log.
/// `after_op` (when set) runs after every subgoal and answer insertion.
inline StoredWorkload store_workload(TableSpace& store, const Workload& w,
                                     const std::function<void()>& after_op = {}) {
  StoredWorkload out;
  for (const TabledCall& call : w.calls) {
    CallSignature sig = make_call(call.predicate, call.args);
    TableEntry& te = store.table_entry(sig.predicate, sig.arity);
    auto [frame, fresh] = store.subgoal_check_insert(te, sig);
    if (after_op) after_op();
    if (fresh) out.frames.push_back(frame);
    for (const std::vector<Term>& tuple : call.answers) {
      auto [subs, vc] = standardize(tuple);
      (void)vc;
      auto [leaf, is_new] = store.answer_check_insert(*frame, subs);
      (void)leaf;
      if (is_new) out.inserted[frame].push_back(std::move(subs));
      if (after_op) after_op();
    }
  }
  return out;
}

}  // namespace tabletrie::testing
