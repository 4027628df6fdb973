#include "tabletrie/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>

#include "json.hpp"

namespace tabletrie {

LoadMode parse_load_mode(const std::string& s) {
  if (s == "bottomup") return LoadMode::BottomUp;
  if (s == "compiled") return LoadMode::Compiled;
  if (s == "both") return LoadMode::Both;
  throw std::invalid_argument("unknown load mode: " + s);
}

ReportFormat parse_report_format(const std::string& s) {
  if (s == "json") return ReportFormat::Json;
  if (s == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown report format: " + s);
}

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double median(std::vector<double> xs) {
  if (xs.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(xs.begin(), xs.end());
  size_t mid = xs.size() / 2;
  return xs.size() % 2 ? xs[mid] : (xs[mid - 1] + xs[mid]) / 2.0;
}

uint64_t tuple_hash(const std::vector<Term>& tuple) {
  uint64_t h = 0x2545f4914f6cdd1dULL + tuple.size();
  for (const Term& t : tuple) h = (h ^ t.hash()) * 0x100000001b3ULL;
  h ^= h >> 29;
  return h;
}

struct AnswerDigest {
  uint64_t count = 0;
  uint64_t seq_hash = 0xcbf29ce484222325ULL;  // order-sensitive
  uint64_t set_hash = 0;                      // order-free (sum)

  void add(const std::vector<Term>& tuple) {
    ++count;
    uint64_t h = tuple_hash(tuple);
    seq_hash = (seq_hash ^ h) * 0x100000001b3ULL;
    set_hash += h;
  }
  bool same_sequence(const AnswerDigest& o) const {
    return count == o.count && seq_hash == o.seq_hash;
  }
  bool same_set(const AnswerDigest& o) const {
    return count == o.count && set_hash == o.set_hash;
  }
};

[[noreturn]] void fail_oracle(const MemoryReport& got, const OracleCount& want) {
  std::ostringstream os;
  os << "node counts diverge from the reference model:"
     << " subgoal " << got.nodes_subgoal << " vs " << want.nodes_subgoal
     << ", answer " << got.nodes_answer << " vs " << want.nodes_answer
     << ", gt " << got.nodes_gt << " vs " << want.nodes_gt;
  throw std::runtime_error(os.str());
}

}  // namespace

RunReport run(const RunOptions& opt, const Workload& workload) {
  RunReport report;
  report.design = design_name(opt.design);
  report.workload = workload.name;
  report.n = workload.n;
  report.runs = opt.runs;

  const bool want_bottomup = opt.load != LoadMode::Compiled;
  const bool want_compiled = opt.load != LoadMode::BottomUp;
  const bool verify_oracle =
      opt.force_verify_oracle ||
      workload.total_answer_inserts() <= kOracleAutoVerifyLimit;

  std::vector<double> store_times, bottomup_times, compiled_times;

  for (int pass = 0; pass < std::max(1, opt.runs); ++pass) {
    TableSpace store(opt.design, opt.hash_threshold);
    AnswerDigest inserted;

    auto t0 = Clock::now();
    std::vector<SubgoalFrame*> frames;
    for (const TabledCall& call : workload.calls) {
      CallSignature sig = make_call(call.predicate, call.args);
      TableEntry& te = store.table_entry(sig.predicate, sig.arity);
      auto [frame, fresh] = store.subgoal_check_insert(te, sig);
      if (fresh) frames.push_back(frame);
      for (const std::vector<Term>& tuple : call.answers) {
        auto [subs, var_count] = standardize(tuple);
        (void)var_count;
        auto [leaf, is_new] = store.answer_check_insert(*frame, subs);
        (void)leaf;
        if (is_new && pass == 0) inserted.add(subs);
      }
    }
    store_times.push_back(ms_since(t0));

    if (pass == 0) {
      report.mem = snapshot(store, opt.word_bytes);
      uint64_t stored = 0;
      for (const TableEntry* te : store.tables())
        for (const SubgoalFrame* sf : te->frame_order)
          stored += sf->answer_order.size();
      report.answers_total = stored;

      if (verify_oracle) {
        OracleCount want = oracle_counts(workload, opt.design);
        if (report.mem.nodes_subgoal != want.nodes_subgoal ||
            report.mem.nodes_answer != want.nodes_answer ||
            report.mem.nodes_gt != want.nodes_gt)
          fail_oracle(report.mem, want);
        report.oracle_verified = true;
      }
    }

    if (want_bottomup) {
      AnswerDigest loaded;
      auto t1 = Clock::now();
      for (SubgoalFrame* sf : frames)
        store.for_each_answer_bottom_up(
            *sf, [&](const std::vector<Term>& a) { loaded.add(a); });
      bottomup_times.push_back(ms_since(t1));
      if (pass == 0 && !loaded.same_sequence(inserted))
        throw std::runtime_error(
            "bottom-up loader lost the chronological answer sequence");
    }

    if (want_compiled) {
      for (SubgoalFrame* sf : frames) store.compile_answer_trie(*sf);
      AnswerDigest loaded;
      auto t2 = Clock::now();
      for (SubgoalFrame* sf : frames)
        store.for_each_answer_compiled(
            *sf, [&](const std::vector<Term>& a) { loaded.add(a); });
      compiled_times.push_back(ms_since(t2));
      if (pass == 0 && !loaded.same_set(inserted))
        throw std::runtime_error("compiled loader lost answers");
    }
  }

  report.store_ms = median(store_times);
  report.load_bottomup_ms = median(bottomup_times);
  report.load_compiled_ms = median(compiled_times);
  return report;
}

RunReport run(const RunOptions& opt) {
  Workload workload = generate(opt.spec);
  return run(opt, workload);
}

namespace {

nlohmann::ordered_json time_or_null(double ms) {
  if (std::isnan(ms)) return nullptr;
  return ms;
}

}  // namespace

std::string report_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["design"] = r.design;
  j["workload"] = r.workload;
  j["n"] = r.n;
  j["runs"] = r.runs;
  j["nodes"] = {{"subgoal", r.mem.nodes_subgoal},
                {"answer", r.mem.nodes_answer},
                {"gt", r.mem.nodes_gt},
                {"hash_buckets", r.mem.hash_buckets}};
  j["bytes_total"] = r.mem.bytes_total;
  j["answers_total"] = r.answers_total;
  j["times_ms"] = {{"store", time_or_null(r.store_ms)},
                   {"load_bottomup", time_or_null(r.load_bottomup_ms)},
                   {"load_compiled", time_or_null(r.load_compiled_ms)}};
  j["oracle_verified"] = r.oracle_verified;
  return j.dump(2) + "\n";
}

std::string report_csv_header() {
  return "design,workload,n,runs,nodes_subgoal,nodes_answer,nodes_gt,"
         "hash_buckets,bytes_total,answers_total,store_ms,load_bottomup_ms,"
         "load_compiled_ms,oracle_verified";
}

std::string report_csv_row(const RunReport& r) {
  auto time_field = [](double ms) {
    return std::isnan(ms) ? std::string() : std::to_string(ms);
  };
  std::ostringstream os;
  os << r.design << ',' << r.workload << ',' << r.n << ',' << r.runs << ','
     << r.mem.nodes_subgoal << ',' << r.mem.nodes_answer << ',' << r.mem.nodes_gt
     << ',' << r.mem.hash_buckets << ',' << r.mem.bytes_total << ','
     << r.answers_total << ',' << time_field(r.store_ms) << ','
     << time_field(r.load_bottomup_ms) << ',' << time_field(r.load_compiled_ms)
     << ',' << (r.oracle_verified ? "true" : "false");
  return os.str();
}

void write_report(const RunReport& r, const std::string& out_path, ReportFormat fmt) {
  std::string body = fmt == ReportFormat::Json
                         ? report_json(r)
                         : report_csv_header() + "\n" + report_csv_row(r) + "\n";
  if (out_path.empty() || out_path == "-") {
    std::cout << body;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file: " + out_path);
  out << body;
}

}  // namespace tabletrie
