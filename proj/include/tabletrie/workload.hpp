#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "tabletrie/term.hpp"

namespace tabletrie {

enum class Table1Kind : uint8_t { Int, Atom, F1, F2, F4, F6, List1, List2, List4 };

const char* table1_kind_name(Table1Kind k);
Table1Kind parse_table1_kind(const std::string& s);

struct WorkloadSpec {
  enum class Family : uint8_t { Table1, Table2, FactFile, Random };

  Family family = Family::Table1;
  Table1Kind kind = Table1Kind::Int;  // table1
  uint32_t outer_arity = 0;           // table2: f/<a>
  uint32_t inner_arity = 0;           // table2: g/<b>
  uint64_t n = 0;                     // term count (0 = family default)
  uint64_t seed = 0;                  // random
  std::string path;                   // factfile
  bool all_pairs = false;             // table1: all two-variable position pairs

  /// Parses "table1:<kind>", "table2:f<a>.g<b>", "factfile:<path>",
  /// "random:<seed>".
  static WorkloadSpec parse(const std::string& s);
  std::string str() const;
  uint64_t effective_n() const;  // n, or the family's default scale
};

/// One tabled call and the answers stored for it, both pre-standardization.
struct TabledCall {
  std::string predicate;
  std::vector<Term> args;
  std::vector<std::vector<Term>> answers;  // substitution tuples
};

struct Workload {
  std::string name;
  uint64_t n = 0;
  std::vector<TabledCall> calls;

  uint64_t total_answer_inserts() const;
};

Workload generate(const WorkloadSpec& spec);

/// t/5 over n facts of one term kind: five one-variable calls (the variable
/// at each position, the rest fixed to the first fact) and the two-variable
/// calls over adjacent position pairs (all pairs when requested). Each call's
/// answers enumerate the facts for its free positions.
Workload gen_table1(Table1Kind kind, uint64_t n, bool all_pairs = false);

/// t/1 over n facts f(g(i,..,i), ..., g(i,..,i)) with `a` copies of the same
/// g/b subterm; a single free-variable call stores all n answers.
Workload gen_table2(uint32_t a, uint32_t b, uint64_t n);

/// Deterministic per seed: a handful of calls with random argument terms,
/// and n answer tuples of random terms (depth <= 4, arity <= 4) spread
/// round-robin over the calls.
Workload gen_random(uint64_t seed, uint64_t n);

/// term/1 facts driving a single one-free-variable call.
Workload from_fact_file(const std::string& path);

struct RandomTermOptions {
  int max_depth = 4;
  uint32_t max_arity = 4;
  bool allow_vars = true;
};

Term random_term(std::mt19937_64& rng, const RandomTermOptions& opt);

}  // namespace tabletrie
