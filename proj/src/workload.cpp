#include "tabletrie/workload.hpp"

#include <cstdio>
#include <iostream>
#include <stdexcept>

namespace tabletrie {

const char* table1_kind_name(Table1Kind k) {
  switch (k) {
    case Table1Kind::Int: return "int";
    case Table1Kind::Atom: return "atom";
    case Table1Kind::F1: return "f/1";
    case Table1Kind::F2: return "f/2";
    case Table1Kind::F4: return "f/4";
    case Table1Kind::F6: return "f/6";
    case Table1Kind::List1: return "list1";
    case Table1Kind::List2: return "list2";
    case Table1Kind::List4: return "list4";
  }
  return "?";
}

Table1Kind parse_table1_kind(const std::string& s) {
  if (s == "int") return Table1Kind::Int;
  if (s == "atom") return Table1Kind::Atom;
  if (s == "f/1") return Table1Kind::F1;
  if (s == "f/2") return Table1Kind::F2;
  if (s == "f/4") return Table1Kind::F4;
  if (s == "f/6") return Table1Kind::F6;
  if (s == "list1") return Table1Kind::List1;
  if (s == "list2") return Table1Kind::List2;
  if (s == "list4") return Table1Kind::List4;
  throw std::invalid_argument("unknown term kind: " + s);
}

WorkloadSpec WorkloadSpec::parse(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("workload must look like family:<param>: " + s);
  std::string family = s.substr(0, colon);
  std::string rest = s.substr(colon + 1);
  WorkloadSpec spec;
  if (family == "table1") {
    spec.family = Family::Table1;
    spec.kind = parse_table1_kind(rest);
  } else if (family == "table2") {
    spec.family = Family::Table2;
    unsigned a = 0, b = 0;
    int consumed = 0;
    if (std::sscanf(rest.c_str(), "f%u.g%u%n", &a, &b, &consumed) != 2 ||
        consumed != static_cast<int>(rest.size()) || a == 0 || b == 0)
      throw std::invalid_argument("table2 workload must look like table2:f<a>.g<b>: " + s);
    spec.outer_arity = a;
    spec.inner_arity = b;
  } else if (family == "factfile") {
    spec.family = Family::FactFile;
    spec.path = rest;
  } else if (family == "random") {
    spec.family = Family::Random;
    try {
      spec.seed = std::stoull(rest);
    } catch (const std::exception&) {
      throw std::invalid_argument("random workload needs a numeric seed: " + s);
    }
  } else {
    throw std::invalid_argument("unknown workload family: " + family);
  }
  return spec;
}

std::string WorkloadSpec::str() const {
  switch (family) {
    case Family::Table1:
      return std::string("table1:") + table1_kind_name(kind);
    case Family::Table2:
      return "table2:f" + std::to_string(outer_arity) + ".g" + std::to_string(inner_arity);
    case Family::FactFile:
      return "factfile:" + path;
    case Family::Random:
      return "random:" + std::to_string(seed);
  }
  return "?";
}

uint64_t WorkloadSpec::effective_n() const {
  if (n > 0) return n;
  switch (family) {
    case Family::Table2:
      return 50'000;
    case Family::Table1:
    case Family::Random:
      return 100;
    case Family::FactFile:
      return 0;  // the file decides
  }
  return 100;
}

uint64_t Workload::total_answer_inserts() const {
  uint64_t total = 0;
  for (const TabledCall& c : calls) total += c.answers.size();
  return total;
}

namespace {

Term table1_term(Table1Kind kind, uint64_t i) {
  auto n_copies = [&](uint32_t k) {
    return std::vector<Term>(k, Term::integer(static_cast<int64_t>(i)));
  };
  switch (kind) {
    case Table1Kind::Int: return Term::integer(static_cast<int64_t>(i));
    case Table1Kind::Atom: return Term::atom("a" + std::to_string(i));
    case Table1Kind::F1: return Term::compound("f", n_copies(1));
    case Table1Kind::F2: return Term::compound("f", n_copies(2));
    case Table1Kind::F4: return Term::compound("f", n_copies(4));
    case Table1Kind::F6: return Term::compound("f", n_copies(6));
    case Table1Kind::List1: return Term::list(n_copies(1));
    case Table1Kind::List2: return Term::list(n_copies(2));
    case Table1Kind::List4: return Term::list(n_copies(4));
  }
  throw std::invalid_argument("unknown term kind");
}

}  // namespace

Workload gen_table1(Table1Kind kind, uint64_t n, bool all_pairs) {
  if (n < 1) throw std::invalid_argument("table1 needs n >= 1");
  Workload w;
  w.name = std::string("table1:") + table1_kind_name(kind);
  w.n = n;

  std::vector<Term> facts;
  facts.reserve(n);
  for (uint64_t i = 1; i <= n; ++i) facts.push_back(table1_term(kind, i));
  const Term fixed = facts.front();
  const Term var_a = Term::var("A");
  const Term var_b = Term::var("B");
  constexpr uint32_t kArity = 5;

  auto add_one_var = [&](uint32_t p) {
    TabledCall call;
    call.predicate = "t";
    call.args.assign(kArity, fixed);
    call.args[p] = var_a;
    call.answers.reserve(n);
    for (const Term& f : facts) call.answers.push_back({f});
    w.calls.push_back(std::move(call));
  };
  auto add_two_var = [&](uint32_t p, uint32_t q) {
    TabledCall call;
    call.predicate = "t";
    call.args.assign(kArity, fixed);
    call.args[p] = var_a;
    call.args[q] = var_b;
    call.answers.reserve(n * n);
    for (const Term& fi : facts)
      for (const Term& fj : facts) call.answers.push_back({fi, fj});
    w.calls.push_back(std::move(call));
  };

  for (uint32_t p = 0; p < kArity; ++p) add_one_var(p);
  if (all_pairs) {
    for (uint32_t p = 0; p < kArity; ++p)
      for (uint32_t q = p + 1; q < kArity; ++q) add_two_var(p, q);
  } else {
    for (uint32_t p = 0; p + 1 < kArity; ++p) add_two_var(p, p + 1);
  }
  return w;
}

Workload gen_table2(uint32_t a, uint32_t b, uint64_t n) {
  if (a < 1 || b < 1 || n < 1)
    throw std::invalid_argument("table2 needs a, b, n >= 1");
  if (a > 3 || b > 5 || b % 2 == 0)
    std::cerr << "warning: table2 f" << a << ".g" << b
              << " is outside the usual a in 1..3, b in {1,3,5} grid\n";

  Workload w;
  w.name = "table2:f" + std::to_string(a) + ".g" + std::to_string(b);
  w.n = n;

  TabledCall call;
  call.predicate = "t";
  call.args = {Term::var("A")};
  call.answers.reserve(n);
  for (uint64_t i = 1; i <= n; ++i) {
    Term inner = Term::compound("g", std::vector<Term>(b, Term::integer(static_cast<int64_t>(i))));
    Term fact = Term::compound("f", std::vector<Term>(a, inner));
    call.answers.push_back({std::move(fact)});
  }
  w.calls.push_back(std::move(call));
  return w;
}

Term random_term(std::mt19937_64& rng, const RandomTermOptions& opt) {
  // small constant pools so random workloads actually share structure
  static const char* kAtoms[] = {"a", "b", "c", "d", "e"};
  static const char* kVars[] = {"X", "Y", "Z"};
  static const char* kFunctors[] = {"f", "g", "h"};

  const bool leaf_only = opt.max_depth <= 0;
  uint64_t roll = rng() % 100;
  if (leaf_only || roll < 45) {
    uint64_t pick = rng() % (opt.allow_vars ? 3 : 2);
    switch (pick) {
      case 0: return Term::integer(static_cast<int64_t>(rng() % 30));
      case 1: return Term::atom(kAtoms[rng() % 5]);
      default: return Term::var(kVars[rng() % 3]);
    }
  }
  RandomTermOptions inner = opt;
  inner.max_depth = opt.max_depth - 1;
  if (roll < 80) {
    uint32_t arity = 1 + static_cast<uint32_t>(rng() % opt.max_arity);
    std::vector<Term> args;
    args.reserve(arity);
    for (uint32_t i = 0; i < arity; ++i) args.push_back(random_term(rng, inner));
    return Term::compound(kFunctors[rng() % 3], std::move(args));
  }
  uint32_t len = static_cast<uint32_t>(rng() % (opt.max_arity + 1));
  std::vector<Term> elems;
  elems.reserve(len);
  for (uint32_t i = 0; i < len; ++i) elems.push_back(random_term(rng, inner));
  return Term::list(std::move(elems));
}

Workload gen_random(uint64_t seed, uint64_t n) {
  if (n < 1) throw std::invalid_argument("random workload needs n >= 1");
  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  Workload w;
  w.name = "random:" + std::to_string(seed);
  w.n = n;

  RandomTermOptions arg_opt;   // call arguments may hold variables
  RandomTermOptions ans_opt;
  uint64_t num_calls = 1 + rng() % 4;
  for (uint64_t c = 0; c < num_calls; ++c) {
    TabledCall call;
    uint32_t arity = 1 + static_cast<uint32_t>(rng() % 3);
    // one predicate per arity keeps every call of a table the same shape
    call.predicate = "t" + std::to_string(arity);
    for (uint32_t i = 0; i < arity; ++i) {
      arg_opt.max_depth = 1 + static_cast<int>(rng() % 3);
      call.args.push_back(random_term(rng, arg_opt));
    }
    w.calls.push_back(std::move(call));
  }

  // answer tuples are sized by each call's free-variable count
  std::vector<uint32_t> free_vars;
  for (const auto& call : w.calls)
    free_vars.push_back(standardize(call.args).second);

  for (uint64_t i = 0; i < n; ++i) {
    size_t idx = i % w.calls.size();
    std::vector<Term> tuple;
    tuple.reserve(free_vars[idx]);
    for (uint32_t v = 0; v < free_vars[idx]; ++v) {
      ans_opt.max_depth = 1 + static_cast<int>(rng() % 4);
      tuple.push_back(random_term(rng, ans_opt));
    }
    w.calls[idx].answers.push_back(std::move(tuple));
  }
  return w;
}

Workload from_fact_file(const std::string& path) {
  Workload w;
  w.name = "factfile:" + path;
  TabledCall call;
  call.predicate = "t";
  call.args = {Term::var("A")};
  for (Term& t : read_fact_file(path)) call.answers.push_back({std::move(t)});
  w.n = call.answers.size();
  w.calls.push_back(std::move(call));
  return w;
}

Workload generate(const WorkloadSpec& spec) {
  switch (spec.family) {
    case WorkloadSpec::Family::Table1:
      return gen_table1(spec.kind, spec.effective_n(), spec.all_pairs);
    case WorkloadSpec::Family::Table2:
      return gen_table2(spec.outer_arity, spec.inner_arity, spec.effective_n());
    case WorkloadSpec::Family::FactFile:
      return from_fact_file(spec.path);
    case WorkloadSpec::Family::Random:
      return gen_random(spec.seed, spec.effective_n());
  }
  throw std::invalid_argument("unknown workload family");
}

}  // namespace tabletrie
