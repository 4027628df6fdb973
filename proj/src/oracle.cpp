#include <map>
#include <unordered_map>
#include <vector>

#include "tabletrie/stats.hpp"

// Reference node-count model. A trie's node count equals the number of
// distinct (state, token) transitions its token sequences induce, so each
// trie is modelled as a bare transition map with no node, sibling or hash
// machinery shared with the implementation under test.

namespace tabletrie {

namespace {

struct TransKey {
  uint32_t state;
  Token tok;
  bool operator==(const TransKey&) const = default;
};

struct TransKeyHash {
  size_t operator()(const TransKey& k) const {
    uint64_t h = token_hash(k.tok) ^ (static_cast<uint64_t>(k.state) * 0x9e3779b97f4a7c15ULL);
    h ^= h >> 33;
    return static_cast<size_t>(h);
  }
};

class TransitionCounter {
public:
  void run(std::span<const Token> toks) {
    uint32_t state = 0;
    for (const Token& tok : toks) {
      auto [it, inserted] = trans_.try_emplace(TransKey{state, tok}, next_);
      if (inserted) ++next_;
      state = it->second;
    }
  }
  uint64_t size() const { return trans_.size(); }

private:
  std::unordered_map<TransKey, uint32_t, TransKeyHash> trans_;
  uint32_t next_ = 1;
};

// Models the global trie: interned terms get stable ids that stand in for
// leaf references inside token sequences.
class GtModel {
public:
  explicit GtModel(bool subterms) : subterms_(subterms) {}

  Token ref_token(const Term& t) {
    return Token{TokenKind::GTRef, intern(t)};
  }

  uint64_t node_count() const { return counter_.size(); }

private:
  uint32_t intern(const Term& t) {
    auto it = ids_.find(t);
    if (it != ids_.end()) return it->second;
    std::vector<Token> seq;
    if (subterms_)
      spine_seq(t, seq);
    else
      tokenize(t, seq);
    counter_.run(seq);
    uint32_t id = static_cast<uint32_t>(ids_.size()) + 1;
    ids_.emplace(t, id);
    return id;
  }

  void spine_seq(const Term& t, std::vector<Token>& out) {
    if (t.kind() == Term::Kind::Compound) {
      out.push_back(Token::functor(t.symbol(), t.arity()));
      for (const Term& a : t.args()) arg_seq(a, out);
    } else {
      for (const Term& a : t.args()) {
        out.push_back(Token::list_cell());
        arg_seq(a, out);
      }
      out.push_back(Token::nil());
    }
  }

  void arg_seq(const Term& t, std::vector<Token>& out) {
    if (t.is_simple()) {
      out.push_back(simple_token(t));
    } else if (t.kind() == Term::Kind::List) {
      for (const Term& a : t.args()) {
        out.push_back(Token::list_cell());
        arg_seq(a, out);
      }
      out.push_back(Token::nil());
    } else {
      out.push_back(Token{TokenKind::GTRef, intern(t)});
    }
  }

  bool subterms_;
  TransitionCounter counter_;
  std::unordered_map<Term, uint32_t, TermHash> ids_;
};

struct CallKey {
  SymbolId predicate;
  std::vector<Term> args;
  bool operator==(const CallKey& o) const {
    return predicate == o.predicate && args == o.args;
  }
};

struct CallKeyHash {
  size_t operator()(const CallKey& k) const {
    uint64_t h = k.predicate * 0x9e3779b97f4a7c15ULL;
    for (const Term& t : k.args) h = (h ^ t.hash()) * 0x100000001b3ULL;
    return static_cast<size_t>(h);
  }
};

}  // namespace

OracleCount oracle_counts(const Workload& w, Design design) {
  GtModel gt(design == Design::GtSubterms);
  std::map<std::pair<SymbolId, uint32_t>, TransitionCounter> subgoal;
  std::unordered_map<CallKey, TransitionCounter, CallKeyHash> answers;

  auto term_tokens = [&](const Term& t, std::vector<Token>& seq) {
    if (design == Design::Original)
      tokenize(t, seq);
    else if (t.is_simple())
      seq.push_back(simple_token(t));
    else
      seq.push_back(gt.ref_token(t));
  };

  for (const TabledCall& call : w.calls) {
    CallSignature sig = make_call(call.predicate, call.args);
    std::vector<Token> seq;
    for (const Term& arg : sig.args) term_tokens(arg, seq);
    subgoal[{sig.predicate, sig.arity}].run(seq);

    TransitionCounter& ans = answers[CallKey{sig.predicate, sig.args}];
    for (const std::vector<Term>& tuple : call.answers) {
      auto [subs, var_count] = standardize(tuple);
      (void)var_count;
      std::vector<Token> aseq;
      for (const Term& t : subs) term_tokens(t, aseq);
      ans.run(aseq);
    }
  }

  OracleCount oc;
  for (const auto& [key, counter] : subgoal) oc.nodes_subgoal += counter.size();
  for (const auto& [key, counter] : answers) oc.nodes_answer += counter.size();
  oc.nodes_gt = design == Design::Original ? 0 : gt.node_count();
  return oc;
}

}  // namespace tabletrie
