#include "tabletrie/table_space.hpp"

#include <algorithm>

namespace tabletrie {

const char* design_name(Design d) {
  switch (d) {
    case Design::Original:
      return "original";
    case Design::GtTerms:
      return "gt-t";
    case Design::GtSubterms:
      return "gt-st";
  }
  return "?";
}

Design parse_design(const std::string& s) {
  if (s == "original") return Design::Original;
  if (s == "gt-t") return Design::GtTerms;
  if (s == "gt-st") return Design::GtSubterms;
  throw std::invalid_argument("unknown design: " + s);
}

TableSpace::TableSpace(Design design, size_t hash_threshold)
    : design_(design), hash_threshold_(hash_threshold) {
  if (design_ == Design::GtTerms)
    gt_ = std::make_unique<GlobalTrie>(GtMode::Terms, hash_threshold_);
  else if (design_ == Design::GtSubterms)
    gt_ = std::make_unique<GlobalTrie>(GtMode::Subterms, hash_threshold_);
}

TableEntry& TableSpace::table_entry(SymbolId name, uint32_t arity, Design design) {
  if (design != design_)
    throw std::invalid_argument("table design does not match the store");
  auto key = std::make_pair(name, arity);
  auto it = tables_.find(key);
  if (it == tables_.end()) {
    auto te = std::make_unique<TableEntry>(name, arity, design_, hash_threshold_);
    it = tables_.emplace(key, std::move(te)).first;
    table_order_.push_back(it->second.get());
  }
  return *it->second;
}

// Inserts the full token sequence of one term below `at` (original design).
TrieNode* TableSpace::insert_term_nodes(Trie& trie, TrieNode* at, const Term& t) {
  std::vector<Token> toks;
  tokenize(t, toks);
  for (const Token& tok : toks) at = trie.check_insert(at, tok);
  return at;
}

std::pair<SubgoalFrame*, bool> TableSpace::subgoal_check_insert(
    TableEntry& te, const CallSignature& call) {
  if (call.arity != te.arity)
    throw std::invalid_argument("call arity does not match the table entry");

  TrieNode* n = te.subgoal_trie.root();
  for (const Term& arg : call.args) {
    if (design_ == Design::Original) {
      n = insert_term_nodes(te.subgoal_trie, n, arg);
    } else if (arg.is_simple()) {
      n = te.subgoal_trie.check_insert(n, simple_token(arg));
    } else {
      TrieNode* leaf = gt_->check_insert(arg);
      bool created = false;
      n = te.subgoal_trie.check_insert(n, Token::gt_ref(leaf), &created);
      if (!created) gt_->release(leaf);
    }
  }

  auto it = te.frames.find(n);
  if (it != te.frames.end()) return {it->second.get(), false};

  auto sf = std::make_unique<SubgoalFrame>(hash_threshold_);
  sf->free_var_count = call.var_count;
  sf->leaf = n;
  SubgoalFrame* raw = sf.get();
  te.frames.emplace(n, std::move(sf));
  te.frame_order.push_back(raw);
  return {raw, true};
}

std::pair<const TrieNode*, bool> TableSpace::answer_check_insert(
    SubgoalFrame& sf, const std::vector<Term>& subs) {
  if (subs.size() != sf.free_var_count)
    throw std::invalid_argument("substitution tuple does not match the call's free variables");

  TrieNode* n = sf.answer_trie.root();
  for (const Term& t : subs) {
    if (design_ == Design::Original) {
      n = insert_term_nodes(sf.answer_trie, n, t);
    } else if (t.is_simple()) {
      n = sf.answer_trie.check_insert(n, simple_token(t));
    } else {
      TrieNode* leaf = gt_->check_insert(t);
      bool created = false;
      n = sf.answer_trie.check_insert(n, Token::gt_ref(leaf), &created);
      if (!created) gt_->release(leaf);
    }
  }

  if (n->is_answer) return {n, false};
  n->is_answer = true;
  sf.answer_order.push_back(n);
  return {n, true};
}

std::vector<Term> TableSpace::decode_answer(const SubgoalFrame& sf,
                                            const TrieNode* leaf) const {
  std::vector<Token> toks = Trie::path_tokens(leaf);
  std::span<const Token> view(toks);
  std::vector<Term> subs;
  subs.reserve(sf.free_var_count);
  size_t pos = 0;
  auto load_ref = [this](const TrieNode* l) -> Term {
    if (!gt_) throw std::logic_error("GT reference in a store without a global trie");
    return gt_->load(l);
  };
  for (uint32_t i = 0; i < sf.free_var_count; ++i)
    subs.push_back(decode_term(view, pos, load_ref));
  if (pos != toks.size())
    throw std::logic_error("trailing tokens on answer path");
  return subs;
}

std::vector<std::vector<Term>> TableSpace::load_answers_bottom_up(
    const SubgoalFrame& sf) const {
  std::vector<std::vector<Term>> out;
  out.reserve(sf.answer_order.size());
  for_each_answer_bottom_up(sf, [&](std::vector<Term> a) { out.push_back(std::move(a)); });
  return out;
}

namespace {

bool opens_structure(const Token& tok) {
  return tok.kind == TokenKind::GTRef || tok.kind == TokenKind::Functor ||
         tok.kind == TokenKind::ListCell;
}

AnswerCode select_code(size_t group_size, size_t position, const Token& tok) {
  const bool compound = opens_structure(tok);
  if (group_size == 1) return compound ? AnswerCode::DoCompound : AnswerCode::DoSimple;
  if (position == 0) return compound ? AnswerCode::TryCompound : AnswerCode::TrySimple;
  if (position + 1 == group_size)
    return compound ? AnswerCode::TrustCompound : AnswerCode::TrustSimple;
  return compound ? AnswerCode::RetryCompound : AnswerCode::RetrySimple;
}

}  // namespace

void TableSpace::compile_answer_trie(SubgoalFrame& sf) {
  Trie& trie = sf.answer_trie;
  std::vector<const TrieNode*> stack{trie.root()};
  while (!stack.empty()) {
    const TrieNode* parent = stack.back();
    stack.pop_back();
    size_t group = trie.child_count(parent);
    size_t pos = 0;
    for (TrieNode* c = trie.first_child(parent); c; c = trie.next_in_group(parent, c)) {
      c->code = select_code(group, pos, c->token);
      ++pos;
      if (c->has_children()) stack.push_back(c);
    }
  }
  sf.compiled = true;
}

std::vector<std::vector<Term>> TableSpace::load_answers_compiled(
    const SubgoalFrame& sf) const {
  std::vector<std::vector<Term>> out;
  out.reserve(sf.answer_order.size());
  for_each_answer_compiled(sf, [&](std::vector<Term> a) { out.push_back(std::move(a)); });
  return out;
}

void TableSpace::abolish_table(TableEntry& te) {
  std::vector<TrieNode*> refs;
  auto collect = [&refs](const Trie& trie) {
    trie.for_each_node([&refs](const TrieNode* n) {
      if (n->token.kind == TokenKind::GTRef) refs.push_back(n->token.gt_leaf());
    });
  };
  collect(te.subgoal_trie);
  for (SubgoalFrame* sf : te.frame_order) collect(sf->answer_trie);

  te.frames.clear();
  te.frame_order.clear();
  te.subgoal_trie.clear();

  if (gt_)
    for (TrieNode* leaf : refs) gt_->release(leaf);
}

void TableSpace::abolish_all() {
  for (TableEntry* te : table_order_) abolish_table(*te);
}

}  // namespace tabletrie
