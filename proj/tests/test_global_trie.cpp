#include <random>
#include <set>
#include <string>

#include "doctest.h"
#include "tabletrie/global_trie.hpp"
#include "tabletrie/workload.hpp"

using namespace tabletrie;

namespace {

Term T(const char* text) { return standardize(parse_term(text)).first; }

std::multiset<std::string> gt_shape(const GlobalTrie& gt) {
  std::multiset<std::string> out;
  gt.trie().for_each_node([&](const TrieNode* n) {
    std::string path;
    for (const Token& tok : Trie::path_tokens(n)) path += to_string(tok) + "|";
    out.insert(path);
  });
  return out;
}

Term random_compound(std::mt19937_64& rng, const RandomTermOptions& opt) {
  for (;;) {
    Term t = standardize(random_term(rng, opt)).first;
    if (!t.is_simple()) return t;
  }
}

}  // namespace

TEST_CASE("flat interning shares prefixes and counts references") {
  GlobalTrie gt(GtMode::Terms);
  TrieNode* f1 = gt.check_insert(T("f(1)"));
  CHECK(gt.trie().counts().nodes == 2);
  CHECK(f1->refcount == 1);

  TrieNode* f2 = gt.check_insert(T("f(2)"));
  CHECK(gt.trie().counts().nodes == 3);  // only the integer 2 is new
  CHECK(f2 != f1);

  TrieNode* f1_again = gt.check_insert(T("f(1)"));
  CHECK(f1_again == f1);
  CHECK(f1->refcount == 2);
  CHECK(gt.trie().counts().nodes == 3);
}

TEST_CASE("flat interning lays out whole terms, never references") {
  GlobalTrie gt(GtMode::Terms);
  TrieNode* leaf = gt.check_insert(T("f(g(1),g(1))"));
  CHECK(gt.trie().counts().nodes == 5);  // f/2 g/1 1 g/1 1
  CHECK(Trie::path_tokens(leaf).size() == 5);
  gt.trie().for_each_node(
      [](const TrieNode* n) { CHECK(n->token.kind != TokenKind::GTRef); });
}

TEST_CASE("subterm interning stores each compound subterm once") {
  GlobalTrie gt(GtMode::Subterms);
  TrieNode* main1 = gt.check_insert(T("f(g(1),g(1))"));
  CHECK(gt.trie().counts().nodes == 5);  // f/2 ref ref plus g/1 1
  auto toks = Trie::path_tokens(main1);
  REQUIRE(toks.size() == 3);
  CHECK(toks[0] == Token::functor(symbols().intern("f"), 2));
  REQUIRE(toks[1].kind == TokenKind::GTRef);
  REQUIRE(toks[2].kind == TokenKind::GTRef);
  CHECK(toks[1] == toks[2]);  // both arguments share one leaf

  TrieNode* sub = toks[1].gt_leaf();
  CHECK(sub->refcount == 2);
  CHECK(Trie::path_tokens(sub) ==
        std::vector<Token>{Token::functor(symbols().intern("g"), 1), Token::integer(1)});

  // the second term only adds the integer 2 and two reference nodes
  gt.check_insert(T("f(g(2),g(2))"));
  CHECK(gt.trie().counts().nodes == 8);
  CHECK(main1->refcount == 1);
}

TEST_CASE("subterm interning recurses through nested compounds") {
  GlobalTrie gt(GtMode::Subterms);
  TrieNode* leaf = gt.check_insert(T("f(g(h(1)))"));
  // paths: [h/1 1], [g/1 ref(h)], [f/1 ref(g)]
  CHECK(gt.trie().counts().nodes == 6);
  auto toks = Trie::path_tokens(leaf);
  REQUIRE(toks.size() == 2);
  REQUIRE(toks[1].kind == TokenKind::GTRef);
  TrieNode* g_leaf = toks[1].gt_leaf();
  auto g_toks = Trie::path_tokens(g_leaf);
  REQUIRE(g_toks.size() == 2);
  CHECK(g_toks[1].kind == TokenKind::GTRef);
  CHECK(g_toks[1].gt_leaf()->refcount == 1);
  CHECK(g_leaf->refcount == 1);
  CHECK(leaf->refcount == 1);
}

TEST_CASE("whole terms and subterms share one path") {
  GlobalTrie gt(GtMode::Subterms);
  TrieNode* whole = gt.check_insert(T("f(1)"));
  CHECK(whole->refcount == 1);
  TrieNode* outer = gt.check_insert(T("g(f(1))"));
  auto toks = Trie::path_tokens(outer);
  REQUIRE(toks.size() == 2);
  REQUIRE(toks[1].kind == TokenKind::GTRef);
  CHECK(toks[1].gt_leaf() == whole);  // the argument reuses the interned path
  CHECK(whole->refcount == 2);
  CHECK(gt.trie().counts().nodes == 4);  // f/1, 1, g/1, the reference

  gt.release(whole);
  CHECK(gt.trie().counts().nodes == 4);  // still referenced from g's path
  gt.release(outer);
  CHECK(gt.trie().counts().nodes == 0);
}

TEST_CASE("lists stay inline; only compound elements are referenced") {
  GlobalTrie gt(GtMode::Subterms);
  SUBCASE("list of integers is one flat path") {
    TrieNode* leaf = gt.check_insert(T("[1,2]"));
    CHECK(gt.trie().counts().nodes == 5);
    CHECK(Trie::path_tokens(leaf) == tokenize(T("[1,2]")));
  }
  SUBCASE("compound element becomes a reference inside the list spine") {
    TrieNode* leaf = gt.check_insert(T("[f(1)]"));
    // list spine [lc ref nil] plus the f(1) path
    CHECK(gt.trie().counts().nodes == 5);
    auto toks = Trie::path_tokens(leaf);
    REQUIRE(toks.size() == 3);
    CHECK(toks[0] == Token::list_cell());
    CHECK(toks[1].kind == TokenKind::GTRef);
    CHECK(toks[2] == Token::nil());
  }
  SUBCASE("nested lists stay inline too") {
    TrieNode* leaf = gt.check_insert(T("[[1],2]"));
    CHECK(Trie::path_tokens(leaf) == tokenize(T("[[1],2]")));
  }
}

TEST_CASE("interning rejects simple and unstandardized terms") {
  GlobalTrie gt(GtMode::Terms);
  CHECK_THROWS_AS(gt.check_insert(Term::integer(1)), std::invalid_argument);
  CHECK_THROWS_AS(gt.check_insert(Term::atom("a")), std::invalid_argument);
  CHECK_THROWS_AS(gt.check_insert(parse_term("f(X)")), std::logic_error);
}

TEST_CASE("load rebuilds the interned term") {
  SUBCASE("flat") {
    GlobalTrie gt(GtMode::Terms);
    TrieNode* leaf = gt.check_insert(T("f(1)"));
    CHECK(gt.load(leaf) == T("f(1)"));
  }
  SUBCASE("subterm mode loads through shared leaves") {
    GlobalTrie gt(GtMode::Subterms);
    TrieNode* leaf = gt.check_insert(T("f(g(1),g(1))"));
    CHECK(gt.load(leaf) == T("f(g(1),g(1))"));
  }
}

TEST_CASE("load/insert round-trip on random terms, both modes") {
  for (GtMode mode : {GtMode::Terms, GtMode::Subterms}) {
    GlobalTrie gt(mode);
    std::mt19937_64 rng(37);
    RandomTermOptions opt;
    for (int i = 0; i < 10000; ++i) {
      Term t = random_compound(rng, opt);
      TrieNode* leaf = gt.check_insert(t);
      CHECK(gt.load(leaf) == t);
    }
  }
}

TEST_CASE("paths decode to pairwise distinct terms") {
  for (GtMode mode : {GtMode::Terms, GtMode::Subterms}) {
    GlobalTrie gt(mode);
    std::mt19937_64 rng(41);
    RandomTermOptions opt;
    for (int i = 0; i < 300; ++i) gt.check_insert(random_compound(rng, opt));
    std::set<std::string> decoded;
    size_t leaves = 0;
    gt.trie().for_each_node([&](const TrieNode* n) {
      if (n->has_children()) return;
      ++leaves;
      CHECK(n->refcount > 0);
      bool fresh = decoded.insert(format_term(gt.load(n))).second;
      CHECK(fresh);
    });
    CHECK(leaves == decoded.size());
  }
}

TEST_CASE("release deletes paths bottom-up at refcount zero") {
  GlobalTrie gt(GtMode::Terms);
  TrieNode* leaf = gt.check_insert(T("f(1)"));
  gt.release(leaf);
  CHECK(gt.trie().counts().nodes == 0);
}

TEST_CASE("release keeps paths that still have references") {
  GlobalTrie gt(GtMode::Terms);
  TrieNode* leaf = gt.check_insert(T("f(1)"));
  gt.check_insert(T("f(1)"));
  CHECK(leaf->refcount == 2);
  gt.release(leaf);
  CHECK(leaf->refcount == 1);
  CHECK(gt.trie().counts().nodes == 2);
}

TEST_CASE("release stops at shared prefixes") {
  GlobalTrie gt(GtMode::Terms);
  TrieNode* f1 = gt.check_insert(T("f(1)"));
  TrieNode* f2 = gt.check_insert(T("f(2)"));
  gt.release(f1);
  CHECK(gt.trie().counts().nodes == 2);  // f/2 path survives under the shared functor
  CHECK(gt.load(f2) == T("f(2)"));
}

TEST_CASE("release cascades through subterm references") {
  GlobalTrie gt(GtMode::Subterms);
  TrieNode* leaf = gt.check_insert(T("f(g(1),g(1))"));
  gt.release(leaf);
  CHECK(gt.trie().counts().nodes == 0);  // subterm refcount went 2 -> 0
}

TEST_CASE("release cascade survives prefix sharing between term and subterm") {
  GlobalTrie gt(GtMode::Subterms);
  // f(f(1)): the main path and the subterm path share the f/1 child of the root
  TrieNode* leaf = gt.check_insert(T("f(f(1))"));
  CHECK(gt.trie().counts().nodes == 3);  // f/1, its integer child, the reference
  gt.release(leaf);
  CHECK(gt.trie().counts().nodes == 0);
}

TEST_CASE("dangling references and double release fault") {
  GlobalTrie gt(GtMode::Terms);
  TrieNode* leaf = gt.check_insert(T("f(1)"));
  gt.release(leaf);
  CHECK_THROWS_AS(gt.load(leaf), std::logic_error);
  CHECK_THROWS_AS(gt.release(leaf), std::logic_error);
}

TEST_CASE("releasing everything empties the trie, both modes") {
  for (GtMode mode : {GtMode::Terms, GtMode::Subterms}) {
    GlobalTrie gt(mode);
    std::mt19937_64 rng(43);
    RandomTermOptions opt;
    std::vector<TrieNode*> leaves;
    for (int i = 0; i < 500; ++i) leaves.push_back(gt.check_insert(random_compound(rng, opt)));
    for (TrieNode* l : leaves) gt.release(l);
    CHECK(gt.trie().counts().nodes == 0);
  }
}

TEST_CASE("modes agree when arguments hold no compound subterms") {
  std::mt19937_64 rng(47);
  GlobalTrie flat(GtMode::Terms);
  GlobalTrie sub(GtMode::Subterms);
  RandomTermOptions leaf_opt;
  leaf_opt.max_depth = 0;
  for (int i = 0; i < 400; ++i) {
    // compound or list over simple terms only
    uint32_t arity = 1 + rng() % 4;
    std::vector<Term> args;
    for (uint32_t k = 0; k < arity; ++k) args.push_back(random_term(rng, leaf_opt));
    Term t = rng() % 2 ? Term::compound("f", args) : Term::list(args);
    t = standardize(t).first;
    flat.check_insert(t);
    sub.check_insert(t);
  }
  CHECK(flat.trie().counts().nodes == sub.trie().counts().nodes);
  CHECK(gt_shape(flat) == gt_shape(sub));
}
