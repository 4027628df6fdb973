#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tabletrie/symbol.hpp"
#include "tabletrie/token.hpp"

namespace tabletrie {

/// Immutable logic term. Copies share argument vectors, so passing terms by
/// value is cheap. Compound arity is always >= 1; lists are proper.
class Term {
public:
  enum class Kind : uint8_t { Atom, Int, Var, StdVar, Compound, List };

  static Term atom(SymbolId name);
  static Term atom(std::string_view name);
  static Term integer(int64_t value);
  static Term var(SymbolId name);
  static Term var(std::string_view name);
  static Term std_var(uint32_t index);
  static Term compound(SymbolId name, std::vector<Term> args);
  static Term compound(std::string_view name, std::vector<Term> args);
  static Term list(std::vector<Term> elements);

  Kind kind() const { return kind_; }
  bool is_simple() const { return kind_ != Kind::Compound && kind_ != Kind::List; }
  bool is_ground() const;

  SymbolId symbol() const { return sym_; }          // Atom, Var, Compound name
  int64_t int_value() const { return num_; }        // Int
  uint32_t var_index() const {                      // StdVar
    return static_cast<uint32_t>(num_);
  }
  const std::vector<Term>& args() const;            // Compound args / List elements
  uint32_t arity() const {
    return static_cast<uint32_t>(args().size());
  }

  uint64_t hash() const { return hash_; }
  bool operator==(const Term& other) const;
  bool operator!=(const Term& other) const { return !(*this == other); }

private:
  Term(Kind kind, SymbolId sym, int64_t num,
       std::shared_ptr<const std::vector<Term>> args);

  Kind kind_;
  SymbolId sym_ = 0;
  int64_t num_ = 0;
  std::shared_ptr<const std::vector<Term>> args_;
  uint64_t hash_ = 0;
};

struct TermHash {
  size_t operator()(const Term& t) const { return static_cast<size_t>(t.hash()); }
};

/// Thrown by the parser with 1-based line/column of the offending character.
struct ParseError : std::runtime_error {
  ParseError(std::string msg, size_t line, size_t column);
  size_t line;
  size_t column;
};

/// Parses one term of the fact-file grammar: atom, integer, variable,
/// compound or proper list. Variables with equal names map to the same Var.
Term parse_term(std::string_view text);

/// Prints a term in the grammar's syntax; standardized variables come out as
/// "_G<i>", so the output reparses to the same term up to variable renaming.
std::string format_term(const Term& t);

/// Replaces every variable by a StdVar indexed by order of first appearance
/// (depth-first, left-to-right). Returns the distinct-variable count.
std::pair<Term, uint32_t> standardize(const Term& t);

/// Joint standardization across a tuple, left-to-right: equal variables in
/// different positions share one index.
std::pair<std::vector<Term>, uint32_t> standardize(const std::vector<Term>& tuple);

/// Preorder linearization. Compound: functor token then the arguments.
/// List: a list-cell token before each element, one nil token at the end.
/// Requires a standardized term (no Var).
void tokenize(const Term& t, std::vector<Token>& out);
std::vector<Token> tokenize(const Term& t);

Token simple_token(const Term& t);  // Atom/Int/StdVar only

/// Rebuilds one term from a token stream, advancing `pos`. GTRef tokens are
/// resolved through `load_ref`.
template <class RefLoader>
Term decode_term(std::span<const Token> toks, size_t& pos, const RefLoader& load_ref) {
  if (pos >= toks.size()) throw std::logic_error("token stream truncated");
  const Token tk = toks[pos++];
  switch (tk.kind) {
    case TokenKind::Atom:
      return Term::atom(tk.atom_symbol());
    case TokenKind::Int:
      return Term::integer(tk.int_value());
    case TokenKind::Var:
      return Term::std_var(tk.var_index());
    case TokenKind::Functor: {
      std::vector<Term> args;
      args.reserve(tk.functor_arity());
      for (uint32_t i = 0; i < tk.functor_arity(); ++i)
        args.push_back(decode_term(toks, pos, load_ref));
      return Term::compound(tk.functor_name(), std::move(args));
    }
    case TokenKind::Nil:
      return Term::list({});
    case TokenKind::ListCell: {
      std::vector<Term> elems;
      elems.push_back(decode_term(toks, pos, load_ref));
      for (;;) {
        if (pos >= toks.size()) throw std::logic_error("unterminated list tokens");
        if (toks[pos].kind == TokenKind::ListCell) {
          ++pos;
          elems.push_back(decode_term(toks, pos, load_ref));
        } else if (toks[pos].kind == TokenKind::Nil) {
          ++pos;
          return Term::list(std::move(elems));
        } else {
          throw std::logic_error("malformed list tokens");
        }
      }
    }
    case TokenKind::GTRef:
      return load_ref(tk.gt_leaf());
    case TokenKind::Root:
      break;
  }
  throw std::logic_error("unexpected token in term stream");
}

/// A tabled call with jointly standardized arguments.
struct CallSignature {
  SymbolId predicate = 0;
  uint32_t arity = 0;
  std::vector<Term> args;
  uint32_t var_count = 0;
};

CallSignature make_call(std::string_view predicate, const std::vector<Term>& args);
CallSignature make_call(SymbolId predicate, const std::vector<Term>& args);

/// Reads `term(<term>).` clauses, one per line; `%` starts a comment.
std::vector<Term> parse_fact_text(std::string_view text);
std::vector<Term> read_fact_file(const std::string& path);

}  // namespace tabletrie
