#include "tabletrie/term.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace tabletrie {

namespace {

uint64_t mix64(uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

uint64_t hash_combine(uint64_t h, uint64_t v) {
  return mix64(h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2)));
}

const std::vector<Term>& empty_args() {
  static const std::vector<Term> empty;
  return empty;
}

}  // namespace

Term::Term(Kind kind, SymbolId sym, int64_t num,
           std::shared_ptr<const std::vector<Term>> args)
    : kind_(kind), sym_(sym), num_(num), args_(std::move(args)) {
  uint64_t h = mix64(static_cast<uint64_t>(kind_) + 0x51ed270b);
  h = hash_combine(h, sym_);
  h = hash_combine(h, static_cast<uint64_t>(num_));
  if (args_) {
    h = hash_combine(h, args_->size());
    for (const Term& a : *args_) h = hash_combine(h, a.hash());
  }
  hash_ = h;
}

Term Term::atom(SymbolId name) { return Term(Kind::Atom, name, 0, nullptr); }
Term Term::atom(std::string_view name) { return atom(symbols().intern(name)); }
Term Term::integer(int64_t value) { return Term(Kind::Int, 0, value, nullptr); }
Term Term::var(SymbolId name) { return Term(Kind::Var, name, 0, nullptr); }
Term Term::var(std::string_view name) { return var(symbols().intern(name)); }
Term Term::std_var(uint32_t index) {
  return Term(Kind::StdVar, 0, static_cast<int64_t>(index), nullptr);
}

Term Term::compound(SymbolId name, std::vector<Term> args) {
  if (args.empty())
    throw std::invalid_argument("compound term needs at least one argument");
  return Term(Kind::Compound, name, 0,
              std::make_shared<const std::vector<Term>>(std::move(args)));
}

Term Term::compound(std::string_view name, std::vector<Term> args) {
  return compound(symbols().intern(name), std::move(args));
}

Term Term::list(std::vector<Term> elements) {
  return Term(Kind::List, 0, 0,
              std::make_shared<const std::vector<Term>>(std::move(elements)));
}

const std::vector<Term>& Term::args() const {
  return args_ ? *args_ : empty_args();
}

bool Term::is_ground() const {
  switch (kind_) {
    case Kind::Atom:
    case Kind::Int:
      return true;
    case Kind::Var:
    case Kind::StdVar:
      return false;
    case Kind::Compound:
    case Kind::List:
      for (const Term& a : args())
        if (!a.is_ground()) return false;
      return true;
  }
  return false;
}

bool Term::operator==(const Term& other) const {
  if (this == &other) return true;
  if (kind_ != other.kind_ || sym_ != other.sym_ || num_ != other.num_ ||
      hash_ != other.hash_)
    return false;
  if (args_ == other.args_) return true;
  const auto& a = args();
  const auto& b = other.args();
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Parser

ParseError::ParseError(std::string msg, size_t line, size_t column)
    : std::runtime_error(msg + " at " + std::to_string(line) + ":" +
                         std::to_string(column)),
      line(line),
      column(column) {}

namespace {

struct Cursor {
  std::string_view text;
  size_t pos = 0;
  size_t line = 1;
  size_t col = 1;

  bool eof() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }

  char advance() {
    char c = text[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }

  void skip_ws() {
    while (!eof()) {
      char c = peek();
      if (c == '%') {
        while (!eof() && peek() != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line, col);
  }

  void expect(char c, const std::string& what) {
    skip_ws();
    if (eof() || peek() != c) fail("expected '" + std::string(1, c) + "' " + what);
    advance();
  }
};

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::string read_name(Cursor& cur) {
  std::string out;
  out.push_back(cur.advance());
  while (!cur.eof() && is_name_char(cur.peek())) out.push_back(cur.advance());
  return out;
}

Term parse_term_at(Cursor& cur);

Term parse_list(Cursor& cur) {
  cur.advance();  // '['
  std::vector<Term> elems;
  cur.skip_ws();
  if (!cur.eof() && cur.peek() == ']') {
    cur.advance();
    return Term::list({});
  }
  for (;;) {
    elems.push_back(parse_term_at(cur));
    cur.skip_ws();
    if (cur.eof()) cur.fail("unterminated list");
    char c = cur.peek();
    if (c == ',') {
      cur.advance();
      continue;
    }
    if (c == '|') cur.fail("partial lists are not supported");
    if (c == ']') {
      cur.advance();
      return Term::list(std::move(elems));
    }
    cur.fail("expected ',' or ']' in list");
  }
}

Term parse_term_at(Cursor& cur) {
  cur.skip_ws();
  if (cur.eof()) cur.fail("unexpected end of input");
  char c = cur.peek();

  if (c == '[') return parse_list(cur);

  if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
    size_t line = cur.line, col = cur.col;
    std::string digits;
    if (c == '-') {
      digits.push_back(cur.advance());
      if (cur.eof() || !std::isdigit(static_cast<unsigned char>(cur.peek())))
        throw ParseError("expected digits after '-'", cur.line, cur.col);
    }
    while (!cur.eof() && std::isdigit(static_cast<unsigned char>(cur.peek())))
      digits.push_back(cur.advance());
    try {
      return Term::integer(std::stoll(digits));
    } catch (const std::out_of_range&) {
      throw ParseError("integer out of 64-bit range", line, col);
    }
  }

  if (std::isupper(static_cast<unsigned char>(c)) || c == '_')
    return Term::var(symbols().intern(read_name(cur)));

  if (std::islower(static_cast<unsigned char>(c))) {
    std::string name = read_name(cur);
    cur.skip_ws();
    if (!cur.eof() && cur.peek() == '(') {
      cur.advance();
      cur.skip_ws();
      if (!cur.eof() && cur.peek() == ')')
        cur.fail("compound terms need at least one argument");
      std::vector<Term> args;
      for (;;) {
        args.push_back(parse_term_at(cur));
        cur.skip_ws();
        if (cur.eof()) cur.fail("unterminated argument list");
        char d = cur.peek();
        if (d == ',') {
          cur.advance();
          continue;
        }
        if (d == ')') {
          cur.advance();
          return Term::compound(symbols().intern(name), std::move(args));
        }
        cur.fail("expected ',' or ')' in arguments");
      }
    }
    return Term::atom(symbols().intern(name));
  }

  cur.fail(std::string("unexpected character '") + c + "'");
}

}  // namespace

Term parse_term(std::string_view text) {
  Cursor cur{text};
  Term t = parse_term_at(cur);
  cur.skip_ws();
  if (!cur.eof()) cur.fail("trailing input after term");
  return t;
}

// ---------------------------------------------------------------------------
// Printer

namespace {

void format_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      out += symbols().name(t.symbol());
      return;
    case Term::Kind::Int:
      out += std::to_string(t.int_value());
      return;
    case Term::Kind::Var:
      out += symbols().name(t.symbol());
      return;
    case Term::Kind::StdVar:
      out += "_G" + std::to_string(t.var_index());
      return;
    case Term::Kind::Compound: {
      out += symbols().name(t.symbol());
      out += '(';
      bool first = true;
      for (const Term& a : t.args()) {
        if (!first) out += ',';
        first = false;
        format_into(a, out);
      }
      out += ')';
      return;
    }
    case Term::Kind::List: {
      out += '[';
      bool first = true;
      for (const Term& a : t.args()) {
        if (!first) out += ',';
        first = false;
        format_into(a, out);
      }
      out += ']';
      return;
    }
  }
}

}  // namespace

std::string format_term(const Term& t) {
  std::string out;
  format_into(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Standardization

namespace {

// Variable identity: a parsed Var by name, a StdVar by index. On already
// standardized input first-appearance order reproduces the same indices.
struct VarKey {
  bool std_var;
  uint64_t id;
  bool operator==(const VarKey&) const = default;
};

struct VarKeyHash {
  size_t operator()(const VarKey& k) const {
    return static_cast<size_t>(mix64(k.id ^ (k.std_var ? 0x8000000000000000ULL : 0)));
  }
};

using VarMap = std::unordered_map<VarKey, uint32_t, VarKeyHash>;

Term standardize_rec(const Term& t, VarMap& map) {
  switch (t.kind()) {
    case Term::Kind::Atom:
    case Term::Kind::Int:
      return t;
    case Term::Kind::Var: {
      auto [it, _] = map.try_emplace(VarKey{false, t.symbol()},
                                     static_cast<uint32_t>(map.size()));
      return Term::std_var(it->second);
    }
    case Term::Kind::StdVar: {
      auto [it, _] = map.try_emplace(VarKey{true, t.var_index()},
                                     static_cast<uint32_t>(map.size()));
      return Term::std_var(it->second);
    }
    case Term::Kind::Compound:
    case Term::Kind::List: {
      if (t.is_ground()) return t;
      std::vector<Term> args;
      args.reserve(t.args().size());
      for (const Term& a : t.args()) args.push_back(standardize_rec(a, map));
      return t.kind() == Term::Kind::Compound
                 ? Term::compound(t.symbol(), std::move(args))
                 : Term::list(std::move(args));
    }
  }
  throw std::logic_error("unreachable term kind");
}

}  // namespace

std::pair<Term, uint32_t> standardize(const Term& t) {
  VarMap map;
  Term out = standardize_rec(t, map);
  return {std::move(out), static_cast<uint32_t>(map.size())};
}

std::pair<std::vector<Term>, uint32_t> standardize(const std::vector<Term>& tuple) {
  VarMap map;
  std::vector<Term> out;
  out.reserve(tuple.size());
  for (const Term& t : tuple) out.push_back(standardize_rec(t, map));
  return {std::move(out), static_cast<uint32_t>(map.size())};
}

// ---------------------------------------------------------------------------
// Tokenization

Token simple_token(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Atom:
      return Token::atom(t.symbol());
    case Term::Kind::Int:
      return Token::integer(t.int_value());
    case Term::Kind::StdVar:
      return Token::var(t.var_index());
    case Term::Kind::Var:
      throw std::logic_error("term not standardized");
    default:
      throw std::logic_error("not a simple term");
  }
}

void tokenize(const Term& t, std::vector<Token>& out) {
  switch (t.kind()) {
    case Term::Kind::Atom:
    case Term::Kind::Int:
    case Term::Kind::StdVar:
    case Term::Kind::Var:
      out.push_back(simple_token(t));
      return;
    case Term::Kind::Compound:
      out.push_back(Token::functor(t.symbol(), t.arity()));
      for (const Term& a : t.args()) tokenize(a, out);
      return;
    case Term::Kind::List:
      for (const Term& a : t.args()) {
        out.push_back(Token::list_cell());
        tokenize(a, out);
      }
      out.push_back(Token::nil());
      return;
  }
}

std::vector<Token> tokenize(const Term& t) {
  std::vector<Token> out;
  tokenize(t, out);
  return out;
}

// ---------------------------------------------------------------------------
// Calls

CallSignature make_call(SymbolId predicate, const std::vector<Term>& args) {
  auto [std_args, count] = standardize(args);
  return CallSignature{predicate, static_cast<uint32_t>(args.size()),
                       std::move(std_args), count};
}

CallSignature make_call(std::string_view predicate, const std::vector<Term>& args) {
  return make_call(symbols().intern(predicate), args);
}

// ---------------------------------------------------------------------------
// Fact files

std::vector<Term> parse_fact_text(std::string_view text) {
  std::vector<Term> terms;
  Cursor cur{text};
  for (;;) {
    cur.skip_ws();
    if (cur.eof()) return terms;
    size_t line = cur.line, col = cur.col;
    if (!std::islower(static_cast<unsigned char>(cur.peek())))
      cur.fail("expected a term/1 clause");
    std::string head = read_name(cur);
    if (head != "term") throw ParseError("expected functor 'term'", line, col);
    cur.expect('(', "after 'term'");
    Term t = parse_term_at(cur);
    cur.expect(')', "closing the clause");
    cur.expect('.', "ending the clause");
    terms.push_back(std::move(t));
  }
}

std::vector<Term> read_fact_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open fact file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_fact_text(buf.str());
}

}  // namespace tabletrie
