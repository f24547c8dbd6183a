#include "clonelogic/syntax.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

#include "clonelogic/error.hpp"

namespace clonelogic {

namespace {

enum class Tok { Ident, LParen, RParen, LBracket, RBracket, Comma, Semi, Dot, Tilde, Amp, Bar, Arrow, Iff, Eq, Slash, Colon, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + t.text + "'";
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> tokenize(std::string_view text, std::size_t first_line) {
  std::vector<Token> out;
  std::size_t line = first_line;
  std::size_t column = 1;
  std::size_t i = 0;
  auto push = [&](Tok kind, std::size_t len) {
    out.push_back({kind, std::string(text.substr(i, len)), line, column});
    i += len;
    column += len;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (c == '\n') {
      ++line;
      column = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      ++column;
      continue;
    }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    if (ident_char(c) || (c == '-' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t len = 1;
      while (i + len < text.size() && ident_char(text[i + len])) ++len;
      push(Tok::Ident, len);
      continue;
    }
    if (text.substr(i, 3) == "<->") {
      push(Tok::Iff, 3);
      continue;
    }
    if (text.substr(i, 2) == "->") {
      push(Tok::Arrow, 2);
      continue;
    }
    switch (c) {
      case '(': push(Tok::LParen, 1); break;
      case ')': push(Tok::RParen, 1); break;
      case '[': push(Tok::LBracket, 1); break;
      case ']': push(Tok::RBracket, 1); break;
      case ',': push(Tok::Comma, 1); break;
      case ';': push(Tok::Semi, 1); break;
      case '.': push(Tok::Dot, 1); break;
      case '~': push(Tok::Tilde, 1); break;
      case '&': push(Tok::Amp, 1); break;
      case '|': push(Tok::Bar, 1); break;
      case '=': push(Tok::Eq, 1); break;
      case '/': push(Tok::Slash, 1); break;
      case ':': push(Tok::Colon, 1); break;
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }
  }
  out.push_back({Tok::End, "", line, column});
  return out;
}

std::optional<std::size_t> variable_index(const std::string& s) {
  if (s.size() < 2 || s[0] != 'x') return std::nullopt;
  for (std::size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return std::nullopt;
  }
  std::size_t value = 0;
  std::from_chars(s.data() + 1, s.data() + s.size(), value);
  return value;
}

bool is_keyword(const std::string& s) { return s == "forall" || s == "exists" || s == "BY"; }

class Parser {
 public:
  explicit Parser(std::string_view text, std::size_t first_line = 1) : tokens_(tokenize(text, first_line)) {}

  const Token& peek(std::size_t k = 0) const { return tokens_[std::min(pos_ + k, tokens_.size() - 1)]; }
  bool at_end() const { return peek().kind == Tok::End; }
  bool peek_word(const char* word) const { return peek().kind == Tok::Ident && peek().text == word; }

  Token take() {
    Token t = peek();
    if (pos_ < tokens_.size() - 1) ++pos_;
    return t;
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    take();
    return true;
  }

  Token expect(Tok kind, const char* what) {
    if (peek().kind != kind) fail(std::string("expected ") + what + ", found " + describe(peek()));
    return take();
  }

  void expect_word(const char* word) {
    if (!peek_word(word)) fail(std::string("expected '") + word + "', found " + describe(peek()));
    take();
  }

  void expect_end() {
    if (!at_end()) fail("unexpected " + describe(peek()));
  }

  [[noreturn]] void fail(const std::string& message) const { fail_at(peek(), message); }
  [[noreturn]] static void fail_at(const Token& t, const std::string& message) {
    throw ParseError(message, t.line, t.column);
  }

  std::string name(const char* what) {
    Token t = expect(Tok::Ident, what);
    if (is_keyword(t.text)) fail_at(t, "'" + t.text + "' is a reserved word");
    return t.text;
  }

  long integer(const char* what) {
    Token t = expect(Tok::Ident, what);
    long value = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) fail_at(t, std::string("expected ") + what);
    return value;
  }

  std::size_t natural(const char* what) {
    const Token& t = peek();
    long v = integer(what);
    if (v < 0) fail_at(t, std::string("expected ") + what);
    return static_cast<std::size_t>(v);
  }

  Term term(const FunctionType& type) {
    const Token t = expect(Tok::Ident, "a term");
    if (auto index = variable_index(t.text)) {
      if (*index == 0) fail_at(t, "variable indices start at 1");
      return Term::var(*index);
    }
    if (!type.contains(t.text)) fail_at(t, "undeclared function symbol '" + t.text + "'");
    const std::size_t arity = type.arity(t.text);
    std::vector<Term> args;
    if (arity > 0) {
      expect(Tok::LParen, "'('");
      args.push_back(term(type));
      while (accept(Tok::Comma)) args.push_back(term(type));
      expect(Tok::RParen, "')'");
      if (args.size() != arity) {
        fail_at(t, "function symbol '" + t.text + "' expects " + std::to_string(arity) + " argument(s)");
      }
    } else if (peek().kind == Tok::LParen) {
      fail("constant '" + t.text + "' takes no arguments");
    }
    return Term::app(t.text, std::move(args));
  }

  Substitution substitution(const FunctionType& type) {
    const Token open = expect(Tok::LBracket, "'['");
    std::vector<Term> prefix;
    if (peek().kind != Tok::Semi && peek().kind != Tok::RBracket) {
      prefix.push_back(term(type));
      while (accept(Tok::Comma)) prefix.push_back(term(type));
    }
    if (accept(Tok::RBracket)) {
      if (prefix.empty()) fail_at(open, "an abbreviated substitution needs at least one term");
      return subst_from_list(std::move(prefix));
    }
    expect(Tok::Semi, "';' or ']'");
    if (peek_word("shift")) {
      take();
      const Token at = peek();
      const long d = integer("a shift offset");
      expect(Tok::RBracket, "']'");
      try {
        return Substitution(std::move(prefix), ShiftTail{d});
      } catch (const Error& e) {
        fail_at(at, e.what());
      }
    }
    expect_word("const");
    Term t = term(type);
    expect(Tok::RBracket, "']'");
    return Substitution(std::move(prefix), ConstTail{std::move(t)});
  }

  Formula formula(const Language& lang) {
    if (accept(Tok::Tilde)) return Formula::negation(formula(lang));
    if (peek_word("forall") || peek_word("exists")) {
      const bool universal = take().text == "forall";
      if (peek().kind == Tok::Ident && peek(1).kind == Tok::Dot) {
        if (auto index = variable_index(peek().text)) {
          if (*index == 0) fail("variable indices start at 1");
          take();
          take();
          Formula body = formula(lang);
          return universal ? forall_xi(*index, body) : exists_xi(*index, body);
        }
      }
      Formula body = formula(lang);
      return universal ? Formula::forall(std::move(body)) : exists(body);
    }
    if (accept(Tok::LParen)) {
      Formula a = formula(lang);
      if (accept(Tok::RParen)) return a;
      const Token op = take();
      Formula b = formula(lang);
      expect(Tok::RParen, "')'");
      switch (op.kind) {
        case Tok::Amp: return Formula::conjunction(std::move(a), std::move(b));
        case Tok::Bar: return disj(a, b);
        case Tok::Arrow: return imp(a, b);
        case Tok::Iff: return iff(a, b);
        default: fail_at(op, "expected a connective, found " + describe(op));
      }
    }
    const Token t = expect(Tok::Ident, "a formula");
    if (variable_index(t.text)) fail_at(t, "expected a formula, found variable " + t.text);
    if (is_keyword(t.text)) fail_at(t, "unexpected '" + t.text + "'");
    if (!lang.predicates.contains(t.text)) fail_at(t, "undeclared predicate symbol '" + t.text + "'");
    const std::size_t arity = lang.predicates.arity(t.text);
    std::vector<Term> args;
    if (arity > 0) {
      expect(Tok::LParen, "'('");
      args.push_back(term(lang.functions));
      while (accept(Tok::Comma)) args.push_back(term(lang.functions));
      expect(Tok::RParen, "')'");
      if (args.size() != arity) {
        fail_at(t, "predicate symbol '" + t.text + "' expects " + std::to_string(arity) + " argument(s)");
      }
    } else if (peek().kind == Tok::LParen) {
      fail("predicate '" + t.text + "' takes no arguments");
    }
    return Formula::atom(t.text, std::move(args));
  }

  PropTerm prop() {
    if (accept(Tok::Tilde)) return PropTerm::negation(prop());
    if (accept(Tok::LParen)) {
      PropTerm a = prop();
      if (accept(Tok::RParen)) return a;
      const Token op = take();
      PropTerm b = prop();
      expect(Tok::RParen, "')'");
      switch (op.kind) {
        case Tok::Amp: return PropTerm::conjunction(std::move(a), std::move(b));
        case Tok::Bar: return prop_or(a, b);
        case Tok::Arrow: return prop_imp(a, b);
        case Tok::Iff: return prop_iff(a, b);
        default: fail_at(op, "expected a connective, found " + describe(op));
      }
    }
    return PropTerm::var(name("a proposition"));
  }

  Env env() {
    expect(Tok::LBracket, "'['");
    std::vector<Element> prefix;
    auto element = [&] { return static_cast<Element>(natural("a domain element")); };
    if (peek().kind != Tok::Semi && peek().kind != Tok::RBracket) {
      prefix.push_back(element());
      while (accept(Tok::Comma)) prefix.push_back(element());
    }
    if (accept(Tok::RBracket)) {
      if (prefix.empty()) fail("an abbreviated environment needs at least one element");
      const Element last = prefix.back();
      prefix.pop_back();
      return {std::move(prefix), last};
    }
    expect(Tok::Semi, "';' or ']'");
    const Element fallback = element();
    expect(Tok::RBracket, "']'");
    return {std::move(prefix), fallback};
  }

 private:
  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

template <class T, class F>
T parse_whole(std::string_view text, F&& f) {
  Parser p(text);
  T value = f(p);
  p.expect_end();
  return value;
}

// Non-empty, comment-stripped lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t number = 0;
  while (!text.empty()) {
    ++number;
    const std::size_t end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    const std::size_t hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    out.emplace_back(number, line);
  }
  return out;
}

// ---- printing ----

bool match_or(const Formula& f, Formula& a, Formula& b) {
  if (f.kind() != Formula::Kind::Not || f.left().kind() != Formula::Kind::And) return false;
  const Formula& c = f.left();
  if (c.left().kind() != Formula::Kind::Not || c.right().kind() != Formula::Kind::Not) return false;
  a = c.left().left();
  b = c.right().left();
  return true;
}

bool match_imp(const Formula& f, Formula& a, Formula& b) {
  Formula na = f, bb = f;
  if (!match_or(f, na, bb) || na.kind() != Formula::Kind::Not) return false;
  a = na.left();
  b = bb;
  return true;
}

void print(const Formula& f, std::string& out);

void print_args(std::span<const Term> args, std::string& out) {
  if (args.empty()) return;
  out += '(';
  for (std::size_t k = 0; k < args.size(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(args[k]);
  }
  out += ')';
}

void print_binary(const Formula& a, const char* op, const Formula& b, std::string& out) {
  out += '(';
  print(a, out);
  out += op;
  print(b, out);
  out += ')';
}

void print(const Formula& f, std::string& out) {
  Formula a = f, b = f;
  switch (f.kind()) {
    case Formula::Kind::Atom:
      out += f.symbol();
      print_args(f.args(), out);
      return;
    case Formula::Kind::Not:
      if (f.left().kind() == Formula::Kind::Forall && f.left().left().kind() == Formula::Kind::Not) {
        out += "exists ";
        print(f.left().left().left(), out);
      } else if (match_imp(f, a, b)) {
        print_binary(a, " -> ", b, out);
      } else if (match_or(f, a, b)) {
        print_binary(a, " | ", b, out);
      } else {
        out += '~';
        print(f.left(), out);
      }
      return;
    case Formula::Kind::And: {
      Formula c = f, d = f;
      if (match_imp(f.left(), a, b) && match_imp(f.right(), c, d) && c == b && d == a) {
        print_binary(a, " <-> ", b, out);
      } else {
        print_binary(f.left(), " & ", f.right(), out);
      }
      return;
    }
    case Formula::Kind::Forall:
      out += "forall ";
      print(f.left(), out);
      return;
  }
}

bool match_or(const PropTerm& f, PropTerm& a, PropTerm& b) {
  if (f.kind() != PropTerm::Kind::Not || f.left().kind() != PropTerm::Kind::And) return false;
  const PropTerm& c = f.left();
  if (c.left().kind() != PropTerm::Kind::Not || c.right().kind() != PropTerm::Kind::Not) return false;
  a = c.left().left();
  b = c.right().left();
  return true;
}

bool match_imp(const PropTerm& f, PropTerm& a, PropTerm& b) {
  PropTerm na = f, bb = f;
  if (!match_or(f, na, bb) || na.kind() != PropTerm::Kind::Not) return false;
  a = na.left();
  b = bb;
  return true;
}

void print(const PropTerm& f, std::string& out) {
  PropTerm a = f, b = f;
  auto binary = [&](const PropTerm& x, const char* op, const PropTerm& y) {
    out += '(';
    print(x, out);
    out += op;
    print(y, out);
    out += ')';
  };
  switch (f.kind()) {
    case PropTerm::Kind::Var:
      out += f.name();
      return;
    case PropTerm::Kind::Not:
      if (match_imp(f, a, b)) {
        binary(a, " -> ", b);
      } else if (match_or(f, a, b)) {
        binary(a, " | ", b);
      } else {
        out += '~';
        print(f.left(), out);
      }
      return;
    case PropTerm::Kind::And: {
      PropTerm c = f, d = f;
      if (match_imp(f.left(), a, b) && match_imp(f.right(), c, d) && c == b && d == a) {
        binary(a, " <-> ", b);
      } else {
        binary(f.left(), " & ", f.right());
      }
      return;
    }
  }
}

std::string join_numbers(const auto& values) {
  std::string out;
  for (std::size_t k = 0; k < values.size(); ++k) {
    if (k > 0) out += ' ';
    out += std::to_string(values[k]);
  }
  return out;
}

}  // namespace

std::string to_string(const Term& t) {
  if (t.is_var()) return "x" + std::to_string(t.var_index());
  std::string out = t.symbol();
  print_args(t.args(), out);
  return out;
}

std::string to_string(const Substitution& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.prefix().size(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(s.prefix()[k]);
  }
  out += s.prefix().empty() ? "; " : " ; ";
  if (const auto* c = std::get_if<ConstTail>(&s.tail())) {
    out += "const " + to_string(c->term);
  } else {
    out += "shift " + std::to_string(std::get<ShiftTail>(s.tail()).offset);
  }
  return out + "]";
}

std::string to_string(const Formula& p) {
  std::string out;
  print(p, out);
  return out;
}

std::string to_string(const PropTerm& p) {
  std::string out;
  print(p, out);
  return out;
}

std::string to_string(const Env& env) {
  std::string out = "[";
  for (std::size_t k = 0; k < env.prefix.size(); ++k) {
    if (k > 0) out += ", ";
    out += std::to_string(env.prefix[k]);
  }
  out += env.prefix.empty() ? "; " : " ; ";
  return out + std::to_string(env.fallback) + "]";
}

Term parse_term(const FunctionType& type, std::string_view text) {
  return parse_whole<Term>(text, [&](Parser& p) { return p.term(type); });
}

Substitution parse_substitution(const FunctionType& type, std::string_view text) {
  return parse_whole<Substitution>(text, [&](Parser& p) { return p.substitution(type); });
}

Formula parse_formula(const Language& lang, std::string_view text) {
  return parse_whole<Formula>(text, [&](Parser& p) { return p.formula(lang); });
}

PropTerm parse_prop(std::string_view text) {
  return parse_whole<PropTerm>(text, [](Parser& p) { return p.prop(); });
}

Env parse_env(std::string_view text) {
  return parse_whole<Env>(text, [](Parser& p) { return p.env(); });
}

Language parse_signature(std::string_view text) {
  Language lang;
  for (const auto& [number, line] : content_lines(text)) {
    Parser p(line, number);
    const Token kind = p.expect(Tok::Ident, "'fn' or 'rel'");
    if (kind.text != "fn" && kind.text != "rel") Parser::fail_at(kind, "expected 'fn' or 'rel'");
    const Token name_token = p.peek();
    const std::string name = p.name("a symbol name");
    if (variable_index(name)) Parser::fail_at(name_token, "'" + name + "' is reserved for variables");
    p.expect(Tok::Slash, "'/'");
    const std::size_t arity = p.natural("an arity");
    bool equality = false;
    if (kind.text == "rel" && p.peek_word("equality")) {
      p.take();
      equality = true;
    }
    p.expect_end();
    try {
      if (kind.text == "fn") {
        if (lang.predicates.contains(name)) throw SignatureError("'" + name + "' is already a predicate");
        lang.functions.declare(name, arity);
      } else {
        if (lang.functions.contains(name)) throw SignatureError("'" + name + "' is already a function");
        lang.predicates.declare(name, arity);
        if (equality) {
          if (lang.has_equality()) throw SignatureError("only one equality symbol may be declared");
          lang.predicates.set_equality(name);
        }
      }
    } catch (const Error& e) {
      Parser::fail_at(name_token, e.what());
    }
  }
  return lang;
}

std::string to_string(const Language& lang) {
  std::string out;
  for (const auto& [name, arity] : lang.functions.symbols()) {
    out += "fn " + name + "/" + std::to_string(arity) + "\n";
  }
  for (const auto& [name, arity] : lang.predicates.symbols()) {
    out += "rel " + name + "/" + std::to_string(arity);
    if (lang.predicates.equality() == name) out += " equality";
    out += "\n";
  }
  return out;
}

Structure parse_structure(const Language& lang, std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty structure file", 1, 1);
  Parser head(lines[0].second, lines[0].first);
  head.expect_word("domain");
  const std::size_t size = head.natural("a domain size");
  if (size == 0) Parser::fail_at(head.peek(), "domain must be nonempty");
  head.expect_end();

  struct Row {
    bool is_function;
    std::string name;
    std::vector<std::uint64_t> values;
    Token where;
  };
  std::vector<Row> rows;
  auto mode = Structure::EqualityMode::Identity;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    Parser p(lines[k].second, lines[k].first);
    const Token kind = p.expect(Tok::Ident, "'fn', 'rel' or 'equality'");
    if (kind.text == "equality") {
      const Token m = p.expect(Tok::Ident, "'identity' or 'free'");
      if (m.text == "identity") {
        mode = Structure::EqualityMode::Identity;
      } else if (m.text == "free") {
        mode = Structure::EqualityMode::Free;
      } else {
        Parser::fail_at(m, "expected 'identity' or 'free'");
      }
      p.expect_end();
      continue;
    }
    if (kind.text != "fn" && kind.text != "rel") Parser::fail_at(kind, "expected 'fn', 'rel' or 'equality'");
    const Token where = p.peek();
    Row row{kind.text == "fn", p.name("a symbol name"), {}, where};
    p.expect(Tok::Colon, "':'");
    while (!p.at_end()) row.values.push_back(p.natural("a table value"));
    rows.push_back(std::move(row));
  }

  Structure d(lang, size, 1, mode);
  std::set<std::string> seen;
  for (Row& row : rows) {
    try {
      if (!seen.insert(row.name).second) throw Error("table for '" + row.name + "' given twice");
      if (row.is_function) {
        d.set_function(row.name, std::vector<Element>(row.values.begin(), row.values.end()));
      } else {
        for (std::uint64_t v : row.values) {
          if (v > 1) throw Error("relation table values must be 0 or 1");
        }
        d.set_relation(row.name, std::move(row.values));
      }
    } catch (const Error& e) {
      Parser::fail_at(row.where, e.what());
    }
  }
  for (const auto& [name, arity] : lang.functions.symbols()) {
    if (!seen.count(name)) throw ParseError("missing table for function '" + name + "'", lines[0].first, 1);
  }
  for (const auto& [name, arity] : lang.predicates.symbols()) {
    const bool fixed = d.identity_equality() && lang.predicates.equality() == name;
    if (!fixed && !seen.count(name)) {
      throw ParseError("missing table for relation '" + name + "'", lines[0].first, 1);
    }
  }
  return d;
}

std::string to_string(const Structure& d) {
  std::string out = "domain " + std::to_string(d.size()) + "\n";
  std::size_t k = 0;
  for (const auto& [name, arity] : d.language().functions.symbols()) {
    out += "fn " + name + ": " + join_numbers(d.function_tables()[k++]) + "\n";
  }
  k = 0;
  for (const auto& [name, arity] : d.language().predicates.symbols()) {
    const auto& table = d.relation_tables()[k++];
    if (d.identity_equality() && d.language().predicates.equality() == name) continue;
    out += "rel " + name + ": " + join_numbers(table) + "\n";
  }
  if (d.language().has_equality()) {
    out += d.identity_equality() ? "equality identity\n" : "equality free\n";
  }
  return out;
}

FinitePropAlgebra parse_algebra(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty algebra file", 1, 1);
  Parser head(lines[0].second, lines[0].first);
  const std::size_t n = head.natural("the carrier size");
  head.expect_end();
  if (n == 0) throw ParseError("carrier must be nonempty", lines[0].first, 1);
  if (lines.size() != n + 2) {
    throw ParseError("expected a 'not:' line and " + std::to_string(n) + " 'and' lines", lines[0].first, 1);
  }
  auto row = [&](Parser& p) {
    std::vector<std::size_t> values;
    while (!p.at_end()) {
      const Token t = p.peek();
      values.push_back(p.natural("an element"));
      if (values.back() >= n) Parser::fail_at(t, "element out of range");
    }
    if (values.size() != n) p.fail("expected " + std::to_string(n) + " entries");
    return values;
  };
  Parser neg_line(lines[1].second, lines[1].first);
  neg_line.expect_word("not");
  neg_line.expect(Tok::Colon, "':'");
  std::vector<std::size_t> neg = row(neg_line);
  std::vector<std::vector<std::size_t>> conj;
  for (std::size_t i = 0; i < n; ++i) {
    Parser p(lines[i + 2].second, lines[i + 2].first);
    p.expect_word("and");
    const Token t = p.peek();
    if (p.natural("a row index") != i) Parser::fail_at(t, "expected row " + std::to_string(i));
    p.expect(Tok::Colon, "':'");
    conj.push_back(row(p));
  }
  return FinitePropAlgebra(std::move(conj), std::move(neg));
}

std::string to_string(const FinitePropAlgebra& a) {
  std::string out = std::to_string(a.size()) + "\nnot: " + join_numbers(a.not_table()) + "\n";
  for (std::size_t i = 0; i < a.size(); ++i) {
    out += "and " + std::to_string(i) + ": " + join_numbers(a.and_table()[i]) + "\n";
  }
  return out;
}

namespace {

template <class Item, class F>
std::pair<std::string, std::vector<Item>> parse_named_list(std::string_view text, F&& item) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty theory file", 1, 1);
  Parser head(lines[0].second, lines[0].first);
  head.expect_word("theory");
  std::string name = head.name("a theory name");
  head.expect_end();
  std::vector<Item> items;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    Parser p(lines[k].second, lines[k].first);
    items.push_back(item(p));
    p.expect_end();
  }
  return {std::move(name), std::move(items)};
}

}  // namespace

Theory parse_theory(const Language& lang, std::string_view text) {
  auto [name, formulas] = parse_named_list<Formula>(text, [&](Parser& p) { return p.formula(lang); });
  return {std::move(name), std::move(formulas)};
}

PropTheory parse_prop_theory(std::string_view text) {
  auto [name, formulas] = parse_named_list<PropTerm>(text, [](Parser& p) { return p.prop(); });
  return {std::move(name), std::move(formulas)};
}

namespace {

std::size_t step_reference(Parser& p, std::size_t current) {
  const Token t = p.peek();
  const std::size_t k = p.natural("a step number");
  if (k == 0 || k >= current) Parser::fail_at(t, "step references must point to earlier steps");
  return k - 1;
}

std::size_t hypothesis_reference(Parser& p) {
  const Token t = p.peek();
  const std::size_t k = p.natural("a hypothesis number");
  if (k == 0) Parser::fail_at(t, "hypotheses are numbered from 1");
  return k - 1;
}

// name=value pairs inside an axiom's parentheses; value parsed by f.
template <class F>
void axiom_parameters(Parser& p, F&& f) {
  p.expect(Tok::LParen, "'('");
  if (p.accept(Tok::RParen)) return;
  do {
    const Token key = p.expect(Tok::Ident, "a parameter name");
    p.expect(Tok::Eq, "'='");
    f(key);
  } while (p.accept(Tok::Comma));
  p.expect(Tok::RParen, "')'");
}

PropJustification prop_justification(Parser& p, std::size_t current) {
  if (p.peek_word("hyp")) {
    p.take();
    return PropHypothesis{hypothesis_reference(p)};
  }
  if (p.peek_word("mp")) {
    p.take();
    const std::size_t minor = step_reference(p, current);
    const std::size_t major = step_reference(p, current);
    return PropModusPonens{minor, major};
  }
  if (p.peek_word("axiom")) p.take();
  const Token id = p.expect(Tok::Ident, "a justification");
  std::map<std::string, PropTerm> params;
  if (id.text != "A1" && id.text != "A2" && id.text != "A3") Parser::fail_at(id, "unknown justification '" + id.text + "'");
  axiom_parameters(p, [&](const Token& key) {
    if (key.text != "p" && key.text != "q" && key.text != "r") Parser::fail_at(key, "unknown parameter '" + key.text + "'");
    if (!params.emplace(key.text, p.prop()).second) Parser::fail_at(key, "parameter given twice");
  });
  auto get = [&](const char* k) {
    auto it = params.find(k);
    if (it == params.end()) Parser::fail_at(id, id.text + " needs parameter " + k);
    return it->second;
  };
  const std::size_t expected = id.text == "A1" ? 1 : id.text == "A2" ? 2 : 3;
  if (params.size() != expected) Parser::fail_at(id, id.text + " takes " + std::to_string(expected) + " parameter(s)");
  if (id.text == "A1") return PropAxiomA1{get("p")};
  if (id.text == "A2") return PropAxiomA2{get("p"), get("q")};
  return PropAxiomA3{get("p"), get("q"), get("r")};
}

Justification justification(const Language& lang, Parser& p, std::size_t current) {
  if (p.peek_word("hyp")) {
    p.take();
    return HypothesisStep{hypothesis_reference(p)};
  }
  if (p.peek_word("mp")) {
    p.take();
    const std::size_t minor = step_reference(p, current);
    const std::size_t major = step_reference(p, current);
    return ModusPonensStep{minor, major};
  }
  if (p.peek_word("gen")) {
    p.take();
    return GenStep{step_reference(p, current)};
  }
  if (p.peek_word("subst")) {
    p.take();
    const std::size_t source = step_reference(p, current);
    return SubstStep{source, p.substitution(lang.functions)};
  }
  if (p.peek_word("axiom")) p.take();
  const Token id = p.expect(Tok::Ident, "a justification");
  AxiomInstanceSpec spec;
  try {
    spec.id = axiom_id_from_string(id.text);
  } catch (const Error&) {
    Parser::fail_at(id, "unknown justification '" + id.text + "'");
  }
  std::set<std::string> seen;
  axiom_parameters(p, [&](const Token& key) {
    if (!seen.insert(key.text).second) Parser::fail_at(key, "parameter given twice");
    if (key.text == "p") {
      spec.p = p.formula(lang);
    } else if (key.text == "q") {
      spec.q = p.formula(lang);
    } else if (key.text == "r") {
      spec.r = p.formula(lang);
    } else if (key.text == "subst") {
      spec.subst = p.substitution(lang.functions);
    } else if (key.text == "i") {
      spec.index = p.natural("an index");
    } else if (key.text == "n") {
      spec.generalizations = p.natural("a generalization count");
    } else {
      Parser::fail_at(key, "unknown parameter '" + key.text + "'");
    }
  });
  if (spec.id == AxiomId::A7 && !seen.count("i")) Parser::fail_at(id, "A7 needs parameter i");
  try {
    validate_spec(lang, spec);
  } catch (const Error& e) {
    Parser::fail_at(id, e.what());
  }
  return AxiomStep{std::move(spec)};
}

}  // namespace

ProofFile parse_proof(const Language& lang, std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty proof file", 1, 1);
  Parser head(lines[0].second, lines[0].first);
  const Token kind = head.expect(Tok::Ident, "'local', 'global' or 'propositional'");
  head.expect_end();
  if (kind.text != "local" && kind.text != "global" && kind.text != "propositional") {
    Parser::fail_at(kind, "expected 'local', 'global' or 'propositional'");
  }
  std::size_t k = 1;
  ProofFile file{{}, Proof{}};
  if (k < lines.size()) {
    Parser p(lines[k].second, lines[k].first);
    if (p.peek_word("theory")) {
      p.take();
      file.theory = p.name("a theory name");
      p.expect_end();
      ++k;
    }
  }
  Proof proof{kind.text == "local" ? ProofKind::Local : ProofKind::Global, {}};
  PropProof prop_proof;
  const bool propositional = kind.text == "propositional";
  for (std::size_t number = 1; k < lines.size(); ++k, ++number) {
    Parser p(lines[k].second, lines[k].first);
    const Token label = p.peek();
    if (p.natural("a step number") != number) Parser::fail_at(label, "expected step " + std::to_string(number));
    p.expect(Tok::Dot, "'.'");
    if (propositional) {
      PropTerm f = p.prop();
      p.expect_word("BY");
      prop_proof.steps.push_back({std::move(f), prop_justification(p, number)});
    } else {
      Formula f = p.formula(lang);
      p.expect_word("BY");
      proof.steps.push_back({std::move(f), justification(lang, p, number)});
    }
    p.expect_end();
  }
  if (propositional) {
    file.proof = std::move(prop_proof);
  } else {
    file.proof = std::move(proof);
  }
  return file;
}

namespace {

std::string header(const char* kind, const std::string& theory) {
  std::string out = std::string(kind) + "\n";
  if (!theory.empty()) out += "theory " + theory + "\n";
  return out;
}

}  // namespace

std::string to_string(const Proof& proof, const std::string& theory) {
  std::string out = header(proof.kind == ProofKind::Local ? "local" : "global", theory);
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& step = proof.steps[i];
    out += std::to_string(i + 1) + ". " + to_string(step.formula) + " BY ";
    std::visit(
        [&](const auto& why) {
          using T = std::decay_t<decltype(why)>;
          if constexpr (std::is_same_v<T, AxiomStep>) {
            const AxiomInstanceSpec& s = why.spec;
            std::vector<std::string> params;
            if (s.p) params.push_back("p=" + to_string(*s.p));
            if (s.q) params.push_back("q=" + to_string(*s.q));
            if (s.r) params.push_back("r=" + to_string(*s.r));
            if (s.subst) params.push_back("subst=" + to_string(*s.subst));
            if (s.id == AxiomId::A7) params.push_back("i=" + std::to_string(s.index));
            if (s.generalizations > 0) params.push_back("n=" + std::to_string(s.generalizations));
            out += "axiom " + to_string(s.id) + "(";
            for (std::size_t k = 0; k < params.size(); ++k) out += (k > 0 ? ", " : "") + params[k];
            out += ")";
          } else if constexpr (std::is_same_v<T, HypothesisStep>) {
            out += "hyp " + std::to_string(why.index + 1);
          } else if constexpr (std::is_same_v<T, ModusPonensStep>) {
            out += "mp " + std::to_string(why.minor + 1) + " " + std::to_string(why.major + 1);
          } else if constexpr (std::is_same_v<T, SubstStep>) {
            out += "subst " + std::to_string(why.source + 1) + " " + to_string(why.subst);
          } else {
            out += "gen " + std::to_string(why.source + 1);
          }
        },
        step.why);
    out += "\n";
  }
  return out;
}

std::string to_string(const PropProof& proof, const std::string& theory) {
  std::string out = header("propositional", theory);
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const PropProofStep& step = proof.steps[i];
    out += std::to_string(i + 1) + ". " + to_string(step.formula) + " BY ";
    std::visit(
        [&](const auto& why) {
          using T = std::decay_t<decltype(why)>;
          if constexpr (std::is_same_v<T, PropAxiomA1>) {
            out += "A1(p=" + to_string(why.p) + ")";
          } else if constexpr (std::is_same_v<T, PropAxiomA2>) {
            out += "A2(p=" + to_string(why.p) + ", q=" + to_string(why.q) + ")";
          } else if constexpr (std::is_same_v<T, PropAxiomA3>) {
            out += "A3(p=" + to_string(why.p) + ", q=" + to_string(why.q) + ", r=" + to_string(why.r) + ")";
          } else if constexpr (std::is_same_v<T, PropHypothesis>) {
            out += "hyp " + std::to_string(why.index + 1);
          } else {
            out += "mp " + std::to_string(why.minor + 1) + " " + std::to_string(why.major + 1);
          }
        },
        step.why);
    out += "\n";
  }
  return out;
}

}  // namespace clonelogic
