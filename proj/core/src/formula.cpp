#include "clonelogic/formula.hpp"

#include <algorithm>

#include "clonelogic/error.hpp"

namespace clonelogic {

void PredicateType::declare(const std::string& name, std::size_t arity) {
  auto [it, inserted] = symbols_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw SignatureError("predicate symbol '" + name + "' redeclared with a different arity");
  }
}

void PredicateType::set_equality(const std::string& name) {
  if (arity(name) != 2) throw SignatureError("equality symbol '" + name + "' must have arity 2");
  equality_ = name;
}

std::size_t PredicateType::arity(const std::string& name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) throw SignatureError("undeclared predicate symbol '" + name + "'");
  return it->second;
}

void Language::check_disjoint() const {
  for (const auto& [name, arity] : predicates.symbols()) {
    if (functions.contains(name)) {
      throw SignatureError("'" + name + "' is declared both as a function and as a predicate");
    }
  }
}

Formula Formula::atom(std::string symbol, std::vector<Term> args) {
  if (symbol.empty()) throw Error("empty predicate symbol");
  auto node = std::make_shared<Node>();
  node->kind = Kind::Atom;
  node->symbol = std::move(symbol);
  node->args = std::move(args);
  return Formula(std::move(node));
}

Formula Formula::negation(Formula p) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->size = p.size() + 1;
  node->depth = p.depth() + 1;
  node->children.push_back(std::move(p));
  return Formula(std::move(node));
}

Formula Formula::conjunction(Formula p, Formula q) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->size = p.size() + q.size() + 1;
  node->depth = std::max(p.depth(), q.depth()) + 1;
  node->children.push_back(std::move(p));
  node->children.push_back(std::move(q));
  return Formula(std::move(node));
}

Formula Formula::forall(Formula body) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Forall;
  node->size = body.size() + 1;
  node->depth = body.depth() + 1;
  node->children.push_back(std::move(body));
  return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind || x.size != y.size || x.symbol != y.symbol) return false;
  return x.args == y.args && x.children == y.children;
}

bool operator<(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return false;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  if (x.kind != y.kind) return x.kind < y.kind;
  if (x.symbol != y.symbol) return x.symbol < y.symbol;
  if (x.args != y.args) {
    return std::lexicographical_compare(x.args.begin(), x.args.end(), y.args.begin(), y.args.end());
  }
  return std::lexicographical_compare(x.children.begin(), x.children.end(), y.children.begin(),
                                      y.children.end());
}

void check_formula(const Language& lang, const Formula& p) {
  switch (p.kind()) {
    case Formula::Kind::Atom: {
      std::size_t arity = lang.predicates.arity(p.symbol());
      if (arity != p.args().size()) {
        throw SignatureError("predicate symbol '" + p.symbol() + "' expects " + std::to_string(arity) +
                             " argument(s), got " + std::to_string(p.args().size()));
      }
      for (const Term& t : p.args()) check_term(lang.functions, t);
      return;
    }
    case Formula::Kind::And:
      check_formula(lang, p.left());
      check_formula(lang, p.right());
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
      check_formula(lang, p.left());
      return;
  }
}

Formula disj(const Formula& p, const Formula& q) {
  return Formula::negation(Formula::conjunction(Formula::negation(p), Formula::negation(q)));
}

Formula imp(const Formula& p, const Formula& q) { return disj(Formula::negation(p), q); }

Formula iff(const Formula& p, const Formula& q) { return Formula::conjunction(imp(p, q), imp(q, p)); }

Formula exists(const Formula& p) { return Formula::negation(Formula::forall(Formula::negation(p))); }

Formula fsubst(const Formula& p, const Substitution& s) {
  switch (p.kind()) {
    case Formula::Kind::Atom: {
      if (p.args().empty()) return p;
      std::vector<Term> args;
      args.reserve(p.args().size());
      for (const Term& t : p.args()) args.push_back(apply(t, s));
      return Formula::atom(p.symbol(), std::move(args));
    }
    case Formula::Kind::Not:
      return Formula::negation(fsubst(p.left(), s));
    case Formula::Kind::And:
      return Formula::conjunction(fsubst(p.left(), s), fsubst(p.right(), s));
    case Formula::Kind::Forall:
      return Formula::forall(fsubst(p.left(), lift(s)));
  }
  return p;
}

Formula fsubst(const Language& lang, const Formula& p, const Substitution& s) {
  check_formula(lang, p);
  for (const Term& t : s.prefix()) check_term(lang.functions, t);
  if (const auto* c = std::get_if<ConstTail>(&s.tail())) check_term(lang.functions, c->term);
  return fsubst(p, s);
}

Formula forall_xi(std::size_t i, const Formula& p) { return Formula::forall(fsubst(p, forall_rotation(i))); }

Formula exists_xi(std::size_t i, const Formula& p) { return exists(fsubst(p, forall_rotation(i))); }

Formula forall_n(std::size_t n, Formula p) {
  for (std::size_t k = 0; k < n; ++k) p = Formula::forall(std::move(p));
  return p;
}

std::size_t frank(const Formula& p) {
  switch (p.kind()) {
    case Formula::Kind::Atom: {
      std::size_t r = 0;
      for (const Term& t : p.args()) r = std::max(r, rank(t));
      return r;
    }
    case Formula::Kind::Not:
      return frank(p.left());
    case Formula::Kind::And:
      return std::max(frank(p.left()), frank(p.right()));
    case Formula::Kind::Forall: {
      std::size_t r = frank(p.left());
      return r > 0 ? r - 1 : 0;
    }
  }
  return 0;
}

Formula close_off(const Formula& p) {
  Formula result = p;
  for (std::size_t i = frank(p); i >= 1; --i) result = forall_xi(i, result);
  return result;
}

Language arithmetic_language() {
  Language lang;
  lang.functions.declare("0", 0);
  lang.functions.declare("S", 1);
  lang.functions.declare("add", 2);
  lang.functions.declare("mul", 2);
  lang.predicates.declare("e", 2);
  lang.predicates.set_equality("e");
  return lang;
}

Term zero() { return Term::app("0"); }
Term succ(Term t) { return Term::app("S", {std::move(t)}); }
Term add(Term a, Term b) { return Term::app("add", {std::move(a), std::move(b)}); }
Term mul(Term a, Term b) { return Term::app("mul", {std::move(a), std::move(b)}); }
Formula eq(Term a, Term b) { return Formula::atom("e", {std::move(a), std::move(b)}); }

std::vector<Formula> peano_core() {
  const Term x1 = Term::var(1);
  const Term x2 = Term::var(2);
  return {
      Formula::negation(eq(zero(), succ(x1))),
      imp(eq(succ(x1), succ(x2)), eq(x1, x2)),
      eq(add(x1, zero()), x1),
      eq(add(x1, succ(x2)), succ(add(x1, x2))),
      eq(mul(x1, zero()), zero()),
      eq(mul(x1, succ(x2)), add(mul(x1, x2), x1)),
  };
}

Formula peano_induction(const Formula& p) {
  check_formula(arithmetic_language(), p);
  const Term x1 = Term::var(1);
  const Formula base = fsubst(p, subst_from_list({zero()}));
  const Formula at_x1 = fsubst(p, subst_from_list({x1}));
  const Formula at_succ = fsubst(p, subst_from_list({succ(x1)}));
  return imp(Formula::conjunction(base, Formula::forall(imp(at_x1, at_succ))), Formula::forall(at_x1));
}

Formula default_induction_body() { return eq(add(zero(), Term::var(1)), Term::var(1)); }

}  // namespace clonelogic
