#pragma once

// First-order formulas as a predicate algebra over the term clone.
//
// Only four constructors are stored: atoms, negation, conjunction and the
// positional binder Forall, which binds coordinate 1 of its body. Every
// other connective and the indexed binders forall x_i / exists x_i are
// helpers that build core syntax, so structural equality is the equality
// of the algebra.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clonelogic/term.hpp"

namespace clonelogic {

class PredicateType {
 public:
  void declare(const std::string& name, std::size_t arity);
  /// The symbol must already be declared with arity 2.
  void set_equality(const std::string& name);

  bool contains(const std::string& name) const { return symbols_.count(name) != 0; }
  std::size_t arity(const std::string& name) const;
  const std::map<std::string, std::size_t>& symbols() const { return symbols_; }
  const std::optional<std::string>& equality() const { return equality_; }

  friend bool operator==(const PredicateType&, const PredicateType&) = default;

 private:
  std::map<std::string, std::size_t> symbols_;
  std::optional<std::string> equality_;
};

struct Language {
  FunctionType functions;
  PredicateType predicates;

  bool has_equality() const { return predicates.equality().has_value(); }
  /// Throws SignatureError when a name is both a function and a predicate.
  void check_disjoint() const;

  friend bool operator==(const Language&, const Language&) = default;
};

class Formula {
 public:
  enum class Kind { Atom, Not, And, Forall };

  static Formula atom(std::string symbol, std::vector<Term> args = {});
  static Formula negation(Formula p);
  static Formula conjunction(Formula p, Formula q);
  static Formula forall(Formula body);

  Kind kind() const { return node_->kind; }
  bool is_atom() const { return kind() == Kind::Atom; }
  const std::string& symbol() const { return node_->symbol; }
  std::span<const Term> args() const { return node_->args; }
  /// Operand of Not / Forall, left operand of And.
  const Formula& left() const { return node_->children[0]; }
  const Formula& right() const { return node_->children[1]; }
  /// Number of connective and atom nodes.
  std::size_t size() const { return node_->size; }
  std::size_t depth() const { return node_->depth; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator<(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind = Kind::Atom;
    std::string symbol;
    std::vector<Term> args;
    std::vector<Formula> children;
    std::size_t size = 1;
    std::size_t depth = 0;
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Throws SignatureError naming the first undeclared or mis-applied symbol.
void check_formula(const Language& lang, const Formula& p);

// Derived connectives; each returns core syntax.
Formula disj(const Formula& p, const Formula& q);  // ~(~p & ~q)
Formula imp(const Formula& p, const Formula& q);   // ~p | q
Formula iff(const Formula& p, const Formula& q);   // (p -> q) & (q -> p)
Formula exists(const Formula& p);                  // ~forall ~p

/// p[s1, s2, ...]; the binder case pushes lift(s) under Forall.
Formula fsubst(const Formula& p, const Substitution& s);
/// Same, after validating p and the coordinate terms of s.
Formula fsubst(const Language& lang, const Formula& p, const Substitution& s);

inline Formula fplus(const Formula& p) { return fsubst(p, shift_up_subst()); }
inline Formula fminus(const Formula& p) { return fsubst(p, minus_subst()); }
inline Formula fstar(const Formula& p) { return fsubst(p, star_subst()); }

Formula forall_xi(std::size_t i, const Formula& p);
Formula exists_xi(std::size_t i, const Formula& p);
/// Forall applied n times.
Formula forall_n(std::size_t n, Formula p);

/// Least n such that p is fixed by [x1, ..., xn]; 0 for sentences.
std::size_t frank(const Formula& p);
inline bool is_sentence(const Formula& p) { return frank(p) == 0; }

/// forall x1. (... (forall xn. p)) with n = frank(p); always a sentence.
Formula close_off(const Formula& p);

// Arithmetic: 0/0, S/1, add/2, mul/2 and equality e/2.
Language arithmetic_language();
Term zero();
Term succ(Term t);
Term add(Term a, Term b);
Term mul(Term a, Term b);
Formula eq(Term a, Term b);

/// S1 through S6 in order.
std::vector<Formula> peano_core();
/// (p[0] & forall (p[x1] -> p[S(x1)])) -> forall p[x1]. Throws when p is not
/// over the arithmetic language.
Formula peano_induction(const Formula& p);
/// The induction body used when an S7 instance is printed on its own.
Formula default_induction_body();

}  // namespace clonelogic
