#pragma once

// Terms over a function type and the substitution monoid acting on them.
//
// A term is a variable x_i (i >= 1) or an application f(t1, ..., tn). The
// infinite sequences [a1, a2, ...] that act on terms are stored as a finite
// prefix followed by a tail rule, either a shift (a_j = x_{j+d}) or a
// constant (a_j = t). Substitutions are kept normalized, so two
// substitutions are equal as sequences iff they compare equal.

#include <cstddef>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace clonelogic {

/// Symbol name to arity.
class FunctionType {
 public:
  FunctionType() = default;
  explicit FunctionType(std::map<std::string, std::size_t> symbols);

  void declare(const std::string& name, std::size_t arity);
  bool contains(const std::string& name) const { return symbols_.count(name) != 0; }
  /// Throws SignatureError for an unknown symbol.
  std::size_t arity(const std::string& name) const;
  const std::map<std::string, std::size_t>& symbols() const { return symbols_; }
  bool empty() const { return symbols_.empty(); }

  friend bool operator==(const FunctionType&, const FunctionType&) = default;

 private:
  std::map<std::string, std::size_t> symbols_;
};

class Term {
 public:
  /// Throws Error when index is 0.
  static Term var(std::size_t index);
  /// Unchecked against any signature; see FunctionType-aware overloads below.
  static Term app(std::string symbol, std::vector<Term> args = {});

  bool is_var() const { return node_->symbol.empty(); }
  std::size_t var_index() const { return node_->index; }
  const std::string& symbol() const { return node_->symbol; }
  std::span<const Term> args() const { return node_->args; }
  /// Number of nodes.
  std::size_t size() const { return node_->size; }

  friend bool operator==(const Term& a, const Term& b);
  friend bool operator<(const Term& a, const Term& b);

 private:
  struct Node {
    std::size_t index = 0;
    std::string symbol;
    std::vector<Term> args;
    std::size_t size = 1;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Throws SignatureError naming the first undeclared or mis-applied symbol.
void check_term(const FunctionType& type, const Term& t);

/// Largest variable index in t, 0 for closed terms.
std::size_t rank(const Term& t);
inline bool is_closed(const Term& t) { return rank(t) == 0; }

/// x_i -> x_{i+1} everywhere.
Term shift_up(const Term& t);

struct ShiftTail {
  long offset = 0;
  friend bool operator==(const ShiftTail&, const ShiftTail&) = default;
};

struct ConstTail {
  Term term;
  friend bool operator==(const ConstTail&, const ConstTail&) = default;
};

using SubstTail = std::variant<ShiftTail, ConstTail>;

class Substitution {
 public:
  /// Identity [x1, x2, ...].
  Substitution();
  /// Throws Error when a shift tail would reach x_0 (prefix size + offset < 0).
  Substitution(std::vector<Term> prefix, SubstTail tail);

  static Substitution identity() { return {}; }

  /// The j-th coordinate, j >= 1.
  Term at(std::size_t j) const;

  std::span<const Term> prefix() const { return prefix_; }
  const SubstTail& tail() const { return tail_; }
  bool has_shift_tail() const { return std::holds_alternative<ShiftTail>(tail_); }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  std::vector<Term> prefix_;
  SubstTail tail_;
};

inline Term sigma_at(const Substitution& s, std::size_t j) { return s.at(j); }

/// t[s1, s2, ...].
Term apply(const Term& t, const Substitution& s);
/// Same, after validating t and every coordinate term of s against type.
Term apply(const FunctionType& type, const Term& t, const Substitution& s);

/// The sequence whose action is "apply first, then second".
Substitution compose(const Substitution& first, const Substitution& second);

/// [x2, x3, ...]
Substitution shift_up_subst();
/// [x1, x1, x2, x3, ...]
Substitution minus_subst();
/// [x2, x2, x3, x4, ...]
Substitution star_subst();

/// [x1, s1+, s2+, ...]: the sequence a binder pushes under itself.
Substitution lift(const Substitution& s);

/// [t1, ..., tn] read as [t1, ..., tn, tn, tn, ...]. Throws on an empty list.
Substitution subst_from_list(std::vector<Term> terms);

/// [x2, ..., xi, x1, x_{i+2}, ...]: brings coordinate i to the binder slot.
Substitution forall_rotation(std::size_t i);

/// [s2, s3, ...]
Substitution drop_first(const Substitution& s);
/// [s2, s2, s3, s4, ...]
Substitution dup_second(const Substitution& s);

/// Build the substitution whose first n coordinates are given by f and whose
/// remaining coordinates follow tail.
template <class F>
Substitution tabulate(std::size_t n, F&& f, SubstTail tail) {
  std::vector<Term> prefix;
  prefix.reserve(n);
  for (std::size_t j = 1; j <= n; ++j) prefix.push_back(f(j));
  return Substitution(std::move(prefix), std::move(tail));
}

}  // namespace clonelogic
