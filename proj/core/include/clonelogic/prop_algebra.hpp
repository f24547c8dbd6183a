#pragma once

// Proposition algebras: the free algebra of propositional terms and finite
// algebras given by tables, with valuations, filters, deduction closure,
// Boolean-law checks and filter quotients computed by brute force.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace clonelogic {

class PropTerm {
 public:
  enum class Kind { Var, Not, And };

  static PropTerm var(std::string name);
  static PropTerm negation(PropTerm p);
  static PropTerm conjunction(PropTerm p, PropTerm q);

  Kind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const PropTerm& left() const { return node_->children[0]; }
  const PropTerm& right() const { return node_->children[1]; }
  std::size_t depth() const { return node_->depth; }

  friend bool operator==(const PropTerm& a, const PropTerm& b);
  friend bool operator<(const PropTerm& a, const PropTerm& b);

 private:
  struct Node {
    Kind kind = Kind::Var;
    std::string name;
    std::vector<PropTerm> children;
    std::size_t depth = 0;
  };
  explicit PropTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

enum class Connective { Or, Imp, Iff };

PropTerm expand_sugar(Connective kind, const PropTerm& p, const PropTerm& q);
inline PropTerm prop_or(const PropTerm& p, const PropTerm& q) { return expand_sugar(Connective::Or, p, q); }
inline PropTerm prop_imp(const PropTerm& p, const PropTerm& q) { return expand_sugar(Connective::Imp, p, q); }
inline PropTerm prop_iff(const PropTerm& p, const PropTerm& q) { return expand_sugar(Connective::Iff, p, q); }

// The three axiom shapes, usable in any proposition algebra.
PropTerm axiom_a1(const PropTerm& p);
PropTerm axiom_a2(const PropTerm& p, const PropTerm& q);
PropTerm axiom_a3(const PropTerm& p, const PropTerm& q, const PropTerm& r);

std::set<std::string> variables(const PropTerm& p);
bool evaluate(const PropTerm& p, const std::map<std::string, bool>& assignment);
/// True under every 0/1 assignment to its variables.
bool tautology(const PropTerm& p);
/// Every assignment satisfying all of premises satisfies p.
bool semantic_consequence(const std::vector<PropTerm>& premises, const PropTerm& p);

/// Subset of a finite carrier {0, ..., n-1}, n <= 64.
class ElementSet {
 public:
  ElementSet() = default;
  ElementSet(std::size_t width, std::uint64_t bits);
  static ElementSet empty(std::size_t width) { return {width, 0}; }
  static ElementSet full(std::size_t width);
  static ElementSet of(std::size_t width, std::initializer_list<std::size_t> elements);

  std::size_t width() const { return width_; }
  std::uint64_t bits() const { return bits_; }
  bool contains(std::size_t x) const { return (bits_ >> x) & 1U; }
  void insert(std::size_t x) { bits_ |= std::uint64_t{1} << x; }
  std::size_t count() const;
  bool subset_of(const ElementSet& other) const { return (bits_ & ~other.bits_) == 0; }
  ElementSet operator&(const ElementSet& o) const { return {width_, bits_ & o.bits_}; }
  ElementSet operator|(const ElementSet& o) const { return {width_, bits_ | o.bits_}; }
  std::vector<std::size_t> elements() const;

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

 private:
  std::size_t width_ = 0;
  std::uint64_t bits_ = 0;
};

/// (P, and, not) on {0, ..., n-1} given by tables. No laws are assumed.
class FinitePropAlgebra {
 public:
  /// Throws Error when a table has the wrong shape or an entry out of range.
  FinitePropAlgebra(std::vector<std::vector<std::size_t>> and_table, std::vector<std::size_t> not_table);

  /// {0, 1} with the usual tables.
  static FinitePropAlgebra two();
  /// Free Boolean algebra on g generators, elements encoded as truth tables.
  static FinitePropAlgebra free_boolean(std::size_t generators);

  std::size_t size() const { return not_.size(); }
  std::size_t conj(std::size_t a, std::size_t b) const { return and_[a][b]; }
  std::size_t neg(std::size_t a) const { return not_[a]; }
  std::size_t disj(std::size_t a, std::size_t b) const { return neg(conj(neg(a), neg(b))); }
  std::size_t imp(std::size_t a, std::size_t b) const { return disj(neg(a), b); }
  std::size_t iff(std::size_t a, std::size_t b) const { return conj(imp(a, b), imp(b, a)); }

  const std::vector<std::vector<std::size_t>>& and_table() const { return and_; }
  const std::vector<std::size_t>& not_table() const { return not_; }

  friend bool operator==(const FinitePropAlgebra&, const FinitePropAlgebra&) = default;

 private:
  std::vector<std::vector<std::size_t>> and_;
  std::vector<std::size_t> not_;
};

/// Largest carrier the subset enumerations accept by default.
inline constexpr std::size_t kDefaultEnumerationBound = 16;

bool is_valuation(const FinitePropAlgebra& a, const ElementSet& v);
/// All valuations in ascending bitset order. Throws above the bound.
std::vector<ElementSet> enumerate_valuations(const FinitePropAlgebra& a,
                                             std::size_t bound = kDefaultEnumerationBound);
/// Intersection of all valuations; the whole carrier when there are none.
ElementSet val_set(const FinitePropAlgebra& a, std::size_t bound = kDefaultEnumerationBound);

/// Values of every A1, A2, A3 instance.
ElementSet axiom_elements(const FinitePropAlgebra& a);
bool is_mp_closed(const FinitePropAlgebra& a, const ElementSet& s);
/// Least MP-closed superset of t and the axiom elements.
ElementSet ded_closure(const FinitePropAlgebra& a, const ElementSet& t);

bool is_filter(const FinitePropAlgebra& a, const ElementSet& f);
std::vector<ElementSet> enumerate_filters(const FinitePropAlgebra& a, std::size_t bound = kDefaultEnumerationBound);
/// Proper filter with no proper filter strictly above it.
bool is_maximal_filter(const FinitePropAlgebra& a, const ElementSet& f, std::size_t bound = kDefaultEnumerationBound);
/// Filter with p in F iff ~p not in F, for every p.
bool is_maximal_filter_by_negation(const FinitePropAlgebra& a, const ElementSet& f);
/// Intersection of the valuations containing t; the whole carrier when none do.
ElementSet consequences(const FinitePropAlgebra& a, const ElementSet& t,
                        std::size_t bound = kDefaultEnumerationBound);
/// Some p has both p and ~p in ded_closure(t).
bool is_inconsistent(const FinitePropAlgebra& a, const ElementSet& t);
/// {p | ~p : p in carrier}.
ElementSet tautology_elements(const FinitePropAlgebra& a);

/// Associativity, commutativity and the two complement conditions.
bool is_boolean(const FinitePropAlgebra& a);
/// Closed under and, upward closed under or, contains the tautology element.
bool is_boolean_filter(const FinitePropAlgebra& a, const ElementSet& f);

struct Quotient {
  FinitePropAlgebra algebra;
  /// Element of the original carrier to its class.
  std::vector<std::size_t> projection;
};

/// Quotient by p ~ q iff (p <-> q) in f. Throws when f is not a filter or the
/// relation fails to be a congruence.
Quotient lindenbaum(const FinitePropAlgebra& a, const ElementSet& f);

/// Truth-table classes of all terms of depth <= depth over the named
/// variables, each with its least representative. Tables index assignments
/// with variable i at bit i.
std::map<std::vector<bool>, PropTerm> free_fragment_classes(const std::vector<std::string>& vars,
                                                             std::size_t depth);
/// The fragment's class set as a table algebra; the class set must be closed
/// under the operations (it is once the depth reaches its fixpoint).
FinitePropAlgebra free_fragment_algebra(const std::vector<std::string>& vars, std::size_t depth);

struct PropAxiomA1 {
  PropTerm p;
};
struct PropAxiomA2 {
  PropTerm p, q;
};
struct PropAxiomA3 {
  PropTerm p, q, r;
};
struct PropHypothesis {
  std::size_t index;
};
struct PropModusPonens {
  std::size_t minor;  // step holding p
  std::size_t major;  // step holding p -> q
};

using PropJustification = std::variant<PropAxiomA1, PropAxiomA2, PropAxiomA3, PropHypothesis, PropModusPonens>;

struct PropProofStep {
  PropTerm formula;
  PropJustification why;
};

struct PropProof {
  std::vector<PropProofStep> steps;
};

struct CheckResult {
  bool ok = true;
  std::size_t step = 0;  // first failing step, 0-based
  std::string reason;

  static CheckResult accept() { return {}; }
  static CheckResult reject(std::size_t step, std::string reason) { return {false, step, std::move(reason)}; }
};

/// Step indices are 0-based and must point to earlier steps.
CheckResult check_prop_proof(const PropProof& proof, const std::vector<PropTerm>& hypotheses);

}  // namespace clonelogic
