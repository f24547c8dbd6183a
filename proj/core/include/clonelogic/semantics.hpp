#pragma once

// Finite structures and the evaluation of terms and formulas in them.
//
// Truth values live in a finite Boolean algebra B with k atoms, stored as
// k-bit masks; k = 1 is the two-element algebra. A structure's relation
// tables hold masks of its own width. Environments are eventually constant
// sequences of domain elements.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "clonelogic/formula.hpp"
#include "clonelogic/term.hpp"

namespace clonelogic {

using Element = std::uint32_t;
using BValue = std::uint64_t;

class FiniteBooleanAlg {
 public:
  /// 1 <= atom_count <= 64.
  explicit FiniteBooleanAlg(std::size_t atom_count = 1);

  std::size_t atom_count() const { return atoms_; }
  BValue bottom() const { return 0; }
  BValue top() const { return top_; }
  BValue meet(BValue a, BValue b) const { return a & b; }
  BValue join(BValue a, BValue b) const { return a | b; }
  BValue complement(BValue a) const { return ~a & top_; }
  bool contains(BValue a) const { return (a & ~top_) == 0; }

  friend bool operator==(const FiniteBooleanAlg&, const FiniteBooleanAlg&) = default;

 private:
  std::size_t atoms_;
  BValue top_;
};

/// (d1, ..., dk, fallback, fallback, ...).
struct Env {
  std::vector<Element> prefix;
  Element fallback = 0;

  /// Coordinate i >= 1.
  Element at(std::size_t i) const { return i <= prefix.size() ? prefix[i - 1] : fallback; }

  friend bool operator==(const Env&, const Env&) = default;
};

class Structure {
 public:
  enum class EqualityMode { Identity, Free };

  /// All function tables start at 0 and all relations empty. In Identity
  /// mode the equality symbol, if any, is fixed to the identity relation.
  Structure(Language language, std::size_t size, std::size_t atom_count = 1,
            EqualityMode mode = EqualityMode::Identity);

  /// 0, S, add, mul modulo m with identity equality.
  static Structure zmod(std::size_t m);

  const Language& language() const { return language_; }
  std::size_t size() const { return size_; }
  std::size_t atom_count() const { return atoms_; }
  EqualityMode equality_mode() const { return mode_; }
  bool identity_equality() const { return mode_ == EqualityMode::Identity && language_.has_equality(); }

  /// Row-major over argument tuples (first argument most significant).
  void set_function(const std::string& name, std::vector<Element> table);
  void set_relation(const std::string& name, std::vector<BValue> table);
  std::span<const Element> function_table(const std::string& name) const;
  std::span<const BValue> relation_table(const std::string& name) const;
  // Unchecked cell writes, for enumeration.
  void set_function_cell(std::size_t fn, std::size_t cell, Element v) { fn_tables_[fn][cell] = v; }
  void set_relation_cell(std::size_t rel, std::size_t cell, BValue v) { rel_tables_[rel][cell] = v; }

  // Tables in symbol order of the language's maps.
  const std::vector<std::vector<Element>>& function_tables() const { return fn_tables_; }
  const std::vector<std::vector<BValue>>& relation_tables() const { return rel_tables_; }

  friend bool operator==(const Structure&, const Structure&) = default;

 private:
  std::size_t function_index(const std::string& name) const;
  std::size_t relation_index(const std::string& name) const;

  Language language_;
  std::size_t size_;
  std::size_t atoms_;
  EqualityMode mode_;
  std::vector<std::vector<Element>> fn_tables_;
  std::vector<std::vector<BValue>> rel_tables_;
};

Element eval_term(const Structure& d, const Term& t, const Env& env);
/// Two-valued evaluation; the structure must have atom_count 1.
bool eval_formula(const Structure& d, const Formula& p, const Env& env);
/// B-valued evaluation; b must match the structure's mask width.
BValue eval_formula_B(const Structure& d, const FiniteBooleanAlg& b, const Formula& p, const Env& env);

/// First environment (prefix of length frank(p), ascending lexicographic,
/// fallback 0) under which p is false.
std::optional<Env> find_counterexample_env(const Structure& d, const Formula& p);
bool is_valid(const Structure& d, const Formula& p);

/// Every structure of one size over a language, indexed in the documented
/// order: the cells of the function tables then the relation tables,
/// symbols in name order, each table row-major, read as a mixed-radix
/// counter whose first cell varies fastest. Equality is fixed to the
/// identity and contributes no cells.
class StructureSpace {
 public:
  /// Restricting to `only` leaves every other table at its zero value.
  StructureSpace(Language language, std::size_t size, std::optional<std::set<std::string>> only = std::nullopt);

  std::size_t cell_count() const { return radices_.size(); }
  /// Number of structures, saturating at UINT64_MAX.
  std::uint64_t count() const { return count_; }
  Structure at(std::uint64_t index) const;
  /// Overwrites the enumerated cells of a structure produced by at().
  void decode_into(std::uint64_t index, Structure& out) const;

 private:
  struct Cell {
    bool is_function;
    std::size_t table;
    std::size_t offset;
  };
  Language language_;
  std::size_t size_;
  std::vector<Cell> cells_;
  std::vector<std::uint64_t> radices_;
  std::uint64_t count_ = 1;
};

struct CountermodelOptions {
  std::size_t cell_cap = 16;
  std::size_t threads = 1;
};

/// First structure of size 1..max_size (in StructureSpace order) in which p
/// is not valid. Throws Error when a size would need more than cell_cap
/// table cells.
std::optional<Structure> countermodel_search(const Language& lang, const Formula& p, std::size_t max_size,
                                             const CountermodelOptions& options = {});

/// The symbols occurring in p.
std::set<std::string> symbols_of(const Formula& p);

struct ValidityBudget {
  /// Spaces at most this large are enumerated exhaustively; larger ones
  /// are sampled this many times.
  std::uint64_t exhaustive_limit = 4096;
  std::uint64_t seed = 1;
};

struct ValidityReport {
  bool valid = true;
  std::uint64_t structures_checked = 0;
  bool sampled = false;  // some size was sampled rather than enumerated
  std::optional<Structure> counterexample;
  std::optional<Env> counterexample_env;
};

/// Validity in structures of size 1..max_size over the symbols occurring in p.
ValidityReport check_validity_up_to(const Language& lang, const Formula& p, std::size_t max_size,
                                    const ValidityBudget& budget = {});

/// An element of P_B(M) depending on the first `width` coordinates, stored as
/// a table over M^width (coordinate 1 least significant).
class FunctionalElement {
 public:
  FunctionalElement(std::size_t domain, std::size_t width, std::vector<BValue> values);

  static FunctionalElement of_formula(const Structure& d, const FiniteBooleanAlg& b, const Formula& p,
                                      std::size_t width);
  static FunctionalElement constant(std::size_t domain, std::size_t width, BValue v);
  /// 1 where m1 = m2, 0 elsewhere.
  static FunctionalElement equality(std::size_t domain, std::size_t width, const FiniteBooleanAlg& b);

  std::size_t domain() const { return domain_; }
  std::size_t width() const { return width_; }
  std::span<const BValue> values() const { return values_; }
  Env env_of(std::size_t index) const;

  FunctionalElement negate(const FiniteBooleanAlg& b) const;
  FunctionalElement meet(const FunctionalElement& other) const;
  /// Meet over the first coordinate. Exact for elements that ignore the
  /// last coordinate of the table.
  FunctionalElement forall(const FiniteBooleanAlg& b) const;
  /// Coordinates [x2, x3, ...]; exact for elements ignoring the last one.
  FunctionalElement plus() const;
  /// Coordinates [x2, x2, x3, ...].
  FunctionalElement star() const;

  friend bool operator==(const FunctionalElement&, const FunctionalElement&) = default;

 private:
  std::size_t index_of(std::span<const Element> coords) const;

  std::size_t domain_;
  std::size_t width_;
  std::vector<BValue> values_;
};

struct LawResult {
  std::string law;  // "Q1" .. "Q5"
  bool passed = true;
  std::size_t instances = 0;
  std::optional<Formula> witness_p;
  std::optional<Formula> witness_q;
  std::optional<Env> witness_env;
};

struct QaReport {
  std::vector<LawResult> laws;
  bool passed() const;
};

/// Q1..Q5 in the functional algebra over d and b for every sample formula
/// (pairs for Q1), pointwise over all environments of length rank_bound + 2.
/// Sample formulas must have frank <= rank_bound.
QaReport qa_law_check(const Structure& d, const FiniteBooleanAlg& b, const std::vector<Formula>& sample,
                      std::size_t rank_bound);

struct PerfectEntry {
  enum class Status {
    Sound,          // forall p true and every candidate instance true
    Unsound,        // forall p true but some candidate instance false
    Witnessed,      // ~forall p true and a candidate witnesses ~p
    Inconclusive,   // ~forall p true and no candidate witnesses ~p
  };
  Formula p;
  Status status = Status::Sound;
  std::optional<Term> witness;
};

struct PerfectReport {
  std::vector<PerfectEntry> entries;
  bool sound() const;
};

/// Checks the valuation {q : q true at env} against the witness conditions
/// for forall, using instances p[a, x1, x2, ...] with a from candidates.
PerfectReport perfect_check_bounded(const Structure& d, const Env& env, const std::vector<Term>& candidates,
                                    const std::vector<Formula>& sample);

/// The conjunction of the sentences is true in d. Throws on a non-sentence.
bool finite_meet_property(const std::vector<Formula>& sentences, const Structure& d);

}  // namespace clonelogic
