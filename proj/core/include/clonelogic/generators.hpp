#pragma once

// Random and exhaustive generators for terms, substitutions, formulas,
// propositional terms and axiom instances. Randomness always flows through
// a caller-owned std::mt19937_64, so every run is reproducible from a seed.

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "clonelogic/formula.hpp"
#include "clonelogic/proof.hpp"
#include "clonelogic/prop_algebra.hpp"
#include "clonelogic/semantics.hpp"
#include "clonelogic/term.hpp"

namespace clonelogic {

struct RandomShape {
  std::size_t max_var = 3;        // variables x1 .. x_max_var
  std::size_t term_depth = 2;     // nesting of function applications
  std::size_t formula_depth = 3;  // nesting of connectives and binders
  std::size_t max_prefix = 3;     // substitution prefix length
};

Term random_term(const FunctionType& type, std::mt19937_64& rng, const RandomShape& shape);
/// Uses every connective, including the derived ones and indexed binders.
Formula random_formula(const Language& lang, std::mt19937_64& rng, const RandomShape& shape);
/// Shift tails with offsets in [-prefix, 2], or a constant tail when closed
/// terms exist.
Substitution random_substitution(const FunctionType& type, std::mt19937_64& rng, const RandomShape& shape);
PropTerm random_prop(const std::vector<std::string>& vars, std::mt19937_64& rng, std::size_t depth);
/// Parameters drawn for the schema; up to two generalizations.
AxiomInstanceSpec random_axiom_spec(const Language& lang, AxiomId id, std::mt19937_64& rng,
                                    const RandomShape& shape);

/// Uniform tables; relation values are uniform masks of atom_count bits.
/// Equality, if declared, is the identity.
Structure random_structure(const Language& lang, std::size_t size, std::size_t atom_count, std::mt19937_64& rng);

/// All formulas built from the atoms with ~, & and Forall, of connective
/// depth at most depth (atoms have depth 0).
std::vector<Formula> formulas_up_to_depth(const std::vector<Formula>& atoms, std::size_t depth);

/// All terms over x1..x_max_var of syntax height at most height, a variable
/// having height 0.
std::vector<Term> terms_up_to_height(const FunctionType& type, std::size_t height, std::size_t max_var);

/// All formulas of syntax height at most height, counting term nodes: an
/// atom r(t1, ..., tn) has height 1 + max height of its arguments.
std::vector<Formula> formulas_up_to_height(const Language& lang, std::size_t height, std::size_t max_var);

}  // namespace clonelogic
