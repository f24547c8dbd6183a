#pragma once

// Hilbert-style proofs over first-order formulas.
//
// Proofs are certificates: every axiom step names its schema and
// parameters, every rule step names the steps it uses. The checker rebuilds
// each formula from its justification and compares structurally; it never
// searches.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "clonelogic/formula.hpp"
#include "clonelogic/prop_algebra.hpp"
#include "clonelogic/term.hpp"

namespace clonelogic {

enum class AxiomId { A1 = 1, A2, A3, A4, A5, A6, A7, A8 };

std::string to_string(AxiomId id);
/// "A1" .. "A8"; throws Error otherwise.
AxiomId axiom_id_from_string(const std::string& s);

struct AxiomInstanceSpec {
  AxiomId id = AxiomId::A1;
  std::optional<Formula> p, q, r;
  std::optional<Substitution> subst;  // A5, A8
  std::size_t index = 1;              // A7
  std::size_t generalizations = 0;    // n in forall^n
};

/// Throws Error when parameters are missing or superfluous for the schema,
/// or when A7/A8 are used without an equality symbol.
void validate_spec(const Language& lang, const AxiomInstanceSpec& spec);

/// The prime axiom, ignoring spec.generalizations.
Formula instantiate_prime_axiom(const Language& lang, const AxiomInstanceSpec& spec);
/// forall^n of the prime axiom.
Formula instantiate_axiom(const Language& lang, const AxiomInstanceSpec& spec);

struct Theory {
  std::string name;
  std::vector<Formula> formulas;
};

struct AxiomStep {
  AxiomInstanceSpec spec;
};
struct HypothesisStep {
  std::size_t index;  // into Theory::formulas
};
struct ModusPonensStep {
  std::size_t minor;  // p
  std::size_t major;  // p -> q
};
struct SubstStep {
  std::size_t source;
  Substitution subst;
};
struct GenStep {
  std::size_t source;
};

using Justification = std::variant<AxiomStep, HypothesisStep, ModusPonensStep, SubstStep, GenStep>;

struct ProofStep {
  Formula formula;
  Justification why;
};

enum class ProofKind { Local, Global };

struct Proof {
  ProofKind kind = ProofKind::Global;
  std::vector<ProofStep> steps;
};

/// Step indices are 0-based and must refer to earlier steps. Local proofs
/// admit axioms, hypotheses and modus ponens; global proofs also admit
/// substitution and generalization.
CheckResult check_proof(const Language& lang, const Proof& proof, const Theory& theory);

/// The certificate checks and ends at goal.
bool derives(const Language& lang, const Theory& theory, const Formula& goal, const Proof& proof);

/// Both certificates check against the theory and end at p and ~p.
bool inconsistency_witness(const Language& lang, const Theory& theory, const Proof& positive,
                           const Proof& negative);

}  // namespace clonelogic
