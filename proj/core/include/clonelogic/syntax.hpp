#pragma once

// Concrete syntax for every object and file format.
//
//   terms          x1, c, f(t1, ..., tn)
//   substitutions  [t1, ..., tn ; shift d]  [t1, ..., tn ; const t]  [t1, ..., tn]
//   formulas       r(t, ...)  ~p  (p & q)  (p | q)  (p -> q)  (p <-> q)
//                  forall p  forall x3. p  exists p  exists x2. p
//   environments   [d1, ..., dk ; d]  [d1, ..., dk]
//
// Printing emits core syntax, folding the exact expansions of ->, |, <->
// and exists back into their sugar, so parse(print(x)) == x. File formats
// are line based; '#' starts a comment. Proof files number their steps and
// hypotheses from 1.

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "clonelogic/formula.hpp"
#include "clonelogic/proof.hpp"
#include "clonelogic/prop_algebra.hpp"
#include "clonelogic/semantics.hpp"
#include "clonelogic/term.hpp"

namespace clonelogic {

std::string to_string(const Term& t);
std::string to_string(const Substitution& s);
std::string to_string(const Formula& p);
std::string to_string(const PropTerm& p);
std::string to_string(const Env& env);

Term parse_term(const FunctionType& type, std::string_view text);
Substitution parse_substitution(const FunctionType& type, std::string_view text);
Formula parse_formula(const Language& lang, std::string_view text);
PropTerm parse_prop(std::string_view text);
Env parse_env(std::string_view text);

/// `fn name/arity`, `rel name/arity`, `rel name/2 equality`.
Language parse_signature(std::string_view text);
std::string to_string(const Language& lang);

/// `domain n`, `fn f: v...`, `rel r: 0/1...`, `equality identity|free`.
Structure parse_structure(const Language& lang, std::string_view text);
std::string to_string(const Structure& d);

/// `n`, `not: v...`, then `and i: v...` for each i.
FinitePropAlgebra parse_algebra(std::string_view text);
std::string to_string(const FinitePropAlgebra& a);

/// `theory NAME` followed by one formula per line.
Theory parse_theory(const Language& lang, std::string_view text);

struct PropTheory {
  std::string name;
  std::vector<PropTerm> formulas;
};
PropTheory parse_prop_theory(std::string_view text);

struct ProofFile {
  std::string theory;  // empty when the file names none
  std::variant<Proof, PropProof> proof;
};

/// Header `local`, `global` or `propositional`, optional `theory NAME`, then
/// `i. <formula> BY <justification>` lines.
ProofFile parse_proof(const Language& lang, std::string_view text);
std::string to_string(const Proof& proof, const std::string& theory = {});
std::string to_string(const PropProof& proof, const std::string& theory = {});

}  // namespace clonelogic
