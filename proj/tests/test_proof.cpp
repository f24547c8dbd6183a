#include <gtest/gtest.h>

#include <random>

#include "clonelogic/error.hpp"
#include "clonelogic/generators.hpp"
#include "clonelogic/proof.hpp"
#include "oracles.hpp"

using namespace clonelogic;

namespace {

Term x(std::size_t i) { return Term::var(i); }
Formula r(Term a) { return Formula::atom("r", {std::move(a)}); }
Formula q2(Term a, Term b) { return Formula::atom("q", {std::move(a), std::move(b)}); }
Formula all(Formula p) { return Formula::forall(std::move(p)); }

Language lang(bool equality = true) {
  Language l;
  l.functions.declare("f", 1);
  l.predicates.declare("r", 1);
  l.predicates.declare("q", 2);
  if (equality) {
    l.predicates.declare("e", 2);
    l.predicates.set_equality("e");
  }
  return l;
}

AxiomInstanceSpec spec(AxiomId id) {
  AxiomInstanceSpec s;
  s.id = id;
  return s;
}

TEST(AxiomIds, RoundTrip) {
  for (int i = 1; i <= 8; ++i) {
    const auto id = static_cast<AxiomId>(i);
    EXPECT_EQ(axiom_id_from_string(to_string(id)), id);
  }
  EXPECT_THROW(axiom_id_from_string("A9"), Error);
}

TEST(PrimeAxioms, Examples) {
  AxiomInstanceSpec a6 = spec(AxiomId::A6);
  a6.p = r(x(1));
  EXPECT_EQ(instantiate_prime_axiom(lang(), a6), imp(r(x(1)), all(r(x(2)))));

  AxiomInstanceSpec a7 = spec(AxiomId::A7);
  a7.index = 3;
  EXPECT_EQ(instantiate_prime_axiom(lang(), a7), Formula::atom("e", {x(3), x(3)}));

  AxiomInstanceSpec a4 = spec(AxiomId::A4);
  a4.p = r(x(1));
  a4.q = q2(x(1), x(2));
  EXPECT_EQ(instantiate_prime_axiom(lang(), a4),
            imp(all(imp(r(x(1)), q2(x(1), x(2)))), imp(all(r(x(1))), all(q2(x(1), x(2))))));
}

TEST(PrimeAxioms, A5AndA8UseDerivedSequences) {
  const Term fx = Term::app("f", {x(1)});
  AxiomInstanceSpec a5 = spec(AxiomId::A5);
  a5.p = q2(x(1), x(2));
  a5.subst = Substitution({fx, x(3)}, ShiftTail{0});
  // (forall q(x1, x2))[x3, x3, x4, ...] -> q(f(x1), x3)
  EXPECT_EQ(instantiate_prime_axiom(lang(), a5), imp(all(q2(x(1), x(4))), q2(fx, x(3))));

  AxiomInstanceSpec a8 = spec(AxiomId::A8);
  a8.p = q2(x(1), x(2));
  a8.subst = Substitution({fx, x(3)}, ShiftTail{0});
  const Formula e = Formula::atom("e", {fx, x(3)});
  EXPECT_EQ(instantiate_prime_axiom(lang(), a8), imp(Formula::conjunction(e, q2(fx, x(3))), q2(x(3), x(3))));
}

TEST(PrimeAxioms, ParameterValidation) {
  AxiomInstanceSpec a1 = spec(AxiomId::A1);
  EXPECT_THROW(instantiate_prime_axiom(lang(), a1), Error);
  a1.p = r(x(1));
  a1.q = r(x(2));
  EXPECT_THROW(instantiate_prime_axiom(lang(), a1), Error);
  AxiomInstanceSpec a7 = spec(AxiomId::A7);
  EXPECT_THROW(instantiate_prime_axiom(lang(false), a7), Error);
  a7.index = 0;
  EXPECT_THROW(instantiate_prime_axiom(lang(), a7), Error);
  AxiomInstanceSpec a5 = spec(AxiomId::A5);
  a5.p = r(x(1));
  EXPECT_THROW(instantiate_prime_axiom(lang(), a5), Error);
  AxiomInstanceSpec bad = spec(AxiomId::A1);
  bad.p = Formula::atom("zz");
  EXPECT_THROW(instantiate_prime_axiom(lang(), bad), SignatureError);
}

TEST(Axioms, Generalizations) {
  AxiomInstanceSpec a1 = spec(AxiomId::A1);
  a1.p = q2(x(1), x(2));
  const Formula prime = instantiate_prime_axiom(lang(), a1);
  EXPECT_EQ(instantiate_axiom(lang(), a1), prime);
  a1.generalizations = 2;
  EXPECT_EQ(instantiate_axiom(lang(), a1), all(all(prime)));
  for (std::size_t n = 0; n <= 4; ++n) {
    a1.generalizations = n;
    EXPECT_EQ(frank(instantiate_axiom(lang(), a1)), frank(prime) - std::min(n, frank(prime)));
  }
}

TEST(CheckProof, GlobalGeneralizationAndSubstitution) {
  const Language l = lang();
  const Formula p = q2(x(1), x(2));
  const Theory t{"T", {p}};
  Proof gen{ProofKind::Global, {{p, HypothesisStep{0}}, {all(p), GenStep{0}}}};
  EXPECT_TRUE(check_proof(l, gen, t).ok);
  EXPECT_TRUE(derives(l, t, all(p), gen));
  EXPECT_FALSE(derives(l, t, p, gen));

  Proof local = gen;
  local.kind = ProofKind::Local;
  const CheckResult r = check_proof(l, local, t);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.step, 1u);
  EXPECT_NE(r.reason.find("local"), std::string::npos);

  const Substitution s = subst_from_list({Term::app("f", {x(2)})});
  Proof sub{ProofKind::Global, {{p, HypothesisStep{0}}, {fsubst(p, s), SubstStep{0, s}}}};
  EXPECT_TRUE(check_proof(l, sub, t).ok);
}

TEST(CheckProof, ModusPonensAndErrors) {
  const Language l = lang();
  const Formula p = r(x(1)), q = r(x(2));
  const Theory t{"T", {p, imp(p, q)}};
  Proof mp{ProofKind::Local, {{p, HypothesisStep{0}}, {imp(p, q), HypothesisStep{1}}, {q, ModusPonensStep{0, 1}}}};
  EXPECT_TRUE(check_proof(l, mp, t).ok);
  EXPECT_TRUE(derives(l, t, q, mp));

  Proof swapped = mp;
  swapped.steps[2].why = ModusPonensStep{1, 0};
  EXPECT_FALSE(check_proof(l, swapped, t).ok);
  Proof forward = mp;
  forward.steps[2].why = ModusPonensStep{0, 2};
  EXPECT_FALSE(check_proof(l, forward, t).ok);
  Proof missing = mp;
  missing.steps[0].why = HypothesisStep{5};
  EXPECT_FALSE(check_proof(l, missing, t).ok);
  EXPECT_FALSE(check_proof(l, Proof{}, t).ok);
}

TEST(CheckProof, AxiomStepInEmptyTheory) {
  const Language l = lang();
  AxiomInstanceSpec a6 = spec(AxiomId::A6);
  a6.p = r(x(1));
  const Formula goal = instantiate_axiom(l, a6);
  Proof proof{ProofKind::Local, {{goal, AxiomStep{a6}}}};
  EXPECT_TRUE(derives(l, Theory{}, goal, proof));
  AxiomInstanceSpec wrong = a6;
  wrong.id = AxiomId::A1;
  proof.steps[0].why = AxiomStep{wrong};
  EXPECT_FALSE(check_proof(l, proof, Theory{}).ok);
}

TEST(Inconsistency, Witnesses) {
  const Language l = lang();
  const Formula p = r(x(1));
  const Theory t{"T", {p, Formula::negation(p)}};
  const Proof pos{ProofKind::Global, {{p, HypothesisStep{0}}}};
  const Proof negp{ProofKind::Global, {{Formula::negation(p), HypothesisStep{1}}}};
  EXPECT_TRUE(inconsistency_witness(l, t, pos, negp));
  const Theory only{"T", {p}};
  EXPECT_FALSE(inconsistency_witness(l, only, pos, negp));
  const Formula q = r(x(2));
  const Theory other{"T", {q, Formula::negation(q)}};
  const Proof posq{ProofKind::Global, {{q, HypothesisStep{0}}}};
  EXPECT_FALSE(inconsistency_witness(l, other, posq, negp));
}

TEST(Soundness, RandomAxiomsValidInSmallStructures) {
  const Language l = lang();
  std::mt19937_64 rng(99);
  const RandomShape shape{.max_var = 2, .term_depth = 1, .formula_depth = 2, .max_prefix = 2};
  for (int id = 1; id <= 8; ++id) {
    for (int k = 0; k < 10; ++k) {
      const Formula a = instantiate_axiom(l, random_axiom_spec(l, static_cast<AxiomId>(id), rng, shape));
      for (std::size_t size = 1; size <= 2; ++size) {
        for (int s = 0; s < 3; ++s) {
          ASSERT_TRUE(oracle::valid_in(random_structure(l, size, 1, rng), a)) << to_string(static_cast<AxiomId>(id));
        }
      }
    }
  }
}

TEST(LocalInGlobal, RetaggedLocalProofAccepted) {
  const Language l = lang();
  const Formula p = r(x(1)), q = r(x(2));
  const Theory t{"T", {p, imp(p, q)}};
  Proof mp{ProofKind::Local, {{p, HypothesisStep{0}}, {imp(p, q), HypothesisStep{1}}, {q, ModusPonensStep{0, 1}}}};
  mp.kind = ProofKind::Global;
  EXPECT_TRUE(check_proof(l, mp, t).ok);
}

}  // namespace
