#include "clonelogic/proof.hpp"

#include "clonelogic/error.hpp"

namespace clonelogic {

std::string to_string(AxiomId id) { return "A" + std::to_string(static_cast<int>(id)); }

AxiomId axiom_id_from_string(const std::string& s) {
  if (s.size() == 2 && s[0] == 'A' && s[1] >= '1' && s[1] <= '8') return static_cast<AxiomId>(s[1] - '0');
  throw Error("unknown axiom schema '" + s + "'");
}

namespace {

struct Needs {
  bool p, q, r, subst, index;
};

Needs needs(AxiomId id) {
  switch (id) {
    case AxiomId::A1:
    case AxiomId::A6:
      return {true, false, false, false, false};
    case AxiomId::A2:
    case AxiomId::A4:
      return {true, true, false, false, false};
    case AxiomId::A3:
      return {true, true, true, false, false};
    case AxiomId::A5:
    case AxiomId::A8:
      return {true, false, false, true, false};
    case AxiomId::A7:
      return {false, false, false, false, true};
  }
  throw Error("unknown axiom schema");
}

void require(bool needed, bool present, const std::string& what, AxiomId id) {
  if (needed && !present) throw Error(to_string(id) + " needs parameter " + what);
  if (!needed && present) throw Error(to_string(id) + " takes no parameter " + what);
}

}  // namespace

void validate_spec(const Language& lang, const AxiomInstanceSpec& spec) {
  const Needs n = needs(spec.id);
  require(n.p, spec.p.has_value(), "p", spec.id);
  require(n.q, spec.q.has_value(), "q", spec.id);
  require(n.r, spec.r.has_value(), "r", spec.id);
  require(n.subst, spec.subst.has_value(), "subst", spec.id);
  if (n.index && spec.index == 0) throw Error("A7 index must be at least 1");
  if ((spec.id == AxiomId::A7 || spec.id == AxiomId::A8) && !lang.has_equality()) {
    throw Error(to_string(spec.id) + " requires a language with equality");
  }
  for (const auto* f : {&spec.p, &spec.q, &spec.r}) {
    if (*f) check_formula(lang, **f);
  }
  if (spec.subst) {
    for (const Term& t : spec.subst->prefix()) check_term(lang.functions, t);
    if (const auto* c = std::get_if<ConstTail>(&spec.subst->tail())) check_term(lang.functions, c->term);
  }
}

Formula instantiate_prime_axiom(const Language& lang, const AxiomInstanceSpec& spec) {
  validate_spec(lang, spec);
  switch (spec.id) {
    case AxiomId::A1:
      return imp(*spec.p, Formula::conjunction(*spec.p, *spec.p));
    case AxiomId::A2:
      return imp(Formula::conjunction(*spec.p, *spec.q), *spec.p);
    case AxiomId::A3: {
      const Formula& p = *spec.p;
      const Formula& q = *spec.q;
      const Formula& r = *spec.r;
      return imp(imp(p, q), imp(Formula::negation(Formula::conjunction(q, r)),
                                Formula::negation(Formula::conjunction(r, p))));
    }
    case AxiomId::A4: {
      const Formula& p = *spec.p;
      const Formula& q = *spec.q;
      return imp(Formula::forall(imp(p, q)), imp(Formula::forall(p), Formula::forall(q)));
    }
    case AxiomId::A5:
      return imp(fsubst(Formula::forall(*spec.p), drop_first(*spec.subst)), fsubst(*spec.p, *spec.subst));
    case AxiomId::A6:
      return imp(*spec.p, Formula::forall(fplus(*spec.p)));
    case AxiomId::A7: {
      const Term x = Term::var(spec.index);
      return Formula::atom(*lang.predicates.equality(), {x, x});
    }
    case AxiomId::A8: {
      const Substitution& s = *spec.subst;
      const Formula e = Formula::atom(*lang.predicates.equality(), {s.at(1), s.at(2)});
      return imp(Formula::conjunction(e, fsubst(*spec.p, s)), fsubst(*spec.p, dup_second(s)));
    }
  }
  throw Error("unknown axiom schema");
}

Formula instantiate_axiom(const Language& lang, const AxiomInstanceSpec& spec) {
  return forall_n(spec.generalizations, instantiate_prime_axiom(lang, spec));
}

CheckResult check_proof(const Language& lang, const Proof& proof, const Theory& theory) {
  if (proof.steps.empty()) return CheckResult::reject(0, "empty proof");
  const bool local = proof.kind == ProofKind::Local;
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const ProofStep& step = proof.steps[i];
    try {
      check_formula(lang, step.formula);
    } catch (const Error& e) {
      return CheckResult::reject(i, e.what());
    }
    auto earlier = [&](std::size_t j) { return j < i; };
    auto expect = [&](const Formula& rebuilt, const std::string& what) {
      return rebuilt == step.formula ? CheckResult::accept() : CheckResult::reject(i, what + " mismatch");
    };
    CheckResult r = std::visit(
        [&](const auto& why) -> CheckResult {
          using T = std::decay_t<decltype(why)>;
          if constexpr (std::is_same_v<T, AxiomStep>) {
            try {
              return expect(instantiate_axiom(lang, why.spec), "axiom " + to_string(why.spec.id));
            } catch (const Error& e) {
              return CheckResult::reject(i, e.what());
            }
          } else if constexpr (std::is_same_v<T, HypothesisStep>) {
            if (why.index >= theory.formulas.size()) {
              return CheckResult::reject(i, "hypothesis " + std::to_string(why.index + 1) + " does not exist");
            }
            return expect(theory.formulas[why.index], "hypothesis");
          } else if constexpr (std::is_same_v<T, ModusPonensStep>) {
            if (!earlier(why.minor) || !earlier(why.major)) {
              return CheckResult::reject(i, "modus ponens must cite earlier steps");
            }
            if (proof.steps[why.major].formula != imp(proof.steps[why.minor].formula, step.formula)) {
              return CheckResult::reject(i, "modus ponens mismatch");
            }
            return CheckResult::accept();
          } else if constexpr (std::is_same_v<T, SubstStep>) {
            if (local) return CheckResult::reject(i, "substitution is not allowed in local proofs");
            if (!earlier(why.source)) return CheckResult::reject(i, "substitution must cite an earlier step");
            try {
              return expect(fsubst(lang, proof.steps[why.source].formula, why.subst), "substitution");
            } catch (const Error& e) {
              return CheckResult::reject(i, e.what());
            }
          } else {
            if (local) return CheckResult::reject(i, "generalization is not allowed in local proofs");
            if (!earlier(why.source)) return CheckResult::reject(i, "generalization must cite an earlier step");
            return expect(Formula::forall(proof.steps[why.source].formula), "generalization");
          }
        },
        step.why);
    if (!r.ok) return r;
  }
  return CheckResult::accept();
}

bool derives(const Language& lang, const Theory& theory, const Formula& goal, const Proof& proof) {
  return check_proof(lang, proof, theory).ok && proof.steps.back().formula == goal;
}

bool inconsistency_witness(const Language& lang, const Theory& theory, const Proof& positive,
                           const Proof& negative) {
  if (!check_proof(lang, positive, theory).ok || !check_proof(lang, negative, theory).ok) return false;
  return negative.steps.back().formula == Formula::negation(positive.steps.back().formula);
}

}  // namespace clonelogic
