#include "clonelogic/generators.hpp"

#include "clonelogic/error.hpp"

namespace clonelogic {

namespace {

std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng, double p) { return std::bernoulli_distribution(p)(rng); }

template <class Map>
const typename Map::value_type& pick(const Map& m, std::mt19937_64& rng) {
  auto it = m.begin();
  std::advance(it, uniform(rng, 0, m.size() - 1));
  return *it;
}

bool has_constant(const FunctionType& type) {
  for (const auto& [name, arity] : type.symbols()) {
    if (arity == 0) return true;
  }
  return false;
}

Term term_at(const FunctionType& type, std::mt19937_64& rng, std::size_t depth, std::size_t max_var) {
  const bool leaf = depth == 0 || type.empty() || coin(rng, 0.4);
  if (leaf && max_var > 0) return Term::var(uniform(rng, 1, max_var));
  if (leaf || depth == 0) {
    std::vector<std::string> constants;
    for (const auto& [name, arity] : type.symbols()) {
      if (arity == 0) constants.push_back(name);
    }
    if (constants.empty()) throw Error("no closed terms over this function type");
    return Term::app(constants[uniform(rng, 0, constants.size() - 1)]);
  }
  const auto& [name, arity] = pick(type.symbols(), rng);
  std::vector<Term> args;
  for (std::size_t k = 0; k < arity; ++k) args.push_back(term_at(type, rng, depth - 1, max_var));
  return Term::app(name, std::move(args));
}

Formula formula_at(const Language& lang, std::mt19937_64& rng, std::size_t depth, const RandomShape& shape) {
  if (depth == 0 || coin(rng, 0.25)) {
    const auto& [name, arity] = pick(lang.predicates.symbols(), rng);
    std::vector<Term> args;
    for (std::size_t k = 0; k < arity; ++k) args.push_back(random_term(lang.functions, rng, shape));
    return Formula::atom(name, std::move(args));
  }
  auto sub = [&] { return formula_at(lang, rng, depth - 1, shape); };
  switch (uniform(rng, 0, 9)) {
    case 0:
    case 1: return Formula::negation(sub());
    case 2:
    case 3: return Formula::conjunction(sub(), sub());
    case 4: return Formula::forall(sub());
    case 5: return disj(sub(), sub());
    case 6: return imp(sub(), sub());
    case 7: return exists(sub());
    case 8: return forall_xi(uniform(rng, 1, shape.max_var + 1), sub());
    default: return exists_xi(uniform(rng, 1, shape.max_var + 1), sub());
  }
}

}  // namespace

Term random_term(const FunctionType& type, std::mt19937_64& rng, const RandomShape& shape) {
  return term_at(type, rng, shape.term_depth, shape.max_var);
}

Formula random_formula(const Language& lang, std::mt19937_64& rng, const RandomShape& shape) {
  if (lang.predicates.symbols().empty()) throw Error("random_formula needs at least one predicate");
  return formula_at(lang, rng, shape.formula_depth, shape);
}

Substitution random_substitution(const FunctionType& type, std::mt19937_64& rng, const RandomShape& shape) {
  const std::size_t n = uniform(rng, 0, shape.max_prefix);
  std::vector<Term> prefix;
  for (std::size_t k = 0; k < n; ++k) prefix.push_back(random_term(type, rng, shape));
  if (has_constant(type) && coin(rng, 0.25)) {
    return Substitution(std::move(prefix), ConstTail{term_at(type, rng, shape.term_depth, 0)});
  }
  const long offset = std::uniform_int_distribution<long>(-static_cast<long>(n), 2)(rng);
  return Substitution(std::move(prefix), ShiftTail{offset});
}

PropTerm random_prop(const std::vector<std::string>& vars, std::mt19937_64& rng, std::size_t depth) {
  if (depth == 0 || coin(rng, 0.25)) return PropTerm::var(vars[uniform(rng, 0, vars.size() - 1)]);
  auto sub = [&] { return random_prop(vars, rng, depth - 1); };
  switch (uniform(rng, 0, 4)) {
    case 0: return PropTerm::negation(sub());
    case 1: return PropTerm::conjunction(sub(), sub());
    case 2: return prop_or(sub(), sub());
    case 3: return prop_imp(sub(), sub());
    default: return prop_iff(sub(), sub());
  }
}

AxiomInstanceSpec random_axiom_spec(const Language& lang, AxiomId id, std::mt19937_64& rng,
                                    const RandomShape& shape) {
  AxiomInstanceSpec spec;
  spec.id = id;
  auto formula = [&] { return random_formula(lang, rng, shape); };
  switch (id) {
    case AxiomId::A3:
      spec.r = formula();
      [[fallthrough]];
    case AxiomId::A2:
    case AxiomId::A4:
      spec.q = formula();
      [[fallthrough]];
    case AxiomId::A1:
    case AxiomId::A6:
      spec.p = formula();
      break;
    case AxiomId::A5:
    case AxiomId::A8:
      spec.p = formula();
      spec.subst = random_substitution(lang.functions, rng, shape);
      break;
    case AxiomId::A7:
      spec.index = uniform(rng, 1, shape.max_var);
      break;
  }
  spec.generalizations = uniform(rng, 0, 2);
  return spec;
}

Structure random_structure(const Language& lang, std::size_t size, std::size_t atom_count, std::mt19937_64& rng) {
  Structure d(lang, size, atom_count);
  const BValue top = FiniteBooleanAlg(atom_count).top();
  for (const auto& [name, arity] : lang.functions.symbols()) {
    std::vector<Element> table(d.function_table(name).size());
    for (Element& v : table) v = static_cast<Element>(uniform(rng, 0, size - 1));
    d.set_function(name, std::move(table));
  }
  for (const auto& [name, arity] : lang.predicates.symbols()) {
    if (d.identity_equality() && lang.predicates.equality() == name) continue;
    std::vector<BValue> table(d.relation_table(name).size());
    for (BValue& v : table) v = std::uniform_int_distribution<BValue>(0, top)(rng);
    d.set_relation(name, std::move(table));
  }
  return d;
}

std::vector<Formula> formulas_up_to_depth(const std::vector<Formula>& atoms, std::size_t depth) {
  std::vector<Formula> level = atoms;
  for (std::size_t d = 1; d <= depth; ++d) {
    std::vector<Formula> next = atoms;
    next.reserve(atoms.size() + 2 * level.size() + level.size() * level.size());
    for (const Formula& p : level) next.push_back(Formula::negation(p));
    for (const Formula& p : level) next.push_back(Formula::forall(p));
    for (const Formula& p : level) {
      for (const Formula& q : level) next.push_back(Formula::conjunction(p, q));
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Term> terms_up_to_height(const FunctionType& type, std::size_t height, std::size_t max_var) {
  std::vector<Term> vars;
  for (std::size_t i = 1; i <= max_var; ++i) vars.push_back(Term::var(i));
  std::vector<Term> level = vars;
  for (std::size_t h = 1; h <= height; ++h) {
    std::vector<Term> next = vars;
    for (const auto& [name, arity] : type.symbols()) {
      // Every tuple of level terms, odometer style.
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        std::vector<Term> args;
        for (std::size_t k : idx) args.push_back(level[k]);
        next.push_back(Term::app(name, std::move(args)));
        std::size_t k = arity;
        while (k > 0 && ++idx[k - 1] == level.size()) idx[--k] = 0;
        if (k == 0) break;
      }
    }
    level = std::move(next);
  }
  return level;
}

std::vector<Formula> formulas_up_to_height(const Language& lang, std::size_t height, std::size_t max_var) {
  std::vector<Formula> level;
  for (std::size_t h = 1; h <= height; ++h) {
    const std::vector<Term> terms = terms_up_to_height(lang.functions, h - 1, max_var);
    std::vector<Formula> next;
    for (const auto& [name, arity] : lang.predicates.symbols()) {
      if (arity > 0 && terms.empty()) continue;
      std::vector<std::size_t> idx(arity, 0);
      while (true) {
        std::vector<Term> args;
        for (std::size_t k : idx) args.push_back(terms[k]);
        next.push_back(Formula::atom(name, std::move(args)));
        std::size_t k = arity;
        while (k > 0 && ++idx[k - 1] == terms.size()) idx[--k] = 0;
        if (k == 0) break;
      }
    }
    for (const Formula& p : level) next.push_back(Formula::negation(p));
    for (const Formula& p : level) next.push_back(Formula::forall(p));
    for (const Formula& p : level) {
      for (const Formula& q : level) next.push_back(Formula::conjunction(p, q));
    }
    level = std::move(next);
  }
  return level;
}

}  // namespace clonelogic
