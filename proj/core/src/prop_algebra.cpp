#include "clonelogic/prop_algebra.hpp"

#include <algorithm>
#include <bit>

#include "clonelogic/error.hpp"

namespace clonelogic {

PropTerm PropTerm::var(std::string name) {
  if (name.empty()) throw Error("empty propositional variable name");
  auto node = std::make_shared<Node>();
  node->name = std::move(name);
  return PropTerm(std::move(node));
}

PropTerm PropTerm::negation(PropTerm p) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Not;
  node->depth = p.depth() + 1;
  node->children.push_back(std::move(p));
  return PropTerm(std::move(node));
}

PropTerm PropTerm::conjunction(PropTerm p, PropTerm q) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->depth = std::max(p.depth(), q.depth()) + 1;
  node->children.push_back(std::move(p));
  node->children.push_back(std::move(q));
  return PropTerm(std::move(node));
}

bool operator==(const PropTerm& a, const PropTerm& b) {
  if (a.node_ == b.node_) return true;
  return a.node_->kind == b.node_->kind && a.node_->depth == b.node_->depth && a.node_->name == b.node_->name &&
         a.node_->children == b.node_->children;
}

bool operator<(const PropTerm& a, const PropTerm& b) {
  if (a.node_ == b.node_) return false;
  if (a.kind() != b.kind()) return a.kind() < b.kind();
  if (a.name() != b.name()) return a.name() < b.name();
  return std::lexicographical_compare(a.node_->children.begin(), a.node_->children.end(),
                                      b.node_->children.begin(), b.node_->children.end());
}

PropTerm expand_sugar(Connective kind, const PropTerm& p, const PropTerm& q) {
  switch (kind) {
    case Connective::Or:
      return PropTerm::negation(PropTerm::conjunction(PropTerm::negation(p), PropTerm::negation(q)));
    case Connective::Imp:
      return expand_sugar(Connective::Or, PropTerm::negation(p), q);
    case Connective::Iff:
      return PropTerm::conjunction(expand_sugar(Connective::Imp, p, q), expand_sugar(Connective::Imp, q, p));
  }
  throw Error("unknown connective");
}

PropTerm axiom_a1(const PropTerm& p) { return prop_imp(p, PropTerm::conjunction(p, p)); }

PropTerm axiom_a2(const PropTerm& p, const PropTerm& q) { return prop_imp(PropTerm::conjunction(p, q), p); }

PropTerm axiom_a3(const PropTerm& p, const PropTerm& q, const PropTerm& r) {
  return prop_imp(prop_imp(p, q), prop_imp(PropTerm::negation(PropTerm::conjunction(q, r)),
                                           PropTerm::negation(PropTerm::conjunction(r, p))));
}

namespace {

void collect_variables(const PropTerm& p, std::set<std::string>& out) {
  if (p.kind() == PropTerm::Kind::Var) {
    out.insert(p.name());
    return;
  }
  collect_variables(p.left(), out);
  if (p.kind() == PropTerm::Kind::And) collect_variables(p.right(), out);
}

// Every assignment over vars, as maps.
template <class F>
bool all_assignments(const std::set<std::string>& vars, F&& f) {
  if (vars.size() >= 63) throw Error("too many propositional variables for a truth table");
  const std::vector<std::string> names(vars.begin(), vars.end());
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << names.size()); ++bits) {
    std::map<std::string, bool> assignment;
    for (std::size_t i = 0; i < names.size(); ++i) assignment[names[i]] = (bits >> i) & 1U;
    if (!f(assignment)) return false;
  }
  return true;
}

}  // namespace

std::set<std::string> variables(const PropTerm& p) {
  std::set<std::string> out;
  collect_variables(p, out);
  return out;
}

bool evaluate(const PropTerm& p, const std::map<std::string, bool>& assignment) {
  switch (p.kind()) {
    case PropTerm::Kind::Var: {
      auto it = assignment.find(p.name());
      if (it == assignment.end()) throw Error("no value for variable '" + p.name() + "'");
      return it->second;
    }
    case PropTerm::Kind::Not:
      return !evaluate(p.left(), assignment);
    case PropTerm::Kind::And:
      return evaluate(p.left(), assignment) && evaluate(p.right(), assignment);
  }
  return false;
}

bool tautology(const PropTerm& p) {
  return all_assignments(variables(p), [&](const auto& a) { return evaluate(p, a); });
}

bool semantic_consequence(const std::vector<PropTerm>& premises, const PropTerm& p) {
  std::set<std::string> vars = variables(p);
  for (const PropTerm& t : premises) vars.merge(variables(t));
  return all_assignments(vars, [&](const auto& a) {
    for (const PropTerm& t : premises) {
      if (!evaluate(t, a)) return true;
    }
    return evaluate(p, a);
  });
}

ElementSet::ElementSet(std::size_t width, std::uint64_t bits) : width_(width), bits_(bits) {
  if (width > 64) throw Error("element sets hold at most 64 elements");
  if (width < 64 && (bits >> width) != 0) throw Error("element set has bits beyond its width");
}

ElementSet ElementSet::full(std::size_t width) {
  return {width, width == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1};
}

ElementSet ElementSet::of(std::size_t width, std::initializer_list<std::size_t> elements) {
  ElementSet s = empty(width);
  for (std::size_t x : elements) {
    if (x >= width) throw Error("element out of range");
    s.insert(x);
  }
  return s;
}

std::size_t ElementSet::count() const { return static_cast<std::size_t>(std::popcount(bits_)); }

std::vector<std::size_t> ElementSet::elements() const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < width_; ++x) {
    if (contains(x)) out.push_back(x);
  }
  return out;
}

FinitePropAlgebra::FinitePropAlgebra(std::vector<std::vector<std::size_t>> and_table,
                                     std::vector<std::size_t> not_table)
    : and_(std::move(and_table)), not_(std::move(not_table)) {
  const std::size_t n = not_.size();
  if (n == 0) throw Error("a proposition algebra needs at least one element");
  if (n > 64) throw Error("finite proposition algebras hold at most 64 elements");
  if (and_.size() != n) throw Error("and table must have one row per element");
  for (std::size_t v : not_) {
    if (v >= n) throw Error("not table entry out of range");
  }
  for (const auto& row : and_) {
    if (row.size() != n) throw Error("and table rows must have one entry per element");
    for (std::size_t v : row) {
      if (v >= n) throw Error("and table entry out of range");
    }
  }
}

FinitePropAlgebra FinitePropAlgebra::two() { return FinitePropAlgebra({{0, 0}, {0, 1}}, {1, 0}); }

FinitePropAlgebra FinitePropAlgebra::free_boolean(std::size_t generators) {
  if (generators > 2) throw Error("free Boolean algebras above 2 generators exceed 64 elements");
  const std::size_t rows = std::size_t{1} << generators;
  const std::size_t n = std::size_t{1} << rows;
  const std::size_t mask = n - 1;
  std::vector<std::vector<std::size_t>> conj(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = ~a & mask;
    for (std::size_t b = 0; b < n; ++b) conj[a][b] = a & b;
  }
  return FinitePropAlgebra(std::move(conj), std::move(neg));
}

namespace {

void check_width(const FinitePropAlgebra& a, const ElementSet& s) {
  if (s.width() != a.size()) throw Error("element set width does not match the carrier");
}

void check_bound(const FinitePropAlgebra& a, std::size_t bound) {
  if (a.size() > bound || a.size() > 30) {
    throw Error("carrier of size " + std::to_string(a.size()) + " exceeds the enumeration bound " +
                std::to_string(std::min<std::size_t>(bound, 30)));
  }
}

template <class Pred>
std::vector<ElementSet> enumerate_subsets(const FinitePropAlgebra& a, std::size_t bound, Pred&& keep) {
  check_bound(a, bound);
  std::vector<ElementSet> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << a.size()); ++bits) {
    ElementSet s(a.size(), bits);
    if (keep(s)) out.push_back(s);
  }
  return out;
}

}  // namespace

bool is_valuation(const FinitePropAlgebra& a, const ElementSet& v) {
  check_width(a, v);
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (v.contains(p) == v.contains(a.neg(p))) return false;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (v.contains(a.conj(p, q)) != (v.contains(p) && v.contains(q))) return false;
    }
  }
  return true;
}

std::vector<ElementSet> enumerate_valuations(const FinitePropAlgebra& a, std::size_t bound) {
  return enumerate_subsets(a, bound, [&](const ElementSet& s) { return is_valuation(a, s); });
}

ElementSet val_set(const FinitePropAlgebra& a, std::size_t bound) {
  ElementSet result = ElementSet::full(a.size());
  for (const ElementSet& v : enumerate_valuations(a, bound)) result = result & v;
  return result;
}

ElementSet axiom_elements(const FinitePropAlgebra& a) {
  const std::size_t n = a.size();
  ElementSet out = ElementSet::empty(n);
  for (std::size_t p = 0; p < n; ++p) {
    out.insert(a.imp(p, a.conj(p, p)));
    for (std::size_t q = 0; q < n; ++q) {
      out.insert(a.imp(a.conj(p, q), p));
      const std::size_t pq = a.imp(p, q);
      for (std::size_t r = 0; r < n; ++r) {
        out.insert(a.imp(pq, a.imp(a.neg(a.conj(q, r)), a.neg(a.conj(r, p)))));
      }
    }
  }
  return out;
}

bool is_mp_closed(const FinitePropAlgebra& a, const ElementSet& s) {
  check_width(a, s);
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (!s.contains(p)) continue;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (s.contains(a.imp(p, q)) && !s.contains(q)) return false;
    }
  }
  return true;
}

ElementSet ded_closure(const FinitePropAlgebra& a, const ElementSet& t) {
  check_width(a, t);
  ElementSet f = t | axiom_elements(a);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t p = 0; p < a.size(); ++p) {
      if (!f.contains(p)) continue;
      for (std::size_t q = 0; q < a.size(); ++q) {
        if (!f.contains(q) && f.contains(a.imp(p, q))) {
          f.insert(q);
          changed = true;
        }
      }
    }
  }
  return f;
}

bool is_filter(const FinitePropAlgebra& a, const ElementSet& f) {
  check_width(a, f);
  return axiom_elements(a).subset_of(f) && is_mp_closed(a, f);
}

std::vector<ElementSet> enumerate_filters(const FinitePropAlgebra& a, std::size_t bound) {
  const ElementSet axioms = axiom_elements(a);
  return enumerate_subsets(a, bound,
                           [&](const ElementSet& s) { return axioms.subset_of(s) && is_mp_closed(a, s); });
}

bool is_maximal_filter(const FinitePropAlgebra& a, const ElementSet& f, std::size_t bound) {
  const ElementSet carrier = ElementSet::full(a.size());
  if (!is_filter(a, f) || f == carrier) return false;
  for (const ElementSet& g : enumerate_filters(a, bound)) {
    if (g != carrier && g != f && f.subset_of(g)) return false;
  }
  return true;
}

bool is_maximal_filter_by_negation(const FinitePropAlgebra& a, const ElementSet& f) {
  if (!is_filter(a, f)) return false;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (f.contains(p) == f.contains(a.neg(p))) return false;
  }
  return true;
}

ElementSet consequences(const FinitePropAlgebra& a, const ElementSet& t, std::size_t bound) {
  check_width(a, t);
  ElementSet result = ElementSet::full(a.size());
  for (const ElementSet& v : enumerate_valuations(a, bound)) {
    if (t.subset_of(v)) result = result & v;
  }
  return result;
}

bool is_inconsistent(const FinitePropAlgebra& a, const ElementSet& t) {
  const ElementSet d = ded_closure(a, t);
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (d.contains(p) && d.contains(a.neg(p))) return true;
  }
  return false;
}

ElementSet tautology_elements(const FinitePropAlgebra& a) {
  ElementSet out = ElementSet::empty(a.size());
  for (std::size_t p = 0; p < a.size(); ++p) out.insert(a.disj(p, a.neg(p)));
  return out;
}

bool is_boolean(const FinitePropAlgebra& a) {
  const std::size_t n = a.size();
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      if (a.conj(p, q) != a.conj(q, p)) return false;
      const std::size_t p_and_not_q = a.conj(p, a.neg(q));
      const bool absorbs = a.conj(p, q) == p;
      for (std::size_t r = 0; r < n; ++r) {
        if (a.conj(p, a.conj(q, r)) != a.conj(a.conj(p, q), r)) return false;
        const bool is_bottom = p_and_not_q == a.conj(r, a.neg(r));
        if (is_bottom && !absorbs) return false;
        if (absorbs && !is_bottom) return false;
      }
    }
  }
  return true;
}

bool is_boolean_filter(const FinitePropAlgebra& a, const ElementSet& f) {
  check_width(a, f);
  // In a Boolean algebra the tautology elements collapse to the single top.
  if (!tautology_elements(a).subset_of(f)) return false;
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (!f.contains(p)) continue;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (f.contains(q) && !f.contains(a.conj(p, q))) return false;
      if (!f.contains(a.disj(p, q))) return false;
    }
  }
  return true;
}

Quotient lindenbaum(const FinitePropAlgebra& a, const ElementSet& f) {
  if (!is_filter(a, f)) throw Error("lindenbaum quotient requires a filter");
  const std::size_t n = a.size();
  auto related = [&](std::size_t p, std::size_t q) { return f.contains(a.iff(p, q)); };

  std::vector<std::size_t> projection(n, n);
  std::vector<std::size_t> representatives;
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t c = 0; c < representatives.size(); ++c) {
      if (related(representatives[c], p)) {
        projection[p] = c;
        break;
      }
    }
    if (projection[p] == n) {
      projection[p] = representatives.size();
      representatives.push_back(p);
    }
  }
  // The greedy classes are only meaningful if the relation is an equivalence
  // compatible with both operations.
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const bool same = projection[p] == projection[q];
      if (related(p, q) != same) throw Error("filter relation is not an equivalence");
      if (same) {
        if (projection[a.neg(p)] != projection[a.neg(q)]) throw Error("filter relation is not a congruence");
        for (std::size_t r = 0; r < n; ++r) {
          if (projection[a.conj(p, r)] != projection[a.conj(q, r)] ||
              projection[a.conj(r, p)] != projection[a.conj(r, q)]) {
            throw Error("filter relation is not a congruence");
          }
        }
      }
    }
  }
  const std::size_t m = representatives.size();
  std::vector<std::vector<std::size_t>> conj(m, std::vector<std::size_t>(m));
  std::vector<std::size_t> neg(m);
  for (std::size_t c = 0; c < m; ++c) {
    neg[c] = projection[a.neg(representatives[c])];
    for (std::size_t d = 0; d < m; ++d) conj[c][d] = projection[a.conj(representatives[c], representatives[d])];
  }
  return {FinitePropAlgebra(std::move(conj), std::move(neg)), std::move(projection)};
}

std::map<std::vector<bool>, PropTerm> free_fragment_classes(const std::vector<std::string>& vars,
                                                             std::size_t depth) {
  if (vars.empty()) throw Error("free fragment needs at least one variable");
  if (vars.size() > 16) throw Error("too many variables for truth-table classes");
  const std::size_t rows = std::size_t{1} << vars.size();

  std::map<std::vector<bool>, PropTerm> classes;
  auto offer = [](std::map<std::vector<bool>, PropTerm>& into, std::vector<bool> table, const PropTerm& t) {
    auto it = into.find(table);
    if (it == into.end()) {
      into.emplace(std::move(table), t);
    } else if (t.depth() < it->second.depth() || (t.depth() == it->second.depth() && t < it->second)) {
      it->second = t;
    }
  };
  for (std::size_t i = 0; i < vars.size(); ++i) {
    std::vector<bool> table(rows);
    for (std::size_t row = 0; row < rows; ++row) table[row] = (row >> i) & 1U;
    offer(classes, std::move(table), PropTerm::var(vars[i]));
  }
  for (std::size_t level = 1; level <= depth; ++level) {
    auto next = classes;
    for (const auto& [table, term] : classes) {
      std::vector<bool> negated(rows);
      for (std::size_t row = 0; row < rows; ++row) negated[row] = !table[row];
      offer(next, std::move(negated), PropTerm::negation(term));
      for (const auto& [table2, term2] : classes) {
        std::vector<bool> both(rows);
        for (std::size_t row = 0; row < rows; ++row) both[row] = table[row] && table2[row];
        offer(next, std::move(both), PropTerm::conjunction(term, term2));
      }
    }
    if (next.size() == classes.size()) break;
    classes = std::move(next);
  }
  return classes;
}

FinitePropAlgebra free_fragment_algebra(const std::vector<std::string>& vars, std::size_t depth) {
  const auto classes = free_fragment_classes(vars, depth);
  std::vector<std::vector<bool>> tables;
  for (const auto& [table, term] : classes) tables.push_back(table);
  if (tables.size() > 64) throw Error("fragment has more than 64 classes");
  auto index_of = [&](const std::vector<bool>& t) {
    auto it = std::lower_bound(tables.begin(), tables.end(), t);
    if (it == tables.end() || *it != t) throw Error("fragment classes are not closed under the operations");
    return static_cast<std::size_t>(it - tables.begin());
  };
  const std::size_t n = tables.size();
  const std::size_t rows = tables.front().size();
  std::vector<std::vector<std::size_t>> conj(n, std::vector<std::size_t>(n));
  std::vector<std::size_t> neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> negated(rows);
    for (std::size_t row = 0; row < rows; ++row) negated[row] = !tables[a][row];
    neg[a] = index_of(negated);
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<bool> both(rows);
      for (std::size_t row = 0; row < rows; ++row) both[row] = tables[a][row] && tables[b][row];
      conj[a][b] = index_of(both);
    }
  }
  return FinitePropAlgebra(std::move(conj), std::move(neg));
}

namespace {

std::string describe_index(std::size_t i) { return "step " + std::to_string(i + 1); }

}  // namespace

CheckResult check_prop_proof(const PropProof& proof, const std::vector<PropTerm>& hypotheses) {
  if (proof.steps.empty()) return CheckResult::reject(0, "empty proof");
  for (std::size_t i = 0; i < proof.steps.size(); ++i) {
    const PropProofStep& step = proof.steps[i];
    auto expect = [&](const PropTerm& rebuilt, const char* what) -> CheckResult {
      if (rebuilt == step.formula) return CheckResult::accept();
      return CheckResult::reject(i, std::string(what) + " mismatch");
    };
    CheckResult r = std::visit(
        [&](const auto& why) -> CheckResult {
          using T = std::decay_t<decltype(why)>;
          if constexpr (std::is_same_v<T, PropAxiomA1>) {
            return expect(axiom_a1(why.p), "axiom A1");
          } else if constexpr (std::is_same_v<T, PropAxiomA2>) {
            return expect(axiom_a2(why.p, why.q), "axiom A2");
          } else if constexpr (std::is_same_v<T, PropAxiomA3>) {
            return expect(axiom_a3(why.p, why.q, why.r), "axiom A3");
          } else if constexpr (std::is_same_v<T, PropHypothesis>) {
            if (why.index >= hypotheses.size()) {
              return CheckResult::reject(i, "hypothesis " + std::to_string(why.index + 1) + " does not exist");
            }
            return expect(hypotheses[why.index], "hypothesis");
          } else {
            if (why.minor >= i || why.major >= i) {
              return CheckResult::reject(i, "modus ponens must cite earlier steps");
            }
            if (proof.steps[why.major].formula != prop_imp(proof.steps[why.minor].formula, step.formula)) {
              return CheckResult::reject(i, describe_index(why.major) + " is not " + describe_index(why.minor) +
                                                " -> " + describe_index(i));
            }
            return CheckResult::accept();
          }
        },
        step.why);
    if (!r.ok) return r;
  }
  return CheckResult::accept();
}

}  // namespace clonelogic
