#include <gtest/gtest.h>

#include <random>

#include "clonelogic/error.hpp"
#include "clonelogic/generators.hpp"
#include "clonelogic/prop_algebra.hpp"
#include "oracles.hpp"

using namespace clonelogic;

namespace {

PropTerm v(const char* n) { return PropTerm::var(n); }
PropTerm neg(PropTerm p) { return PropTerm::negation(std::move(p)); }
PropTerm conj(PropTerm p, PropTerm q) { return PropTerm::conjunction(std::move(p), std::move(q)); }

FinitePropAlgebra one_element() { return FinitePropAlgebra({{0}}, {0}); }

ElementSet set(std::size_t width, std::initializer_list<std::size_t> xs) { return ElementSet::of(width, xs); }

TEST(Sugar, Expansions) {
  EXPECT_EQ(prop_or(v("a"), v("b")), neg(conj(neg(v("a")), neg(v("b")))));
  EXPECT_EQ(prop_imp(v("a"), v("a")), neg(conj(neg(neg(v("a"))), neg(v("a")))));
  const PropTerm i = prop_iff(v("a"), v("a"));
  ASSERT_EQ(i.kind(), PropTerm::Kind::And);
  EXPECT_EQ(i.left(), i.right());
}

TEST(Tautology, Examples) {
  EXPECT_TRUE(tautology(prop_imp(v("a"), conj(v("a"), v("a")))));
  EXPECT_FALSE(tautology(v("a")));
  EXPECT_TRUE(tautology(axiom_a3(v("a"), v("b"), v("c"))));
  EXPECT_TRUE(tautology(axiom_a2(v("a"), v("b"))));
  EXPECT_TRUE(tautology(prop_or(v("a"), neg(v("a")))));
}

TEST(SemanticConsequence, Examples) {
  EXPECT_TRUE(semantic_consequence({v("a"), prop_imp(v("a"), v("b"))}, v("b")));
  EXPECT_FALSE(semantic_consequence({}, v("a")));
  EXPECT_TRUE(semantic_consequence({neg(neg(v("a")))}, v("a")));
  EXPECT_TRUE(semantic_consequence({v("a"), neg(v("a"))}, v("b")));
}

TEST(Valuation, Examples) {
  const auto two = FinitePropAlgebra::two();
  EXPECT_TRUE(is_valuation(two, set(2, {1})));
  EXPECT_FALSE(is_valuation(two, set(2, {0, 1})));
  EXPECT_FALSE(is_valuation(two, set(2, {})));
}

TEST(EnumerateValuations, Examples) {
  EXPECT_EQ(enumerate_valuations(FinitePropAlgebra::two()), std::vector<ElementSet>{set(2, {1})});
  EXPECT_TRUE(enumerate_valuations(one_element()).empty());
  EXPECT_EQ(enumerate_valuations(FinitePropAlgebra::free_boolean(1)).size(), 2u);
  EXPECT_EQ(val_set(one_element()), ElementSet::full(1));
}

TEST(EnumerateValuations, RejectsLargeCarrierAboveBound) {
  std::vector<std::vector<std::size_t>> conj(17, std::vector<std::size_t>(17, 0));
  std::vector<std::size_t> neg(17, 0);
  const FinitePropAlgebra big(conj, neg);
  EXPECT_THROW(enumerate_valuations(big), Error);
  EXPECT_THROW(enumerate_filters(big), Error);
}

TEST(AxiomElements, Examples) {
  EXPECT_EQ(axiom_elements(FinitePropAlgebra::two()), set(2, {1}));
  EXPECT_EQ(axiom_elements(one_element()), set(1, {0}));
}

TEST(DedClosure, Examples) {
  const auto two = FinitePropAlgebra::two();
  EXPECT_EQ(ded_closure(two, set(2, {})), set(2, {1}));
  EXPECT_EQ(ded_closure(two, set(2, {0})), set(2, {0, 1}));
  EXPECT_EQ(ded_closure(two, set(2, {1})), set(2, {1}));
  EXPECT_TRUE(is_inconsistent(two, set(2, {0})));
  EXPECT_FALSE(is_inconsistent(two, set(2, {})));
}

TEST(Filters, Examples) {
  const auto two = FinitePropAlgebra::two();
  EXPECT_TRUE(is_filter(two, set(2, {1})));
  EXPECT_TRUE(is_maximal_filter(two, set(2, {1})));
  EXPECT_TRUE(is_maximal_filter_by_negation(two, set(2, {1})));
  EXPECT_TRUE(is_filter(two, ElementSet::full(2)));
  EXPECT_FALSE(is_maximal_filter(two, ElementSet::full(2)));
  EXPECT_FALSE(is_filter(two, set(2, {})));
}

TEST(Boolean, Examples) {
  EXPECT_TRUE(is_boolean(FinitePropAlgebra::two()));
  EXPECT_TRUE(is_boolean(one_element()));
  EXPECT_TRUE(is_boolean(FinitePropAlgebra::free_boolean(2)));
  // Left projection: a & b = a is not commutative.
  const FinitePropAlgebra skew({{0, 0}, {1, 1}}, {1, 0});
  EXPECT_FALSE(is_boolean(skew));
}

TEST(Lindenbaum, TwoIsItsOwnQuotient) {
  const auto two = FinitePropAlgebra::two();
  const Quotient q = lindenbaum(two, set(2, {1}));
  EXPECT_EQ(q.algebra.size(), 2u);
  EXPECT_EQ(q.projection, (std::vector<std::size_t>{0, 1}));
  EXPECT_THROW(lindenbaum(two, set(2, {})), Error);
}

TEST(Lindenbaum, FreeFragmentOnOneVariable) {
  EXPECT_EQ(free_fragment_classes({"a"}, 3).size(), 4u);
  EXPECT_EQ(free_fragment_algebra({"a"}, 3).size(), 4u);
  EXPECT_TRUE(is_boolean(free_fragment_algebra({"a"}, 3)));
}

TEST(Lindenbaum, FragmentRepresentativesHaveTheirTables) {
  for (const auto& [table, rep] : free_fragment_classes({"a", "b"}, 3)) {
    for (std::size_t m = 0; m < 4; ++m) {
      const bool value = evaluate(rep, {{"a", (m & 1) != 0}, {"b", (m & 2) != 0}});
      EXPECT_EQ(value, table[m]);
    }
  }
}

TEST(PropProof, Examples) {
  const PropTerm a = v("a");
  const PropTerm aa = conj(a, a);
  PropProof proof{{{a, PropHypothesis{0}}, {axiom_a1(a), PropAxiomA1{a}}, {aa, PropModusPonens{0, 1}}}};
  EXPECT_TRUE(check_prop_proof(proof, {a}).ok);

  PropProof swapped = proof;
  swapped.steps[2].why = PropModusPonens{1, 0};
  const CheckResult r = check_prop_proof(swapped, {a});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.step, 2u);

  PropProof wrong_schema = proof;
  wrong_schema.steps[1].why = PropAxiomA2{a, a};
  EXPECT_FALSE(check_prop_proof(wrong_schema, {a}).ok);

  EXPECT_FALSE(check_prop_proof({}, {}).ok);
  PropProof forward{{{a, PropModusPonens{0, 0}}}};
  EXPECT_FALSE(check_prop_proof(forward, {}).ok);
  PropProof missing{{{a, PropHypothesis{3}}}};
  EXPECT_FALSE(check_prop_proof(missing, {a}).ok);
}

// Random tables, with the library checked against the direct definitions.
class RandomAlgebras : public ::testing::Test {
 protected:
  std::mt19937_64 rng{7};
  FinitePropAlgebra random_algebra(std::size_t n) {
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::vector<std::size_t>> conj(n, std::vector<std::size_t>(n));
    std::vector<std::size_t> neg(n);
    for (auto& row : conj) {
      for (auto& c : row) c = pick(rng);
    }
    for (auto& c : neg) c = pick(rng);
    return FinitePropAlgebra(conj, neg);
  }
};

TEST_F(RandomAlgebras, AgreeWithDefinitions) {
  for (int k = 0; k < 60; ++k) {
    const FinitePropAlgebra a = random_algebra(1 + k % 6);
    const std::size_t n = a.size();
    std::vector<ElementSet> vals, filters;
    for (std::uint64_t s : oracle::all_subsets(n)) {
      if (oracle::is_valuation(a, s)) vals.emplace_back(n, s);
      if (oracle::is_filter(a, s)) filters.emplace_back(n, s);
    }
    ASSERT_EQ(enumerate_valuations(a), vals);
    ASSERT_EQ(enumerate_filters(a), filters);
    ASSERT_EQ(axiom_elements(a).bits(), oracle::axioms(a));
    for (std::uint64_t s : oracle::all_subsets(n)) {
      const ElementSet t(n, s);
      const ElementSet d = ded_closure(a, t);
      // Least filter containing t, by brute force.
      std::uint64_t least = (std::uint64_t{1} << n) - 1;
      for (const ElementSet& f : filters) {
        if (t.subset_of(f)) least &= f.bits();
      }
      ASSERT_EQ(d.bits(), least);
      ASSERT_TRUE(t.subset_of(d));
      ASSERT_EQ(ded_closure(a, d), d);
    }
  }
}

TEST_F(RandomAlgebras, MaximalityCriteriaAgreeOnProperFilters) {
  for (int k = 0; k < 60; ++k) {
    const FinitePropAlgebra a = random_algebra(1 + k % 6);
    for (const ElementSet& f : enumerate_filters(a)) {
      ASSERT_EQ(is_maximal_filter(a, f), is_maximal_filter_by_negation(a, f) && f != ElementSet::full(a.size()))
          << "filter bits " << f.bits();
    }
  }
}

TEST_F(RandomAlgebras, TautologyElementsInsideValSet) {
  for (int k = 0; k < 60; ++k) {
    const FinitePropAlgebra a = random_algebra(1 + k % 6);
    EXPECT_TRUE(tautology_elements(a).subset_of(val_set(a)));
    EXPECT_TRUE(axiom_elements(a).subset_of(val_set(a)));
  }
}

TEST(BooleanAlgebras, FilterCriteriaAgree) {
  for (const auto& a : {FinitePropAlgebra::two(), FinitePropAlgebra::free_boolean(1),
                        FinitePropAlgebra::free_boolean(2), one_element()}) {
    for (std::uint64_t s : oracle::all_subsets(a.size())) {
      const ElementSet f(a.size(), s);
      EXPECT_EQ(is_filter(a, f), is_boolean_filter(a, f));
    }
  }
}

TEST(BooleanAlgebras, QuotientsAreBoolean) {
  for (const auto& a : {FinitePropAlgebra::two(), FinitePropAlgebra::free_boolean(1),
                        FinitePropAlgebra::free_boolean(2)}) {
    for (const ElementSet& f : enumerate_filters(a)) EXPECT_TRUE(is_boolean(lindenbaum(a, f).algebra));
  }
}

TEST(NonBooleanAlgebras, FilterQuotientsAreBooleanCongruences) {
  std::mt19937_64 rng(5);
  std::size_t proper = 0;
  for (int k = 0; k < 600; ++k) {
    const std::size_t n = 2 + k % 7;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    std::vector<std::vector<std::size_t>> conj(n, std::vector<std::size_t>(n));
    std::vector<std::size_t> neg(n);
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < n; ++q) conj[p][q] = k % 2 ? std::min(p, q) : (p & q) % n;
    }
    for (auto& c : neg) c = pick(rng);
    const FinitePropAlgebra a(conj, neg);
    if (is_boolean(a)) continue;
    for (const ElementSet& f : enumerate_filters(a)) {
      proper += f != ElementSet::full(n) ? 1 : 0;
      const Quotient q = lindenbaum(a, f);
      ASSERT_TRUE(is_boolean(q.algebra));
      for (std::size_t p = 0; p < n; ++p) {
        ASSERT_EQ(q.projection[a.neg(p)], q.algebra.neg(q.projection[p]));
      }
    }
  }
  EXPECT_GT(proper, 10u);
}

TEST(FreeAlgebra, ConsequenceAgreesWithTruthTables) {
  std::mt19937_64 rng(11);
  const std::vector<std::string> vars = {"a", "b", "c"};
  for (int k = 0; k < 200; ++k) {
    std::vector<PropTerm> premises;
    for (int j = 0; j < k % 3; ++j) premises.push_back(random_prop(vars, rng, 2));
    const PropTerm goal = random_prop(vars, rng, 2);
    bool expected = true;
    for (unsigned m = 0; m < 8; ++m) {
      const std::map<std::string, bool> asg{{"a", (m & 1) != 0}, {"b", (m & 2) != 0}, {"c", (m & 4) != 0}};
      bool premises_hold = true;
      for (const auto& p : premises) premises_hold = premises_hold && evaluate(p, asg);
      if (premises_hold && !evaluate(goal, asg)) expected = false;
    }
    EXPECT_EQ(semantic_consequence(premises, goal), expected);
  }
}

}  // namespace
