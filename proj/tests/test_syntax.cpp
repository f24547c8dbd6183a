#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "clonelogic/error.hpp"
#include "clonelogic/generators.hpp"
#include "clonelogic/syntax.hpp"

using namespace clonelogic;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const fs::path kData = CLONELOGIC_TEST_DATA;

Language lang() {
  Language l;
  l.functions.declare("f", 1);
  l.functions.declare("g", 2);
  l.functions.declare("c", 0);
  l.predicates.declare("P", 1);
  l.predicates.declare("R", 2);
  l.predicates.declare("e", 2);
  l.predicates.set_equality("e");
  return l;
}

Term x(std::size_t i) { return Term::var(i); }

// Line and column of a parse failure, or (0, 0) when nothing is thrown.
template <class F>
std::pair<std::size_t, std::size_t> failure_at(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

TEST(Printing, Examples) {
  EXPECT_EQ(to_string(Term::app("g", {x(1), Term::app("c")})), "g(x1, c)");
  EXPECT_EQ(to_string(Substitution()), "[; shift 0]");
  EXPECT_EQ(to_string(Substitution({x(2)}, ShiftTail{0})), "[x2 ; shift 0]");
  EXPECT_EQ(to_string(subst_from_list({x(2), Term::app("c")})), "[x2 ; const c]");
  EXPECT_EQ(to_string(imp(Formula::atom("P", {x(1)}), Formula::forall(Formula::atom("P", {x(1)})))),
            "(P(x1) -> forall P(x1))");
  EXPECT_EQ(to_string(exists(Formula::atom("P", {x(1)}))), "exists P(x1)");
  EXPECT_EQ(to_string(Env{{4}, 0}), "[4 ; 0]");
  EXPECT_EQ(to_string(zero()), "0");
  EXPECT_EQ(to_string(succ(zero())), "S(0)");
}

TEST(Parsing, Sugar) {
  const Language l = lang();
  EXPECT_EQ(parse_formula(l, "forall x2. R(x2, x1)"), Formula::forall(Formula::atom("R", {x(1), x(2)})));
  EXPECT_EQ(parse_formula(l, "(P(x1) | P(x2))"), disj(Formula::atom("P", {x(1)}), Formula::atom("P", {x(2)})));
  EXPECT_EQ(parse_formula(l, "exists x1. P(x1)"), exists_xi(1, Formula::atom("P", {x(1)})));
  EXPECT_EQ(parse_substitution(l.functions, "[x2, x1]"), subst_from_list({x(2), x(1)}));
  EXPECT_EQ(parse_substitution(l.functions, "[x2 ; shift -1]"), Substitution({x(2)}, ShiftTail{-1}));
  EXPECT_EQ(parse_env("[1, 2]"), (Env{{1}, 2}));
  EXPECT_EQ(parse_env("[1, 2 ; 0]"), (Env{{1, 2}, 0}));
  EXPECT_EQ(parse_prop("(a <-> b)"), prop_iff(PropTerm::var("a"), PropTerm::var("b")));
  EXPECT_EQ(parse_term(l.functions, "  f( x1 )  # trailing comment"), Term::app("f", {x(1)}));
}

TEST(Parsing, ErrorsCarryPositions) {
  const Language l = lang();
  EXPECT_EQ(failure_at([&] { parse_term(l.functions, "f(x1"); }), (std::pair<std::size_t, std::size_t>{1, 5}));
  EXPECT_EQ(failure_at([&] { parse_formula(l, "(P(x1) & )"); }), (std::pair<std::size_t, std::size_t>{1, 10}));
  EXPECT_EQ(failure_at([&] { parse_term(l.functions, "x0"); }).first, 1u);
  EXPECT_EQ(failure_at([&] { parse_formula(l, "P(x1) -> P(x1)"); }), (std::pair<std::size_t, std::size_t>{1, 7}));
  EXPECT_EQ(failure_at([&] { parse_prop("a & b"); }).second, 3u);
  EXPECT_EQ(failure_at([&] { parse_signature("fn f/1\nrel r/x\n"); }), (std::pair<std::size_t, std::size_t>{2, 7}));
  const auto proof_error = failure_at([&] { parse_proof(l, slurp(kData / "rejected" / "bad_syntax.proof")); });
  EXPECT_EQ(proof_error, (std::pair<std::size_t, std::size_t>{2, 9}));
  EXPECT_THROW(parse_formula(l, "Q(x1)"), ParseError);
  EXPECT_THROW(parse_term(l.functions, "g(x1)"), ParseError);
  EXPECT_THROW(parse_substitution(l.functions, "[x1 ; shift -2]"), ParseError);
}

class RoundTrip : public ::testing::Test {
 protected:
  std::mt19937_64 rng{2024};
  Language l = lang();
  RandomShape shape{.max_var = 4, .term_depth = 3, .formula_depth = 4, .max_prefix = 3};
};

TEST_F(RoundTrip, Terms) {
  for (int k = 0; k < 1000; ++k) {
    const Term t = random_term(l.functions, rng, shape);
    ASSERT_EQ(parse_term(l.functions, to_string(t)), t) << to_string(t);
  }
}

TEST_F(RoundTrip, Formulas) {
  for (int k = 0; k < 1000; ++k) {
    const Formula p = random_formula(l, rng, shape);
    ASSERT_EQ(parse_formula(l, to_string(p)), p) << to_string(p);
  }
}

TEST_F(RoundTrip, SubstitutionsAndProps) {
  for (int k = 0; k < 1000; ++k) {
    const Substitution s = random_substitution(l.functions, rng, shape);
    ASSERT_EQ(parse_substitution(l.functions, to_string(s)), s) << to_string(s);
    const PropTerm p = random_prop({"a", "b", "c"}, rng, 4);
    ASSERT_EQ(parse_prop(to_string(p)), p) << to_string(p);
  }
}

TEST_F(RoundTrip, Structures) {
  for (int k = 0; k < 50; ++k) {
    const Structure d = random_structure(l, 1 + k % 3, 1, rng);
    ASSERT_EQ(parse_structure(l, to_string(d)), d);
  }
  Structure free(l, 2, 1, Structure::EqualityMode::Free);
  free.set_relation("e", {1, 1, 0, 1});
  EXPECT_EQ(parse_structure(l, to_string(free)), free);
  EXPECT_EQ(parse_structure(arithmetic_language(), to_string(Structure::zmod(4))), Structure::zmod(4));
}

TEST(Files, SignatureAndStructure) {
  const Language l = parse_signature(slurp(kData / "small.sig"));
  EXPECT_EQ(l.functions.arity("f"), 1u);
  EXPECT_EQ(l.predicates.arity("q"), 2u);
  EXPECT_EQ(*l.predicates.equality(), "e");
  EXPECT_EQ(parse_signature(to_string(l)), l);
  const Structure d = parse_structure(l, slurp(kData / "small.structure"));
  EXPECT_EQ(d.size(), 2u);
  EXPECT_EQ(d.function_table("f")[0], 1u);
  EXPECT_EQ(parse_structure(arithmetic_language(), slurp(kData / "z3.structure")), Structure::zmod(3));
  EXPECT_THROW(parse_structure(l, "domain 2\nfn f: 1 0\nrel r: 1 0\n"), ParseError);
  EXPECT_THROW(parse_signature("fn f/1\nrel f/1\n"), ParseError);
}

TEST(Files, Algebras) {
  const FinitePropAlgebra two = parse_algebra(slurp(kData / "two.algebra"));
  EXPECT_EQ(two, FinitePropAlgebra::two());
  EXPECT_EQ(parse_algebra(to_string(FinitePropAlgebra::free_boolean(2))), FinitePropAlgebra::free_boolean(2));
  EXPECT_EQ(failure_at([] { parse_algebra("2\nnot: 1 0\nand 0: 0 0\nand 1: 0 2\n"); }),
            (std::pair<std::size_t, std::size_t>{4, 10}));
}

TEST(Files, CorpusProofsRoundTrip) {
  const Language l = parse_signature("fn f/1\nfn g/2\nrel P/1\nrel R/2\nrel e/2 equality\n");
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(kData / "proofs")) {
    if (entry.path().extension() != ".proof") continue;
    const ProofFile file = parse_proof(l, slurp(entry.path()));
    const std::string printed =
        std::visit([&](const auto& proof) { return to_string(proof, file.theory); }, file.proof);
    const ProofFile again = parse_proof(l, printed);
    EXPECT_EQ(std::visit([&](const auto& proof) { return to_string(proof, again.theory); }, again.proof), printed)
        << entry.path();
    ++count;
  }
  EXPECT_GE(count, 10u);
}

TEST(Files, TheoriesAndStepNumbers) {
  const Language l = lang();
  const Theory t = parse_theory(l, "theory T\nP(x1)\n# comment\n(P(x1) -> P(x2))\n");
  EXPECT_EQ(t.name, "T");
  EXPECT_EQ(t.formulas.size(), 2u);
  EXPECT_EQ(parse_prop_theory("theory U\na\n~b\n").formulas.size(), 2u);
  EXPECT_EQ(failure_at([&] { parse_proof(l, "local\n2. P(x1) BY hyp 1\n"); }), (std::pair<std::size_t, std::size_t>{2, 1}));
  EXPECT_EQ(failure_at([&] { parse_proof(l, "local\n1. P(x1) BY mp 1 1\n"); }), (std::pair<std::size_t, std::size_t>{2, 16}));
  EXPECT_THROW(parse_proof(l, "local\n1. e(x1, x1) BY A7()\n"), ParseError);
  const ProofFile f = parse_proof(l, "global\n1. P(x1) BY hyp 1\n2. forall P(x1) BY gen 1\n");
  const Proof& p = std::get<Proof>(f.proof);
  EXPECT_EQ(p.kind, ProofKind::Global);
  EXPECT_EQ(std::get<HypothesisStep>(p.steps[0].why).index, 0u);
  EXPECT_EQ(std::get<GenStep>(p.steps[1].why).source, 0u);
}

}  // namespace
