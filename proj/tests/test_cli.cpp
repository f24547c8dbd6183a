#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

const std::string kData = CLONELOGIC_TEST_DATA;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "clonelogic");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = clonelogic::cli::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(Cli, Parse) {
  const Result r = run({"parse", "forall x2. R(x2, x1)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "formula: forall R(x1, x2)\nrank: 1\nsentence: no\n");
  EXPECT_EQ(run({"parse", "x1", "--kind", "term"}).out, "term: x1\nrank: 1\nclosed: no\n");
  const Result bad = run({"parse", "f(x1", "--kind", "term"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_EQ(bad.err, "parse error: 1:5: expected ')', found end of input\n");
}

TEST(Cli, Subst) {
  EXPECT_EQ(run({"subst", "g(x1, x2)", "[f(x2) ; shift 0]", "--kind", "term"}).out, "g(f(x2), x2)\n");
  EXPECT_EQ(run({"subst", "forall R(x1, x2)", "[f(x1)]"}).out, "forall R(x1, f(x2))\n");
  EXPECT_EQ(run({"subst", "[x2 ; shift 0]", "[x2 ; shift 0]", "--kind", "subst"}).out, "[x2 ; shift 0]\n");
}

TEST(Cli, Eval) {
  const Result r = run({"eval", "--structure", "zmod5", "--formula", "~e(0, S(x1))", "--env", "[;0]"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "value: true at [; 0]\nvalid: no\ncounterexample: [4 ; 0] (x1=4, rest=0)\n");
  const Result ok = run({"--sig", "arith", "eval", "--structure", kData + "/z3.structure", "--formula",
                      "e(add(x1, 0), x1)"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "valid: yes\n");
  EXPECT_EQ(run({"eval", "--structure", "zmod5", "--formula", "e(x1, x1)", "--env", "[7]"}).code, 2);
}

TEST(Cli, Taut) {
  const Result yes = run({"taut", "(a -> (a & a))"});
  EXPECT_EQ(yes.code, 0);
  EXPECT_EQ(yes.out, "TAUTOLOGY\n");
  const Result no = run({"taut", "(a & ~a)"});
  EXPECT_EQ(no.code, 1);
  EXPECT_EQ(no.out, "NOT A TAUTOLOGY\nfalsified by: a=0\n");
}

TEST(Cli, CheckProof) {
  const Result ok = run({"check-proof", kData + "/proofs/local_mp.proof", "--theory", kData + "/proofs/t_imp.theory"});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "ACCEPTED\n");
  const Result gen = run({"check-proof", kData + "/rejected/local_gen.proof", "--theory", kData + "/proofs/t_p.theory"});
  EXPECT_EQ(gen.code, 1);
  EXPECT_EQ(gen.out, "REJECTED step 2: generalization is not allowed in local proofs\n");
  EXPECT_EQ(run({"check-proof", kData + "/rejected/bad_syntax.proof"}).code, 2);
  EXPECT_EQ(run({"check-proof", kData + "/proofs/local_mp.proof"}).code, 2);
  EXPECT_EQ(run({"check-proof", kData + "/proofs/local_mp.proof", "--theory", kData + "/proofs/t_p.theory"}).code, 2);
  EXPECT_EQ(run({"check-proof", kData + "/proofs/prop_chain.proof", "--theory", kData + "/proofs/props.theory"}).out,
            "ACCEPTED\n");
  EXPECT_EQ(run({"check-proof", kData + "/missing.proof"}).code, 2);
}

TEST(Cli, Axiom) {
  EXPECT_EQ(run({"axiom", "A6", "--p", "P(x1)"}).out, "(P(x1) -> forall P(x2))\n");
  EXPECT_EQ(run({"axiom", "A7", "--i", "1", "--n", "1"}).out, "forall e(x1, x1)\n");
  EXPECT_EQ(run({"axiom", "A9"}).code, 2);
  EXPECT_EQ(run({"axiom", "A5", "--p", "R(x1, x2)"}).code, 2);
}

TEST(Cli, Propalg) {
  const Result two = run({"propalg", "two"});
  EXPECT_EQ(two.code, 0);
  EXPECT_EQ(two.out,
            "size: 2\nboolean: yes\naxiom elements: {1}\nvaluations: 1\n  {1}\nfilters: 2\n  {1} maximal\n  {0, 1}\n"
            "filters are intersections of valuations: yes\nmaximal filters are the valuations: yes\n");
  EXPECT_EQ(run({"propalg", kData + "/skew.algebra"}).out.substr(0, 20), "size: 2\nboolean: no\n");
  EXPECT_EQ(run({"propalg", "--fragment", "1", "--depth", "3"}).out,
            "classes: 4\n00 (a & ~a)\n01 a\n10 ~a\n11 ~(a & ~a)\n");
  EXPECT_EQ(run({"propalg", "free2"}).out.substr(0, 8), "size: 16");
}

TEST(Cli, Countermodel) {
  const Result found = run({"--sig", kData + "/small.sig", "countermodel", "--formula", "(r(x1) -> forall r(x1))",
                         "--max-size", "3"});
  EXPECT_EQ(found.code, 1);
  EXPECT_EQ(found.out,
            "COUNTERMODEL\ndomain 2\nfn f: 0 0\nrel q: 0 0 0 0\nrel r: 1 0\nequality identity\ncounterexample: [0 ; 0]\n");
  const Result none = run({"--sig", kData + "/small.sig", "countermodel", "--formula", "(forall r(x1) -> r(x1))",
                        "--max-size", "3"});
  EXPECT_EQ(none.code, 0);
  EXPECT_EQ(none.out, "no countermodel up to size 3\n");
  const Result threaded = run({"--sig", kData + "/small.sig", "--threads", "4", "countermodel", "--formula",
                            "(r(x1) -> forall r(x1))", "--max-size", "3"});
  EXPECT_EQ(threaded.out, found.out);
}

TEST(Cli, QaLawsAndSoundness) {
  const Result qa = run({"--sig", kData + "/small.sig", "qa-laws", "--size", "2", "--atoms", "2", "--structures", "2",
                      "--depth", "1"});
  EXPECT_EQ(qa.code, 0);
  EXPECT_NE(qa.out.find("ALL PASS"), std::string::npos);
  const Result sound = run({"soundness", "--max-size", "2", "--count", "3"});
  EXPECT_EQ(sound.code, 0);
  EXPECT_EQ(sound.out.rfind("A1 PASS instances=3", 0), 0u);
}

TEST(Cli, Peano) {
  const Result emit = run({"peano", "--emit"});
  EXPECT_EQ(emit.code, 0);
  EXPECT_EQ(emit.out,
            "S1: ~e(0, S(x1))\n"
            "S2: (e(S(x1), S(x2)) -> e(x1, x2))\n"
            "S3: e(add(x1, 0), x1)\n"
            "S4: e(add(x1, S(x2)), S(add(x1, x2)))\n"
            "S5: e(mul(x1, 0), 0)\n"
            "S6: e(mul(x1, S(x2)), add(mul(x1, x2), x1))\n"
            "S7: ((e(add(0, 0), 0) & forall (e(add(0, x1), x1) -> e(add(0, S(x1)), S(x1)))) -> "
            "forall e(add(0, x1), x1))\n");
  const Result z5 = run({"peano", "--structure", "zmod5"});
  EXPECT_EQ(z5.code, 1);
  EXPECT_EQ(z5.out.substr(0, z5.out.find('\n')), "S1 INVALID counterexample [4 ; 0] (x1=4, rest=0)");
  EXPECT_NE(z5.out.find("S2 VALID\nS3 VALID\nS4 VALID\nS5 VALID\nS6 VALID\nS7 VALID\n"), std::string::npos);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"nonsense"}).code, 2);
  EXPECT_EQ(run({"parse"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--sig", "/no/such/file", "parse", "x1"}).code, 2);
}

TEST(Cli, OutputsAreDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"qa-laws", "--structures", "2"},
      {"--seed", "7", "soundness", "--count", "4"},
      {"peano", "--structure", "zmod5"},
      {"propalg", "free1"},
  };
  for (const auto& c : commands) {
    const Result a = run(c), b = run(c);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out);
  }
}

}  // namespace
