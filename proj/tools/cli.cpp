#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clonelogic/error.hpp"
#include "clonelogic/formula.hpp"
#include "clonelogic/generators.hpp"
#include "clonelogic/proof.hpp"
#include "clonelogic/prop_algebra.hpp"
#include "clonelogic/semantics.hpp"
#include "clonelogic/syntax.hpp"

namespace clonelogic::cli {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kInputError = 2;

// One unary and one binary function, one unary and one binary predicate, and
// an equality symbol.
Language basic_language() {
  Language lang;
  lang.functions.declare("f", 1);
  lang.functions.declare("g", 2);
  lang.predicates.declare("P", 1);
  lang.predicates.declare("R", 2);
  lang.predicates.declare("e", 2);
  lang.predicates.set_equality("e");
  return lang;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Language load_language(const std::string& spec) {
  if (spec == "basic") return basic_language();
  if (spec == "arith") return arithmetic_language();
  return parse_signature(read_file(spec));
}

std::optional<std::size_t> zmod_modulus(const std::string& spec) {
  if (spec.rfind("zmod", 0) != 0 || spec.size() == 4) return std::nullopt;
  std::size_t m = 0;
  for (char c : spec.substr(4)) {
    if (c < '0' || c > '9') return std::nullopt;
    m = m * 10 + static_cast<std::size_t>(c - '0');
  }
  return m;
}

Structure load_structure(const std::string& spec, const Language& lang) {
  if (auto m = zmod_modulus(spec)) return Structure::zmod(*m);
  return parse_structure(lang, read_file(spec));
}

FinitePropAlgebra load_algebra(const std::string& spec) {
  if (spec == "two") return FinitePropAlgebra::two();
  if (spec == "free1") return FinitePropAlgebra::free_boolean(1);
  if (spec == "free2") return FinitePropAlgebra::free_boolean(2);
  return parse_algebra(read_file(spec));
}

std::string set_to_string(const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t x : s.elements()) {
    out += first ? "" : ", ";
    out += std::to_string(x);
    first = false;
  }
  return out + "}";
}

std::string env_bindings(const Env& env) {
  std::string out;
  for (std::size_t i = 1; i <= env.prefix.size(); ++i) {
    if (i > 1) out += ", ";
    out += "x" + std::to_string(i) + "=" + std::to_string(env.at(i));
  }
  if (!out.empty()) out += ", ";
  return out + "rest=" + std::to_string(env.fallback);
}

std::vector<std::string> proposition_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t k = 0; k < n; ++k) names.push_back(std::string(1, static_cast<char>('a' + k)));
  return names;
}

struct Options {
  std::string sig = "basic";
  bool sig_given = false;
  std::uint64_t seed = 1;
  std::size_t threads = 1;

  std::string text;
  std::string kind = "formula";
  std::string subst;
  std::string structure;
  std::string formula;
  std::string env;
  std::string file;
  std::string theory;
  std::string axiom;
  std::optional<std::string> p, q, r;
  std::size_t index = 1;
  std::size_t gens = 0;
  std::string algebra;
  std::size_t fragment_vars = 0;
  std::size_t depth = 2;
  std::size_t max_size = 2;
  std::size_t rank_bound = 2;
  std::size_t size = 2;
  std::size_t atoms = 1;
  std::size_t structures = 4;
  std::size_t count = 20;
  bool emit = false;
  std::string body;
};

class Commands {
 public:
  Commands(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  Language lang(const char* fallback = nullptr) const {
    if (!o_.sig_given && fallback) return load_language(fallback);
    return load_language(o_.sig);
  }

  int parse() {
    const Language l = lang();
    if (o_.kind == "term") {
      const Term t = parse_term(l.functions, o_.text);
      out_ << "term: " << to_string(t) << "\n";
      out_ << "rank: " << rank(t) << "\n";
      out_ << "closed: " << (is_closed(t) ? "yes" : "no") << "\n";
      return kOk;
    }
    if (o_.kind != "formula") throw Error("--kind must be 'term' or 'formula'");
    const Formula p = parse_formula(l, o_.text);
    out_ << "formula: " << to_string(p) << "\n";
    out_ << "rank: " << frank(p) << "\n";
    out_ << "sentence: " << (is_sentence(p) ? "yes" : "no") << "\n";
    return kOk;
  }

  int subst() {
    const Language l = lang();
    const Substitution s = parse_substitution(l.functions, o_.subst);
    if (o_.kind == "term") {
      out_ << to_string(apply(parse_term(l.functions, o_.text), s)) << "\n";
    } else if (o_.kind == "formula") {
      out_ << to_string(fsubst(parse_formula(l, o_.text), s)) << "\n";
    } else if (o_.kind == "subst") {
      out_ << to_string(compose(parse_substitution(l.functions, o_.text), s)) << "\n";
    } else {
      throw Error("--kind must be 'term', 'formula' or 'subst'");
    }
    return kOk;
  }

  int eval() {
    const bool builtin = zmod_modulus(o_.structure).has_value();
    const Language l = builtin ? arithmetic_language() : lang();
    const Structure d = load_structure(o_.structure, l);
    const Formula p = parse_formula(d.language(), o_.formula);
    if (!o_.env.empty()) {
      const Env env = parse_env(o_.env);
      for (Element v : env.prefix) {
        if (v >= d.size()) throw Error("environment element out of range");
      }
      if (env.fallback >= d.size()) throw Error("environment element out of range");
      out_ << "value: " << (eval_formula(d, p, env) ? "true" : "false") << " at " << to_string(env) << "\n";
    }
    const auto bad = find_counterexample_env(d, p);
    if (!bad) {
      out_ << "valid: yes\n";
      return kOk;
    }
    out_ << "valid: no\n";
    out_ << "counterexample: " << to_string(*bad) << " (" << env_bindings(*bad) << ")\n";
    return kFail;
  }

  int taut() {
    const PropTerm p = parse_prop(o_.text);
    if (tautology(p)) {
      out_ << "TAUTOLOGY\n";
      return kOk;
    }
    const std::set<std::string> vars = variables(p);
    const std::vector<std::string> names(vars.begin(), vars.end());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << names.size()); ++mask) {
      std::map<std::string, bool> assignment;
      for (std::size_t k = 0; k < names.size(); ++k) assignment[names[k]] = (mask >> k) & 1U;
      if (!evaluate(p, assignment)) {
        out_ << "NOT A TAUTOLOGY\nfalsified by:";
        for (const auto& [name, value] : assignment) out_ << " " << name << "=" << value;
        out_ << "\n";
        break;
      }
    }
    return kFail;
  }

  int check_proof() {
    const Language l = lang();
    const ProofFile file = parse_proof(l, read_file(o_.file));
    auto report = [&](const CheckResult& r) {
      if (r.ok) {
        out_ << "ACCEPTED\n";
        return kOk;
      }
      out_ << "REJECTED step " << r.step + 1 << ": " << r.reason << "\n";
      return kFail;
    };
    auto require_theory_name = [&](const std::string& name) {
      if (!file.theory.empty() && file.theory != name) {
        throw Error("proof uses theory '" + file.theory + "' but '" + name + "' was given");
      }
    };
    if (const auto* prop = std::get_if<PropProof>(&file.proof)) {
      PropTheory theory;
      if (!o_.theory.empty()) {
        theory = parse_prop_theory(read_file(o_.theory));
        require_theory_name(theory.name);
      } else if (!file.theory.empty()) {
        throw Error("proof uses theory '" + file.theory + "'; pass it with --theory");
      }
      return report(check_prop_proof(*prop, theory.formulas));
    }
    Theory theory;
    if (!o_.theory.empty()) {
      theory = parse_theory(l, read_file(o_.theory));
      require_theory_name(theory.name);
    } else if (!file.theory.empty()) {
      throw Error("proof uses theory '" + file.theory + "'; pass it with --theory");
    }
    return report(clonelogic::check_proof(l, std::get<Proof>(file.proof), theory));
  }

  int axiom() {
    const Language l = lang();
    AxiomInstanceSpec spec;
    spec.id = axiom_id_from_string(o_.axiom);
    if (o_.p) spec.p = parse_formula(l, *o_.p);
    if (o_.q) spec.q = parse_formula(l, *o_.q);
    if (o_.r) spec.r = parse_formula(l, *o_.r);
    if (!o_.subst.empty()) spec.subst = parse_substitution(l.functions, o_.subst);
    spec.index = o_.index;
    spec.generalizations = o_.gens;
    out_ << to_string(instantiate_axiom(l, spec)) << "\n";
    return kOk;
  }

  int propalg() {
    if (o_.fragment_vars > 0) {
      const auto classes = free_fragment_classes(proposition_names(o_.fragment_vars), o_.depth);
      out_ << "classes: " << classes.size() << "\n";
      for (const auto& [table, rep] : classes) {
        std::string bits;
        for (bool b : table) bits += b ? '1' : '0';
        out_ << bits << " " << to_string(rep) << "\n";
      }
      return kOk;
    }
    const FinitePropAlgebra a = load_algebra(o_.algebra);
    const std::vector<ElementSet> vals = enumerate_valuations(a);
    const std::vector<ElementSet> filters = enumerate_filters(a);
    out_ << "size: " << a.size() << "\n";
    out_ << "boolean: " << (is_boolean(a) ? "yes" : "no") << "\n";
    out_ << "axiom elements: " << set_to_string(axiom_elements(a)) << "\n";
    out_ << "valuations: " << vals.size() << "\n";
    for (const ElementSet& v : vals) out_ << "  " << set_to_string(v) << "\n";
    out_ << "filters: " << filters.size() << "\n";
    bool complete = true;
    std::vector<ElementSet> maximal;
    for (const ElementSet& f : filters) {
      const bool max = is_maximal_filter(a, f);
      if (max) maximal.push_back(f);
      const bool meets = consequences(a, f) == f;
      complete = complete && meets;
      out_ << "  " << set_to_string(f) << (max ? " maximal" : "") << (meets ? "" : " NOT-AN-INTERSECTION") << "\n";
    }
    const bool maximal_match = maximal == vals;
    out_ << "filters are intersections of valuations: " << (complete ? "yes" : "no") << "\n";
    out_ << "maximal filters are the valuations: " << (maximal_match ? "yes" : "no") << "\n";
    return complete && maximal_match ? kOk : kFail;
  }

  int countermodel() {
    const Language l = lang();
    const Formula p = parse_formula(l, o_.formula);
    const auto d = countermodel_search(l, p, o_.max_size, {.cell_cap = 16, .threads = o_.threads});
    if (!d) {
      out_ << "no countermodel up to size " << o_.max_size << "\n";
      return kOk;
    }
    out_ << "COUNTERMODEL\n" << to_string(*d);
    out_ << "counterexample: " << to_string(*find_counterexample_env(*d, p)) << "\n";
    return kFail;
  }

  int qa_laws() {
    const Language l = lang();
    if (o_.atoms == 0 || o_.atoms > 64) throw Error("--atoms must be between 1 and 64");
    std::vector<Formula> atoms;
    for (const auto& [name, arity] : l.predicates.symbols()) {
      std::vector<std::size_t> idx(arity, 1);
      while (true) {
        std::vector<Term> args;
        for (std::size_t i : idx) args.push_back(Term::var(i));
        atoms.push_back(Formula::atom(name, std::move(args)));
        std::size_t k = arity;
        while (k > 0 && ++idx[k - 1] > std::max<std::size_t>(o_.rank_bound, 1)) idx[--k] = 1;
        if (k == 0) break;
      }
    }
    std::vector<Formula> sample;
    for (const Formula& p : formulas_up_to_depth(atoms, o_.depth)) {
      if (frank(p) <= o_.rank_bound) sample.push_back(p);
    }
    const FiniteBooleanAlg b(o_.atoms);
    std::mt19937_64 rng(o_.seed);
    out_ << "sample: " << sample.size() << " formulas\n";
    bool all = true;
    for (std::size_t s = 0; s < o_.structures; ++s) {
      const Structure d = random_structure(l, o_.size, o_.atoms, rng);
      const QaReport report = qa_law_check(d, b, sample, o_.rank_bound);
      for (const LawResult& law : report.laws) {
        out_ << "structure " << s + 1 << " " << law.law << " " << (law.passed ? "PASS" : "FAIL")
             << " instances=" << law.instances;
        if (!law.passed && law.witness_p) out_ << " p=" << to_string(*law.witness_p);
        if (!law.passed && law.witness_q) out_ << " q=" << to_string(*law.witness_q);
        if (!law.passed && law.witness_env) out_ << " env=" << to_string(*law.witness_env);
        out_ << "\n";
      }
      all = all && report.passed();
    }
    out_ << (all ? "ALL PASS" : "FAILURES") << "\n";
    return all ? kOk : kFail;
  }

  int soundness() {
    const Language l = lang();
    std::mt19937_64 rng(o_.seed);
    const RandomShape shape{.max_var = 2, .term_depth = 1, .formula_depth = 2, .max_prefix = 2};
    bool all = true;
    for (int id = 1; id <= 8; ++id) {
      const auto schema = static_cast<AxiomId>(id);
      if ((schema == AxiomId::A7 || schema == AxiomId::A8) && !l.has_equality()) {
        out_ << to_string(schema) << " SKIPPED (no equality symbol)\n";
        continue;
      }
      std::size_t sampled = 0;
      std::size_t failures = 0;
      std::string first_failure;
      for (std::size_t k = 0; k < o_.count; ++k) {
        const Formula axiom = instantiate_axiom(l, random_axiom_spec(l, schema, rng, shape));
        const ValidityReport r = check_validity_up_to(l, axiom, o_.max_size, {.exhaustive_limit = 4096, .seed = o_.seed + k});
        sampled += r.sampled ? 1 : 0;
        if (!r.valid) {
          if (failures++ == 0) first_failure = to_string(axiom);
        }
      }
      out_ << to_string(schema) << " " << (failures == 0 ? "PASS" : "FAIL") << " instances=" << o_.count
           << " sampled=" << sampled;
      if (failures > 0) out_ << " failures=" << failures << " first=" << first_failure;
      out_ << "\n";
      all = all && failures == 0;
    }
    return all ? kOk : kFail;
  }

  int peano() {
    const std::vector<Formula> core = peano_core();
    const Formula body = o_.body.empty() ? default_induction_body() : parse_formula(arithmetic_language(), o_.body);
    std::vector<Formula> schemata = core;
    schemata.push_back(peano_induction(body));
    if (o_.emit || o_.structure.empty()) {
      for (std::size_t k = 0; k < schemata.size(); ++k) out_ << "S" << k + 1 << ": " << to_string(schemata[k]) << "\n";
      if (o_.structure.empty()) return kOk;
    }
    const Structure d = load_structure(o_.structure, arithmetic_language());
    if (d.language() != arithmetic_language()) throw Error("structure is not over the arithmetic language");
    bool all = true;
    for (std::size_t k = 0; k < schemata.size(); ++k) {
      const auto bad = find_counterexample_env(d, schemata[k]);
      out_ << "S" << k + 1 << " " << (bad ? "INVALID" : "VALID");
      if (bad) out_ << " counterexample " << to_string(*bad) << " (" << env_bindings(*bad) << ")";
      out_ << "\n";
      all = all && !bad;
    }
    return all ? kOk : kFail;
  }

 private:
  const Options& o_;
  std::ostream& out_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clone-indexed predicate logic toolkit", "clonelogic"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--sig", o.sig, "Signature file, or builtin 'basic' (f/1 g/2 P/1 R/2 e/2=) or 'arith'")
      ->each([&](const std::string&) { o.sig_given = true; });
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", o.threads, "Worker threads for searches")->capture_default_str();

  Commands commands(o, out);
  std::function<int()> action;
  auto sub = [&](const char* name, const char* help, int (Commands::*fn)()) {
    CLI::App* s = app.add_subcommand(name, help);
    s->callback([&action, &commands, fn] { action = [&commands, fn] { return (commands.*fn)(); }; });
    return s;
  };

  CLI::App* parse = sub("parse", "Parse a term or formula; print canonical form and rank", &Commands::parse);
  parse->add_option("text", o.text, "Input text")->required();
  parse->add_option("--kind", o.kind, "term or formula")->capture_default_str();

  CLI::App* subst = sub("subst", "Apply a substitution to a term or formula, or compose two", &Commands::subst);
  subst->add_option("text", o.text, "Term, formula or substitution")->required();
  subst->add_option("subst", o.subst, "Substitution, e.g. [x2, f(x1) ; shift 0]")->required();
  subst->add_option("--kind", o.kind, "term, formula or subst (compose text then subst)")->capture_default_str();

  CLI::App* eval = sub("eval", "Evaluate a formula in a finite structure", &Commands::eval);
  eval->add_option("--structure", o.structure, "Structure file or zmodN")->required();
  eval->add_option("--formula", o.formula, "Formula")->required();
  eval->add_option("--env", o.env, "Environment, e.g. [1, 2 ; 0]");

  CLI::App* taut = sub("taut", "Decide whether a propositional term is a tautology", &Commands::taut);
  taut->add_option("text", o.text, "Propositional term")->required();

  CLI::App* check = sub("check-proof", "Check a proof certificate", &Commands::check_proof);
  check->add_option("file", o.file, "Proof file")->required();
  check->add_option("--theory", o.theory, "Theory file");

  CLI::App* axiom = sub("axiom", "Instantiate an axiom schema", &Commands::axiom);
  axiom->add_option("id", o.axiom, "A1 .. A8")->required();
  axiom->add_option("--p", o.p, "Formula p");
  axiom->add_option("--q", o.q, "Formula q");
  axiom->add_option("--r", o.r, "Formula r");
  axiom->add_option("--subst", o.subst, "Substitution (A5, A8)");
  axiom->add_option("--i", o.index, "Variable index (A7)")->capture_default_str();
  axiom->add_option("--n", o.gens, "Number of generalizations")->capture_default_str();

  CLI::App* propalg = sub("propalg", "Valuations, filters and completeness of a finite proposition algebra",
                          &Commands::propalg);
  propalg->add_option("algebra", o.algebra, "Algebra file, or two, free1, free2");
  propalg->add_option("--fragment", o.fragment_vars, "Instead list truth-table classes on this many variables");
  propalg->add_option("--depth", o.depth, "Term depth for --fragment")->capture_default_str();

  CLI::App* cm = sub("countermodel", "Search for the first finite countermodel", &Commands::countermodel);
  cm->add_option("--formula", o.formula, "Formula")->required();
  cm->add_option("--max-size", o.max_size, "Largest domain size")->capture_default_str();

  CLI::App* qa = sub("qa-laws", "Check Q1-Q5 in functional algebras over random structures", &Commands::qa_laws);
  qa->add_option("--size", o.size, "Domain size")->capture_default_str();
  qa->add_option("--atoms", o.atoms, "Atoms of the truth-value algebra (1 = two-valued)")->capture_default_str();
  qa->add_option("--rank-bound", o.rank_bound, "Rank bound")->capture_default_str();
  qa->add_option("--depth", o.depth, "Connective depth of sample formulas")->capture_default_str();
  qa->add_option("--structures", o.structures, "Number of random structures")->capture_default_str();

  CLI::App* sound = sub("soundness", "Check random axiom instances for validity in small structures",
                        &Commands::soundness);
  sound->add_option("--max-size", o.max_size, "Largest domain size")->capture_default_str();
  sound->add_option("--count", o.count, "Instances per schema")->capture_default_str();

  CLI::App* peano = sub("peano", "Emit the arithmetic schemata or check them in a structure", &Commands::peano);
  peano->add_flag("--emit", o.emit, "Print the seven schemata");
  peano->add_option("--structure", o.structure, "Structure file or zmodN to check S1-S7 in");
  peano->add_option("--body", o.body, "Induction body for S7");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }
  try {
    return action();
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace clonelogic::cli
