#include "clonelogic/semantics.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <thread>

#include "clonelogic/error.hpp"

namespace clonelogic {

FiniteBooleanAlg::FiniteBooleanAlg(std::size_t atom_count) : atoms_(atom_count) {
  if (atom_count == 0 || atom_count > 64) throw Error("Boolean algebra atom count must be in 1..64");
  top_ = atom_count == 64 ? ~BValue{0} : (BValue{1} << atom_count) - 1;
}

namespace {

std::size_t checked_power(std::size_t base, std::size_t exponent) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint32_t>::max() / base) {
      throw Error("table too large");
    }
    r *= base;
  }
  return r;
}

template <class Map>
std::size_t index_in(const Map& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw SignatureError(std::string("undeclared ") + what + " symbol '" + name + "'");
  return static_cast<std::size_t>(std::distance(m.begin(), it));
}

}  // namespace

Structure::Structure(Language language, std::size_t size, std::size_t atom_count, EqualityMode mode)
    : language_(std::move(language)), size_(size), atoms_(atom_count), mode_(mode) {
  if (size == 0) throw Error("structures need a nonempty domain");
  FiniteBooleanAlg b(atom_count);
  language_.check_disjoint();
  for (const auto& [name, arity] : language_.functions.symbols()) {
    fn_tables_.emplace_back(checked_power(size, arity), 0);
  }
  for (const auto& [name, arity] : language_.predicates.symbols()) {
    rel_tables_.emplace_back(checked_power(size, arity), 0);
  }
  if (identity_equality()) {
    auto& table = rel_tables_[relation_index(*language_.predicates.equality())];
    for (std::size_t i = 0; i < size; ++i) table[i * size + i] = b.top();
  }
}

Structure Structure::zmod(std::size_t m) {
  if (m == 0) throw Error("zmod needs a positive modulus");
  Structure s(arithmetic_language(), m);
  std::vector<Element> succ(m), add(m * m), mul(m * m);
  for (std::size_t a = 0; a < m; ++a) {
    succ[a] = static_cast<Element>((a + 1) % m);
    for (std::size_t b = 0; b < m; ++b) {
      add[a * m + b] = static_cast<Element>((a + b) % m);
      mul[a * m + b] = static_cast<Element>((a * b) % m);
    }
  }
  s.set_function("0", {0});
  s.set_function("S", std::move(succ));
  s.set_function("add", std::move(add));
  s.set_function("mul", std::move(mul));
  return s;
}

std::size_t Structure::function_index(const std::string& name) const {
  return index_in(language_.functions.symbols(), name, "function");
}

std::size_t Structure::relation_index(const std::string& name) const {
  return index_in(language_.predicates.symbols(), name, "predicate");
}

void Structure::set_function(const std::string& name, std::vector<Element> table) {
  const std::size_t i = function_index(name);
  if (table.size() != fn_tables_[i].size()) {
    throw Error("table for '" + name + "' needs " + std::to_string(fn_tables_[i].size()) + " entries");
  }
  for (Element v : table) {
    if (v >= size_) throw Error("table for '" + name + "' has a value outside the domain");
  }
  fn_tables_[i] = std::move(table);
}

void Structure::set_relation(const std::string& name, std::vector<BValue> table) {
  const std::size_t i = relation_index(name);
  if (identity_equality() && name == *language_.predicates.equality()) {
    throw Error("equality '" + name + "' is fixed to the identity in this structure");
  }
  if (table.size() != rel_tables_[i].size()) {
    throw Error("table for '" + name + "' needs " + std::to_string(rel_tables_[i].size()) + " entries");
  }
  FiniteBooleanAlg b(atoms_);
  for (BValue v : table) {
    if (!b.contains(v)) throw Error("table for '" + name + "' has a value wider than the truth algebra");
  }
  rel_tables_[i] = std::move(table);
}

std::span<const Element> Structure::function_table(const std::string& name) const {
  return fn_tables_[function_index(name)];
}

std::span<const BValue> Structure::relation_table(const std::string& name) const {
  return rel_tables_[relation_index(name)];
}

namespace {

// Formulas resolved against a language: symbols become table indices and
// terms become postfix programs.
struct TermOp {
  bool is_var;
  std::uint32_t value;  // variable index or function table
  std::uint32_t arity;
};

struct CompiledNode {
  Formula::Kind kind;
  std::uint32_t relation = 0;
  bool is_equality = false;
  std::vector<std::vector<TermOp>> args;
  std::int32_t left = -1;
  std::int32_t right = -1;
};

class Compiled {
 public:
  Compiled(const Language& lang, const Formula& p) : lang_(lang) {
    std::size_t i = 0;
    for (const auto& [name, arity] : lang.functions.symbols()) fn_index_[name] = i++;
    i = 0;
    for (const auto& [name, arity] : lang.predicates.symbols()) rel_index_[name] = i++;
    root_ = add(p);
  }

  const std::vector<CompiledNode>& nodes() const { return nodes_; }
  std::int32_t root() const { return root_; }

 private:
  void compile_term(const Term& t, std::vector<TermOp>& out) {
    if (t.is_var()) {
      out.push_back({true, static_cast<std::uint32_t>(t.var_index()), 0});
      return;
    }
    auto it = fn_index_.find(t.symbol());
    if (it == fn_index_.end()) throw SignatureError("undeclared function symbol '" + t.symbol() + "'");
    if (lang_.functions.arity(t.symbol()) != t.args().size()) {
      throw SignatureError("function symbol '" + t.symbol() + "' applied to the wrong number of arguments");
    }
    for (const Term& a : t.args()) compile_term(a, out);
    out.push_back({false, static_cast<std::uint32_t>(it->second), static_cast<std::uint32_t>(t.args().size())});
  }

  std::int32_t add(const Formula& p) {
    CompiledNode node{p.kind()};
    switch (p.kind()) {
      case Formula::Kind::Atom: {
        auto it = rel_index_.find(p.symbol());
        if (it == rel_index_.end()) throw SignatureError("undeclared predicate symbol '" + p.symbol() + "'");
        if (lang_.predicates.arity(p.symbol()) != p.args().size()) {
          throw SignatureError("predicate symbol '" + p.symbol() + "' applied to the wrong number of arguments");
        }
        node.relation = static_cast<std::uint32_t>(it->second);
        node.is_equality = lang_.predicates.equality() == p.symbol();
        for (const Term& t : p.args()) {
          node.args.emplace_back();
          compile_term(t, node.args.back());
        }
        break;
      }
      case Formula::Kind::And:
        node.left = add(p.left());
        node.right = add(p.right());
        break;
      case Formula::Kind::Not:
      case Formula::Kind::Forall:
        node.left = add(p.left());
        break;
    }
    nodes_.push_back(std::move(node));
    return static_cast<std::int32_t>(nodes_.size() - 1);
  }

  const Language& lang_;
  std::map<std::string, std::size_t> fn_index_;
  std::map<std::string, std::size_t> rel_index_;
  std::vector<CompiledNode> nodes_;
  std::int32_t root_ = -1;
};

// Environment with binder pushes: the most recently pushed element is
// coordinate 1.
class EnvStack {
 public:
  explicit EnvStack(const Env& env) : fallback_(env.fallback) {
    stack_.assign(env.prefix.rbegin(), env.prefix.rend());
  }
  Element at(std::size_t i) const { return i <= stack_.size() ? stack_[stack_.size() - i] : fallback_; }
  void push(Element d) { stack_.push_back(d); }
  void pop() { stack_.pop_back(); }

 private:
  std::vector<Element> stack_;
  Element fallback_;
};

class Evaluator {
 public:
  Evaluator(const Structure& d, const Compiled& c, BValue top) : d_(d), c_(c), top_(top) {}

  Element term(const std::vector<TermOp>& ops, const EnvStack& env) {
    scratch_.clear();
    for (const TermOp& op : ops) {
      if (op.is_var) {
        scratch_.push_back(env.at(op.value));
        continue;
      }
      std::size_t index = 0;
      const std::size_t base = scratch_.size() - op.arity;
      for (std::size_t k = base; k < scratch_.size(); ++k) index = index * d_.size() + scratch_[k];
      scratch_.resize(base);
      scratch_.push_back(d_.function_tables()[op.value][index]);
    }
    return scratch_.back();
  }

  BValue formula(std::int32_t n, EnvStack& env) {
    const CompiledNode& node = c_.nodes()[static_cast<std::size_t>(n)];
    switch (node.kind) {
      case Formula::Kind::Atom: {
        if (node.is_equality && d_.identity_equality()) {
          return term(node.args[0], env) == term(node.args[1], env) ? top_ : 0;
        }
        std::size_t index = 0;
        for (const auto& arg : node.args) index = index * d_.size() + term(arg, env);
        return d_.relation_tables()[node.relation][index];
      }
      case Formula::Kind::Not:
        return ~formula(node.left, env) & top_;
      case Formula::Kind::And: {
        const BValue l = formula(node.left, env);
        if (l == 0) return 0;
        return l & formula(node.right, env);
      }
      case Formula::Kind::Forall: {
        BValue acc = top_;
        for (Element m = 0; m < d_.size() && acc != 0; ++m) {
          env.push(m);
          acc &= formula(node.left, env);
          env.pop();
        }
        return acc;
      }
    }
    return 0;
  }

  BValue evaluate(const Env& env) {
    EnvStack stack(env);
    return formula(c_.root(), stack);
  }

 private:
  const Structure& d_;
  const Compiled& c_;
  BValue top_;
  std::vector<Element> scratch_;
};

void check_env(const Structure& d, const Env& env) {
  if (env.fallback >= d.size()) throw Error("environment default lies outside the domain");
  for (Element m : env.prefix) {
    if (m >= d.size()) throw Error("environment entry lies outside the domain");
  }
}

// Walks all prefixes of a given length, first coordinate most significant.
bool next_prefix(std::vector<Element>& prefix, std::size_t size) {
  for (std::size_t k = prefix.size(); k-- > 0;) {
    if (++prefix[k] < size) return true;
    prefix[k] = 0;
  }
  return false;
}

std::optional<Env> first_failing_env(const Structure& d, const Compiled& c, std::size_t r) {
  Evaluator ev(d, c, FiniteBooleanAlg(d.atom_count()).top());
  const BValue top = FiniteBooleanAlg(d.atom_count()).top();
  Env env{std::vector<Element>(r, 0), 0};
  do {
    if (ev.evaluate(env) != top) return env;
  } while (next_prefix(env.prefix, d.size()));
  return std::nullopt;
}

}  // namespace

Element eval_term(const Structure& d, const Term& t, const Env& env) {
  check_env(d, env);
  check_term(d.language().functions, t);
  if (t.is_var()) return env.at(t.var_index());
  std::size_t index = 0;
  for (const Term& a : t.args()) index = index * d.size() + eval_term(d, a, env);
  return d.function_table(t.symbol())[index];
}

bool eval_formula(const Structure& d, const Formula& p, const Env& env) {
  if (d.atom_count() != 1) throw Error("two-valued evaluation needs a two-valued structure");
  return eval_formula_B(d, FiniteBooleanAlg(1), p, env) != 0;
}

BValue eval_formula_B(const Structure& d, const FiniteBooleanAlg& b, const Formula& p, const Env& env) {
  if (b.atom_count() != d.atom_count()) throw Error("truth-value mask width does not match the structure");
  check_env(d, env);
  Compiled c(d.language(), p);
  Evaluator ev(d, c, b.top());
  return ev.evaluate(env);
}

std::optional<Env> find_counterexample_env(const Structure& d, const Formula& p) {
  Compiled c(d.language(), p);
  return first_failing_env(d, c, frank(p));
}

bool is_valid(const Structure& d, const Formula& p) { return !find_counterexample_env(d, p).has_value(); }

StructureSpace::StructureSpace(Language language, std::size_t size, std::optional<std::set<std::string>> only)
    : language_(std::move(language)), size_(size) {
  if (size == 0) throw Error("structures need a nonempty domain");
  auto wanted = [&](const std::string& name) { return !only || only->count(name) != 0; };
  auto multiply = [&](std::uint64_t radix) {
    radices_.push_back(radix);
    if (count_ > std::numeric_limits<std::uint64_t>::max() / radix) {
      count_ = std::numeric_limits<std::uint64_t>::max();
    } else {
      count_ *= radix;
    }
  };
  std::size_t table = 0;
  for (const auto& [name, arity] : language_.functions.symbols()) {
    if (wanted(name)) {
      for (std::size_t k = 0, n = checked_power(size, arity); k < n; ++k) {
        cells_.push_back({true, table, k});
        multiply(size);
      }
    }
    ++table;
  }
  table = 0;
  for (const auto& [name, arity] : language_.predicates.symbols()) {
    if (wanted(name) && language_.predicates.equality() != name) {
      for (std::size_t k = 0, n = checked_power(size, arity); k < n; ++k) {
        cells_.push_back({false, table, k});
        multiply(2);
      }
    }
    ++table;
  }
}

Structure StructureSpace::at(std::uint64_t index) const {
  Structure s(language_, size_);
  decode_into(index, s);
  return s;
}

void StructureSpace::decode_into(std::uint64_t index, Structure& out) const {
  for (std::size_t k = 0; k < cells_.size(); ++k) {
    const std::uint64_t digit = index % radices_[k];
    index /= radices_[k];
    const Cell& cell = cells_[k];
    if (cell.is_function) {
      out.set_function_cell(cell.table, cell.offset, static_cast<Element>(digit));
    } else {
      out.set_relation_cell(cell.table, cell.offset, digit);
    }
  }
}

std::optional<Structure> countermodel_search(const Language& lang, const Formula& p, std::size_t max_size,
                                             const CountermodelOptions& options) {
  if (max_size == 0) throw Error("max size must be at least 1");
  check_formula(lang, p);
  const Compiled compiled(lang, p);
  const std::size_t r = frank(p);
  const std::size_t threads = std::max<std::size_t>(options.threads, 1);

  for (std::size_t size = 1; size <= max_size; ++size) {
    const StructureSpace space(lang, size);
    if (space.cell_count() > options.cell_cap) {
      throw Error("size " + std::to_string(size) + " needs " + std::to_string(space.cell_count()) +
                  " table cells, above the cap of " + std::to_string(options.cell_cap) +
                  "; use a smaller language or size");
    }
    constexpr std::uint64_t kChunk = 64;
    std::atomic<std::uint64_t> next{0};
    std::atomic<std::uint64_t> best{std::numeric_limits<std::uint64_t>::max()};
    auto worker = [&] {
      Structure scratch = space.at(0);
      for (;;) {
        const std::uint64_t start = next.fetch_add(kChunk);
        if (start >= space.count() || start >= best.load()) return;
        const std::uint64_t end = std::min(space.count(), start + kChunk);
        for (std::uint64_t i = start; i < end && i < best.load(); ++i) {
          space.decode_into(i, scratch);
          if (first_failing_env(scratch, compiled, r)) {
            std::uint64_t seen = best.load();
            while (i < seen && !best.compare_exchange_weak(seen, i)) {
            }
            break;
          }
        }
      }
    };
    if (threads == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (best.load() != std::numeric_limits<std::uint64_t>::max()) return space.at(best.load());
  }
  return std::nullopt;
}

namespace {

void collect_symbols(const Term& t, std::set<std::string>& out) {
  if (t.is_var()) return;
  out.insert(t.symbol());
  for (const Term& a : t.args()) collect_symbols(a, out);
}

void collect_symbols(const Formula& p, std::set<std::string>& out) {
  switch (p.kind()) {
    case Formula::Kind::Atom:
      out.insert(p.symbol());
      for (const Term& t : p.args()) collect_symbols(t, out);
      return;
    case Formula::Kind::And:
      collect_symbols(p.left(), out);
      collect_symbols(p.right(), out);
      return;
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
      collect_symbols(p.left(), out);
      return;
  }
}

}  // namespace

std::set<std::string> symbols_of(const Formula& p) {
  std::set<std::string> out;
  collect_symbols(p, out);
  return out;
}

ValidityReport check_validity_up_to(const Language& lang, const Formula& p, std::size_t max_size,
                                    const ValidityBudget& budget) {
  check_formula(lang, p);
  const Compiled compiled(lang, p);
  const std::size_t r = frank(p);
  const std::set<std::string> used = symbols_of(p);
  ValidityReport report;
  for (std::size_t size = 1; size <= max_size; ++size) {
    const StructureSpace space(lang, size, used);
    Structure scratch = space.at(0);
    auto check = [&](std::uint64_t index) {
      space.decode_into(index, scratch);
      ++report.structures_checked;
      if (auto env = first_failing_env(scratch, compiled, r)) {
        report.valid = false;
        report.counterexample = scratch;
        report.counterexample_env = std::move(env);
        return false;
      }
      return true;
    };
    if (space.count() <= budget.exhaustive_limit) {
      for (std::uint64_t i = 0; i < space.count(); ++i) {
        if (!check(i)) return report;
      }
    } else {
      report.sampled = true;
      std::mt19937_64 rng(budget.seed * 1000003 + size);
      std::uniform_int_distribution<std::uint64_t> pick(0, space.count() - 1);
      for (std::uint64_t k = 0; k < budget.exhaustive_limit; ++k) {
        if (!check(pick(rng))) return report;
      }
    }
  }
  return report;
}

FunctionalElement::FunctionalElement(std::size_t domain, std::size_t width, std::vector<BValue> values)
    : domain_(domain), width_(width), values_(std::move(values)) {
  if (domain == 0) throw Error("functional elements need a nonempty domain");
  if (values_.size() != checked_power(domain, width)) throw Error("functional element table has the wrong size");
}

FunctionalElement FunctionalElement::of_formula(const Structure& d, const FiniteBooleanAlg& b, const Formula& p,
                                                std::size_t width) {
  if (b.atom_count() != d.atom_count()) throw Error("truth-value mask width does not match the structure");
  const Compiled c(d.language(), p);
  Evaluator ev(d, c, b.top());
  FunctionalElement out = constant(d.size(), width, 0);
  for (std::size_t i = 0; i < out.values_.size(); ++i) out.values_[i] = ev.evaluate(out.env_of(i));
  return out;
}

FunctionalElement FunctionalElement::constant(std::size_t domain, std::size_t width, BValue v) {
  return FunctionalElement(domain, width, std::vector<BValue>(checked_power(domain, width), v));
}

FunctionalElement FunctionalElement::equality(std::size_t domain, std::size_t width, const FiniteBooleanAlg& b) {
  if (width < 2) throw Error("equality depends on two coordinates");
  FunctionalElement out = constant(domain, width, 0);
  for (std::size_t i = 0; i < out.values_.size(); ++i) {
    const Env env = out.env_of(i);
    out.values_[i] = env.at(1) == env.at(2) ? b.top() : 0;
  }
  return out;
}

Env FunctionalElement::env_of(std::size_t index) const {
  Env env{std::vector<Element>(width_), 0};
  for (std::size_t k = 0; k < width_; ++k) {
    env.prefix[k] = static_cast<Element>(index % domain_);
    index /= domain_;
  }
  return env;
}

std::size_t FunctionalElement::index_of(std::span<const Element> coords) const {
  std::size_t index = 0;
  for (std::size_t k = coords.size(); k-- > 0;) index = index * domain_ + coords[k];
  return index;
}

FunctionalElement FunctionalElement::negate(const FiniteBooleanAlg& b) const {
  FunctionalElement out = *this;
  for (BValue& v : out.values_) v = b.complement(v);
  return out;
}

FunctionalElement FunctionalElement::meet(const FunctionalElement& other) const {
  if (other.domain_ != domain_ || other.width_ != width_) throw Error("functional elements of different shapes");
  FunctionalElement out = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] &= other.values_[i];
  return out;
}

FunctionalElement FunctionalElement::forall(const FiniteBooleanAlg& b) const {
  FunctionalElement out = constant(domain_, width_, 0);
  std::vector<Element> shifted(width_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Env env = env_of(i);
    // (m, m1, ..., m_{w-1})
    for (std::size_t k = 1; k < width_; ++k) shifted[k] = env.prefix[k - 1];
    BValue acc = b.top();
    for (Element m = 0; m < domain_; ++m) {
      shifted[0] = m;
      acc &= values_[index_of(shifted)];
    }
    out.values_[i] = acc;
  }
  return out;
}

FunctionalElement FunctionalElement::plus() const {
  FunctionalElement out = constant(domain_, width_, 0);
  std::vector<Element> coords(width_, 0);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Env env = env_of(i);
    for (std::size_t k = 0; k + 1 < width_; ++k) coords[k] = env.prefix[k + 1];
    coords[width_ - 1] = 0;
    out.values_[i] = values_[index_of(coords)];
  }
  return out;
}

FunctionalElement FunctionalElement::star() const {
  if (width_ < 2) throw Error("star needs at least two coordinates");
  FunctionalElement out = constant(domain_, width_, 0);
  std::vector<Element> coords(width_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const Env env = env_of(i);
    coords = env.prefix;
    coords[0] = env.prefix[1];
    out.values_[i] = values_[index_of(coords)];
  }
  return out;
}

bool QaReport::passed() const {
  return std::all_of(laws.begin(), laws.end(), [](const LawResult& l) { return l.passed; });
}

QaReport qa_law_check(const Structure& d, const FiniteBooleanAlg& b, const std::vector<Formula>& sample,
                      std::size_t rank_bound) {
  const std::size_t width = rank_bound + 2;
  // Distinct formulas often induce the same element; the laws only see elements.
  std::vector<FunctionalElement> elements;
  std::vector<Formula> sources;
  for (const Formula& p : sample) {
    if (frank(p) > rank_bound) throw Error("sample formula exceeds the rank bound");
    FunctionalElement e = FunctionalElement::of_formula(d, b, p, width);
    if (std::find(elements.begin(), elements.end(), e) == elements.end()) {
      elements.push_back(std::move(e));
      sources.push_back(p);
    }
  }
  std::vector<FunctionalElement> bound;
  for (const auto& e : elements) bound.push_back(e.forall(b));

  auto first_difference = [](const FunctionalElement& x, const FunctionalElement& y) -> std::optional<Env> {
    for (std::size_t i = 0; i < x.values().size(); ++i) {
      if (x.values()[i] != y.values()[i]) return x.env_of(i);
    }
    return std::nullopt;
  };

  QaReport report;
  LawResult q1{"Q1"}, q2{"Q2"}, q3{"Q3"}, q4{"Q4"}, q5{"Q5"};

  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size() && q1.passed; ++j) {
      ++q1.instances;
      if (auto env = first_difference(elements[i].meet(elements[j]).forall(b), bound[i].meet(bound[j]))) {
        q1 = {"Q1", false, q1.instances, sources[i], sources[j], env};
      }
    }
  }

  FunctionalElement e = FunctionalElement::equality(d.size(), width, b);
  if (const auto& eq_symbol = d.language().predicates.equality()) {
    e = FunctionalElement::of_formula(d, b, Formula::atom(*eq_symbol, {Term::var(1), Term::var(2)}), width);
  }
  ++q4.instances;
  if (auto env = first_difference(e.star(), FunctionalElement::constant(d.size(), width, b.top()))) {
    q4.passed = false;
    q4.witness_env = env;
  }

  for (std::size_t i = 0; i < elements.size(); ++i) {
    const FunctionalElement& p = elements[i];
    const FunctionalElement all_plus = bound[i].plus();
    if (q2.passed) {
      ++q2.instances;
      if (auto env = first_difference(all_plus, all_plus.meet(p))) q2 = {"Q2", false, q2.instances, sources[i], {}, env};
    }
    if (q3.passed) {
      ++q3.instances;
      if (auto env = first_difference(p.plus().forall(b), p)) q3 = {"Q3", false, q3.instances, sources[i], {}, env};
    }
    if (q5.passed) {
      ++q5.instances;
      if (auto env = first_difference(e.meet(p), e.meet(p.star()))) {
        q5 = {"Q5", false, q5.instances, sources[i], {}, env};
      }
    }
  }
  report.laws = {q1, q2, q3, q4, q5};
  return report;
}

bool PerfectReport::sound() const {
  return std::none_of(entries.begin(), entries.end(),
                      [](const PerfectEntry& e) { return e.status == PerfectEntry::Status::Unsound; });
}

PerfectReport perfect_check_bounded(const Structure& d, const Env& env, const std::vector<Term>& candidates,
                                    const std::vector<Formula>& sample) {
  for (const Term& a : candidates) {
    if (!is_closed(a)) throw Error("witness candidates must be closed terms");
  }
  // p[a, x1, x2, ...]
  auto instance = [](const Formula& p, const Term& a) { return fsubst(p, Substitution({a}, ShiftTail{-1})); };
  PerfectReport report;
  for (const Formula& p : sample) {
    PerfectEntry entry{p};
    if (eval_formula(d, Formula::forall(p), env)) {
      entry.status = PerfectEntry::Status::Sound;
      for (const Term& a : candidates) {
        if (!eval_formula(d, instance(p, a), env)) {
          entry.status = PerfectEntry::Status::Unsound;
          entry.witness = a;
          break;
        }
      }
    } else {
      entry.status = PerfectEntry::Status::Inconclusive;
      for (const Term& a : candidates) {
        if (eval_formula(d, instance(Formula::negation(p), a), env)) {
          entry.status = PerfectEntry::Status::Witnessed;
          entry.witness = a;
          break;
        }
      }
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

bool finite_meet_property(const std::vector<Formula>& sentences, const Structure& d) {
  for (const Formula& p : sentences) {
    if (!is_sentence(p)) throw Error("finite meet property is defined for sentences only");
  }
  const Env empty;
  return std::all_of(sentences.begin(), sentences.end(), [&](const Formula& p) { return eval_formula(d, p, empty); });
}

}  // namespace clonelogic
