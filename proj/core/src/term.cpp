#include "clonelogic/term.hpp"

#include <algorithm>

#include "clonelogic/error.hpp"

namespace clonelogic {

FunctionType::FunctionType(std::map<std::string, std::size_t> symbols) : symbols_(std::move(symbols)) {}

void FunctionType::declare(const std::string& name, std::size_t arity) {
  auto [it, inserted] = symbols_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw SignatureError("function symbol '" + name + "' redeclared with a different arity");
  }
}

std::size_t FunctionType::arity(const std::string& name) const {
  auto it = symbols_.find(name);
  if (it == symbols_.end()) throw SignatureError("undeclared function symbol '" + name + "'");
  return it->second;
}

Term Term::var(std::size_t index) {
  if (index == 0) throw Error("variable indices start at 1");
  auto node = std::make_shared<Node>();
  node->index = index;
  return Term(std::move(node));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  if (symbol.empty()) throw Error("empty function symbol");
  auto node = std::make_shared<Node>();
  node->symbol = std::move(symbol);
  for (const Term& a : args) node->size += a.size();
  node->args = std::move(args);
  return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->size != b.node_->size || a.node_->index != b.node_->index ||
      a.node_->symbol != b.node_->symbol) {
    return false;
  }
  return std::equal(a.node_->args.begin(), a.node_->args.end(), b.node_->args.begin(), b.node_->args.end());
}

bool operator<(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return false;
  if (a.is_var() != b.is_var()) return a.is_var();
  if (a.is_var()) return a.var_index() < b.var_index();
  if (a.symbol() != b.symbol()) return a.symbol() < b.symbol();
  return std::lexicographical_compare(a.node_->args.begin(), a.node_->args.end(), b.node_->args.begin(),
                                      b.node_->args.end());
}

void check_term(const FunctionType& type, const Term& t) {
  if (t.is_var()) return;
  std::size_t arity = type.arity(t.symbol());
  if (arity != t.args().size()) {
    throw SignatureError("function symbol '" + t.symbol() + "' expects " + std::to_string(arity) +
                         " argument(s), got " + std::to_string(t.args().size()));
  }
  for (const Term& a : t.args()) check_term(type, a);
}

std::size_t rank(const Term& t) {
  if (t.is_var()) return t.var_index();
  std::size_t r = 0;
  for (const Term& a : t.args()) r = std::max(r, rank(a));
  return r;
}

Term shift_up(const Term& t) {
  if (t.is_var()) return Term::var(t.var_index() + 1);
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(shift_up(a));
  return Term::app(t.symbol(), std::move(args));
}

namespace {

// Coordinate j under the tail rule alone.
Term tail_at(const SubstTail& tail, std::size_t j) {
  if (const auto* s = std::get_if<ShiftTail>(&tail)) {
    return Term::var(static_cast<std::size_t>(static_cast<long>(j) + s->offset));
  }
  return std::get<ConstTail>(tail).term;
}

}  // namespace

Substitution::Substitution() : tail_(ShiftTail{0}) {}

Substitution::Substitution(std::vector<Term> prefix, SubstTail tail)
    : prefix_(std::move(prefix)), tail_(std::move(tail)) {
  if (const auto* s = std::get_if<ShiftTail>(&tail_)) {
    if (static_cast<long>(prefix_.size()) + s->offset < 0) {
      throw Error("shift tail " + std::to_string(s->offset) + " after a prefix of length " +
                  std::to_string(prefix_.size()) + " reaches x0");
    }
  }
  // Drop trailing entries the tail rule already produces.
  auto droppable = [&] {
    if (prefix_.empty()) return false;
    if (const auto* s = std::get_if<ShiftTail>(&tail_)) {
      if (static_cast<long>(prefix_.size()) - 1 + s->offset < 0) return false;
    }
    return prefix_.back() == tail_at(tail_, prefix_.size());
  };
  while (droppable()) prefix_.pop_back();
}

Term Substitution::at(std::size_t j) const {
  if (j == 0) throw Error("substitution coordinates start at 1");
  if (j <= prefix_.size()) return prefix_[j - 1];
  return tail_at(tail_, j);
}

Term apply(const Term& t, const Substitution& s) {
  if (t.is_var()) return s.at(t.var_index());
  if (t.args().empty()) return t;
  std::vector<Term> args;
  args.reserve(t.args().size());
  for (const Term& a : t.args()) args.push_back(apply(a, s));
  return Term::app(t.symbol(), std::move(args));
}

Term apply(const FunctionType& type, const Term& t, const Substitution& s) {
  check_term(type, t);
  for (const Term& a : s.prefix()) check_term(type, a);
  if (const auto* c = std::get_if<ConstTail>(&s.tail())) check_term(type, c->term);
  return apply(t, s);
}

Substitution compose(const Substitution& first, const Substitution& second) {
  const std::size_t n1 = first.prefix().size();
  const std::size_t n2 = second.prefix().size();
  auto coordinate = [&](std::size_t j) { return apply(first.at(j), second); };

  if (const auto* c = std::get_if<ConstTail>(&first.tail())) {
    return tabulate(n1, coordinate, ConstTail{apply(c->term, second)});
  }
  const long d1 = std::get<ShiftTail>(first.tail()).offset;
  // Beyond this length, first(j) = x_{j+d1} lands in second's tail.
  const long reach = static_cast<long>(n2) - d1;
  const std::size_t n = std::max<std::size_t>(n1, reach > 0 ? static_cast<std::size_t>(reach) : 0);
  if (const auto* c = std::get_if<ConstTail>(&second.tail())) {
    return tabulate(n, coordinate, ConstTail{c->term});
  }
  return tabulate(n, coordinate, ShiftTail{d1 + std::get<ShiftTail>(second.tail()).offset});
}

Substitution shift_up_subst() { return Substitution({}, ShiftTail{1}); }

Substitution minus_subst() { return Substitution({Term::var(1), Term::var(1)}, ShiftTail{-1}); }

Substitution star_subst() { return Substitution({Term::var(2), Term::var(2)}, ShiftTail{0}); }

Substitution lift(const Substitution& s) {
  std::vector<Term> prefix;
  prefix.reserve(s.prefix().size() + 1);
  prefix.push_back(Term::var(1));
  for (const Term& t : s.prefix()) prefix.push_back(shift_up(t));
  if (const auto* c = std::get_if<ConstTail>(&s.tail())) {
    return Substitution(std::move(prefix), ConstTail{shift_up(c->term)});
  }
  return Substitution(std::move(prefix), s.tail());
}

Substitution subst_from_list(std::vector<Term> terms) {
  if (terms.empty()) throw Error("subst_from_list needs at least one term");
  Term last = terms.back();
  terms.pop_back();
  return Substitution(std::move(terms), ConstTail{std::move(last)});
}

Substitution forall_rotation(std::size_t i) {
  if (i == 0) throw Error("binding index must be at least 1");
  return tabulate(i, [i](std::size_t j) { return Term::var(j == i ? 1 : j + 1); }, ShiftTail{1});
}

Substitution drop_first(const Substitution& s) {
  const std::size_t n = s.prefix().size();
  const std::size_t m = n > 0 ? n - 1 : 0;
  auto coordinate = [&](std::size_t j) { return s.at(j + 1); };
  if (const auto* c = std::get_if<ConstTail>(&s.tail())) return tabulate(m, coordinate, *c);
  return tabulate(m, coordinate, ShiftTail{std::get<ShiftTail>(s.tail()).offset + 1});
}

Substitution dup_second(const Substitution& s) {
  const std::size_t n = std::max<std::size_t>(s.prefix().size(), 2);
  return tabulate(n, [&](std::size_t j) { return s.at(j == 1 ? 2 : j); }, s.tail());
}

}  // namespace clonelogic
