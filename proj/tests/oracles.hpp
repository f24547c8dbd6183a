#pragma once

// Reference implementations used only by tests. Each one follows the
// textbook definition directly and shares no code path with the library
// routine it checks.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "clonelogic/formula.hpp"
#include "clonelogic/prop_algebra.hpp"
#include "clonelogic/semantics.hpp"
#include "clonelogic/term.hpp"

namespace oracle {

using namespace clonelogic;

inline Substitution identity_up_to(std::size_t n) {
  std::vector<Term> xs;
  for (std::size_t i = 1; i <= n; ++i) xs.push_back(Term::var(i));
  return subst_from_list(std::move(xs));
}

/// Least n with t[x1, ..., xn, xn, ...] = t; 0 when t is fixed by the shift.
inline std::size_t term_rank(const Term& t, std::size_t limit = 64) {
  if (apply(t, shift_up_subst()) == t) return 0;
  for (std::size_t n = 1; n <= limit; ++n) {
    if (apply(t, identity_up_to(n)) == t) return n;
  }
  return limit + 1;
}

/// Same definition on formulas.
inline std::size_t formula_rank(const Formula& p, std::size_t limit = 64) {
  if (fplus(p) == p) return 0;
  for (std::size_t n = 1; n <= limit; ++n) {
    if (fsubst(p, identity_up_to(n)) == p) return n;
  }
  return limit + 1;
}

/// Coordinate j of compose(first, second), straight from the definition.
inline Term composed_at(const Substitution& first, const Substitution& second, std::size_t j) {
  return apply(first.at(j), second);
}

/// Substitution applied to a term by recursion on the term, reading
/// coordinates one by one.
inline Term apply_naive(const Term& t, const std::function<Term(std::size_t)>& coord) {
  if (t.is_var()) return coord(t.var_index());
  std::vector<Term> args;
  for (const Term& a : t.args()) args.push_back(apply_naive(a, coord));
  return Term::app(t.symbol(), std::move(args));
}

// A structure read through lookups only, with environments as functions.
using EnvFn = std::function<Element(std::size_t)>;

inline std::size_t row_index(const std::vector<Element>& args, std::size_t size) {
  std::size_t index = 0;
  for (Element a : args) index = index * size + a;
  return index;
}

inline Element eval_term(const Structure& d, const Term& t, const EnvFn& env) {
  if (t.is_var()) return env(t.var_index());
  std::vector<Element> args;
  for (const Term& a : t.args()) args.push_back(eval_term(d, a, env));
  return d.function_table(t.symbol())[row_index(args, d.size())];
}

/// B-valued evaluation with Forall as a meet over the domain.
inline BValue eval(const Structure& d, const Formula& p, const EnvFn& env) {
  const BValue top = FiniteBooleanAlg(d.atom_count()).top();
  switch (p.kind()) {
    case Formula::Kind::Atom: {
      std::vector<Element> args;
      for (const Term& a : p.args()) args.push_back(eval_term(d, a, env));
      if (d.identity_equality() && d.language().predicates.equality() == p.symbol()) {
        return args[0] == args[1] ? top : 0;
      }
      return d.relation_table(p.symbol())[row_index(args, d.size())];
    }
    case Formula::Kind::Not:
      return ~eval(d, p.left(), env) & top;
    case Formula::Kind::And:
      return eval(d, p.left(), env) & eval(d, p.right(), env);
    case Formula::Kind::Forall: {
      BValue acc = top;
      for (Element m = 0; m < d.size(); ++m) {
        acc &= eval(d, p.left(), [&](std::size_t i) { return i == 1 ? m : env(i - 1); });
      }
      return acc;
    }
  }
  return 0;
}

inline EnvFn env_fn(const Env& env) {
  return [env](std::size_t i) { return env.at(i); };
}

/// Every environment whose first n coordinates range over the domain, the
/// rest fixed to fallback.
inline void for_each_env(std::size_t size, std::size_t n, Element fallback, const std::function<void(const Env&)>& f) {
  Env env{std::vector<Element>(n, 0), fallback};
  while (true) {
    f(env);
    std::size_t k = n;
    while (k > 0 && ++env.prefix[k - 1] == size) env.prefix[--k] = 0;
    if (k == 0) return;
  }
}

/// True under every environment of length rank + 1 with every fallback.
inline bool valid_in(const Structure& d, const Formula& p) {
  bool ok = true;
  const std::size_t n = formula_rank(p) + 1;
  for (Element fb = 0; fb < d.size() && ok; ++fb) {
    for_each_env(d.size(), n, fb, [&](const Env& env) {
      if (ok && oracle::eval(d, p, env_fn(env)) != FiniteBooleanAlg(d.atom_count()).top()) ok = false;
    });
  }
  return ok;
}

// ---- finite proposition algebras ----

inline std::vector<std::uint64_t> all_subsets(std::size_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) out.push_back(s);
  return out;
}

inline bool in(std::uint64_t s, std::size_t x) { return (s >> x) & 1U; }

/// p in V iff ~p not in V; p & q in V iff p in V and q in V.
inline bool is_valuation(const FinitePropAlgebra& a, std::uint64_t v) {
  for (std::size_t p = 0; p < a.size(); ++p) {
    if (in(v, p) == in(v, a.neg(p))) return false;
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (in(v, a.conj(p, q)) != (in(v, p) && in(v, q))) return false;
    }
  }
  return true;
}

inline std::uint64_t axioms(const FinitePropAlgebra& a) {
  std::uint64_t s = 0;
  const std::size_t n = a.size();
  for (std::size_t p = 0; p < n; ++p) {
    s |= std::uint64_t{1} << a.imp(p, a.conj(p, p));
    for (std::size_t q = 0; q < n; ++q) {
      s |= std::uint64_t{1} << a.imp(a.conj(p, q), p);
      for (std::size_t r = 0; r < n; ++r) {
        s |= std::uint64_t{1} << a.imp(a.imp(p, q), a.imp(a.neg(a.conj(q, r)), a.neg(a.conj(r, p))));
      }
    }
  }
  return s;
}

inline bool is_filter(const FinitePropAlgebra& a, std::uint64_t f) {
  if ((axioms(a) & ~f) != 0) return false;
  for (std::size_t p = 0; p < a.size(); ++p) {
    for (std::size_t q = 0; q < a.size(); ++q) {
      if (in(f, p) && in(f, a.imp(p, q)) && !in(f, q)) return false;
    }
  }
  return true;
}

}  // namespace oracle
