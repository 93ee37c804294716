// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "polygraph/field.hpp"
#include "polygraph/monomial.hpp"

namespace polygraph {

/// Total degree reported for the zero polynomial (minus-infinity sentinel).
inline constexpr int kZeroPolyDegree = -1;

/// Sparse multivariate polynomial over a field F. Terms are kept in a
/// canonical normalized form: no zero coefficients, structural equality.
template <class F>
class Polynomial {
public:
  using Field = F;
  using Value = typename F::Value;
  using TermMap = std::map<Monomial, Value>;

  Polynomial(F field, int vars) : field_(std::move(field)), vars_(vars) {
    if (vars < 0) throw std::invalid_argument("negative variable count");
  }

  static Polynomial constant(F field, int vars, Value c) {
    Polynomial p(std::move(field), vars);
    p.add_term(Monomial::unit(vars), std::move(c));
    return p;
  }

  static Polynomial one(F field, int vars) {
    Value c = field.one();
    return constant(std::move(field), vars, std::move(c));
  }

  /// x_i, 1-based.
  static Polynomial variable(F field, int vars, int i) {
    if (i < 1 || i > vars) throw std::invalid_argument("variable index out of range");
    std::vector<Exp> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(i - 1)] = 1;
    Polynomial p(field, vars);
    p.add_term(Monomial(std::move(e)), field.one());
    return p;
  }

  static Polynomial from_terms(F field, int vars,
                               const std::vector<std::pair<long long, std::vector<Exp>>>& terms) {
    Polynomial p(field, vars);
    for (const auto& [c, e] : terms) {
      if (static_cast<int>(e.size()) != vars) throw std::invalid_argument("term exponent length mismatch");
      p.add_term(Monomial(e), field.from_int(c));
    }
    return p;
  }

  const F& field() const { return field_; }
  int vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_unit()); }

  int degree() const {
    int d = kZeroPolyDegree;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
  }

  /// In-place accumulate of one term, keeping the form canonical.
  void add_term(const Monomial& m, Value c) {
    if (m.vars() != vars_) throw std::invalid_argument("term variable count mismatch");
    if (field_.is_zero(c)) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, std::move(c));
    } else {
      it->second = field_.add(it->second, c);
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  Polynomial operator-() const {
    Polynomial r(field_, vars_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, field_.neg(c));
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    require_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, field_.neg(c));
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.require_compatible(b);
    Polynomial r(a.field_, a.vars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), a.field_.mul(ca, cb));
    return r;
  }

  Polynomial scaled(const Value& c) const {
    Polynomial r(field_, vars_);
    if (field_.is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, field_.mul(v, c));
    return r;
  }

  /// (this) * c * mono — the division algorithm's elementary step.
  Polynomial times_term(const Monomial& mono, const Value& c) const {
    Polynomial r(field_, vars_);
    if (field_.is_zero(c)) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m.times(mono), field_.mul(v, c));
    return r;
  }

  Polynomial pow(unsigned e) const {
    Polynomial base = *this;
    Polynomial r = one(field_, vars_);
    while (e > 0) {
      if (e & 1u) r = r * base;
      e >>= 1u;
      if (e > 0) base = base * base;
    }
    return r;
  }

  Value evaluate(const std::vector<Value>& point) const {
    if (static_cast<int>(point.size()) != vars_)
      throw std::invalid_argument("evaluation point length mismatch");
    Value acc = field_.zero();
    for (const auto& [m, c] : terms_) {
      Value t = c;
      for (int i = 0; i < vars_; ++i)
        if (m[i] != 0) t = field_.mul(t, field_.pow(point[static_cast<std::size_t>(i)], m[i]));
      acc = field_.add(acc, t);
    }
    return acc;
  }

  /// Maximal term under the given order. Throws on the zero polynomial.
  std::pair<Monomial, Value> leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::invalid_argument("leading term of the zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
      if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (!(a.field_ == b.field_) || a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || !a.field_.eq(ia->second, ib->second)) return false;
    }
    return true;
  }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  void require_compatible(const Polynomial& o) const {
    if (!(field_ == o.field_)) throw std::invalid_argument("polynomial field mismatch");
    if (vars_ != o.vars_) throw std::invalid_argument("polynomial variable count mismatch");
  }

private:
  F field_;
  int vars_;
  TermMap terms_;
};

/// A field, a shared variable count, and an ordered list of polynomials
/// constrained to zero.
template <class F>
struct PolySystem {
  F field;
  int vars = 0;
  std::vector<Polynomial<F>> polys;

  PolySystem(F f, int v) : field(std::move(f)), vars(v) {
    if (v < 0) throw std::invalid_argument("negative variable count");
  }

  void push(Polynomial<F> p) {
    if (!(p.field() == field) || p.vars() != vars)
      throw std::invalid_argument("system polynomial field/vars mismatch");
    polys.push_back(std::move(p));
  }

  std::size_t size() const { return polys.size(); }

  /// Max total degree across the system; kZeroPolyDegree when all are zero.
  int max_degree() const {
    int d = kZeroPolyDegree;
    for (const auto& p : polys) d = std::max(d, p.degree());
    return d;
  }
};

template <class F>
struct DivisionResult {
  std::vector<Polynomial<F>> quotients;
  Polynomial<F> remainder;
};

/// Multivariate division: f = sum quotients[i]*divisors[i] + remainder, with
/// no remainder term divisible by any divisor's leading monomial. Divisors
/// are tried in list order at each reduction step, so the result is
/// deterministic. An empty divisor list returns ({}, f).
template <class F>
DivisionResult<F> divide(const Polynomial<F>& f, const std::vector<Polynomial<F>>& divisors,
                         const MonomialOrder& order) {
  const F& field = f.field();
  const int vars = f.vars();
  DivisionResult<F> out{std::vector<Polynomial<F>>(), Polynomial<F>(field, vars)};
  for (const auto& g : divisors) {
    f.require_compatible(g);
    if (g.is_zero()) throw std::invalid_argument("division by the zero polynomial");
    out.quotients.emplace_back(field, vars);
  }
  if (divisors.empty()) {
    out.remainder = f;
    return out;
  }

  std::vector<std::pair<Monomial, typename F::Value>> lead;
  lead.reserve(divisors.size());
  for (const auto& g : divisors) lead.push_back(g.leading_term(order));

  std::map<Monomial, typename F::Value, OrderGreater> work{OrderGreater{order}};
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);

  while (!work.empty()) {
    auto it = work.begin();
    Monomial mono = it->first;
    typename F::Value coeff = it->second;
    work.erase(it);

    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (!lead[i].first.divides(mono)) continue;
      Monomial q = lead[i].first.divide_into(mono);
      typename F::Value qc = field.div(coeff, lead[i].second);
      out.quotients[i].add_term(q, qc);
      // subtract qc * q * divisors[i]; its leading term cancels `mono` exactly
      for (const auto& [gm, gc] : divisors[i].terms()) {
        if (gm == lead[i].first) continue;
        Monomial key = gm.times(q);
        typename F::Value delta = field.neg(field.mul(qc, gc));
        auto [pos, inserted] = work.emplace(key, delta);
        if (!inserted) {
          pos->second = field.add(pos->second, delta);
          if (field.is_zero(pos->second)) work.erase(pos);
        }
      }
      reduced = true;
      break;
    }
    if (!reduced) out.remainder.add_term(mono, coeff);
  }
  return out;
}

}  // namespace polygraph
