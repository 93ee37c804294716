// SPDX-License-Identifier: MIT
#pragma once

#include <compare>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace polygraph {

using Exp = std::uint16_t;

/// Exponent vector of fixed length (the variable count). The all-zero
/// vector is the unit monomial.
class Monomial {
public:
  explicit Monomial(int vars) : e_(static_cast<std::size_t>(vars), 0) {
    if (vars < 0) throw std::invalid_argument("negative variable count");
  }
  explicit Monomial(std::vector<Exp> exps) : e_(std::move(exps)) {}

  static Monomial unit(int vars) { return Monomial(vars); }

  int vars() const { return static_cast<int>(e_.size()); }
  Exp operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  const std::vector<Exp>& exponents() const { return e_; }

  int degree() const { return std::accumulate(e_.begin(), e_.end(), 0); }
  bool is_unit() const {
    for (Exp x : e_)
      if (x != 0) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    require_same_vars(o);
    std::vector<Exp> r(e_);
    for (std::size_t i = 0; i < r.size(); ++i) {
      unsigned s = static_cast<unsigned>(r[i]) + o.e_[i];
      if (s > 0xffffu) throw std::overflow_error("monomial exponent overflow");
      r[i] = static_cast<Exp>(s);
    }
    return Monomial(std::move(r));
  }

  /// Does this monomial divide o?
  bool divides(const Monomial& o) const {
    require_same_vars(o);
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// o / this; requires divisibility.
  Monomial divide_into(const Monomial& o) const {
    require_same_vars(o);
    std::vector<Exp> r(o.e_);
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (e_[i] > r[i]) throw std::invalid_argument("monomial does not divide");
      r[i] = static_cast<Exp>(r[i] - e_[i]);
    }
    return Monomial(std::move(r));
  }

  // Structural order used only for canonical storage, not a term order.
  auto operator<=>(const Monomial&) const = default;

private:
  void require_same_vars(const Monomial& o) const {
    if (e_.size() != o.e_.size()) throw std::invalid_argument("monomial variable count mismatch");
  }

  std::vector<Exp> e_;
};

enum class OrderKind { lex, grlex, grevlex };

/// Term order: kind plus an optional variable precedence permutation.
/// Empty precedence means the default x_1 > x_2 > ... > x_m.
struct MonomialOrder {
  OrderKind kind = OrderKind::grlex;
  std::vector<int> precedence;  // precedence[r] = 0-based variable of rank r (rank 0 highest)

  /// +1 when a > b, -1 when a < b, 0 when equal.
  int compare(const Monomial& a, const Monomial& b) const {
    if (a.vars() != b.vars()) throw std::invalid_argument("comparing monomials of different variable counts");
    const int m = a.vars();
    if (!precedence.empty() && static_cast<int>(precedence.size()) != m)
      throw std::invalid_argument("order precedence size mismatch");
    auto var_at = [&](int rank) { return precedence.empty() ? rank : precedence[rank]; };
    if (kind != OrderKind::lex) {
      int da = a.degree(), db = b.degree();
      if (da != db) return da < db ? -1 : 1;
    }
    if (kind == OrderKind::grevlex) {
      for (int r = m - 1; r >= 0; --r) {
        int v = var_at(r);
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;  // smaller trailing exponent is larger
      }
      return 0;
    }
    for (int r = 0; r < m; ++r) {
      int v = var_at(r);
      if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  std::string name() const {
    switch (kind) {
      case OrderKind::lex: return "lex";
      case OrderKind::grlex: return "grlex";
      case OrderKind::grevlex: return "grevlex";
    }
    return "?";
  }

  static MonomialOrder from_name(const std::string& s) {
    if (s == "lex") return {OrderKind::lex, {}};
    if (s == "grlex") return {OrderKind::grlex, {}};
    if (s == "grevlex") return {OrderKind::grevlex, {}};
    throw std::invalid_argument("unknown monomial order '" + s + "'");
  }
};

/// Comparator adapter: descending in the given order (for ordered term maps).
struct OrderGreater {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.greater(a, b); }
};

}  // namespace polygraph
