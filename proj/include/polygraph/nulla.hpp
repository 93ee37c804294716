// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "polygraph/errors.hpp"
#include "polygraph/field.hpp"
#include "polygraph/oracle.hpp"
#include "polygraph/poly.hpp"

namespace polygraph {

/// Cofactors h_1..h_s with sum h_i f_i = 1. degree is max_i deg(h_i).
struct Certificate {
  unsigned degree = 0;
  std::vector<Polynomial<PrimeField>> cofactors;
};

struct SearchOptions {
  std::optional<unsigned> max_degree;    // nullopt: Brownawell-style auto cap n(d-1), floor 1
  bool witness_search = false;           // side brute-force over the full field
  Budget budget{};                       // witness enumeration budget
  std::size_t max_columns = 200000;      // cap on linear-system unknowns
};

struct SearchOutcome {
  enum class Kind { certificate, exhausted, witness };
  Kind kind = Kind::exhausted;
  std::optional<Certificate> certificate;
  unsigned exhausted_at = 0;  // degree cap that was searched when exhausted
  std::optional<std::vector<PrimeField::Value>> witness;
};

inline const char* outcome_name(SearchOutcome::Kind k) {
  switch (k) {
    case SearchOutcome::Kind::certificate: return "certificate";
    case SearchOutcome::Kind::exhausted: return "exhausted";
    case SearchOutcome::Kind::witness: return "witness";
  }
  return "?";
}

/// n(d-1) with n the variable count and d the max total degree; floor 0.
inline unsigned default_degree_bound(const PolySystem<PrimeField>& sys) {
  int d = sys.max_degree();
  if (d <= 1) return 0;
  return static_cast<unsigned>(sys.vars) * static_cast<unsigned>(d - 1);
}

/// max{3, d}^n, saturating. Exponential — never a default, exposed for experiments.
inline std::uint64_t kollar_degree_cap(const PolySystem<PrimeField>& sys) {
  std::uint64_t base = static_cast<std::uint64_t>(std::max(3, sys.max_degree()));
  std::uint64_t r = 1;
  for (int i = 0; i < sys.vars; ++i) {
    if (r > UINT64_MAX / base) return UINT64_MAX;
    r *= base;
  }
  return r;
}

namespace detail {

/// All monomials in `vars` variables of total degree <= max_deg, grlex-descending.
inline std::vector<Monomial> monomials_up_to(int vars, unsigned max_deg) {
  std::vector<Monomial> out;
  std::vector<Exp> cur(static_cast<std::size_t>(vars), 0);
  // enumerate recursively, then sort into the canonical order
  auto rec = [&](auto&& self, int pos, unsigned left) -> void {
    if (pos == vars) {
      out.emplace_back(cur);
      return;
    }
    for (unsigned e = 0; e <= left; ++e) {
      cur[static_cast<std::size_t>(pos)] = static_cast<Exp>(e);
      self(self, pos + 1, left - e);
    }
    cur[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, max_deg);
  MonomialOrder grlex{OrderKind::grlex, {}};
  std::sort(out.begin(), out.end(), [&](const Monomial& a, const Monomial& b) { return grlex.greater(a, b); });
  return out;
}

inline std::uint64_t count_monomials_up_to(int vars, unsigned max_deg) {
  // C(vars + max_deg, vars), saturating
  std::uint64_t r = 1;
  for (int i = 1; i <= vars; ++i) {
    __uint128_t t = static_cast<__uint128_t>(r) * (max_deg + i);
    t /= i;
    if (t > UINT64_MAX) return UINT64_MAX;
    r = static_cast<std::uint64_t>(t);
  }
  return r;
}

struct SparseRow {
  std::vector<std::pair<std::uint32_t, std::uint64_t>> entries;  // (column, coefficient)
  std::uint64_t rhs = 0;
};

/// Incremental reduced row echelon solve over GF(2), rows bit-packed.
/// Returns the canonical solution (free variables zero) or nullopt.
inline std::optional<std::vector<std::uint64_t>> rref_solve_gf2(std::uint32_t cols,
                                                                const std::vector<SparseRow>& rows) {
  const std::uint32_t width = (cols + 1 + 63) / 64;  // +1 augmented column
  std::vector<std::vector<std::uint64_t>> pivot_rows;
  std::vector<std::uint32_t> pivot_cols;
  auto test = [&](const std::vector<std::uint64_t>& r, std::uint32_t c) {
    return (r[c >> 6] >> (c & 63)) & 1ull;
  };
  std::vector<std::uint64_t> dense(width);
  for (const SparseRow& sr : rows) {
    std::fill(dense.begin(), dense.end(), 0);
    for (auto [c, v] : sr.entries)
      if (v & 1ull) dense[c >> 6] ^= 1ull << (c & 63);
    if (sr.rhs & 1ull) dense[cols >> 6] ^= 1ull << (cols & 63);
    for (std::size_t i = 0; i < pivot_rows.size(); ++i)
      if (test(dense, pivot_cols[i]))
        for (std::uint32_t w = 0; w < width; ++w) dense[w] ^= pivot_rows[i][w];
    std::uint32_t lead = cols + 1;
    for (std::uint32_t w = 0; w < width && lead > cols; ++w)
      if (dense[w] != 0) {
        std::uint32_t c = (w << 6) + static_cast<std::uint32_t>(std::countr_zero(dense[w]));
        if (c <= cols) lead = c;
      }
    if (lead > cols) continue;          // zero row
    if (lead == cols) return std::nullopt;  // 0 = 1, inconsistent
    for (std::size_t i = 0; i < pivot_rows.size(); ++i)
      if (test(pivot_rows[i], lead))
        for (std::uint32_t w = 0; w < width; ++w) pivot_rows[i][w] ^= dense[w];
    pivot_rows.push_back(dense);
    pivot_cols.push_back(lead);
  }
  std::vector<std::uint64_t> solution(cols, 0);
  for (std::size_t i = 0; i < pivot_rows.size(); ++i)
    solution[pivot_cols[i]] = test(pivot_rows[i], cols);
  return solution;
}

/// Same over GF(p) with dense residue rows.
inline std::optional<std::vector<std::uint64_t>> rref_solve_gfp(const PrimeField& f, std::uint32_t cols,
                                                                const std::vector<SparseRow>& rows) {
  std::vector<std::vector<std::uint64_t>> pivot_rows;
  std::vector<std::uint32_t> pivot_cols;
  std::vector<std::uint64_t> dense(cols + 1);
  for (const SparseRow& sr : rows) {
    std::fill(dense.begin(), dense.end(), 0);
    for (auto [c, v] : sr.entries) dense[c] = f.add(dense[c], v % f.modulus());
    dense[cols] = sr.rhs % f.modulus();
    for (std::size_t i = 0; i < pivot_rows.size(); ++i) {
      std::uint64_t factor = dense[pivot_cols[i]];
      if (factor == 0) continue;
      const auto& pr = pivot_rows[i];
      for (std::uint32_t c = pivot_cols[i]; c <= cols; ++c)
        if (pr[c] != 0) dense[c] = f.sub(dense[c], f.mul(factor, pr[c]));
    }
    std::uint32_t lead = cols + 1;
    for (std::uint32_t c = 0; c <= cols; ++c)
      if (dense[c] != 0) {
        lead = c;
        break;
      }
    if (lead > cols) continue;
    if (lead == cols) return std::nullopt;
    std::uint64_t inv = f.inv(dense[lead]);
    for (std::uint32_t c = lead; c <= cols; ++c) dense[c] = f.mul(dense[c], inv);
    for (std::size_t i = 0; i < pivot_rows.size(); ++i) {
      std::uint64_t factor = pivot_rows[i][lead];
      if (factor == 0) continue;
      for (std::uint32_t c = lead; c <= cols; ++c)
        pivot_rows[i][c] = f.sub(pivot_rows[i][c], f.mul(factor, dense[c]));
    }
    pivot_rows.push_back(dense);
    pivot_cols.push_back(lead);
  }
  std::vector<std::uint64_t> solution(cols, 0);
  for (std::size_t i = 0; i < pivot_rows.size(); ++i) solution[pivot_cols[i]] = pivot_rows[i][cols];
  return solution;
}

}  // namespace detail

/// Search for degree-<=d cofactors with sum h_i f_i = 1 by exact linear
/// algebra: one unknown per (equation, monomial of degree <= d), one linear
/// constraint per occurring product monomial. Deterministic: unknown columns
/// are ordered by (equation, grlex-descending monomial) and free variables
/// are set to zero, so the certificate is canonical.
inline std::optional<Certificate> certificate_at_degree(const PolySystem<PrimeField>& sys, unsigned d,
                                                        std::size_t max_columns = 200000) {
  if (sys.polys.empty()) throw std::invalid_argument("certificate search needs a nonempty system");
  const int m = sys.vars;
  const std::size_t s = sys.polys.size();
  std::uint64_t per_poly = detail::count_monomials_up_to(m, d);
  if (per_poly > max_columns || per_poly * s > max_columns)
    throw BudgetError("certificate search at degree " + std::to_string(d) + " needs " +
                      std::to_string(per_poly * s) + " unknowns, over the cap of " +
                      std::to_string(max_columns));
  std::vector<Monomial> monos = detail::monomials_up_to(m, d);

  std::map<Monomial, detail::SparseRow> row_map;
  std::uint32_t col = 0;
  for (std::size_t i = 0; i < s; ++i) {
    for (const Monomial& mu : monos) {
      for (const auto& [nu, c] : sys.polys[i].terms())
        row_map[mu.times(nu)].entries.emplace_back(col, c);
      ++col;
    }
  }
  auto unit_it = row_map.find(Monomial::unit(m));
  if (unit_it == row_map.end()) return std::nullopt;  // constant term unreachable
  unit_it->second.rhs = 1;

  std::vector<detail::SparseRow> rows;
  rows.reserve(row_map.size());
  for (auto& [mono, row] : row_map) rows.push_back(std::move(row));

  std::optional<std::vector<std::uint64_t>> sol =
      sys.field.modulus() == 2 ? detail::rref_solve_gf2(col, rows)
                               : detail::rref_solve_gfp(sys.field, col, rows);
  if (!sol) return std::nullopt;

  Certificate cert;
  cert.cofactors.reserve(s);
  std::uint32_t c2 = 0;
  int max_deg = 0;
  for (std::size_t i = 0; i < s; ++i) {
    Polynomial<PrimeField> h(sys.field, m);
    for (const Monomial& mu : monos) {
      std::uint64_t v = (*sol)[c2++];
      if (v != 0) h.add_term(mu, v);
    }
    max_deg = std::max(max_deg, h.degree());
    cert.cofactors.push_back(std::move(h));
  }
  cert.degree = static_cast<unsigned>(std::max(0, max_deg));
  return cert;
}

/// Exact symbolic check that sum h_i f_i expands to the constant 1.
inline bool verify_certificate(const PolySystem<PrimeField>& sys, const Certificate& cert) {
  if (cert.cofactors.size() != sys.polys.size())
    throw std::invalid_argument("cofactor count does not match system");
  Polynomial<PrimeField> acc(sys.field, sys.vars);
  for (std::size_t i = 0; i < sys.polys.size(); ++i) {
    cert.cofactors[i].require_compatible(sys.polys[i]);
    acc += cert.cofactors[i] * sys.polys[i];
  }
  return acc == Polynomial<PrimeField>::one(sys.field, sys.vars);
}

/// Degree escalation d = 0, 1, ... up to the cap; optional side brute-force
/// for a feasibility witness first. An empty system is trivially feasible
/// with the empty witness.
inline SearchOutcome search_certificate(const PolySystem<PrimeField>& sys, const SearchOptions& opts = {}) {
  SearchOutcome out;
  if (sys.polys.empty()) {
    out.kind = SearchOutcome::Kind::witness;
    out.witness = std::vector<PrimeField::Value>{};
    return out;
  }
  if (opts.witness_search) {
    auto point = solve_bruteforce(sys, full_field_domain(sys.field), opts.budget);
    if (point) {
      out.kind = SearchOutcome::Kind::witness;
      out.witness = std::move(point);
      return out;
    }
  }
  unsigned cap = opts.max_degree ? *opts.max_degree : std::max(1u, default_degree_bound(sys));
  for (unsigned d = 0; d <= cap; ++d) {
    auto cert = certificate_at_degree(sys, d, opts.max_columns);
    if (cert) {
      out.kind = SearchOutcome::Kind::certificate;
      out.certificate = std::move(cert);
      return out;
    }
  }
  out.kind = SearchOutcome::Kind::exhausted;
  out.exhausted_at = cap;
  return out;
}

}  // namespace polygraph
