// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polygraph/errors.hpp"
#include "polygraph/field.hpp"
#include "polygraph/graph.hpp"
#include "polygraph/poly.hpp"

namespace polygraph {

using AnySystem = std::variant<PolySystem<PrimeField>, PolySystem<RationalField>>;

enum class Problem { vcolor, stable, rc2, rck };

inline std::string problem_name(Problem p) {
  switch (p) {
    case Problem::vcolor: return "vcolor";
    case Problem::stable: return "stable";
    case Problem::rc2: return "rc2";
    case Problem::rck: return "rck";
  }
  return "?";
}

inline Problem problem_from_name(const std::string& s) {
  if (s == "vcolor") return Problem::vcolor;
  if (s == "stable") return Problem::stable;
  if (s == "rc2") return Problem::rc2;
  if (s == "rck") return Problem::rck;
  throw std::invalid_argument("unknown problem '" + s + "'");
}

struct EncodeLimits {
  std::size_t max_paths_per_pair = 10000;
};

/// Smallest prime p with p = 1 (mod k) and p > k(k-1)/2, so GF(p) holds a
/// full set of k-th roots of unity and k^k plus pairwise-collision counts
/// stay nonzero mod p.
inline std::uint64_t field_for_k(unsigned k) {
  if (k < 2) throw std::invalid_argument("field_for_k requires k >= 2");
  std::uint64_t lower = static_cast<std::uint64_t>(k) * (k - 1) / 2;
  for (std::uint64_t p = 2;; ++p)
    if (p > lower && p % k == 1 && is_prime(p)) return p;
}

/// sum_{d=0}^{k-1} x_a^{k-1-d} x_b^d — vanishes exactly when x_a, x_b take
/// distinct k-th roots of unity. Indices are 1-based.
template <class F>
Polynomial<F> power_sum_pair(const F& field, int vars, int a, int b, unsigned k) {
  Polynomial<F> acc(field, vars);
  for (unsigned d = 0; d < k; ++d) {
    std::vector<Exp> e(static_cast<std::size_t>(vars), 0);
    e[static_cast<std::size_t>(a - 1)] = static_cast<Exp>(e[static_cast<std::size_t>(a - 1)] + (k - 1 - d));
    e[static_cast<std::size_t>(b - 1)] = static_cast<Exp>(e[static_cast<std::size_t>(b - 1)] + d);
    acc.add_term(Monomial(std::move(e)), field.one());
  }
  return acc;
}

/// x_i^k - 1 for each vertex; one power-sum polynomial per edge.
template <class F>
PolySystem<F> encode_vertex_coloring(const Graph& g, unsigned k, F field) {
  if (k < 1) throw std::invalid_argument("vertex coloring requires k >= 1");
  FieldSpec spec = field.spec();
  if (spec.characteristic != 0 && (spec.characteristic - 1) % k != 0)
    throw std::invalid_argument("field GF(" + std::to_string(spec.characteristic) +
                                ") lacks k-th roots of unity for k = " + std::to_string(k));
  const int n = g.vertex_count();
  PolySystem<F> sys(field, n);
  for (int i = 1; i <= n; ++i) {
    Polynomial<F> p = Polynomial<F>::variable(field, n, i).pow(k);
    p -= Polynomial<F>::one(field, n);
    sys.push(std::move(p));
  }
  for (int e = 1; e <= g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    sys.push(power_sum_pair(field, n, u, v, k));
  }
  return sys;
}

/// x_i^2 - x_i per vertex, x_i x_j per edge, sum x_i - k.
template <class F>
PolySystem<F> encode_stable_set(const Graph& g, unsigned k, F field) {
  if (k < 1) throw std::invalid_argument("stable set requires k >= 1");
  FieldSpec spec = field.spec();
  const int n = g.vertex_count();
  if (spec.characteristic != 0 && spec.characteristic <= static_cast<std::uint64_t>(n))
    throw std::invalid_argument("stable-set encoding needs characteristic 0 or p > n");
  PolySystem<F> sys(field, n);
  for (int i = 1; i <= n; ++i) {
    Polynomial<F> x = Polynomial<F>::variable(field, n, i);
    sys.push(x * x - x);
  }
  for (int e = 1; e <= g.edge_count(); ++e) {
    auto [u, v] = g.edge(e);
    sys.push(Polynomial<F>::variable(field, n, u) * Polynomial<F>::variable(field, n, v));
  }
  Polynomial<F> total(field, n);
  for (int i = 1; i <= n; ++i) total += Polynomial<F>::variable(field, n, i);
  total -= Polynomial<F>::constant(field, n, field.from_int(static_cast<long long>(k)));
  sys.push(std::move(total));
  return sys;
}

namespace detail {

inline void require_rc_preconditions(const Graph& g, unsigned k) {
  if (!g.connected()) throw GateError("rainbow connectivity undefined for disconnected graphs");
  auto diam = g.diameter();
  if (diam && static_cast<unsigned>(*diam) > k)
    throw GateError("graph diameter exceeds " + std::to_string(k),
                    "rc > " + std::to_string(k) + " by diameter");
}

inline std::vector<Path> paths_checked(const Graph& g, int u, int v, int max_len,
                                       const EncodeLimits& limits) {
  auto paths = g.simple_paths(u, v, max_len);
  if (paths.size() > limits.max_paths_per_pair)
    throw BudgetError("path count " + std::to_string(paths.size()) + " for pair (" + std::to_string(u) +
                      "," + std::to_string(v) + ") exceeds cap " +
                      std::to_string(limits.max_paths_per_pair));
  return paths;
}

}  // namespace detail

/// Over GF(2), one equation per non-adjacent pair: the product over all
/// 2-edge paths between them of (x_a + x_b + 1). Complete graphs give the
/// empty (trivially feasible) system.
inline PolySystem<PrimeField> encode_rc2(const Graph& g, const EncodeLimits& limits = {}) {
  detail::require_rc_preconditions(g, 2);
  PrimeField f2(2);
  const int m = g.edge_count();
  PolySystem<PrimeField> sys(f2, m);
  for (auto [u, v] : g.non_adjacent_pairs()) {
    Polynomial<PrimeField> eq = Polynomial<PrimeField>::one(f2, m);
    for (const Path& p : detail::paths_checked(g, u, v, 2, limits)) {
      Polynomial<PrimeField> factor = Polynomial<PrimeField>::variable(f2, m, p.edge_indices[0]) +
                                      Polynomial<PrimeField>::variable(f2, m, p.edge_indices[1]) +
                                      Polynomial<PrimeField>::one(f2, m);
      eq = eq * factor;
    }
    sys.push(std::move(eq));
  }
  return sys;
}

/// Over GF(field_for_k(k)): x_i^k - 1 per edge, and per non-adjacent pair the
/// product over simple paths of length <= k of
///   sum over edge pairs {a,b} of the path of (power_sum_pair(a,b,k))^k.
/// A rainbow path under k colors has at most k edges, so longer paths are
/// irrelevant to feasibility and are not enumerated.
inline PolySystem<PrimeField> encode_rck(const Graph& g, unsigned k, const EncodeLimits& limits = {}) {
  if (k < 2) throw std::invalid_argument("rck encoding requires k >= 2");
  detail::require_rc_preconditions(g, k);
  PrimeField field(field_for_k(k));
  const int m = g.edge_count();
  PolySystem<PrimeField> sys(field, m);
  for (int i = 1; i <= m; ++i) {
    Polynomial<PrimeField> p = Polynomial<PrimeField>::variable(field, m, i).pow(k);
    p -= Polynomial<PrimeField>::one(field, m);
    sys.push(std::move(p));
  }
  for (auto [u, v] : g.non_adjacent_pairs()) {
    Polynomial<PrimeField> eq = Polynomial<PrimeField>::one(field, m);
    for (const Path& p : detail::paths_checked(g, u, v, static_cast<int>(k), limits)) {
      std::vector<int> es = p.edge_indices;
      std::sort(es.begin(), es.end());
      Polynomial<PrimeField> factor(field, m);
      for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b)
          factor += power_sum_pair(field, m, es[a], es[b], k).pow(k);
      eq = eq * factor;
    }
    sys.push(std::move(eq));
  }
  return sys;
}

/// A problem instance plus the field policy. An absent field means "auto":
/// rc2 is GF(2) by definition, rck and vcolor pick field_for_k, the stable-set
/// encoding runs over the rationals.
struct EncodingJob {
  Problem problem = Problem::rc2;
  unsigned k = 2;
  std::optional<FieldSpec> field;  // nullopt = auto

  std::string var_meaning() const {
    return problem == Problem::rc2 || problem == Problem::rck ? "edges" : "vertices";
  }
};

inline AnySystem encode(const Graph& g, const EncodingJob& job, const EncodeLimits& limits = {}) {
  if (job.k < 1) throw std::invalid_argument("encoding requires k >= 1");
  switch (job.problem) {
    case Problem::rc2:
      if (job.field && job.field->characteristic != 2)
        throw std::invalid_argument("rc2 is defined over GF(2)");
      return encode_rc2(g, limits);
    case Problem::rck:
      if (job.field) throw std::invalid_argument("rck selects its field from k; no override");
      return encode_rck(g, job.k, limits);
    case Problem::vcolor: {
      std::uint64_t ch =
          job.field ? job.field->characteristic : (job.k == 1 ? 2 : field_for_k(job.k));
      if (ch == 0) return encode_vertex_coloring(g, job.k, RationalField{});
      return encode_vertex_coloring(g, job.k, PrimeField(ch));
    }
    case Problem::stable: {
      std::uint64_t ch = job.field ? job.field->characteristic : 0;
      if (ch == 0) return encode_stable_set(g, job.k, RationalField{});
      return encode_stable_set(g, job.k, PrimeField(ch));
    }
  }
  throw std::invalid_argument("unknown problem");
}

}  // namespace polygraph
