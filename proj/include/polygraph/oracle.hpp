// SPDX-License-Identifier: MIT
#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polygraph/errors.hpp"
#include "polygraph/graph.hpp"
#include "polygraph/poly.hpp"

namespace polygraph {

/// Cap on exhaustive-search work; failures are loud, never silent truncation.
struct Budget {
  std::uint64_t max_evaluations = 1ull << 24;
};

namespace detail {

class BudgetTracker {
public:
  explicit BudgetTracker(const Budget& b) : remaining_(b.max_evaluations) {}
  void spend(std::uint64_t n = 1) {
    if (n > remaining_) throw BudgetError("enumeration budget exceeded");
    remaining_ -= n;
  }

private:
  std::uint64_t remaining_;
};

// Number of candidates k^m, or nullopt on overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t k, unsigned m) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (k != 0 && r > UINT64_MAX / (k == 0 ? 1 : k)) return std::nullopt;
    r *= k;
  }
  return r;
}

// Edge-index lists of covering paths per non-adjacent pair, for a palette of k.
inline std::vector<std::vector<std::vector<int>>> pair_paths(const Graph& g, unsigned k) {
  std::vector<std::vector<std::vector<int>>> out;
  for (auto [u, v] : g.non_adjacent_pairs()) {
    std::vector<std::vector<int>> lists;
    if (k >= 2)
      for (const Path& p : g.simple_paths(u, v, static_cast<int>(k))) lists.push_back(p.edge_indices);
    out.push_back(std::move(lists));
  }
  return out;
}

inline bool coloring_rainbow_connects(const std::vector<int>& colors,
                                      const std::vector<std::vector<std::vector<int>>>& pairs) {
  for (const auto& lists : pairs) {
    bool ok = false;
    for (const auto& edges : lists) {
      std::uint64_t seen = 0;
      bool rainbow = true;
      for (int e : edges) {
        std::uint64_t bit = 1ull << colors[static_cast<std::size_t>(e - 1)];
        if (seen & bit) {
          rainbow = false;
          break;
        }
        seen |= bit;
      }
      if (rainbow) {
        ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

}  // namespace detail

/// Color of edge e_i is colors[i-1]; every entry must be below palette.
struct EdgeColoring {
  std::vector<int> colors;
  int palette = 0;
};

/// True iff every vertex pair is joined by a simple path of length at most
/// palette whose edge colors are pairwise distinct.
inline bool rainbow_connected(const Graph& g, const EdgeColoring& coloring) {
  if (!g.connected()) throw GateError("rainbow connectivity undefined for disconnected graphs");
  if (static_cast<int>(coloring.colors.size()) != g.edge_count())
    throw std::invalid_argument("coloring length mismatch");
  if (coloring.palette < 0 || coloring.palette > 63)
    throw std::invalid_argument("palette out of supported range");
  for (int c : coloring.colors)
    if (c < 0 || c >= coloring.palette) throw std::invalid_argument("edge color outside palette");
  auto pairs = detail::pair_paths(g, static_cast<unsigned>(coloring.palette));
  return detail::coloring_rainbow_connects(coloring.colors, pairs);
}

/// Exhaustive decision of rc(g) <= k over all k^m colorings.
inline bool rc_at_most(const Graph& g, unsigned k, const Budget& budget = {}) {
  if (!g.connected()) throw GateError("rainbow connectivity undefined for disconnected graphs");
  const int m = g.edge_count();
  if (m == 0) return true;
  if (k == 0) return false;
  auto total = detail::checked_pow(k, static_cast<unsigned>(m));
  detail::BudgetTracker tracker(budget);
  if (!total) throw BudgetError("coloring enumeration overflows");
  auto pairs = detail::pair_paths(g, k);
  std::vector<int> colors(static_cast<std::size_t>(m), 0);
  for (std::uint64_t step = 0;; ++step) {
    tracker.spend();
    if (detail::coloring_rainbow_connects(colors, pairs)) return true;
    // odometer, last edge fastest
    int pos = m - 1;
    while (pos >= 0) {
      if (++colors[static_cast<std::size_t>(pos)] < static_cast<int>(k)) break;
      colors[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return false;
  }
}

/// Smallest k admitting a rainbow-connected coloring. rc of a single vertex is 0.
inline unsigned rc_exact(const Graph& g, const Budget& budget = {}) {
  if (!g.connected()) throw GateError("rainbow connectivity undefined for disconnected graphs");
  const unsigned m = static_cast<unsigned>(g.edge_count());
  if (m == 0) return 0;
  for (unsigned k = 1; k <= m; ++k)
    if (rc_at_most(g, k, budget)) return k;
  return m;  // unreachable: m distinct colors always rainbow-connect a connected graph
}

/// Exhaustive proper-coloring check over all k^n assignments.
inline bool chromatic_feasible(const Graph& g, unsigned k, const Budget& budget = {}) {
  const int n = g.vertex_count();
  if (k == 0) return false;
  auto total = detail::checked_pow(k, static_cast<unsigned>(n));
  if (!total) throw BudgetError("coloring enumeration overflows");
  detail::BudgetTracker tracker(budget);
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  for (;;) {
    tracker.spend();
    bool proper = true;
    for (auto [u, v] : g.edges())
      if (colors[static_cast<std::size_t>(u - 1)] == colors[static_cast<std::size_t>(v - 1)]) {
        proper = false;
        break;
      }
    if (proper) return true;
    int pos = n - 1;
    while (pos >= 0) {
      if (++colors[static_cast<std::size_t>(pos)] < static_cast<int>(k)) break;
      colors[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return false;
  }
}

/// Number of stable sets of size exactly k.
inline std::uint64_t stable_set_count(const Graph& g, unsigned k, const Budget& budget = {}) {
  const int n = g.vertex_count();
  if (n > 63) throw BudgetError("stable-set enumeration limited to 63 vertices");
  detail::BudgetTracker tracker(budget);
  std::vector<std::uint64_t> edge_masks;
  for (auto [u, v] : g.edges())
    edge_masks.push_back((1ull << (u - 1)) | (1ull << (v - 1)));
  std::uint64_t count = 0;
  for (std::uint64_t s = 0; s < (1ull << n); ++s) {
    tracker.spend();
    if (static_cast<unsigned>(std::popcount(s)) != k) continue;
    bool stable = true;
    for (std::uint64_t em : edge_masks)
      if ((s & em) == em) {
        stable = false;
        break;
      }
    if (stable) ++count;
  }
  return count;
}

/// First common zero of the system with each variable ranging over its
/// domain, in odometer order (last variable fastest), or nullopt.
template <class F>
std::optional<std::vector<typename F::Value>> solve_bruteforce(
    const PolySystem<F>& sys, const std::vector<std::vector<typename F::Value>>& domains,
    const Budget& budget = {}) {
  if (static_cast<int>(domains.size()) != sys.vars)
    throw std::invalid_argument("domain count must match variable count");
  long double total = 1.0L;
  for (const auto& d : domains) {
    if (d.empty()) return std::nullopt;
    total *= static_cast<long double>(d.size());
  }
  if (total > static_cast<long double>(budget.max_evaluations))
    throw BudgetError("point enumeration exceeds budget");
  detail::BudgetTracker tracker(budget);
  const int m = sys.vars;
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  std::vector<typename F::Value> point;
  for (;;) {
    tracker.spend();
    point.clear();
    for (int i = 0; i < m; ++i) point.push_back(domains[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
    bool satisfied = true;
    for (const auto& p : sys.polys)
      if (!sys.field.is_zero(p.evaluate(point))) {
        satisfied = false;
        break;
      }
    if (satisfied) return point;
    int pos = m - 1;
    while (pos >= 0) {
      if (++idx[static_cast<std::size_t>(pos)] < domains[static_cast<std::size_t>(pos)].size()) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) return std::nullopt;
  }
}

/// Convenience: one shared domain for every variable.
template <class F>
std::optional<std::vector<typename F::Value>> solve_bruteforce(
    const PolySystem<F>& sys, const std::vector<typename F::Value>& domain, const Budget& budget = {}) {
  std::vector<std::vector<typename F::Value>> domains(static_cast<std::size_t>(sys.vars), domain);
  return solve_bruteforce(sys, domains, budget);
}

/// Full-field domain 0..p-1 for GF(p) systems.
inline std::vector<PrimeField::Value> full_field_domain(const PrimeField& f) {
  std::vector<PrimeField::Value> d;
  for (std::uint64_t v = 0; v < f.modulus(); ++v) d.push_back(v);
  return d;
}

}  // namespace polygraph
