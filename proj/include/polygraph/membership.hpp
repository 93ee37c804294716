// SPDX-License-Identifier: MIT
#pragma once

#include <string>
#include <vector>

#include "polygraph/errors.hpp"
#include "polygraph/field.hpp"
#include "polygraph/graph.hpp"
#include "polygraph/poly.hpp"

namespace polygraph {

struct MembershipLimits {
  std::size_t max_terms = 200000;  // guard on the expanded graph polynomial
};

/// Universal Groebner basis of the ideal of points with at most two distinct
/// coordinates: (x_i - x_j)(x_i - x_k)(x_j - x_k) over all 1 <= i < j < k <= m.
/// Empty for m < 3 (the ideal is zero).
inline std::vector<Polynomial<RationalField>> triple_basis(int m) {
  if (m < 0) throw std::invalid_argument("triple_basis requires m >= 0");
  RationalField q;
  std::vector<Polynomial<RationalField>> out;
  auto x = [&](int i) { return Polynomial<RationalField>::variable(q, m, i); };
  for (int i = 1; i <= m; ++i)
    for (int j = i + 1; j <= m; ++j)
      for (int k = j + 1; k <= m; ++k) out.push_back((x(i) - x(j)) * (x(i) - x(k)) * (x(j) - x(k)));
  return out;
}

/// P_{i,j}: 1 when v_i, v_j are adjacent, else the sum over 2-edge paths
/// v_i - e_a - e_b - v_j of (x_a - x_b)^2.
inline Polynomial<RationalField> path_polynomial(const Graph& g, int i, int j) {
  if (i == j) throw std::invalid_argument("path_polynomial requires distinct vertices");
  RationalField q;
  const int m = g.edge_count();
  if (g.adjacent(i, j)) return Polynomial<RationalField>::one(q, m);
  Polynomial<RationalField> acc(q, m);
  bool any = false;
  for (const Path& p : g.simple_paths(i, j, 2)) {
    any = true;
    Polynomial<RationalField> diff = Polynomial<RationalField>::variable(q, m, p.edge_indices[0]) -
                                     Polynomial<RationalField>::variable(q, m, p.edge_indices[1]);
    acc += diff * diff;
  }
  if (!any)
    throw std::logic_error("no 2-edge path between a non-adjacent pair; diameter precondition violated");
  return acc;
}

/// f_G: the expanded product of path polynomials over all vertex pairs.
inline Polynomial<RationalField> graph_polynomial(const Graph& g, const MembershipLimits& limits = {}) {
  if (!g.connected()) throw GateError("graph polynomial needs a connected graph");
  auto diam = g.diameter();
  if (diam && *diam > 2) throw GateError("graph diameter exceeds 2", "rc > 2 by diameter");
  RationalField q;
  const int m = g.edge_count();
  Polynomial<RationalField> f = Polynomial<RationalField>::one(q, m);
  for (auto [i, j] : g.non_adjacent_pairs()) {
    f = f * path_polynomial(g, i, j);
    if (f.term_count() > limits.max_terms)
      throw BudgetError("graph polynomial exceeds " + std::to_string(limits.max_terms) +
                        " terms while multiplying pair (" + std::to_string(i) + "," + std::to_string(j) +
                        ")");
  }
  return f;
}

enum class RcDecision { rc_at_most_2, rc_at_least_3 };
enum class RcReason { remainder_nonzero, remainder_zero, diameter_gate };

inline const char* decision_name(RcDecision d) {
  return d == RcDecision::rc_at_most_2 ? "rc<=2" : "rc>=3";
}
inline const char* reason_name(RcReason r) {
  switch (r) {
    case RcReason::remainder_nonzero: return "remainderNonzero";
    case RcReason::remainder_zero: return "remainderZero";
    case RcReason::diameter_gate: return "diameterGate";
  }
  return "?";
}

/// Remainder-based verdict; the remainder is kept as evidence.
struct MembershipVerdict {
  RcDecision decision;
  RcReason reason;
  Polynomial<RationalField> remainder;
};

/// Decide rc(g) <= 2 vs rc(g) >= 3: graphs of diameter > 2 are decided by the
/// gate; otherwise divide f_G by the triple basis and read the remainder.
/// The basis is universal, so the zero/nonzero status does not depend on the
/// order argument.
inline MembershipVerdict rc2_membership(const Graph& g, const MonomialOrder& order = {},
                                        const MembershipLimits& limits = {}) {
  if (!g.connected()) throw GateError("rainbow connectivity undefined for disconnected graphs");
  RationalField q;
  const int m = g.edge_count();
  auto diam = g.diameter();
  if (diam && *diam > 2)
    return MembershipVerdict{RcDecision::rc_at_least_3, RcReason::diameter_gate,
                             Polynomial<RationalField>(q, m)};
  Polynomial<RationalField> f = graph_polynomial(g, limits);
  auto division = divide(f, triple_basis(m), order);
  if (division.remainder.is_zero())
    return MembershipVerdict{RcDecision::rc_at_least_3, RcReason::remainder_zero,
                             std::move(division.remainder)};
  return MembershipVerdict{RcDecision::rc_at_most_2, RcReason::remainder_nonzero,
                           std::move(division.remainder)};
}

}  // namespace polygraph
