// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "corpus.hpp"
#include "polygraph/membership.hpp"
#include "polygraph/oracle.hpp"

using namespace polygraph;

namespace {

RationalField q;

Polynomial<RationalField> var(int m, int i) { return Polynomial<RationalField>::variable(q, m, i); }

}  // namespace

TEST_CASE("triple basis") {
  CHECK(triple_basis(2).empty());
  auto b3 = triple_basis(3);
  REQUIRE(b3.size() == 1);
  CHECK(b3[0] == (var(3, 1) - var(3, 2)) * (var(3, 1) - var(3, 3)) * (var(3, 2) - var(3, 3)));
  CHECK(triple_basis(4).size() == 4);
  CHECK(triple_basis(6).size() == 20);
}

TEST_CASE("triple basis vanishes on points with at most two distinct coordinates") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<long> num(-20, 20);
  std::uniform_int_distribution<long> den(1, 7);
  for (int iter = 0; iter < 300; ++iter) {
    int m = 3 + static_cast<int>(rng() % 4);
    mpq_class a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    std::vector<mpq_class> point;
    for (int i = 0; i < m; ++i) point.push_back(rng() % 2 ? a : b);
    for (const auto& g : triple_basis(m)) CHECK(q.is_zero(g.evaluate(point)));
  }
}

TEST_CASE("path polynomials") {
  Graph star = Graph::generate(Graph::Family::star, 3);
  // leaves 2 and 3 connect through edges e1, e2
  auto p = path_polynomial(star, 2, 3);
  auto d = var(3, 1) - var(3, 2);
  CHECK(p == d * d);

  CHECK(path_polynomial(star, 1, 2) == Polynomial<RationalField>::one(q, 3));  // adjacent

  Graph c4 = Graph::generate(Graph::Family::cycle, 4);
  // diagonal (1,3): paths 1-2-3 (e1,e2) and 1-4-3 (e4,e3)
  auto diag = path_polynomial(c4, 1, 3);
  auto d1 = var(4, 1) - var(4, 2);
  auto d2 = var(4, 4) - var(4, 3);
  CHECK(diag == d1 * d1 + d2 * d2);

  CHECK_THROWS_AS(path_polynomial(star, 2, 2), std::invalid_argument);
}

TEST_CASE("graph polynomials") {
  CHECK(graph_polynomial(Graph::generate(Graph::Family::complete, 4)) ==
        Polynomial<RationalField>::one(q, 6));

  Graph star = Graph::generate(Graph::Family::star, 3);
  auto f = graph_polynomial(star);
  auto prod = Polynomial<RationalField>::one(q, 3);
  for (auto [i, j] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}}) {
    auto d = var(3, i) - var(3, j);
    prod = prod * (d * d);
  }
  CHECK(f == prod);

  Graph p3 = Graph::generate(Graph::Family::path, 3);
  auto d = var(2, 1) - var(2, 2);
  CHECK(graph_polynomial(p3) == d * d);

  CHECK_THROWS_AS(graph_polynomial(Graph::generate(Graph::Family::path, 4)), GateError);
  CHECK_THROWS_AS(graph_polynomial(Graph(3, {{1, 2}})), GateError);
}

TEST_CASE("membership verdicts on the worked examples") {
  auto star = rc2_membership(Graph::generate(Graph::Family::star, 3));
  CHECK(star.decision == RcDecision::rc_at_least_3);
  CHECK(star.reason == RcReason::remainder_zero);
  CHECK(star.remainder.is_zero());

  auto p3 = rc2_membership(Graph::generate(Graph::Family::path, 3));
  CHECK(p3.decision == RcDecision::rc_at_most_2);
  CHECK(p3.reason == RcReason::remainder_nonzero);
  auto d = var(2, 1) - var(2, 2);
  CHECK(p3.remainder == d * d);  // m = 2: the basis is empty, f survives intact

  auto k3 = rc2_membership(Graph::generate(Graph::Family::complete, 3));
  CHECK(k3.decision == RcDecision::rc_at_most_2);
  CHECK(k3.remainder == Polynomial<RationalField>::one(q, 3));

  auto p4 = rc2_membership(Graph::generate(Graph::Family::path, 4));
  CHECK(p4.decision == RcDecision::rc_at_least_3);
  CHECK(p4.reason == RcReason::diameter_gate);
  CHECK(p4.remainder.is_zero());

  CHECK_THROWS_AS(rc2_membership(Graph(3, {{1, 2}})), GateError);

  auto k1 = rc2_membership(Graph(1, {}));
  CHECK(k1.decision == RcDecision::rc_at_most_2);
}

TEST_CASE("verdict is invariant across term orders") {
  std::vector<Graph> graphs{Graph::generate(Graph::Family::star, 3),
                            Graph::generate(Graph::Family::star, 4),
                            Graph::generate(Graph::Family::path, 3),
                            Graph::generate(Graph::Family::complete, 3),
                            Graph::generate(Graph::Family::cycle, 4),
                            Graph::generate(Graph::Family::cycle, 5),
                            corpus::wheel(4)};
  for (const Graph& g : graphs) {
    auto grlex = rc2_membership(g, {OrderKind::grlex, {}});
    auto lex = rc2_membership(g, {OrderKind::lex, {}});
    auto grevlex = rc2_membership(g, {OrderKind::grevlex, {}});
    CHECK(grlex.decision == lex.decision);
    CHECK(grlex.decision == grevlex.decision);
  }
}

TEST_CASE("membership decision matches the oracle on small graphs") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : corpus::connected_diam_at_most(n, 2)) {
      auto verdict = rc2_membership(g);
      bool oracle_le2 = rc_at_most(g, 2);
      CHECK((verdict.decision == RcDecision::rc_at_most_2) == oracle_le2);
    }
  }
}

TEST_CASE("nonzero remainders come with a rainbow 2-coloring witness") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : corpus::connected_diam_at_most(n, 2)) {
      auto verdict = rc2_membership(g);
      if (verdict.decision != RcDecision::rc_at_most_2) continue;
      const int m = g.edge_count();
      bool found = false;
      auto f = graph_polynomial(g);
      for (std::uint64_t s = 0; s < (1ull << m) && !found; ++s) {
        std::vector<mpq_class> point;
        EdgeColoring coloring;
        coloring.palette = 2;
        for (int i = 0; i < m; ++i) {
          int bit = static_cast<int>(s >> i & 1);
          point.emplace_back(bit);
          coloring.colors.push_back(bit);
        }
        if (!q.is_zero(f.evaluate(point))) {
          found = true;
          CHECK(rainbow_connected(g, coloring));
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("term cap fails loudly") {
  MembershipLimits tight{5};
  CHECK_THROWS_AS(graph_polynomial(Graph::generate(Graph::Family::star, 5), tight), BudgetError);
}
