// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include "corpus.hpp"
#include "polygraph/encode.hpp"
#include "polygraph/oracle.hpp"

using namespace polygraph;

namespace {

std::vector<PrimeField::Value> roots_domain(const PrimeField& f, unsigned k) {
  std::vector<PrimeField::Value> d;
  auto w = root_of_unity(f.modulus(), k);
  for (unsigned i = 0; i < k; ++i) d.push_back(f.pow(w, i));
  return d;
}

// All points of domain^m, odometer order.
std::vector<std::vector<PrimeField::Value>> all_points(const std::vector<PrimeField::Value>& domain,
                                                       int m) {
  std::vector<std::vector<PrimeField::Value>> out;
  std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
  for (;;) {
    std::vector<PrimeField::Value> p;
    for (int i = 0; i < m; ++i) p.push_back(domain[idx[static_cast<std::size_t>(i)]]);
    out.push_back(std::move(p));
    int pos = m - 1;
    while (pos >= 0) {
      if (++idx[static_cast<std::size_t>(pos)] < domain.size()) break;
      idx[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  return out;
}

template <class F>
bool satisfies(const PolySystem<F>& sys, const std::vector<typename F::Value>& point) {
  for (const auto& p : sys.polys)
    if (!sys.field.is_zero(p.evaluate(point))) return false;
  return true;
}

// {0,1}^n over the rationals, subset order.
std::vector<std::vector<mpq_class>> all_01_points_q(int n) {
  std::vector<std::vector<mpq_class>> out;
  for (std::uint64_t s = 0; s < (1ull << n); ++s) {
    std::vector<mpq_class> p;
    for (int i = 0; i < n; ++i) p.emplace_back((s >> i) & 1 ? 1 : 0);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

TEST_CASE("vertex coloring encoding shapes") {
  PrimeField f3(3);
  Graph k3 = Graph::generate(Graph::Family::complete, 3);
  auto sys = encode_vertex_coloring(k3, 2, f3);
  REQUIRE(sys.size() == 6);
  auto x = [&](int i) { return Polynomial<PrimeField>::variable(f3, 3, i); };
  for (int i = 0; i < 3; ++i)
    CHECK(sys.polys[static_cast<std::size_t>(i)] ==
          x(i + 1) * x(i + 1) - Polynomial<PrimeField>::one(f3, 3));
  CHECK(sys.polys[3] == x(1) + x(2));
  CHECK(sys.polys[4] == x(1) + x(3));
  CHECK(sys.polys[5] == x(2) + x(3));

  Graph single(1, {});
  auto sys1 = encode_vertex_coloring(single, 1, f3);
  REQUIRE(sys1.size() == 1);
  CHECK(sys1.polys[0] == Polynomial<PrimeField>::from_terms(f3, 1, {{1, {1}}, {-1, {0}}}));

  PrimeField f7(7);
  Graph c5 = Graph::generate(Graph::Family::cycle, 5);
  auto sys5 = encode_vertex_coloring(c5, 3, f7);
  REQUIRE(sys5.size() == 10);
  auto y = [&](int i) { return Polynomial<PrimeField>::variable(f7, 5, i); };
  CHECK(sys5.polys[5] == y(1) * y(1) + y(1) * y(2) + y(2) * y(2));  // edge (1,2)

  CHECK_THROWS_AS(encode_vertex_coloring(k3, 2, PrimeField(2)), std::invalid_argument);
}

TEST_CASE("stable set encoding shapes") {
  RationalField q;
  Graph p3 = Graph::generate(Graph::Family::path, 3);
  auto sys = encode_stable_set(p3, 2, q);
  REQUIRE(sys.size() == 6);  // 3 vertex + 2 edge + 1 sum
  auto x = [&](int i) { return Polynomial<RationalField>::variable(q, 3, i); };
  CHECK(sys.polys[0] == x(1) * x(1) - x(1));
  CHECK(sys.polys[3] == x(1) * x(2));
  CHECK(sys.polys[4] == x(2) * x(3));
  CHECK(sys.polys[5] == x(1) + x(2) + x(3) - Polynomial<RationalField>::constant(q, 3, q.from_int(2)));

  Graph k3 = Graph::generate(Graph::Family::complete, 3);
  auto k3sys = encode_stable_set(k3, 2, q);
  CHECK(k3sys.size() == 7);  // 3 vertex + 3 edge products + 1 sum

  Graph empty2(2, {});
  auto sys2 = encode_stable_set(empty2, 2, q);
  CHECK(sys2.size() == 3);
  CHECK(satisfies(sys2, {q.from_int(1), q.from_int(1)}));

  CHECK_THROWS_AS(encode_stable_set(p3, 2, PrimeField(3)), std::invalid_argument);  // p <= n
  CHECK(encode_stable_set(p3, 2, PrimeField(5)).size() == 6);
}

TEST_CASE("rc2 encoding matches the worked star example") {
  Graph star = Graph::generate(Graph::Family::star, 3);
  auto sys = encode_rc2(star);
  PrimeField f2(2);
  REQUIRE(sys.size() == 3);
  auto x = [&](int i) { return Polynomial<PrimeField>::variable(f2, 3, i); };
  auto one = Polynomial<PrimeField>::one(f2, 3);
  CHECK(sys.polys[0] == x(1) + x(2) + one);  // pair (2,3)
  CHECK(sys.polys[1] == x(1) + x(3) + one);  // pair (2,4)
  CHECK(sys.polys[2] == x(2) + x(3) + one);  // pair (3,4)
}

TEST_CASE("rc2 encoding degenerate and gate cases") {
  CHECK(encode_rc2(Graph::generate(Graph::Family::complete, 4)).size() == 0);
  CHECK(encode_rc2(Graph(1, {})).size() == 0);

  auto c5sys = encode_rc2(Graph::generate(Graph::Family::cycle, 5));
  REQUIRE(c5sys.size() == 5);
  for (const auto& p : c5sys.polys) {
    CHECK(p.degree() == 1);
    CHECK(p.term_count() == 3);  // single 2-path per non-edge of C_5
  }

  CHECK_THROWS_MATCHES(encode_rc2(Graph::generate(Graph::Family::path, 4)), GateError,
                       Catch::Matchers::Predicate<GateError>(
                           [](const GateError& e) { return e.verdict() == "rc > 2 by diameter"; }));
  CHECK_THROWS_AS(encode_rc2(Graph(3, {{1, 2}})), GateError);  // disconnected
}

TEST_CASE("rck encoding shapes") {
  Graph c5 = Graph::generate(Graph::Family::cycle, 5);
  auto sys = encode_rck(c5, 2);
  CHECK(sys.field.modulus() == 3);
  REQUIRE(sys.size() == 10);
  auto x = [&](int i) { return Polynomial<PrimeField>::variable(sys.field, 5, i); };
  // first non-adjacent pair (1,3): unique 2-path via edges 1,2 -> ((x1+x2)^2)
  CHECK(sys.polys[5] == (x(1) + x(2)).pow(2));

  Graph k3 = Graph::generate(Graph::Family::complete, 3);
  auto k3sys = encode_rck(k3, 3);
  CHECK(k3sys.size() == 3);  // only edge equations

  Graph p4 = Graph::generate(Graph::Family::path, 4);
  auto p4sys = encode_rck(p4, 3);
  CHECK(p4sys.field.modulus() == 7);
  // pairs in lex order after the 3 edge equations: (1,3), (1,4), (2,4);
  // the end pair (1,4) has a single covering path with 3 edge pairs
  PrimeField f7(7);
  auto y = [&](int i) { return Polynomial<PrimeField>::variable(f7, 3, i); };
  auto pair_term = [&](int a, int b) {
    return (y(a) * y(a) + y(a) * y(b) + y(b) * y(b)).pow(3);
  };
  auto expected = pair_term(1, 2) + pair_term(1, 3) + pair_term(2, 3);
  REQUIRE(p4sys.size() == 6);
  CHECK(p4sys.polys[4] == expected);

  CHECK_THROWS_AS(encode_rck(p4, 2), GateError);  // diameter 3 > 2
  CHECK_THROWS_AS(encode_rck(c5, 1), std::invalid_argument);
}

TEST_CASE("field_for_k") {
  CHECK(field_for_k(2) == 3);
  CHECK(field_for_k(3) == 7);
  CHECK(field_for_k(4) == 13);
  // independent scan for k = 4: primes = 1 mod 4 above 6
  for (std::uint64_t p = 2; p < 13; ++p)
    CHECK(!(is_prime(p) && p % 4 == 1 && p > 6));
  CHECK(field_for_k(5) == 11);
  CHECK_THROWS_AS(field_for_k(1), std::invalid_argument);
}

TEST_CASE("encoding jobs resolve fields per problem") {
  Graph c4 = Graph::generate(Graph::Family::cycle, 4);

  auto rc2 = encode(c4, {Problem::rc2, 2, std::nullopt});
  CHECK(std::get<PolySystem<PrimeField>>(rc2).field.modulus() == 2);

  auto rck = encode(c4, {Problem::rck, 3, std::nullopt});
  CHECK(std::get<PolySystem<PrimeField>>(rck).field.modulus() == 7);

  auto vc = encode(c4, {Problem::vcolor, 2, std::nullopt});
  CHECK(std::get<PolySystem<PrimeField>>(vc).field.modulus() == 3);
  auto vc0 = encode(c4, {Problem::vcolor, 2, FieldSpec{0}});
  CHECK(std::holds_alternative<PolySystem<RationalField>>(vc0));

  auto st = encode(c4, {Problem::stable, 2, std::nullopt});
  CHECK(std::holds_alternative<PolySystem<RationalField>>(st));
  auto st7 = encode(c4, {Problem::stable, 2, FieldSpec{7}});
  CHECK(std::get<PolySystem<PrimeField>>(st7).field.modulus() == 7);

  CHECK_THROWS_AS(encode(c4, {Problem::rc2, 2, FieldSpec{3}}), std::invalid_argument);
  CHECK_THROWS_AS(encode(c4, {Problem::rck, 3, FieldSpec{7}}), std::invalid_argument);
  CHECK_THROWS_AS(encode(c4, {Problem::vcolor, 0, std::nullopt}), std::invalid_argument);
}

TEST_CASE("path cap fails loudly") {
  EncodeLimits tight{1};
  Graph c5 = Graph::generate(Graph::Family::cycle, 5);
  CHECK_THROWS_AS(encode_rck(c5, 3, tight), BudgetError);  // pairs have 2 paths of length <= 3
}

TEST_CASE("rc2 solution correspondence with the rainbow oracle") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : corpus::connected_diam_at_most(n, 2)) {
      auto sys = encode_rc2(g);
      const int m = g.edge_count();
      for (const auto& point : all_points({0, 1}, m)) {
        EdgeColoring coloring;
        coloring.palette = 2;
        for (auto v : point) coloring.colors.push_back(static_cast<int>(v));
        CHECK(satisfies(sys, point) == rainbow_connected(g, coloring));
      }
    }
  }
}

TEST_CASE("rck roots-of-unity correspondence with the rainbow oracle") {
  std::vector<Graph> graphs{Graph::generate(Graph::Family::cycle, 4),
                            Graph::generate(Graph::Family::cycle, 5),
                            corpus::complete_minus_edge(4)};
  for (unsigned k : {2u, 3u}) {
    for (const Graph& g : graphs) {
      auto diam = g.diameter();
      if (!diam || static_cast<unsigned>(*diam) > k) continue;
      auto sys = encode_rck(g, k);
      auto domain = roots_domain(sys.field, k);
      for (const auto& point : all_points(domain, g.edge_count())) {
        EdgeColoring coloring;
        coloring.palette = static_cast<int>(k);
        for (auto v : point)
          coloring.colors.push_back(static_cast<int>(
              std::find(domain.begin(), domain.end(), v) - domain.begin()));
        CHECK(satisfies(sys, point) == rainbow_connected(g, coloring));
      }
    }
  }
}

TEST_CASE("vertex coloring correspondence on small graphs") {
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : corpus::all_nonisomorphic_graphs(n)) {
      for (unsigned k : {2u, 3u}) {
        PrimeField f(field_for_k(k));
        auto sys = encode_vertex_coloring(g, k, f);
        auto domain = roots_domain(f, k);
        bool feasible = false;
        for (const auto& point : all_points(domain, n))
          if (satisfies(sys, point)) {
            feasible = true;
            break;
          }
        CHECK(feasible == chromatic_feasible(g, k));
      }
    }
  }
}

TEST_CASE("stable set solution count equals the oracle count") {
  RationalField q;
  for (int n = 1; n <= 4; ++n) {
    for (const Graph& g : corpus::all_nonisomorphic_graphs(n)) {
      for (unsigned k = 1; k <= static_cast<unsigned>(n); ++k) {
        auto sys = encode_stable_set(g, k, q);
        std::uint64_t count = 0;
        for (const auto& point : all_01_points_q(n))
          if (satisfies(sys, point)) ++count;
        CHECK(count == stable_set_count(g, k));
      }
    }
  }
}
