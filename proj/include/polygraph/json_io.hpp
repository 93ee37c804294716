// SPDX-License-Identifier: MIT
#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "polygraph/encode.hpp"
#include "polygraph/errors.hpp"
#include "polygraph/field.hpp"
#include "polygraph/graph.hpp"
#include "polygraph/nulla.hpp"
#include "polygraph/poly.hpp"

namespace polygraph {

using Json = nlohmann::ordered_json;

inline Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
  return Json{{"n", g.vertex_count()}, {"edges", std::move(edges)}};
}

inline Graph graph_from_json(const Json& j) {
  try {
    int n = j.at("n").get<int>();
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
    return Graph(n, std::move(edges));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad graph JSON: ") + e.what());
  }
}

/// Terms as [[coeffString, [e_1..e_m]], ...], grlex-descending for
/// reproducible output.
template <class F>
Json terms_to_json(const Polynomial<F>& p) {
  MonomialOrder grlex{OrderKind::grlex, {}};
  std::vector<const Monomial*> order;
  for (const auto& [m, c] : p.terms()) order.push_back(&m);
  std::sort(order.begin(), order.end(),
            [&](const Monomial* a, const Monomial* b) { return grlex.greater(*a, *b); });
  Json out = Json::array();
  for (const Monomial* m : order) {
    Json exps = Json::array();
    for (int i = 0; i < p.vars(); ++i) exps.push_back((*m)[i]);
    out.push_back(Json::array({p.field().to_string(p.terms().at(*m)), std::move(exps)}));
  }
  return out;
}

template <class F>
Json polynomial_to_json(const Polynomial<F>& p) {
  return Json{{"field", {{"char", p.field().spec().characteristic}}},
              {"vars", p.vars()},
              {"terms", terms_to_json(p)}};
}

template <class F>
Polynomial<F> terms_from_json(F field, int vars, const Json& terms) {
  Polynomial<F> p(field, vars);
  try {
    for (const auto& t : terms) {
      const auto& exps = t.at(1);
      if (static_cast<int>(exps.size()) != vars) throw ParseError("term exponent length mismatch");
      std::vector<Exp> e;
      for (const auto& x : exps) {
        long long v = x.get<long long>();
        if (v < 0 || v > 0xffff) throw ParseError("exponent out of range");
        e.push_back(static_cast<Exp>(v));
      }
      p.add_term(Monomial(std::move(e)), field.parse(t.at(0).get<std::string>()));
    }
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad polynomial JSON: ") + e.what());
  }
  return p;
}

/// A polynomial system plus the encode metadata that travels with it.
struct SystemDoc {
  AnySystem system;
  std::optional<std::string> problem;
  std::optional<unsigned> k;
  std::optional<std::string> var_meaning;
};

template <class F>
Json system_to_json_impl(const PolySystem<F>& sys) {
  Json polys = Json::array();
  for (const auto& p : sys.polys) polys.push_back(terms_to_json(p));
  return Json{{"field", {{"char", sys.field.spec().characteristic}}},
              {"vars", sys.vars},
              {"polys", std::move(polys)}};
}

inline Json system_to_json(const SystemDoc& doc) {
  Json j = std::visit([](const auto& sys) { return system_to_json_impl(sys); }, doc.system);
  if (doc.problem) j["problem"] = *doc.problem;
  if (doc.k) j["k"] = *doc.k;
  if (doc.var_meaning) j["varMeaning"] = *doc.var_meaning;
  return j;
}

inline SystemDoc system_from_json(const Json& j) {
  try {
    std::uint64_t ch = j.at("field").at("char").get<std::uint64_t>();
    int vars = j.at("vars").get<int>();
    const Json& polys = j.at("polys");
    SystemDoc doc{ch == 0 ? AnySystem{PolySystem<RationalField>(RationalField{}, vars)}
                          : AnySystem{PolySystem<PrimeField>(PrimeField(ch), vars)},
                  std::nullopt, std::nullopt, std::nullopt};
    std::visit(
        [&](auto& sys) {
          for (const auto& terms : polys) sys.push(terms_from_json(sys.field, vars, terms));
        },
        doc.system);
    if (j.contains("problem")) doc.problem = j.at("problem").get<std::string>();
    if (j.contains("k")) doc.k = j.at("k").get<unsigned>();
    if (j.contains("varMeaning")) doc.var_meaning = j.at("varMeaning").get<std::string>();
    return doc;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad system JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad system JSON: ") + e.what());
  }
}

inline Json certificate_to_json(const Certificate& cert) {
  Json cof = Json::array();
  for (const auto& h : cert.cofactors) cof.push_back(polynomial_to_json(h));
  return Json{{"degree", cert.degree}, {"cofactors", std::move(cof)}};
}

inline Certificate certificate_from_json(const Json& j) {
  try {
    Certificate cert;
    cert.degree = j.at("degree").get<unsigned>();
    for (const auto& pj : j.at("cofactors")) {
      std::uint64_t ch = pj.at("field").at("char").get<std::uint64_t>();
      if (ch == 0) throw ParseError("certificate cofactors must live over a prime field");
      int vars = pj.at("vars").get<int>();
      cert.cofactors.push_back(terms_from_json(PrimeField(ch), vars, pj.at("terms")));
      if (cert.cofactors.back().degree() > static_cast<int>(cert.degree))
        throw ParseError("certificate cofactor degree exceeds declared degree");
    }
    return cert;
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad certificate JSON: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("bad certificate JSON: ") + e.what());
  }
}

}  // namespace polygraph
