// SPDX-License-Identifier: MIT
//
// polygraph — encode graph problems as polynomial systems, decide them with
// Nullstellensatz certificates or ideal membership, and cross-check against
// brute-force oracles. One subcommand per stage, one JSON report per run.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "polygraph/encode.hpp"
#include "polygraph/json_io.hpp"
#include "polygraph/membership.hpp"
#include "polygraph/nulla.hpp"
#include "polygraph/oracle.hpp"

namespace {

using namespace polygraph;

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitGate = 3;
constexpr int kExitBudget = 4;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Options {
  std::string graph_path;
  std::string system_path;
  std::string cert_path;
  std::string output_path;
  std::string problem;
  std::string order = "grlex";
  unsigned k = 2;
  std::optional<std::uint64_t> field;
  std::optional<unsigned> max_degree;
  std::uint64_t budget = Budget{}.max_evaluations;
  std::size_t term_cap = MembershipLimits{}.max_terms;
  std::size_t path_cap = EncodeLimits{}.max_paths_per_pair;
  std::size_t column_cap = SearchOptions{}.max_columns;
  bool witness_search = false;
  bool emit_remainder = false;
  bool timing = false;
};

Json config_echo(const Options& o) {
  Json j;
  j["order"] = o.order;
  j["k"] = o.k;
  j["field"] = o.field ? Json(*o.field) : Json(nullptr);
  j["maxDegree"] = o.max_degree ? Json(*o.max_degree) : Json(nullptr);
  j["budget"] = o.budget;
  j["termCap"] = o.term_cap;
  j["pathCap"] = o.path_cap;
  j["columnCap"] = o.column_cap;
  j["witnessSearch"] = o.witness_search;
  j["emitRemainder"] = o.emit_remainder;
  j["timing"] = o.timing;
  j["output"] = o.output_path.empty() ? Json(nullptr) : Json(o.output_path);
  return j;
}

Json input_echo(const std::string& label, const std::string& path, const std::string& data, Json& inputs) {
  inputs[label] = Json{{"path", path}, {"fnv1a64", fnv1a64_hex(data)}};
  return inputs;
}

Graph load_graph(const std::string& path, Json& inputs) {
  std::string data = read_file(path);
  input_echo("graph", path, data, inputs);
  return Graph::parse_dimacs(data);
}

SystemDoc load_system(const std::string& path, Json& inputs) {
  std::string data = read_file(path);
  input_echo("system", path, data, inputs);
  Json j;
  try {
    j = Json::parse(data);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad system JSON: ") + e.what());
  }
  return system_from_json(j);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open output file: " + path);
  out << text;
}

// --- encode -----------------------------------------------------------------

SystemDoc run_encode(const Graph& g, const Options& o) {
  EncodingJob job;
  job.problem = problem_from_name(o.problem);
  job.k = job.problem == Problem::rc2 ? 2 : o.k;
  if (o.field) job.field = FieldSpec{*o.field};
  return SystemDoc{encode(g, job, EncodeLimits{o.path_cap}), problem_name(job.problem), job.k,
                   job.var_meaning()};
}

Json cmd_encode(const Options& o, Json& inputs) {
  Graph g = load_graph(o.graph_path, inputs);
  SystemDoc doc = run_encode(g, o);
  Json system_json = system_to_json(doc);
  Json outcome;
  outcome["problem"] = *doc.problem;
  outcome["k"] = *doc.k;
  outcome["field"] = system_json.at("field");
  outcome["vars"] = system_json.at("vars");
  outcome["varMeaning"] = *doc.var_meaning;
  outcome["polyCount"] = system_json.at("polys").size();
  if (!o.output_path.empty()) {
    write_text(o.output_path, system_json.dump(2) + "\n");
    outcome["written"] = o.output_path;
  } else {
    outcome["written"] = nullptr;
    outcome["system"] = std::move(system_json);
  }
  return outcome;
}

// --- nulla / verify ----------------------------------------------------------

Json outcome_to_json(const SearchOutcome& out) {
  Json j;
  j["outcome"] = outcome_name(out.kind);
  switch (out.kind) {
    case SearchOutcome::Kind::certificate:
      j["degree"] = out.certificate->degree;
      j["cofactors"] = certificate_to_json(*out.certificate).at("cofactors");
      j["witness"] = nullptr;
      break;
    case SearchOutcome::Kind::exhausted:
      j["degree"] = out.exhausted_at;
      j["cofactors"] = nullptr;
      j["witness"] = nullptr;
      break;
    case SearchOutcome::Kind::witness: {
      j["degree"] = nullptr;
      j["cofactors"] = nullptr;
      Json w = Json::array();
      for (auto v : *out.witness) w.push_back(v);
      j["witness"] = std::move(w);
      break;
    }
  }
  return j;
}

Json cmd_nulla(const Options& o, Json& inputs) {
  SystemDoc doc = load_system(o.system_path, inputs);
  auto* sys = std::get_if<PolySystem<PrimeField>>(&doc.system);
  if (!sys) throw ParseError("certificate search requires a prime-field system (characteristic 0 given)");
  SearchOptions opts;
  opts.max_degree = o.max_degree;
  opts.witness_search = o.witness_search;
  opts.budget = Budget{o.budget};
  opts.max_columns = o.column_cap;
  SearchOutcome out = search_certificate(*sys, opts);
  if (out.kind == SearchOutcome::Kind::certificate && !o.output_path.empty())
    write_text(o.output_path, certificate_to_json(*out.certificate).dump(2) + "\n");
  return outcome_to_json(out);
}

// --- graph -----------------------------------------------------------------

Json cmd_graph(const Options& o, Json& inputs) {
  Graph g = load_graph(o.graph_path, inputs);
  Json mirror = graph_to_json(g);
  Json outcome;
  outcome["graph"] = mirror;
  outcome["connected"] = g.connected();
  auto diam = g.diameter();
  outcome["diameter"] = diam ? Json(*diam) : Json(nullptr);
  if (!o.output_path.empty()) {
    write_text(o.output_path, mirror.dump(2) + "\n");
    outcome["written"] = o.output_path;
  } else {
    outcome["written"] = nullptr;
  }
  return outcome;
}

Json cmd_verify(const Options& o, Json& inputs) {
  SystemDoc doc = load_system(o.system_path, inputs);
  auto* sys = std::get_if<PolySystem<PrimeField>>(&doc.system);
  if (!sys) throw ParseError("verification requires a prime-field system");
  std::string data = read_file(o.cert_path);
  input_echo("certificate", o.cert_path, data, inputs);
  Certificate cert;
  try {
    cert = certificate_from_json(Json::parse(data));
  } catch (const Json::exception& e) {
    throw ParseError(std::string("bad certificate JSON: ") + e.what());
  }
  bool valid = false;
  try {
    valid = verify_certificate(*sys, cert);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  return Json{{"valid", valid}, {"degree", cert.degree}};
}

// --- membership ----------------------------------------------------------------

Json cmd_membership(const Options& o, Json& inputs) {
  Graph g = load_graph(o.graph_path, inputs);
  MonomialOrder order = MonomialOrder::from_name(o.order);
  MembershipVerdict verdict = rc2_membership(g, order, MembershipLimits{o.term_cap});
  Json j;
  j["decision"] = decision_name(verdict.decision);
  j["reason"] = reason_name(verdict.reason);
  j["remainderTerms"] = verdict.remainder.term_count();
  if (o.emit_remainder) j["remainder"] = polynomial_to_json(verdict.remainder);
  return j;
}

// --- oracle ----------------------------------------------------------------

Json cmd_oracle(const Options& o, Json& inputs) {
  Graph g = load_graph(o.graph_path, inputs);
  Budget budget{o.budget};
  Json j;
  if (o.problem == "rc")
    j["value"] = rc_exact(g, budget);
  else if (o.problem == "rc-at-most")
    j["value"] = rc_at_most(g, o.k, budget);
  else if (o.problem == "chromatic")
    j["value"] = chromatic_feasible(g, o.k, budget);
  else if (o.problem == "stable-count")
    j["value"] = stable_set_count(g, o.k, budget);
  else
    throw std::invalid_argument("unknown oracle problem '" + o.problem + "'");
  return j;
}

// --- pipeline ----------------------------------------------------------------

std::vector<PrimeField::Value> roots_domain(const PrimeField& f, unsigned k) {
  std::vector<PrimeField::Value> d;
  PrimeField::Value w = root_of_unity(f.modulus(), k);
  for (unsigned i = 0; i < k; ++i) d.push_back(f.pow(w, i));
  return d;
}

Json cmd_pipeline(const Options& o, Json& inputs) {
  Graph g = load_graph(o.graph_path, inputs);
  Budget budget{o.budget};
  Problem problem = problem_from_name(o.problem);
  Json j;
  switch (problem) {
    case Problem::rc2: {
      unsigned rc = rc_exact(g, budget);
      bool oracle_le2 = rc <= 2;
      bool algebraic_feasible = false;
      try {
        auto sys = encode_rc2(g, EncodeLimits{o.path_cap});
        SearchOptions opts;
        opts.max_degree = o.max_degree;
        opts.witness_search = true;
        opts.budget = budget;
        opts.max_columns = o.column_cap;
        SearchOutcome out = search_certificate(sys, opts);
        algebraic_feasible = out.kind == SearchOutcome::Kind::witness;
        j["algebraic"] = algebraic_feasible ? "feasible" : "infeasible";
        j["certificateDegree"] =
            out.kind == SearchOutcome::Kind::certificate ? Json(out.certificate->degree) : Json(nullptr);
        if (out.kind == SearchOutcome::Kind::exhausted)
          throw BudgetError("certificate search exhausted without witness; raise --max-degree");
      } catch (const GateError& e) {
        // diameter > 2: the gate itself is the algebraic verdict
        j["algebraic"] = "infeasible";
        j["certificateDegree"] = nullptr;
        j["gate"] = e.verdict().empty() ? e.what() : e.verdict();
        algebraic_feasible = false;
      }
      j["oracle"] = Json{{"rc", rc}};
      j["agree"] = algebraic_feasible == oracle_le2;
      return j;
    }
    case Problem::rck: {
      auto sys = encode_rck(g, o.k, EncodeLimits{o.path_cap});
      auto point = solve_bruteforce(sys, roots_domain(sys.field, o.k), budget);
      bool oracle_ok = rc_at_most(g, o.k, budget);
      j["algebraic"] = point ? "feasible" : "infeasible";
      j["oracle"] = Json{{"rcAtMost", oracle_ok}};
      j["agree"] = point.has_value() == oracle_ok;
      return j;
    }
    case Problem::vcolor: {
      std::uint64_t ch = o.field ? *o.field : (o.k == 1 ? 2 : field_for_k(o.k));
      if (ch == 0) throw std::invalid_argument("pipeline vcolor needs a prime field");
      auto sys = encode_vertex_coloring(g, o.k, PrimeField(ch));
      auto point = solve_bruteforce(sys, roots_domain(sys.field, o.k), budget);
      bool oracle_ok = chromatic_feasible(g, o.k, budget);
      j["algebraic"] = point ? "feasible" : "infeasible";
      if (!point) {
        SearchOptions opts;
        opts.max_degree = o.max_degree;
        opts.max_columns = o.column_cap;
        SearchOutcome out = search_certificate(sys, opts);
        j["certificateDegree"] =
            out.kind == SearchOutcome::Kind::certificate ? Json(out.certificate->degree) : Json(nullptr);
      } else {
        j["certificateDegree"] = nullptr;
      }
      j["oracle"] = Json{{"feasible", oracle_ok}};
      j["agree"] = point.has_value() == oracle_ok;
      return j;
    }
    case Problem::stable: {
      auto sys = encode_stable_set(g, o.k, RationalField{});
      RationalField q;
      auto point = solve_bruteforce(sys, std::vector<mpq_class>{q.from_int(0), q.from_int(1)}, budget);
      bool oracle_ok = stable_set_count(g, o.k, budget) > 0;
      j["algebraic"] = point ? "feasible" : "infeasible";
      j["oracle"] = Json{{"stableSets", oracle_ok}};
      j["agree"] = point.has_value() == oracle_ok;
      return j;
    }
  }
  throw std::invalid_argument("unknown pipeline problem");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph problems as polynomial systems: encodings, Nullstellensatz certificates, ideal membership, brute-force oracles"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "enumeration budget (number of candidate evaluations)");
    sub->add_flag("--timing", o.timing, "include wall time in the report (breaks byte reproducibility)");
  };

  auto* enc = app.add_subcommand("encode", "encode a graph problem as a polynomial system");
  enc->add_option("graph", o.graph_path, "DIMACS edge-format graph")->required();
  enc->add_option("--problem", o.problem, "vcolor|stable|rc2|rck")->required();
  enc->add_option("--k", o.k, "color/size parameter");
  enc->add_option("--field", o.field, "field characteristic override (0 = rationals)");
  enc->add_option("-o,--output", o.output_path, "write the system JSON here");
  enc->add_option("--path-cap", o.path_cap, "max simple paths per vertex pair");
  add_common(enc);

  auto* nul = app.add_subcommand("nulla", "search for a Nullstellensatz certificate");
  nul->add_option("system", o.system_path, "system JSON")->required();
  nul->add_option("--max-degree", o.max_degree, "degree cap (default: n(d-1), floor 1)");
  nul->add_flag("--witness-search", o.witness_search, "brute-force a feasibility witness first");
  nul->add_option("--column-cap", o.column_cap, "cap on linear-system unknowns");
  nul->add_option("-o,--output", o.output_path, "write the certificate JSON here");
  add_common(nul);

  auto* ver = app.add_subcommand("verify", "verify a certificate against a system");
  ver->add_option("system", o.system_path, "system JSON")->required();
  ver->add_option("--cert", o.cert_path, "certificate JSON")->required();
  add_common(ver);

  auto* mem = app.add_subcommand("membership", "decide rc<=2 vs rc>=3 by ideal membership");
  mem->add_option("graph", o.graph_path, "DIMACS edge-format graph")->required();
  mem->add_option("--order", o.order, "monomial order: lex|grlex|grevlex");
  mem->add_option("--term-cap", o.term_cap, "graph-polynomial term guard");
  mem->add_flag("--emit-remainder", o.emit_remainder, "include the full remainder polynomial");
  add_common(mem);

  auto* ora = app.add_subcommand("oracle", "brute-force ground truth");
  ora->add_option("graph", o.graph_path, "DIMACS edge-format graph")->required();
  ora->add_option("--problem", o.problem, "rc|rc-at-most|chromatic|stable-count")->required();
  ora->add_option("--k", o.k, "threshold/size parameter");
  add_common(ora);

  auto* gra = app.add_subcommand("graph", "parse a DIMACS graph and emit its JSON mirror");
  gra->add_option("graph", o.graph_path, "DIMACS edge-format graph")->required();
  gra->add_option("-o,--output", o.output_path, "write the JSON mirror here");
  add_common(gra);

  auto* pip = app.add_subcommand("pipeline", "encode, decide algebraically, cross-check the oracle");
  pip->add_option("graph", o.graph_path, "DIMACS edge-format graph")->required();
  pip->add_option("--problem", o.problem, "vcolor|stable|rc2|rck")->required();
  pip->add_option("--k", o.k, "color/size parameter");
  pip->add_option("--field", o.field, "field characteristic override (vcolor)");
  pip->add_option("--max-degree", o.max_degree, "certificate degree cap");
  pip->add_option("--column-cap", o.column_cap, "cap on linear-system unknowns");
  pip->add_option("--path-cap", o.path_cap, "max simple paths per vertex pair");
  add_common(pip);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitParse;
  }

  auto started = std::chrono::steady_clock::now();
  Json report;
  report["command"] = app.get_subcommands().front()->get_name();
  Json inputs = Json::object();
  Json outcome;
  int code = kExitOk;
  try {
    const std::string& cmd = report["command"].get_ref<const std::string&>();
    if (cmd == "encode")
      outcome = cmd_encode(o, inputs);
    else if (cmd == "nulla")
      outcome = cmd_nulla(o, inputs);
    else if (cmd == "verify")
      outcome = cmd_verify(o, inputs);
    else if (cmd == "membership")
      outcome = cmd_membership(o, inputs);
    else if (cmd == "graph")
      outcome = cmd_graph(o, inputs);
    else if (cmd == "oracle")
      outcome = cmd_oracle(o, inputs);
    else if (cmd == "pipeline")
      outcome = cmd_pipeline(o, inputs);
  } catch (const GateError& e) {
    outcome = Json{{"error", e.what()}};
    if (!e.verdict().empty()) outcome["verdict"] = e.verdict();
    code = kExitGate;
  } catch (const BudgetError& e) {
    outcome = Json{{"error", e.what()}};
    code = kExitBudget;
  } catch (const ParseError& e) {
    outcome = Json{{"error", e.what()}};
    code = kExitParse;
  } catch (const std::invalid_argument& e) {
    outcome = Json{{"error", e.what()}};
    code = kExitParse;
  }
  report["inputs"] = std::move(inputs);
  report["config"] = config_echo(o);
  report["outcome"] = std::move(outcome);
  if (o.timing) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                    started)
                  .count();
    report["wallMs"] = ms;
  } else {
    report["wallMs"] = nullptr;
  }
  std::cout << report.dump(2) << std::endl;
  return code;
}
