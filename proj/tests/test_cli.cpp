// SPDX-License-Identifier: MIT
#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

struct RunResult {
  int exit_code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(POLYGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch_dir() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("polygraph-cli-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write_file(const std::string& name, const std::string& text) {
  fs::path p = scratch_dir() / name;
  std::ofstream out(p);
  out << text;
  return p;
}

const std::string kStar3 = "p edge 4 3\ne 1 2\ne 1 3\ne 1 4\n";
const std::string kP4 = "p edge 4 3\ne 1 2\ne 2 3\ne 3 4\n";
const std::string kC4 = "p edge 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n";

}  // namespace

TEST_CASE("encode, certify, verify round-trip") {
  auto graph = write_file("star3.dimacs", kStar3);
  auto sys = scratch_dir() / "star3.rc2.json";
  auto cert = scratch_dir() / "star3.cert.json";

  auto enc = run_cli("encode --problem rc2 " + graph.string() + " -o " + sys.string());
  REQUIRE(enc.exit_code == 0);
  Json ej = enc.json();
  CHECK(ej["command"] == "encode");
  CHECK(ej["outcome"]["polyCount"] == 3);
  CHECK(ej["outcome"]["field"]["char"] == 2);
  CHECK(ej["outcome"]["varMeaning"] == "edges");
  REQUIRE(fs::exists(sys));

  auto nul = run_cli("nulla " + sys.string() + " -o " + cert.string());
  REQUIRE(nul.exit_code == 0);
  Json nj = nul.json();
  CHECK(nj["outcome"]["outcome"] == "certificate");
  CHECK(nj["outcome"]["degree"] == 0);
  CHECK(nj["outcome"]["cofactors"].size() == 3);
  REQUIRE(fs::exists(cert));

  auto ver = run_cli("verify " + sys.string() + " --cert " + cert.string());
  REQUIRE(ver.exit_code == 0);
  CHECK(ver.json()["outcome"]["valid"] == true);
}

TEST_CASE("encode picks the field from k") {
  auto c5 = write_file("c5enc.dimacs", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  Json j = run_cli("encode --problem rck --k 3 " + c5.string()).json();
  CHECK(j["outcome"]["field"]["char"] == 7);
  CHECK(j["outcome"]["varMeaning"] == "edges");
  CHECK(j["outcome"]["vars"] == 5);
  CHECK(j["outcome"]["polyCount"] == 10);

  Json v = run_cli("encode --problem vcolor --k 2 " + c5.string()).json();
  CHECK(v["outcome"]["field"]["char"] == 3);
  CHECK(v["outcome"]["varMeaning"] == "vertices");

  Json s = run_cli("encode --problem stable --k 2 " + c5.string()).json();
  CHECK(s["outcome"]["field"]["char"] == 0);
}

TEST_CASE("graph subcommand emits the JSON mirror") {
  auto graph = write_file("star3mirror.dimacs", kStar3);
  auto r = run_cli("graph " + graph.string());
  REQUIRE(r.exit_code == 0);
  Json j = r.json();
  CHECK(j["outcome"]["graph"]["n"] == 4);
  CHECK(j["outcome"]["graph"]["edges"] == Json::parse("[[1,2],[1,3],[1,4]]"));
  CHECK(j["outcome"]["connected"] == true);
  CHECK(j["outcome"]["diameter"] == 2);
}

TEST_CASE("membership subcommand") {
  auto graph = write_file("star3b.dimacs", kStar3);
  auto r = run_cli("membership " + graph.string());
  REQUIRE(r.exit_code == 0);
  Json j = r.json();
  CHECK(j["outcome"]["decision"] == "rc>=3");
  CHECK(j["outcome"]["reason"] == "remainderZero");
  CHECK(j["outcome"]["remainderTerms"] == 0);

  auto r2 = run_cli("membership --order lex --emit-remainder " + graph.string());
  CHECK(r2.json()["outcome"]["decision"] == "rc>=3");
  CHECK(r2.json()["outcome"].contains("remainder"));
}

TEST_CASE("oracle subcommand") {
  auto graph = write_file("star3c.dimacs", kStar3);
  auto r = run_cli("oracle --problem rc " + graph.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.json()["outcome"]["value"] == 3);

  auto c4 = write_file("c4.dimacs", kC4);
  CHECK(run_cli("oracle --problem rc-at-most --k 2 " + c4.string()).json()["outcome"]["value"] == true);
  CHECK(run_cli("oracle --problem chromatic --k 2 " + c4.string()).json()["outcome"]["value"] == true);
  CHECK(run_cli("oracle --problem stable-count --k 2 " + c4.string()).json()["outcome"]["value"] == 2);
}

TEST_CASE("pipeline reports agreement") {
  auto graph = write_file("star3d.dimacs", kStar3);
  auto r = run_cli("pipeline --problem rc2 " + graph.string());
  REQUIRE(r.exit_code == 0);
  Json j = r.json();
  CHECK(j["outcome"]["algebraic"] == "infeasible");
  CHECK(j["outcome"]["certificateDegree"] == 0);
  CHECK(j["outcome"]["oracle"]["rc"] == 3);
  CHECK(j["outcome"]["agree"] == true);

  auto c4 = write_file("c4b.dimacs", kC4);
  Json f = run_cli("pipeline --problem rc2 " + c4.string()).json();
  CHECK(f["outcome"]["algebraic"] == "feasible");
  CHECK(f["outcome"]["agree"] == true);

  Json v = run_cli("pipeline --problem vcolor --k 2 " + c4.string()).json();
  CHECK(v["outcome"]["agree"] == true);

  Json s = run_cli("pipeline --problem stable --k 2 " + c4.string()).json();
  CHECK(s["outcome"]["agree"] == true);

  Json rk = run_cli("pipeline --problem rck --k 3 " + c4.string()).json();
  CHECK(rk["outcome"]["agree"] == true);
}

TEST_CASE("diameter gate exits with the gate code") {
  auto graph = write_file("p4.dimacs", kP4);
  auto r = run_cli("encode --problem rc2 " + graph.string());
  CHECK(r.exit_code == 3);
  CHECK(r.json()["outcome"]["verdict"] == "rc > 2 by diameter");

  // membership decides the same case as a verdict, not an error
  auto m = run_cli("membership " + graph.string());
  CHECK(m.exit_code == 0);
  CHECK(m.json()["outcome"]["decision"] == "rc>=3");
  CHECK(m.json()["outcome"]["reason"] == "diameterGate");

  // pipeline still cross-checks it
  auto p = run_cli("pipeline --problem rc2 " + graph.string());
  CHECK(p.exit_code == 0);
  CHECK(p.json()["outcome"]["agree"] == true);
}

TEST_CASE("parse and budget failures use distinct exit codes") {
  auto bad = write_file("bad.dimacs", "p edge 2 1\ne 1 1\n");
  CHECK(run_cli("membership " + bad.string()).exit_code == 2);

  auto missing = run_cli("membership " + (scratch_dir() / "nope.dimacs").string());
  CHECK(missing.exit_code == 2);

  auto c5 = write_file("c5.dimacs", "p edge 5 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 5 1\n");
  auto tiny = run_cli("oracle --problem rc --budget 3 " + c5.string());
  CHECK(tiny.exit_code == 4);

  CHECK(run_cli("frobnicate").exit_code == 2);
}

TEST_CASE("reports are byte-reproducible") {
  auto graph = write_file("star3e.dimacs", kStar3);
  auto a = run_cli("membership " + graph.string());
  auto b = run_cli("membership " + graph.string());
  CHECK(a.out == b.out);
  CHECK(a.json()["wallMs"].is_null());

  auto timed = run_cli("membership --timing " + graph.string());
  CHECK(timed.json()["wallMs"].is_number());
}

TEST_CASE("config is echoed") {
  auto graph = write_file("star3f.dimacs", kStar3);
  Json j = run_cli("membership --order grevlex --term-cap 12345 " + graph.string()).json();
  CHECK(j["config"]["order"] == "grevlex");
  CHECK(j["config"]["termCap"] == 12345);
  CHECK(j["inputs"]["graph"]["fnv1a64"].is_string());
}
