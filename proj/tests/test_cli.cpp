#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include "antimagic/io.hpp"
#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct CliResult {
  int exit_code = -1;
  std::string out, err;
};

// Runs the installed binary inside dir, capturing both streams.
CliResult run_cli(const fs::path& dir, const std::string& args,
                  const std::string& env_prefix = "") {
  fs::create_directories(dir);
  std::string cmd = "cd '" + dir.string() + "' && " + env_prefix + " '" +
                    ANTIMAGIC_CLI_PATH + "' " + args + " > cli_out.txt 2> cli_err.txt";
  int status = std::system(cmd.c_str());
  CliResult r;
  if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
  r.out = antimagic::io::read_text_file((dir / "cli_out.txt").string());
  r.err = antimagic::io::read_text_file((dir / "cli_err.txt").string());
  return r;
}

fs::path fresh_dir(const std::string& tag) {
  fs::path dir = fs::temp_directory_path() / ("antimagic_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("construct writes files and reports the verdict") {
  fs::path dir = fresh_dir("construct");
  CliResult r = run_cli(dir, "construct --family uni --n 5 --d 0");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("antimagic: true") != std::string::npos);
  CHECK(fs::exists(dir / "labeling.json"));
  CHECK(fs::exists(dir / "weights.csv"));
  json lab = json::parse(
      antimagic::io::read_text_file((dir / "labeling.json").string()));
  CHECK(lab["n"] == 5);
  CHECK(lab["labels"].size() == 5);
}

TEST_CASE("construct maps outcomes onto exit codes") {
  fs::path dir = fresh_dir("codes");
  // proven nonexistent: property-false
  CliResult no = run_cli(dir, "construct --family uni --n 6 --d 0,3");
  CHECK(no.exit_code == 1);
  CHECK(no.err.find("no labeling exists") != std::string::npos);
  // open question: domain error
  CliResult open_case = run_cli(dir, "construct --family uni --n 12 --d 0,4");
  CHECK(open_case.exit_code == 2);
  CHECK(open_case.err.find("not covered") != std::string::npos);
  // out of range distance
  CliResult oor = run_cli(dir, "construct --family theta --n 6 --d 0,5");
  CHECK(oor.exit_code == 2);
  // malformed distance lists
  CHECK(run_cli(dir, "construct --family uni --n 6 --d 0,0").exit_code == 2);
  CHECK(run_cli(dir, "construct --family uni --n 6 --d 3,0").exit_code == 2);
  CHECK(run_cli(dir, "construct --family uni --n 6 --d x").exit_code == 2);
  // missing required flag
  CHECK(run_cli(dir, "construct --family uni --n 6").exit_code == 2);
  // unknown subcommand
  CHECK(run_cli(dir, "frobnicate").exit_code == 2);
}

TEST_CASE("construct and verify round trip") {
  fs::path dir = fresh_dir("roundtrip");
  CliResult c = run_cli(dir,
                        "construct --family theta --n 10 --d 0,1,3,4 "
                        "--out-graph graph.json");
  REQUIRE(c.exit_code == 0);
  CliResult v = run_cli(
      dir, "verify --graph graph.json --labeling labeling.json --d 0,1,3,4");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("antimagic: true") != std::string::npos);
  CHECK(v.out.find("vertex,label,weight") != std::string::npos);

  // failing verify names a witness pair
  CliResult bad = run_cli(
      dir, "verify --graph graph.json --labeling labeling.json --d 2,3");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("antimagic: false") != std::string::npos);
  CHECK(bad.out.find("witness: v_") != std::string::npos);

  // malformed files are usage errors
  antimagic::io::write_text_file((dir / "broken.json").string(), "{nope");
  CliResult mal = run_cli(
      dir, "verify --graph broken.json --labeling labeling.json --d 1");
  CHECK(mal.exit_code == 2);
}

TEST_CASE("search subcommand") {
  fs::path dir = fresh_dir("search");
  CliResult none = run_cli(
      dir, "search --family uni --n 6 --d 0,3 --method exhaustive");
  CHECK(none.exit_code == 1);
  CHECK(none.out.find("verdict: ExhaustedNone") != std::string::npos);

  CliResult found =
      run_cli(dir, "search --family theta --n 7 --d 1 --method backtrack");
  CHECK(found.exit_code == 0);
  CHECK(found.out.find("verdict: Found") != std::string::npos);
  CHECK(found.out.find("\"labels\"") != std::string::npos);

  // {0,4} on C_8 has no labeling, so a 10 node budget cannot finish the scan
  CliResult aborted = run_cli(
      dir, "search --family uni --n 8 --d 0,4 --method exhaustive "
           "--budget-nodes 10");
  CHECK(aborted.exit_code == 1);
  CHECK(aborted.out.find("verdict: Aborted") != std::string::npos);

  CliResult from_bits =
      run_cli(dir, "search --orientation 100000 --d 0,2 --canonical");
  CHECK(from_bits.exit_code == 0);

  // needs exactly one graph source
  CHECK(run_cli(dir, "search --d 1").exit_code == 2);
  CHECK(run_cli(dir, "search --family uni --n 6 --orientation 111 --d 1")
            .exit_code == 2);

  // thread cap from the environment is accepted
  CliResult env = run_cli(dir,
                          "search --family uni --n 8 --d 0,3 --threads 8",
                          "ANTIMAGIC_THREADS=2");
  CHECK(env.exit_code == 0);
}

TEST_CASE("sweep subcommand") {
  fs::path dir = fresh_dir("sweep");
  CliResult r = run_cli(dir, "sweep --family singleton --n-max 4 --out t.csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("mismatches: 0") != std::string::npos);
  std::string csv = antimagic::io::read_text_file((dir / "t.csv").string());
  CHECK(csv.rfind("n,orientation_bits,D,outcome,witness_labels\n", 0) == 0);

  CliResult pairs = run_cli(
      dir, "sweep --family pairs --n-max 6 --universe uni --out p.csv");
  CHECK(pairs.exit_code == 0);
}

TEST_CASE("fixtures subcommand is idempotent") {
  fs::path dir = fresh_dir("fixtures");
  CliResult a = run_cli(dir, "fixtures --out-dir fx --canonical");
  CHECK(a.exit_code == 0);
  int count = 0;
  for (auto& entry : fs::directory_iterator(dir / "fx")) {
    (void)entry;
    count++;
  }
  CHECK(count == 8);
  std::string before = antimagic::io::read_text_file(
      (dir / "fx" / "uni_c8_d0-3.json").string());
  CliResult b = run_cli(dir, "fixtures --out-dir fx --canonical");
  CHECK(b.exit_code == 0);
  CHECK(antimagic::io::read_text_file(
            (dir / "fx" / "uni_c8_d0-3.json").string()) == before);
}

TEST_CASE("export-dot subcommand") {
  fs::path dir = fresh_dir("dot");
  REQUIRE(run_cli(dir,
                  "construct --family uni --n 5 --d 1 --out-graph g.json")
              .exit_code == 0);
  CliResult r = run_cli(
      dir, "export-dot --graph g.json --labeling labeling.json --out g.dot");
  CHECK(r.exit_code == 0);
  std::string dot = antimagic::io::read_text_file((dir / "g.dot").string());
  CHECK(dot.rfind("digraph G {", 0) == 0);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(dot.find("[label=\"v_1 [") != std::string::npos);

  CliResult sizes = run_cli(
      dir, "export-dot --graph g.json --labeling missing.json --out x.dot");
  CHECK(sizes.exit_code == 2);
}

TEST_CASE("construct emits dot when asked") {
  fs::path dir = fresh_dir("construct_dot");
  CliResult r = run_cli(
      dir, "construct --family uni --n 5 --d 1 --emit dot --out-dot five.dot");
  CHECK(r.exit_code == 0);
  std::string dot = antimagic::io::read_text_file((dir / "five.dot").string());
  CHECK(dot.rfind("digraph G {", 0) == 0);
}
