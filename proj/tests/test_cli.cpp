#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "hyperburn/designs.hpp"
#include "hyperburn/hypergraph.hpp"

namespace {

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cmd(const std::string& cmd) {
  CmdResult r;
  FILE* pipe = popen((cmd + " 2>/dev/null").c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int rc = pclose(pipe);
  r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return r;
}

const std::string kBin = HB_CLI_PATH;

std::filesystem::path write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("cli: generated figures feed the solvers") {
  CmdResult r = run_cmd(kBin + " gen figure fig2 | " + kBin + " lazy -p 5/6 -");
  CHECK(r.status == 0);
  CHECK(r.out == "8\n");

  CmdResult nested = run_cmd(kBin + " gen nested 5 | " + kBin + " lazydist -");
  CHECK(nested.status == 0);
  CHECK(nested.out == "1, 2, 3, 4, 5\n");
}

TEST_CASE("cli: burning number of the Fano plane") {
  auto path = write_temp("hb_fano.hg", hb::serialize_hypergraph(hb::fano().hg));
  CmdResult r = run_cmd(kBin + " burn -p 2/3 " + path.string());
  CHECK(r.status == 0);
  CHECK(r.out == "4\n");

  CmdResult decimal = run_cmd(kBin + " lazy -p 0.25 " + path.string());
  CHECK(decimal.status == 0);
  CHECK(decimal.out == "1\n");

  CmdResult witness = run_cmd(kBin + " burn -p 2/3 --witness " + path.string());
  CHECK(witness.status == 0);
  CHECK(witness.out.find("status=exact") != std::string::npos);

  CmdResult traced = run_cmd(kBin + " burn -p 2/3 --trace " + path.string());
  CHECK(traced.status == 0);
  CHECK(traced.out.find('*') != std::string::npos);

  CmdResult json = run_cmd(kBin + " lazy -p 2/3 --json " + path.string());
  CHECK(json.status == 0);
  auto parsed = nlohmann::json::parse(json.out);
  CHECK(parsed["value"] == 3);
  CHECK(parsed["status"] == "exact");
  std::filesystem::remove(path);
}

TEST_CASE("cli: exit codes") {
  CHECK(run_cmd(kBin + " frobnicate").status == 64);
  CHECK(run_cmd(kBin + " lazy").status == 64);  // missing -p

  auto bad = write_temp("hb_bad.hg", "3 1\n0 9\n");
  CHECK(run_cmd(kBin + " lazy -p 1/2 " + bad.string()).status == 2);
  std::filesystem::remove(bad);

  auto fano_path = write_temp("hb_fano2.hg", hb::serialize_hypergraph(hb::fano().hg));
  CHECK(run_cmd(kBin + " validate-bibd -v 7 -k 3 -l 2 " + fano_path.string()).status == 2);
  CmdResult ok = run_cmd(kBin + " validate-bibd -v 7 -k 3 -l 1 " + fano_path.string());
  CHECK(ok.status == 0);
  CHECK(ok.out == "valid BIBD(7,3,1) r=3 b=7\n");
  std::filesystem::remove(fano_path);

  CmdResult exhausted =
      run_cmd(kBin + " gen tight-path 4 30 | HB_NODE_BUDGET=40 " + kBin + " burn -p 1/2 -");
  CHECK(exhausted.status == 3);
  CHECK(exhausted.out.find("..") != std::string::npos);
}

TEST_CASE("cli: automorphism order via both engines") {
  auto path = write_temp("hb_fano3.hg", hb::serialize_hypergraph(hb::double_design(hb::fano()).hg));
  CmdResult fast = run_cmd(kBin + " aut " + path.string());
  CHECK(fast.status == 0);
  CHECK(fast.out == "21504\n");
  CmdResult brute = run_cmd(kBin + " aut --brute " + path.string());
  CHECK(brute.out == "21504\n");
  std::filesystem::remove(path);
}

TEST_CASE("cli: output is byte-stable and thread-independent") {
  std::string base = kBin + " gen figure fig4 | " + kBin + " dist -";
  CmdResult a = run_cmd(base);
  CmdResult b = run_cmd(base);
  CHECK(a.out == b.out);
  CmdResult threaded = run_cmd(kBin + " gen figure fig4 | " + kBin + " dist --threads 4 -");
  CHECK(threaded.out == a.out);
  CHECK(a.out == "2, 3, 4, 5, 6, 7, 8\n");
}

TEST_CASE("cli: probes emit JSON lines") {
  CmdResult r = run_cmd(kBin + " probe nonmonotone-gap");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"property\":\"gap-nonmonotone\"") != std::string::npos);
  CHECK(r.out.find("\"status\":\"holds\"") != std::string::npos);

  CmdResult ceil = run_cmd(kBin + " probe ceil-pv --trials 3 --seed 5");
  CHECK(ceil.status == 0);

  // Mixed-size sampling finds genuine violations; they exit nonzero.
  CmdResult mixed = run_cmd(kBin + " probe interval-containment --trials 30 --seed 7 --n 9 --m 6");
  CHECK(mixed.status == 2);
  CHECK(mixed.out.find("\"status\":\"violated\"") != std::string::npos);
}

TEST_CASE("cli: stdin dash reads a hypergraph") {
  CmdResult r = run_cmd("printf '4 1\\n0 1 2 3\\n' | " + kBin + " lazy -p 1/2 -");
  CHECK(r.status == 0);
  CHECK(r.out == "2\n");
}
