#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(MAXTHIN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  REQUIRE(f.good());
  return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("cli help and usage errors exit with code 2") {
  CHECK(run_cli("--help").exit_code == 0);
  CHECK(run_cli("").exit_code != 0);
  CHECK(run_cli("admissible").exit_code != 0);            // missing --p
  CHECK(run_cli("admissible --p 6 --max 20").exit_code == 2);
  CHECK(run_cli("enumerate --kind thin --p 3 --degree 4").exit_code == 2);
  CHECK(run_cli("verify --theorem bogus --p 2").exit_code == 2);
  CHECK(run_cli("analyze --in /does/not/exist --which sandwich").exit_code == 2);
}

TEST_CASE("cli admissible and verify run green") {
  RunResult adm = run_cli("admissible --p 2 --max 33");
  CHECK(adm.exit_code == 0);
  CHECK(adm.output.find("\"pass\": true") != std::string::npos);

  RunResult ver = run_cli("verify --theorem identities --p 3 --max 27");
  CHECK(ver.exit_code == 0);

  RunResult sd = run_cli("verify --theorem second-diamond --p 2 --degree 13");
  CHECK(sd.exit_code == 0);
}

TEST_CASE("cli enumerate is byte-identical across jobs") {
  std::string base = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string f1 = base + "/maxthin_cli_j1.ndjson";
  std::string f4 = base + "/maxthin_cli_j4.ndjson";
  CHECK(run_cli("enumerate --kind maxclass --p 2 --degree 14 --jobs 1 --out " + f1).exit_code == 0);
  CHECK(run_cli("enumerate --kind maxclass --p 2 --degree 14 --jobs 4 --out " + f4).exit_code == 0);
  CHECK(slurp(f1) == slurp(f4));
  CHECK(!slurp(f1).empty());
  std::remove(f1.c_str());
  std::remove(f4.c_str());
}

TEST_CASE("cli analyze consumes enumerate output") {
  std::string base = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp");
  std::string docs = base + "/maxthin_cli_docs.ndjson";
  REQUIRE(run_cli("enumerate --kind thin --p 5 --degree 12 --out " + docs).exit_code == 0);
  RunResult ana = run_cli("analyze --in " + docs + " --which diamonds");
  CHECK(ana.exit_code == 0);
  CHECK(ana.output.find("\"pass\": true") != std::string::npos);
  std::remove(docs.c_str());
}
