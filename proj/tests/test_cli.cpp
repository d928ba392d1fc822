#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(BFNL_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string data(const std::string& name) { return std::string(BFNL_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("decide exit codes") {
  CHECK(run("decide \"p => p\"").exit_code == 0);
  CHECK(run("decide \"p => q\"").exit_code == 1);
  CHECK(run("decide \"p => ~~p\"").exit_code == 2);
  CHECK(run("decide \"p => => q\"").exit_code >= 3);
  CHECK(run("decide \"p =>\"").exit_code >= 3);
}

TEST_CASE("decide emits a frame certificate") {
  RunResult r = run("decide \"p , q => q * p\" --kmax 3 --json");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("\"verdict\": \"refuted\"") != std::string::npos);
  CHECK(r.out.find("\"kind\": \"frame\"") != std::string::npos);
  CHECK(r.out.find("\"points\": 3") != std::string::npos);
}

TEST_CASE("decide with an assumption file") {
  RunResult r = run("decide \"p => q\" --assume " + data("hyp.txt"));
  CHECK(r.exit_code == 1);  // the tautological hypothesis changes nothing
  RunResult chained = run("decide \"p => r\" --assume " + data("hyp_chain.txt"));
  CHECK(chained.exit_code == 0);
}

TEST_CASE("check-algebra verdicts") {
  RunResult ok = run("check-algebra " + data("two_chain.json") + " --json");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("\"accepted\": true") != std::string::npos);
  CHECK(ok.out.find("\"embedding-verified\": true") != std::string::npos);

  RunResult bad = run("check-algebra " + data("broken_antisym.json") + " --json");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("\"failing-step\": 1") != std::string::npos);

  // A restriction-produced partial algebra is accepted with a certificate.
  RunResult partial = run("check-algebra " + data("restrict_fixture.json") + " --json");
  CHECK(partial.exit_code == 0);
  CHECK(partial.out.find("\"certificate\"") != std::string::npos);

  CHECK(run("check-algebra " + data("no_such_file.json")).exit_code >= 3);
}

TEST_CASE("bench suites") {
  RunResult good = run("bench " + data("known_theorems.txt"));
  CHECK(good.exit_code == 0);
  CHECK(good.out.find("12/12 as expected") != std::string::npos);

  RunResult bad = run("bench " + data("mixed_bad.txt"));
  CHECK(bad.exit_code == 3);
  CHECK(bad.out.find("MISMATCH") != std::string::npos);

  CHECK(run("bench " + data("no_such_suite.txt")).exit_code >= 3);
}

TEST_CASE("batch JSON output is byte-identical across worker counts") {
  std::string base = "decide --file " + data("cli_subset.txt") + " --json --kmax 2";
  RunResult serial = run(base + " --jobs 1");
  RunResult parallel = run(base + " --jobs 3");
  CHECK(serial.exit_code == 0);
  CHECK(parallel.exit_code == 0);
  CHECK(serial.out == parallel.out);
  CHECK(serial.out.find("\"verdict\": \"provable\"") != std::string::npos);
  CHECK(serial.out.find("\"verdict\": \"refuted\"") != std::string::npos);
  CHECK(serial.out.find("\"verdict\": \"unknown\"") != std::string::npos);
}
