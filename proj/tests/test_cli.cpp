#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef CPDA_CLI_PATH
#error "CPDA_CLI_PATH must point at the cpda binary"
#endif

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

// Runs a shell command, capturing stdout; callers route stderr themselves.
RunResult run(const std::string& command) {
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buffer[4096];
  std::size_t got = 0;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.out.append(buffer, got);
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

const std::string cli = CPDA_CLI_PATH;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("version flag") {
  RunResult r = run(cli + " --version");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "cpda 0.1.0\n");
}

TEST_CASE("build man piped into check prints the parameter summary") {
  RunResult r = run(cli + " build man --k 3 --t 1 | " + cli + " check -");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "valid (3,3,1,3), g=2\n");
}

TEST_CASE("build outputs are byte-deterministic") {
  RunResult one = run(cli + " build lsub1 --h 6 --r 2 --q 2");
  RunResult two = run(cli + " build lsub1 --h 6 --r 2 --q 2");
  CHECK(one.exit_code == 0);
  CHECK(one.out == two.out);
  CHECK(!one.out.empty());
}

TEST_CASE("cutset-b piped into sim reports rate 1/4") {
  RunResult r = run(cli + " build cutset-b --h 4 --r 2 | " + cli +
                    " sim - --n-files 6 --file-bytes 48 --demands random:50"
                    " --seed 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"all_decoded\":true") != std::string::npos);
  CHECK(r.out.find("\"max_rate\":{\"den\":4,\"num\":1}") !=
        std::string::npos);
}

TEST_CASE("sim runs are deterministic for a fixed seed") {
  std::string command = cli + " build lsub2 --h 4 --r 2 --q 2 | " + cli +
                        " sim - --n-files 4 --file-bytes 32 "
                        "--demands random:20 --seed 9";
  RunResult one = run(command);
  RunResult two = run(command);
  CHECK(one.exit_code == 0);
  CHECK(one.out == two.out);
}

TEST_CASE("usage errors exit 2 with a structured message") {
  RunResult r = run(cli + " build man --k 3 2>/tmp/cpda_usage_err.json");
  CHECK(r.exit_code == 2);
  std::string err = slurp("/tmp/cpda_usage_err.json");
  CHECK(err.find("\"code\":\"UsageError\"") != std::string::npos);
  CHECK(err.find("--t") != std::string::npos);
}

TEST_CASE("validation failures exit 1 with the violation list") {
  std::string path = "/tmp/cpda_bad_array.json";
  {
    std::ofstream out(path);
    out << "{\"f\":1,\"k\":2,\"s\":1,\"rows\":[[1,1]]}\n";
  }
  RunResult r = run(cli + " check " + path + " 2>/tmp/cpda_check_err.json");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("invalid") == 0);
  CHECK(r.out.find("RepeatedInLine") != std::string::npos);
  std::string err = slurp("/tmp/cpda_check_err.json");
  CHECK(err.find("\"code\":\"MalformedArray\"") != std::string::npos);
}

TEST_CASE("unreadable input exits 1 with IoError") {
  RunResult r =
      run(cli + " check /nonexistent/file.json 2>/tmp/cpda_io_err.json");
  CHECK(r.exit_code == 1);
  CHECK(slurp("/tmp/cpda_io_err.json").find("\"code\":\"IoError\"") !=
        std::string::npos);
}

TEST_CASE("classes emits a partition that classes check accepts") {
  std::string path = "/tmp/cpda_classes.json";
  RunResult gen = run(cli + " classes --h 6 --r 3 --out " + path);
  CHECK(gen.exit_code == 0);
  RunResult chk = run(cli + " classes check " + path);
  CHECK(chk.exit_code == 0);
  CHECK(chk.out == "valid partition: h=6 r=3 classes=10\n");
}

TEST_CASE("transform accepts an explicit classes file") {
  std::string classes = "/tmp/cpda_classes42.json";
  REQUIRE(run(cli + " classes --h 4 --r 2 --out " + classes).exit_code == 0);
  RunResult direct = run(cli + " build man --k 3 --t 1 | " + cli +
                         " transform --pda - --h 4 --r 2 --classes " +
                         classes);
  RunResult derived = run(cli + " build man --k 3 --t 1 | " + cli +
                          " transform --pda - --h 4 --r 2");
  CHECK(direct.exit_code == 0);
  CHECK(direct.out == derived.out);
}

TEST_CASE("transform round-trips through check") {
  RunResult r = run(cli + " build man --k 7 --t 2 | " + cli +
                    " transform --pda - --h 8 --r 2 | " + cli + " check -");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("valid (28,42,12,280), g=3\n") == 0);
}

TEST_CASE("balance wraps equal-load schemes as one replica") {
  RunResult r = run(cli + " build cutset-b --h 4 --r 2 | " + cli +
                    " balance --cpda -");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"base_f\":4") != std::string::npos);
  CHECK(r.out.find("\"subpacketization\":4") != std::string::npos);
}

TEST_CASE("analyze cutset prints the exact bound") {
  RunResult r = run(cli + " analyze cutset --h 4 --r 2 --n 6 --m 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "{\"h\":4,\"l\":1,\"lower_bound\":{\"den\":4,\"num\":1},"
        "\"m_over_n\":{\"den\":2,\"num\":1},\"n\":6,\"r\":2,\"t\":2}\n");
}

TEST_CASE("analyze table writes CSV with the exact header") {
  RunResult r = run(cli + " analyze table --h 4 --r 2 --n 6 --grid q:2..3");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("m_over_n,scheme,r_lsub,f_lsub,r_tr,f_tr,ratio,cutset,"
                   "r_opt,") == 0);
  CHECK(r.out.find("corner") != std::string::npos);
}

TEST_CASE("build rejects parameters off the construction domain") {
  RunResult r =
      run(cli + " build lsub1 --h 4 --r 2 --q 3 2>/tmp/cpda_degen.json");
  CHECK(r.exit_code == 1);
  CHECK(slurp("/tmp/cpda_degen.json").find("\"code\":\"DegenerateParams\"") !=
        std::string::npos);
}

TEST_CASE("unknown subcommands exit 2") {
  RunResult r = run(cli + " frobnicate 2>/dev/null");
  CHECK(r.exit_code == 2);
}
