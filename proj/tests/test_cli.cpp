#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(CLI_BIN) + " " + args;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  RunResult r;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, p)) > 0;) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("chromatic command matches the golden bytes") {
  const RunResult r = run("chromatic " + data("z2z4_pair.json"));
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/z2z4_chromatic.json")));
  // Byte-stable across runs.
  CHECK(run("chromatic " + data("z2z4_pair.json")).out == r.out);
}

TEST_CASE("chromatic command on a graph") {
  const RunResult r = run("chromatic --graph " + data("k3.txt"));
  CHECK(r.code == 0);
  CHECK(r.out == slurp(data("golden/k3_chromatic.json")));
}

TEST_CASE("chromatic latex display") {
  const RunResult r = run("chromatic --latex " + data("z2z4_pair.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("\"latex\"") != std::string::npos);
  CHECK(r.out.find("begin{cases}") != std::string::npos);
}

TEST_CASE("tutte command") {
  const RunResult coloop = run("tutte --g Z " + data("free_coloop.json"));
  CHECK(coloop.code == 0);
  CHECK(coloop.out.find("\"text\": \"x\"") != std::string::npos);

  const RunResult loop = run("tutte --g Z " + data("free_loop.json"));
  CHECK(loop.code == 0);
  CHECK(loop.out.find("\"text\": \"y\"") != std::string::npos);

  const RunResult arith = run("tutte --g QZ " + data("z2z4_pair.json"));
  CHECK(arith.code == 0);
  CHECK(arith.out == slurp(data("golden/z2z4_tutte_qz.json")));
}

TEST_CASE("charpoly and real-charpoly commands") {
  const RunResult cp = run("charpoly --g k:8 " + data("z2z4_pair.json"));
  CHECK(cp.code == 0);
  CHECK(cp.out.find("\"text\": \"3t^2 - 12t + 12\"") != std::string::npos);

  const RunResult rp = run("real-charpoly " + data("z2z4_pair.json"));
  CHECK(rp.code == 0);
  CHECK(rp.out.find("\"text\": \"t^2 - 2t + 1\"") != std::string::npos);
}

TEST_CASE("period command") {
  const RunResult r = run("period " + data("z2z4_pair.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("\"period\": 8") != std::string::npos);
}

TEST_CASE("verify command passes on a sound instance") {
  const RunResult r = run("verify --qmax 8 " + data("z2z4_pair.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("q=8 oracle=108 symbolic=108 PASS") != std::string::npos);
  CHECK(r.out.find("dc PASS") != std::string::npos);
  CHECK(r.out.find("gcd PASS") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify command accepts a matching expectation") {
  const RunResult r = run("verify --qmax 4 --expect " +
                          data("golden/z2z4_chromatic.json") + " " +
                          data("z2z4_pair.json"));
  CHECK(r.code == 0);
  CHECK(r.out.find("expect PASS") != std::string::npos);
}

TEST_CASE("verify command rejects a corrupted expectation") {
  const RunResult r = run("verify --qmax 4 --expect " +
                          data("golden/z2z4_corrupted.json") + " " +
                          data("z2z4_pair.json") + " 2>/dev/null");
  CHECK(r.code == 1);
  CHECK(r.out.find("expect FAIL") != std::string::npos);
}

TEST_CASE("convert to congruence system and back") {
  const RunResult to_cw =
      run("convert --to cw --check --qmax 6 " + data("z2z4_pair.json"));
  CHECK(to_cw.code == 0);
  CHECK(to_cw.out == slurp(data("golden/z2z4_cw.json")));

  const RunResult to_bm = run("convert --to bm --check --qmax 8 " + data("cw_line.json"));
  CHECK(to_bm.code == 0);
  CHECK(to_bm.out.find("\"group\": \"Z/4\"") != std::string::npos);

  const std::string tmp = "/tmp/gtutte_cli_convert.json";
  const RunResult to_file =
      run("convert --to cw -o " + tmp + " " + data("z2z4_pair.json"));
  CHECK(to_file.code == 0);
  CHECK(to_file.out.empty());
  CHECK(slurp(tmp) == slurp(data("golden/z2z4_cw.json")));
  std::remove(tmp.c_str());
}

TEST_CASE("input errors exit with code 2") {
  CHECK(run("chromatic " + data("bad_group.json") + " 2>/dev/null").code == 2);
  CHECK(run("chromatic /nonexistent.json 2>/dev/null").code == 2);
  CHECK(run("chromatic --graph " + data("z2z4_pair.json") + " 2>/dev/null").code == 2);
  CHECK(run("tutte --g R " + data("free_coloop.json") + " 2>/dev/null").code == 2);
  CHECK(run("convert --to bm " + data("free_coloop.json") + " 2>/dev/null").code == 2);
  CHECK(run("2>/dev/null").code == 2);          // missing subcommand
  CHECK(run("frobnicate 2>/dev/null").code == 2);
  CHECK(run("chromatic 2>/dev/null").code == 2);  // missing input
  CHECK(run("convert --to nope x.json 2>/dev/null").code == 2);
}

TEST_CASE("caps exit with code 3") {
  CHECK(run("chromatic --subset-cap 2 " + data("z2z4_pair.json") + " 2>/dev/null").code ==
        3);
  CHECK(run("verify --enum-cap 1 " + data("z2z4_pair.json") + " 2>/dev/null").code == 3);
}

TEST_CASE("help exits cleanly") {
  CHECK(run("--help").code == 0);
  CHECK(run("chromatic --help").out.find("--latex") != std::string::npos);
}
