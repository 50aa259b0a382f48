#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <string>

namespace {

const std::string kCli = TF_CLI;
const std::string kDir = TF_FIXTURES;

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = "'" + kCli + "' " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int st = pclose(p);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

std::string pat(const char* name) { return " --pattern '" + kDir + "/" + name + "'"; }

}  // namespace

TEST_CASE("compute") {
  auto r = run("compute" + pat("unknot_core.json") + " --m 7");
  CHECK(r.code == 0);
  CHECK(r.out.find("(0,0): 1") != std::string::npos);
  CHECK(r.out.find("Δ = 1") != std::string::npos);
  CHECK(r.out.find("τ = 0") != std::string::npos);
  CHECK(r.out.find("th = 0") != std::string::npos);

  auto t = run("compute" + pat("mazur.json") + " --m 3 --format tsv");
  CHECK(t.code == 0);
  CHECK(t.out == "m\ttotal_dim\tgenus\ttau\tthickness\talex_degree\tdelta_span\n3\t23\t3\t1\t2\t3\t-1..1\n");
}

TEST_CASE("sweep writes a deterministic tsv") {
  auto dir = std::filesystem::temp_directory_path() / "twistfloer_cli_test";
  std::filesystem::create_directories(dir);
  auto f1 = (dir / "a.tsv").string(), f2 = (dir / "b.tsv").string();
  CHECK(run("sweep" + pat("mazur.json") + " --from 1 --to 30 --k 2 --out '" + f1 + "'").code == 0);
  CHECK(run("sweep" + pat("mazur.json") + " --from 1 --to 30 --k 2 --jobs 4 --out '" + f2 + "'").code == 0);
  auto slurp = [](const std::string& f) {
    std::string s;
    FILE* p = fopen(f.c_str(), "r");
    REQUIRE(p);
    int ch;
    while ((ch = fgetc(p)) != EOF) s.push_back(static_cast<char>(ch));
    fclose(p);
    return s;
  };
  auto a = slurp(f1);
  CHECK(a == slurp(f2));
  CHECK(a.rfind("m\ttotal_dim\tgenus\ttau\tthickness\talex_degree\tdelta_span\n", 0) == 0);
  CHECK(std::count(a.begin(), a.end(), '\n') == 31);
  std::filesystem::remove_all(dir);

  auto j1 = run("sweep" + pat("mazur.json") + " --from 5 --to 20 --format json");
  auto j2 = run("sweep" + pat("mazur.json") + " --from 5 --to 20 --format json --jobs 3");
  CHECK(j1.code == 0);
  CHECK(j1.out == j2.out);
}

TEST_CASE("unknot sweep is fast") {
  auto t0 = std::chrono::steady_clock::now();
  auto r = run("sweep" + pat("unknot_core.json") + " --from 1 --to 30");
  auto dt = std::chrono::steady_clock::now() - t0;
  CHECK(r.code == 0);
  CHECK(dt < std::chrono::seconds(1));
}

TEST_CASE("verify") {
  auto m = run("verify" + pat("mazur.json"));
  CHECK(m.code == 2);
  CHECK(m.out.find("m4(y4,r1,r2,r1)") != std::string::npos);
  auto h = run("verify" + pat("hinf.json") + " --m 8");
  CHECK(h.code == 0);
  CHECK(h.out.find("FAILED") == std::string::npos);
}

TEST_CASE("predict") {
  auto c = run("predict" + pat("unknot_core_curve.json") + " --from 1 --to 3");
  CHECK(c.code == 0);
  CHECK(c.out == "m\tpredicted_dim\n1\t1\n2\t1\n3\t1\n");
  auto p = run("predict" + pat("mazur.json") + " --from 20 --to 30");
  CHECK(p.code == 0);
  CHECK(p.out.find("D = 8, d = 1") != std::string::npos);
}

TEST_CASE("input errors exit 1") {
  CHECK(run("compute --pattern /nonexistent.json --m 2").code == 1);
  CHECK(run("compute" + pat("mazur.json") + " --m 0").code == 1);
  CHECK(run("sweep" + pat("mazur.json") + " --from 5 --to 2").code == 1);
  CHECK(run("sweep" + pat("mazur.json") + " --format xml").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("compute --m 2").code == 1);
  CHECK(run("--help").code == 0);
}
