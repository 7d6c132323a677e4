#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI with `args` through the shell; stderr is folded into out when
// `merge` is set.
Run run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string("\"") + MARKOV_CLI_PATH + "\" " + args + (merge ? " 2>&1" : " 2>/dev/null");
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("matrix of the mu_{-1} triple") {
  const Run r = run("matrix \"0/1,1/1,inf\" --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["complementary"] == nlohmann::json::parse(R"([["1","0","0"],["2","-1","0"],["0","0","1"]])"));
  CHECK(j["g"] == nlohmann::json::parse(R"([["1","2","0"],["0","-1","0"],["0","0","1"]])"));
  CHECK(j["word"] == nlohmann::json::parse(R"(["-1"])"));
}

TEST_CASE("matrix of the root") {
  const Run r = run("matrix \"0/1,-1/1,inf\" --format json");
  REQUIRE(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["principal"] == nlohmann::json::parse(R"([["0","-2","2"],["2","0","-2"],["-2","2","0"]])"));
  CHECK(j["complementary"] == nlohmann::json::parse(R"([["1","0","0"],["0","1","0"],["0","0","1"]])"));
  CHECK(j["g"] == j["complementary"]);
  CHECK(j["depth"] == 0);
}

TEST_CASE("oracle self-check and other formats") {
  const Run r = run("matrix \"7/3,2/1,5/2\" --oracle");
  CHECK(r.status == 0);
  CHECK(r.out.find("oracle: pass") != std::string::npos);
  CHECK(run("matrix --word 0,-1,inf,0 --oracle --format csv").status == 0);
  const Run g = run("gmatrix \"0/1,1/1,inf\" --format json");
  REQUIRE(g.status == 0);
  CHECK_FALSE(nlohmann::json::parse(g.out).contains("principal"));
}

TEST_CASE("mutate and path") {
  Run r = run("mutate \"0/1,-1/1,inf\" -1");
  CHECK(r.status == 0);
  CHECK(r.out == "0/1,1/1,1/0\n");
  r = run("path \"2/1,1/1,inf\"");
  CHECK(r.status == 0);
  CHECK(r.out == "0,-1\n");
  r = run("path \"0/1,-1/1,inf\"");
  CHECK(r.status == 0);
  CHECK(r.out == "\n");
}

TEST_CASE("enumerate") {
  CHECK(run("enumerate 2 --count-only").out == "10\n");
  CHECK(run("enumerate 12 --count-only").out == "12286\n");
  const Run r = run("enumerate 0");
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["triple"] == nlohmann::json::parse(R"(["0/1","-1/1","1/0"])"));
  CHECK(run("enumerate 21").status == 2);
}

TEST_CASE("input errors exit with 2") {
  CHECK(run("matrix \"0/1,1/2,3/2\"").status == 2);
  CHECK(run("matrix \"0/1,abc,inf\"").status == 2);
  CHECK(run("mutate \"0/1,-1/1,inf\" 5").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("").status == 2);
  CHECK(run("matrix").status == 2);
}

TEST_CASE("verify smoke mode and the failure path") {
  const Run ok = run("verify --depth 3 --symbolic-depth 2");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("FAIL") == std::string::npos);
  const Run bad = run("verify --depth 3 --symbolic-depth 2 --corrupt-case SpecialPlus", true);
  CHECK(bad.status == 1);
  CHECK(bad.out.find("triple ") != std::string::npos);
  const Run json = run("verify --depth 2 --symbolic-depth 1 --format json");
  REQUIRE(json.status == 0);
  CHECK(nlohmann::json::parse(json.out).is_object());
}

TEST_CASE("plot output is deterministic") {
  const std::string dir = MARKOV_TEST_TMPDIR;
  const std::string a = dir + "/cli_plot_a.svg", b = dir + "/cli_plot_b.svg";
  REQUIRE(run("plot-gvectors --depth 6 --out \"" + a + "\"").status == 0);
  REQUIRE(run("plot-gvectors --depth 6 --out \"" + b + "\"").status == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK_FALSE(slurp(a).empty());
  const Run csv = run("plot-gvectors --depth 0 --format csv");
  CHECK(csv.status == 0);
  CHECK(csv.out.rfind("gx,gy,gz,px,py\n", 0) == 0);
  CHECK(run("plot-gvectors --depth 2 --out /nonexistent-dir/x.svg").status == 2);
  CHECK(run("plot-gvectors --depth 15").status == 2);
}
