#include <doctest.h>

#include <vnroles/cli.hpp>

#include "test_util.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using vnroles::cli::run;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  RunResult r;
  r.code = run(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string mini_path() { return testutil::mini_vn().string(); }

struct EnvGuard {
  EnvGuard() { ::unsetenv("VN_PATH"); }
  ~EnvGuard() { ::unsetenv("VN_PATH"); }
};

}  // namespace

TEST_CASE("stats reports lexicon and reduction counts") {
  EnvGuard guard;
  auto r = run_cli({"stats", "--vn-path", mini_path()});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("classes") == 8);
  CHECK(j.at("roots") == 4);
  CHECK(j.at("subclasses") == 4);
  CHECK(j.at("effective_classes") == 5);
  CHECK(j.at("retained_subclasses") == 1);
  CHECK(j.at("roles") == 7);
  CHECK(j.at("members") == 14);
}

TEST_CASE("stats csv format") {
  EnvGuard guard;
  auto r = run_cli({"stats", "--vn-path", mini_path(), "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("classes,8\n") != std::string::npos);
  CHECK(r.out.find("members,14\n") != std::string::npos);
}

TEST_CASE("VN_PATH environment variable backs --vn-path") {
  EnvGuard guard;
  ::setenv("VN_PATH", mini_path().c_str(), 1);
  auto r = run_cli({"stats"});
  CHECK(r.code == 0);
  CHECK(r.out.find("\"classes\": 8") != std::string::npos);
}

TEST_CASE("missing --vn-path is an invalid-flags error") {
  EnvGuard guard;
  auto r = run_cli({"stats"});
  CHECK(r.code == 2);
  CHECK_FALSE(r.err.empty());
}

TEST_CASE("flag validation failures exit with 2") {
  EnvGuard guard;
  CHECK(run_cli({"deps", "--vn-path", mini_path(), "--threshold", "101"}).code == 2);
  CHECK(run_cli({"deps", "--vn-path", mini_path(), "--threshold", "0"}).code == 2);
  CHECK(run_cli({"deps", "--vn-path", mini_path(), "--threshold", "abc"}).code == 2);
  CHECK(run_cli({"deps", "--vn-path", mini_path(), "--level", "word"}).code == 2);
  CHECK(run_cli({"deps", "--vn-path", mini_path(), "--format", "yaml"}).code == 2);
  CHECK(run_cli({"classes", "--vn-path", mini_path(), "--format", "json"}).code == 2);
  CHECK(run_cli({"bogus-subcommand"}).code == 2);
  CHECK(run_cli({}).code == 2);
}

TEST_CASE("IO failures exit with 1") {
  EnvGuard guard;
  auto r = run_cli({"stats", "--vn-path", "/no/such/dir"});
  CHECK(r.code == 1);
  CHECK(r.err.find("missing_path") != std::string::npos);

  auto w = run_cli({"stats", "--vn-path", mini_path(), "--output", "/no/such/dir/out.json"});
  CHECK(w.code == 1);
}

TEST_CASE("help exits with 0") {
  EnvGuard guard;
  auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("stats") != std::string::npos);
}

TEST_CASE("classes emits the effective-class TSV") {
  EnvGuard guard;
  auto r = run_cli({"classes", "--vn-path", mini_path()});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("break-45.1\t4\tAgent,Instrument,Patient,Result\n", 0) == 0);
  CHECK(r.out.find("give-13.1-1\t2\tAgent,Asset,Recipient,Theme\n") != std::string::npos);
}

TEST_CASE("matrix emits one csv row per verb entry") {
  EnvGuard guard;
  auto r = run_cli({"matrix", "--vn-path", mini_path()});
  REQUIRE(r.code == 0);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 15);  // header + 14 verb rows
  CHECK(r.out.rfind("Agent,Asset,Instrument,Patient,Recipient,Result,Theme\n", 0) == 0);

  auto c = run_cli({"matrix", "--vn-path", mini_path(), "--level", "class"});
  std::size_t class_lines = 0;
  for (char ch : c.out) class_lines += ch == '\n';
  CHECK(class_lines == 6);  // header + 5 class rows
}

TEST_CASE("deps emits the dependency report in all formats") {
  EnvGuard guard;
  auto json_run = run_cli({"deps", "--vn-path", mini_path(), "--threshold", "55"});
  REQUIRE(json_run.code == 0);
  auto j = nlohmann::json::parse(json_run.out);
  CHECK(j.at("level") == "verb");
  std::size_t mutual = 0;
  for (const auto& p : j.at("pairs")) mutual += p.at("kind") == "mutual";
  CHECK(mutual == 6);

  auto class_run = run_cli({"deps", "--vn-path", mini_path(), "--level", "class"});
  auto cj = nlohmann::json::parse(class_run.out);
  std::size_t class_mutual = 0;
  for (const auto& p : cj.at("pairs")) class_mutual += p.at("kind") == "mutual";
  CHECK(class_mutual == 2);

  auto csv_run = run_cli({"deps", "--vn-path", mini_path(), "--format", "csv"});
  CHECK(csv_run.out.rfind(",Agent,", 0) == 0);

  auto dot_run = run_cli({"deps", "--vn-path", mini_path(), "--format", "dot"});
  CHECK(dot_run.out.find("\"Agent\" -> \"Instrument\" [dir=none") != std::string::npos);
}

TEST_CASE("mutual lists only mutual pairs") {
  EnvGuard guard;
  auto r = run_cli({"mutual", "--vn-path", mini_path(), "--format", "csv"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("a,b,p_ab,p_ba\n", 0) == 0);
  CHECK(r.out.find("Instrument,Patient,100.0,100.0\n") != std::string::npos);
  std::size_t lines = 0;
  for (char c : r.out) lines += c == '\n';
  CHECK(lines == 7);  // header + 6 mutual pairs

  auto j = nlohmann::json::parse(run_cli({"mutual", "--vn-path", mini_path()}).out);
  REQUIRE(j.size() == 6);
  CHECK(j[0].at("a") == "Agent");
}

TEST_CASE("demo-events emits the sample templates") {
  EnvGuard guard;
  auto r = run_cli({"demo-events"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.size() == 4);
  CHECK(j[0].at("name") == "kill");
  CHECK(j[0].at("event").at("side") == "result");
  CHECK(j[3].at("name") == "hit");
  CHECK(j[3].at("event").at("side") == "manner");
}

TEST_CASE("--output writes the same bytes as standard output") {
  EnvGuard guard;
  testutil::TempDir dir("cliout");
  std::string file = (dir.path() / "report.json").string();

  auto direct = run_cli({"deps", "--vn-path", mini_path()});
  auto to_file = run_cli({"deps", "--vn-path", mini_path(), "--output", file});
  REQUIRE(to_file.code == 0);
  CHECK(to_file.out.empty());

  std::ifstream in(file, std::ios::binary);
  std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  CHECK(written == direct.out);
}

TEST_CASE("repeated runs are byte-identical") {
  EnvGuard guard;
  for (const char* format : {"json", "csv", "dot"}) {
    auto first = run_cli({"deps", "--vn-path", mini_path(), "--format", format});
    auto second = run_cli({"deps", "--vn-path", mini_path(), "--format", format});
    CHECK(first.out == second.out);
  }
}

TEST_CASE("defaults match the fully spelled invocation") {
  EnvGuard guard;
  auto spelled = run_cli({"deps", "--vn-path", mini_path(), "--threshold", "55", "--level",
                          "verb", "--format", "json"});
  auto defaults = run_cli({"deps", "--vn-path", mini_path()});
  CHECK(spelled.code == 0);
  CHECK(spelled.out == defaults.out);
}
