#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hopftwist/cli.hpp"
#include "hopftwist/json_io.hpp"
#include "test_util.hpp"

namespace fs = std::filesystem;
using hopftwist::run_cli;

namespace {

std::string data(const std::string& name) { return (fs::path(HOPFTWIST_DATA_DIR) / name).string(); }

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

// Runs the installed binary through the shell; returns exit status and stdout.
Run binary(const std::string& args) {
  const std::string cmd = std::string(HOPFTWIST_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "hopftwist_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("hopf subcommands") {
  CHECK(cli({"hopf", "validate", data("mu5.json")}).code == 0);
  const Run bad = cli({"hopf", "validate", data("mu5_corrupted.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("antipode") != std::string::npos);
  CHECK(cli({"hopf", "dual", data("mu5.json")}).code == 0);
  CHECK(cli({"hopf", "integrals", data("mu5.json")}).code == 0);
  CHECK(cli({"hopf", "check-h1", data("mu5.json")}).code == 0);
  CHECK(cli({"hopf", "check-h2", data("mu5.json"), "--sqrt", "sqrt5"}).code == 0);
  CHECK(cli({"hopf", "check-h2", data("mu5.json"), "--sqrt", "1"}).code == 1);
  CHECK(cli({"hopf", "validate", data("map_c5_q.json")}).code == 0);
}

TEST_CASE("dual written to a file round-trips") {
  const fs::path out = temp_file("mu5_dual.json");
  REQUIRE(cli({"hopf", "dual", data("mu5.json"), "--out", out.string()}).code == 0);
  CHECK(cli({"hopf", "validate", out.string()}).code == 0);
  hopftwist::json_io::Loader l;
  CHECK(hopftwist::hopf_equal(*l.hopf(out), hopftwist::dual(*l.hopf(data("mu5.json")))));
}

TEST_CASE("comodule and form subcommands") {
  CHECK(cli({"comodule", "fixed-points", data("v_comodule.json")}).code == 0);
  CHECK(cli({"comodule", "to-module", data("v_comodule.json")}).code == 0);
  CHECK(cli({"comodule", "tensor", data("v_comodule.json"), data("v_comodule.json")}).code == 0);
  CHECK(cli({"form", "invariants", data("form_q_hyperbolic.json")}).code == 0);
  CHECK(cli({"form", "isometric", data("form_q_sum2.json"), data("form_q_double.json")}).code == 0);
  CHECK(cli({"form", "isometric", data("form_q_sum2.json"), data("form_q_hyperbolic.json")}).code == 1);
  CHECK(cli({"form", "isometric", data("form_q_sum2.json"), data("form_q_double.json"), "--witness",
             data("form_q_witness.json")})
            .code == 0);
  CHECK(cli({"form", "isometric", data("form_q_hyperbolic.json"), data("form_q_double.json"), "--witness",
             data("form_q_witness.json")})
            .code == 1);
}

TEST_CASE("twist pipeline") {
  const fs::path out = temp_file("twist_y2.json");
  const Run t = cli({"twist", "--hopf", data("mu5.json"), "--phs", data("by2.json"), "--bundle", data("v.json"),
                     "--sqrt", "sqrt5", "--out", out.string()});
  CHECK(t.code == 0);
  CHECK(cli({"form", "isometric", out.string(), data("v.json"), "--witness", data("v_witness_y2.json")}).code == 0);
  // the corrupted form is not equivariant
  CHECK(cli({"twist", "--hopf", data("mu5.json"), "--phs", data("by2.json"), "--bundle", data("v_corrupted.json"),
             "--sqrt", "sqrt5"})
            .code == 1);
}

TEST_CASE("examples subcommands") {
  const Run list = cli({"examples", "list"});
  CHECK(list.code == 0);
  for (const auto& n : hopftwist::example_names()) CHECK(list.out.find(n) != std::string::npos);
  CHECK(cli({"examples", "run", "kummer-twist", "--y", "3"}).code == 0);
  CHECK(cli({"examples", "run", "kummer-twist", "--params", "y=-1"}).code == 0);
  CHECK(cli({"examples", "run", "kummer-twist", "--y", "5"}).code == 1);
  CHECK(cli({"examples", "run", "dihedral-twist", "--delta_sq", "-1"}).code == 0);
  CHECK(cli({"examples", "run", "no-such-example"}).code == 2);
}

TEST_CASE("input errors exit with 2") {
  CHECK(cli({}).code == 2);
  CHECK(cli({"hopf"}).code == 2);
  CHECK(cli({"hopf", "validate", data("does_not_exist.json")}).code == 2);
  CHECK(cli({"--report", "xml", "examples", "list"}).code == 2);
  CHECK(cli({"hopf", "check-h2", data("mu5.json"), "--sqrt", "1 +"}).code == 2);
  CHECK(cli({"examples", "run", "kummer-twist", "--p", "five"}).code == 2);
  const fs::path junk = temp_file("junk.json");
  std::ofstream(junk) << "{\"rank\": 2";
  CHECK(cli({"hopf", "validate", junk.string()}).code == 2);
}

TEST_CASE("report formats") {
  const Run j = cli({"--report", "json", "examples", "run", "kummer-twist"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("ok").get<bool>());
  CHECK(doc.at("command").get<std::string>() == "kummer-twist");
  CHECK_FALSE(doc.at("checks").empty());
  const Run x = cli({"--report", "junit", "hopf", "validate", data("mu5_corrupted.json")});
  CHECK(x.code == 1);
  CHECK(x.out.find("<testsuite") != std::string::npos);
  CHECK(x.out.find("<failure") != std::string::npos);
}

TEST_CASE("binary exit codes and determinism") {
  const Run a = binary("--report json examples run-all");
  const Run b = binary("--report json examples run-all");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK_FALSE(a.out.empty());
  CHECK(binary("hopf validate " + data("mu5_corrupted.json")).code == 1);
  CHECK(binary("hopf validate " + data("does_not_exist.json")).code == 2);
  const Run t1 = binary("twist --hopf " + data("mu5.json") + " --phs " + data("by2.json") + " --bundle " +
                        data("v.json") + " --sqrt sqrt5 --report json");
  const Run t2 = binary("twist --hopf " + data("mu5.json") + " --phs " + data("by2.json") + " --bundle " +
                        data("v.json") + " --sqrt sqrt5 --report json");
  CHECK(t1.code == 0);
  CHECK(t1.out == t2.out);
}
