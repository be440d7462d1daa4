#include <sstream>

#include "doctest.h"
#include "sexp_reader.hpp"
#include "stagelet/cli.hpp"
#include "stagelet/examples.hpp"

using namespace stagelet;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool one_trailing_newline(const std::string& s) {
  return !s.empty() && s.back() == '\n' && (s.size() < 2 || s[s.size() - 2] != '\n');
}

}  // namespace

TEST_CASE("list") {
  Result r = invoke({"list"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.err.empty());
  std::string want;
  for (const auto& e : registry()) want += e.name + " " + std::string(to_string(e.kind)) + "\n";
  CHECK(r.out == want);
  CHECK(r.out.find("ct1 generator\n") != std::string::npos);
  CHECK(r.out.find("clgib5-extruded generator-extrudes\n") != std::string::npos);
}

TEST_CASE("show") {
  Result r = invoke({"show", "ct1"});
  CHECK(r.code == cli::exit_ok);
  CHECK(r.out == "(1 + 2)\n");
  CHECK(r.err.empty());
  CHECK(invoke({"show", "ct1", "--format", "sexp"}).out == "(add (int 1) (int 2))\n");
  CHECK(invoke({"show", "--format", "sexp", "csq"}).out == "(lam x (mul (var x) (var x)))\n");
  CHECK(invoke({"show", "ct1", "--format", "sexp", "--format", "pretty"}).out == "(1 + 2)\n");
  CHECK(invoke({"show", "gib5"}).code == cli::exit_ok);
}

TEST_CASE("run") {
  CHECK(invoke({"run", "cgib5", "1", "1"}).out == "8\n");
  CHECK(invoke({"run", "cgib5"}).out == "<fun>\n");
  CHECK(invoke({"run", "csq", "-4"}).out == "16\n");
  CHECK(invoke({"run", "cack2", "10"}).out == "23\n");
  CHECK(invoke({"run", "ack2", "4"}).out == "11\n");
  CHECK(invoke({"run", "shared-sums"}).out == "14\n");
}

TEST_CASE("check") {
  Result closed = invoke({"check", "clgib5"});
  CHECK(closed.code == cli::exit_ok);
  CHECK(closed.out == "closed\n");
  Result extruded = invoke({"check", "clgib5-extruded"});
  CHECK(extruded.code == cli::exit_free_names);
  CHECK(extruded.out.rfind("free: ", 0) == 0);
  CHECK(extruded.out.size() > 7);
}

TEST_CASE("every successful command ends with one newline and writes no errors") {
  std::vector<std::vector<std::string>> commands{{"list"}};
  for (const auto& e : registry()) {
    commands.push_back({"show", e.name});
    commands.push_back({"show", e.name, "--format", "sexp"});
    if (e.kind != ExampleKind::GeneratorExpectExtrusion) {
      commands.push_back({"check", e.name});
      std::vector<std::string> run{"run", e.name};
      for (std::size_t i = 0; i < e.arity; ++i) run.push_back("2");
      commands.push_back(run);
    }
  }
  for (const auto& c : commands) {
    Result r = invoke(c);
    const std::string label = c[0] + " " + (c.size() > 1 ? c[1] : "");
    CHECK_MESSAGE(r.code == cli::exit_ok, label);
    CHECK(one_trailing_newline(r.out));
    CHECK(r.err.empty());
  }
}

TEST_CASE("sexp output round-trips") {
  for (const auto& e : registry()) {
    Result r = invoke({"show", e.name, "--format", "sexp"});
    REQUIRE(r.code == cli::exit_ok);
    std::string text = r.out.substr(0, r.out.size() - 1);
    CHECK_MESSAGE(sexp::write(sexp::Reader(text).read_all()) == text, e.name);
  }
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).code == cli::exit_usage);
  CHECK(invoke({"frobnicate"}).code == cli::exit_usage);
  CHECK(invoke({"show"}).code == cli::exit_usage);
  CHECK(invoke({"show", "ct1", "--format", "xml"}).code == cli::exit_usage);
  CHECK(invoke({"run", "csq", "abc"}).code == cli::exit_usage);
  CHECK(invoke({"check", "ct1", "--canon-limit", "x"}).code == cli::exit_usage);

  Result unknown = invoke({"show", "nosuch"});
  CHECK(unknown.code == cli::exit_unknown_example);
  CHECK(unknown.out.empty());
  CHECK(unknown.err.find("nosuch") != std::string::npos);

  Result canon = invoke({"--canon-limit", "1", "show", "cack2"});
  CHECK(canon.code == cli::exit_generation_failed);
  CHECK(canon.err.find("locus") != std::string::npos);
  CHECK(invoke({"show", "cack2", "--canon-limit", "1", "--canon-limit", "100"}).code == cli::exit_ok);

  Result steps = invoke({"run", "cack2", "10", "--step-limit", "5"});
  CHECK(steps.code == cli::exit_generation_failed);
  CHECK_FALSE(steps.err.empty());

  CHECK(invoke({"run", "clgib5-extruded", "1", "1"}).code == cli::exit_generation_failed);
  CHECK(invoke({"run", "csq", "1", "2"}).code == cli::exit_generation_failed);

  Result help = invoke({"--help"});
  CHECK(help.code == cli::exit_ok);
  CHECK(help.out.find("show") != std::string::npos);
}
