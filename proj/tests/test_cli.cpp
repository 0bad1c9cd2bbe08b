#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "itlog/cli.hpp"
#include "itlog/json_io.hpp"
#include "itlog/series.hpp"

using namespace itlog;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("expand") {
  const Run r = run({"expand", "--level", "1", "--order", "2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "l(1) + y*l(0)^-1 - 1/2*y^2*l(0)^-2\n");
  CHECK(run({"expand", "--level", "0", "--order", "0"}).out == "l(0)\n");
  CHECK(run({"--format", "text", "expand", "--level", "-1", "--order", "1"}).out ==
        "l(-1) + y*l(-1)\n");
}

TEST_CASE("expand json payload re-parses to the same series") {
  const Run r = run({"expand", "--level", "-2", "--order", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["command"] == "expand");
  CHECK(doc["ok"] == true);
  CHECK(doc["parameters"]["level"] == -2);
  CHECK(series_from_json(doc["result"]) == translate(Element::level(-2), 4));
}

TEST_CASE("derive") {
  CHECK(run({"derive", "--expr", "l(0)*l(1)"}).out == "1 + l(1)\n");
  CHECK(run({"derive", "--expr", "l(1)", "--times", "2"}).out == "-l(0)^-2\n");
  const Run bad = run({"derive", "--expr", "l(1) +"});
  CHECK(bad.code == kExitError);
  CHECK(bad.err.find("offset 6") != std::string::npos);
}

TEST_CASE("verify recursion") {
  const Run r = run({"verify", "recursion", "--levels", "-5..5", "--order", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("11/11 passed") != std::string::npos);

  const Run e = run({"verify", "recursion", "--levels", "-2..2", "--order", "3", "--exp-form",
                     "--format", "json"});
  CHECK(e.code == 0);
  const auto doc = nlohmann::json::parse(e.out);
  CHECK(doc["verdicts"].size() == 5);
  CHECK(doc["verdicts"][0]["identity"] == "exp_recursion");
  CHECK(doc["verdicts"][0]["verdict"] == "pass");
}

TEST_CASE("verify limits, translated, commute") {
  const Run limits = run({"verify", "limits", "--levels", "-1..1", "--max-m", "3"});
  CHECK(limits.code == 0);
  CHECK(limits.out.find("9/9 passed") != std::string::npos);
  CHECK(run({"verify", "translated", "--levels", "-2..2", "--order", "3"}).code == 0);
  const Run commute = run({"verify", "commute", "--count", "20", "--seed", "5"});
  CHECK(commute.code == 0);
  CHECK(commute.out.find("20/20 passed") != std::string::npos);
}

TEST_CASE("reduce and limit") {
  CHECK(run({"reduce", "--rform", "r*l(0)^r + r*l(0)^r"}).out == "2*r*l(0)^r\n");
  CHECK(run({"limit", "--rform", "l(1)^(r-1)*l(0)^-1"}).out == "l(0)^-1*l(1)^-1\n");
  CHECK(run({"limit", "--rform", "r*l(2)^r"}).out == "0\n");
}

TEST_CASE("crosscheck") {
  const Run ok = run({"crosscheck", "--level", "1", "--order", "6", "--x0", "20", "--y0", "0.001",
                      "--tol", "1e-12"});
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("PASS crosscheck_translate", 0) == 0);
  const Run fail = run({"crosscheck", "--level", "1", "--order", "1", "--x0", "20", "--y0", "5"});
  CHECK(fail.code == kExitVerdictFailed);
  const Run domain = run({"crosscheck", "--level", "3", "--order", "2", "--x0", "2"});
  CHECK(domain.code == kExitError);
  CHECK_FALSE(domain.err.empty());
}

TEST_CASE("usage errors exit nonzero") {
  CHECK(run({}).code == kExitError);
  CHECK(run({"expand", "--level", "1"}).code == kExitError);
  CHECK(run({"expand", "--level", "1", "--order", "2", "--bogus"}).code == kExitError);
  CHECK(run({"verify", "recursion", "--levels", "3..1", "--order", "2"}).code == kExitError);
  CHECK(run({"verify", "limits", "--levels", "0..1", "--max-m", "0"}).code == kExitError);
  CHECK(run({"expand", "--level", "1", "--order", "2", "--format", "xml"}).code == kExitError);
  CHECK(run({"--help"}).code == 0);
}
