#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "precedent/trace.hpp"
#include "support.hpp"

using precedent::testing::fixture_path;

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args, const std::string& env = "PRECEDENT_COLOR=0") {
  const std::string cmd = env + " " + PRECEDENT_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fct(const char* name) { return fixture_path(name); }

}  // namespace

TEST_CASE("validate") {
  auto ok = run("validate " + fct("family.fct"));
  CHECK(ok.code == 0);
  CHECK(ok.out.find("OK\n") != std::string::npos);

  auto cyc = run("validate " + fct("invalid/cycle.fct"));
  CHECK(cyc.code == 1);
  CHECK(cyc.out.find("error [cycle]") != std::string::npos);
  CHECK(cyc.out.find("a -> b -> a") != std::string::npos);

  auto inc = run("validate " + fct("invalid/incomplete.fct"));
  CHECK(inc.code == 1);
  CHECK(inc.out.find("case 'M' not complete: missing F3") != std::string::npos);

  CHECK(run("validate /nonexistent/file.fct").code == 2);
  CHECK(run("validate").code == 2);
}

TEST_CASE("force with trace") {
  auto r = run("force " + fct("family.fct") + " --case-base M --query E --goal pi --model hrm --trace");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("NOT FORCED\n", 0) == 0);
  CHECK(r.out.find("E ⊨ F1: fails") != std::string::npos);

  auto dim = run("force " + fct("family.dim") + " --case-base M --query Eprime --goal \"1<=pi\" --model dhrm");
  CHECK(dim.code == 0);
  CHECK(dim.out == "FORCED\n");

  auto r3 = run("force " + fct("family.dim") + " --case-base M --query E --goal \"3<=R\" --model dhrm --trace");
  CHECK(r3.out.rfind("NOT FORCED\n", 0) == 0);
  CHECK(r3.out.find("sub F6: requires M ⊨ M(F6) ⪯ E(F6): fails") != std::string::npos);

  CHECK(run("force " + fct("family.fct") + " --case-base Mdprime --query Edprime --goal pi --model rm").out ==
        "NOT FORCED\n");
  CHECK(run("force " + fct("family.fct") + " --case-base Mdprime --query EdprimeP --goal pi --model hrm").out ==
        "FORCED\n");
}

TEST_CASE("force errors") {
  const auto base = "force " + fct("family.fct") + " --case-base M ";
  CHECK(run(base + "--query Nope --goal pi --model hrm").code == 2);
  CHECK(run(base + "--query E --goal Zed --model hrm").code == 2);
  CHECK(run(base + "--query E --goal pi --model dhrm").code == 2);
  CHECK(run(base + "--query E --goal Q --model rm").code == 2);
  CHECK(run(base + "--query E --goal pi --model xyz").code == 2);
  CHECK(run("force " + fct("family.fct") + " --case-base Nope --query E --goal pi --model hrm").code == 2);
  CHECK(run("force " + fct("invalid/incomplete.fct") + " --query M --goal pi --model hrm").code == 1);
  // The flat dimension model needs a complete query.
  CHECK(run("force " + fct("family.dim") + " --query E --goal pi --model drm").code == 2);
}

TEST_CASE("json output parses back into a trace") {
  auto r = run("force " + fct("family.fct") + " --case-base M --query E --goal pi --model hrm --json");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("forced") == false);
  const auto trace = precedent::trace_from_json(j.at("trace"));
  CHECK(trace.goal == "pi");
  CHECK(precedent::to_json(trace) == j.at("trace"));
}

TEST_CASE("consistency") {
  auto ok = run("consistency " + fct("family.fct") + " --case-base M");
  CHECK(ok.code == 0);
  CHECK(ok.out == "consistent (64 situations checked)\n");

  auto bad = run("consistency " + fct("inconsistent.fct"));
  CHECK(bad.code == 0);
  CHECK(bad.out.rfind("inconsistent", 0) == 0);
  CHECK(bad.out.find("witness: {F1, F2} apply") != std::string::npos);

  CHECK(run("consistency " + fct("family.fct") + " --cap 3").code == 2);
}

TEST_CASE("check") {
  CHECK(run("check " + fct("family.fct") + " --property oracle").out.rfind("PASS oracle", 0) == 0);
  CHECK(run("check " + fct("family.dim") + " --property oracle").out.rfind("PASS oracle", 0) == 0);
  CHECK(run("check " + fct("flat.fct") + " --property flat-reduction").out.rfind("PASS flat-reduction", 0) == 0);
  CHECK(run("check " + fct("flat.fct") + " --property encoding").out.rfind("PASS encoding", 0) == 0);
  CHECK(run("check " + fct("flat.fct") + " --property nonsense").code == 2);
}

TEST_CASE("output is deterministic") {
  for (const std::string& args :
       {"check " + fct("family.fct") + " --property oracle --seed 99",
        "check " + fct("flat.fct") + " --property flat-reduction --seed 5 --samples 300",
        "force " + fct("family.fct") + " --case-base Mprime --query Eprime --goal pi --model hrm --trace",
        "force " + fct("family.dim") + " --case-base M --query Eprime --goal pi --model dhrm --json",
        "consistency " + fct("inconsistent.fct")}) {
    CAPTURE(args);
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("color switch") {
  const auto args = "force " + fct("family.fct") + " --case-base M --query EP --goal pi --model hrm";
  CHECK(run(args, "PRECEDENT_COLOR=1").out.find("\x1b[") != std::string::npos);
  CHECK(run(args, "PRECEDENT_COLOR=0").out.find("\x1b[") == std::string::npos);
  // Not a terminal and no override: plain.
  CHECK(run(args, "env -u PRECEDENT_COLOR").out.find("\x1b[") == std::string::npos);
}
