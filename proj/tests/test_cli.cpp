#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + HOROLIB_CLI + std::string(" ") + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

json run_json(const std::string& args, const std::string& env = "") {
  Run r = run(args, env);
  INFO(args);
  REQUIRE(r.code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_CASE("classify") {
  json a3 = run_json("classify --type A --rank 3");
  CHECK(a3["reflexive_commutative"] == json::parse("[[2]]"));
  CHECK(a3["heisenberg"]["theta"] == json::parse("[1,3]"));
  CHECK(a3["heisenberg"]["sum_check"] == 2);

  json g2 = run_json("classify --type G --rank 2");
  CHECK(g2["reflexive_commutative"].empty());
  CHECK(g2["heisenberg"]["theta"] == json::parse("[2]"));

  json a1 = run_json("classify --type A --rank 1");
  CHECK(a1["heisenberg"]["theta"].is_null());
  CHECK(a1["heisenberg"]["reason"].get<std::string>().find("largest root is also a simple root") != std::string::npos);

  json th = run_json("classify --type A --rank 3 --theta 1");
  CHECK(th["theta"]["reflexive"] == false);

  CHECK(run("classify --type Q --rank 3").code == 2);
  CHECK(run("classify --type A --rank 0").code == 2);
  CHECK(run("classify --type A").code == 2);
}

TEST_CASE("grade") {
  json g = run_json("grade --type C --rank 3 --theta 1");
  CHECK(g["depth"] == 2);
  CHECK(g["heisenberg"] == true);
  CHECK(g["levels"]["1"]["dim"] == 4);
  CHECK(g["levels"]["2"]["dim"] == 1);
  CHECK(run("grade --type C --rank 3 --theta 4").code == 2);
}

TEST_CASE("eval") {
  std::string sl3 = "eval --ctx '{\"algebra\":\"sl3\",\"theta\":[1,2]}'";
  CHECK(run_json(sl3 + " --op chi --at '{\"torus\":{\"h\":\"h_theta\",\"t\":\"2\"}}'")["value"] == "4/1");
  CHECK(run_json(sl3 + " --op F --at '{}'")["value"] == "0/1");
  CHECK(run_json(sl3 + " --op phi --at '\"identity\"'")["value"] == "1/1");
  CHECK(run_json(sl3 + " --op phi --at '\"w0\"'")["value"] == "0/1");
  std::string sl4 = "eval --ctx '{\"algebra\":\"sl4\",\"theta\":[2]}'";
  CHECK(run_json(sl4 + " --op G --at '{}' --y '{}'")["value"] == "1/1");
  json m = run_json(sl4 + " --op M --at '{\"torus\":{\"h\":\"h_theta\",\"t\":\"3\"}}'");
  CHECK(m["value"].size() == 4);
  CHECK(m["value"][0][0] == "3/1");
  CHECK(run(sl4 + " --op F --at '{\"E[9,9]\":\"1\"}'").code == 2);
  CHECK(run(sl4 + " --op F --at '{\"E[2,1]\":\"1\"}'").code == 2);
  CHECK(run(sl4 + " --op F --at '{\"E[1,3]\":\"x\"}'").code == 2);
  CHECK(run(sl4 + " --op nope --at '{}'").code == 2);
  CHECK(run("eval --ctx '{\"algebra\":\"sl4\",\"theta\":[1]}' --op F --at '{}'").code == 1);
}

TEST_CASE("verify exit codes and seeds") {
  json r = run_json("verify --suite rootsys");
  CHECK(r["seed"] == 42);
  CHECK(r["report"]["passed"] == true);
  CHECK(run_json("verify --suite rootsys", "HOROLIB_SEED=7")["seed"] == 7);
  CHECK(run_json("verify --suite rootsys --seed 9", "HOROLIB_SEED=7")["seed"] == 9);
  CHECK(run("verify --suite rootsys").out == run("verify --suite rootsys").out);

  json inv = run_json("verify --suite invariants --scope sl4 --samples 10");
  bool closed_form = false;
  for (const auto& c : inv["report"]["checks"])
    if (c["name"].get<std::string>().find("closed_form/F_closed_form") != std::string::npos) closed_form = c["passed"];
  CHECK(closed_form);

  CHECK(run("verify --suite structure --scope sl3 --inject-structure-fault 1,2,3").code == 1);
  CHECK(run("verify --suite structure --scope sl3 --inject-cartan-fault 1,2").code == 1);
  CHECK(run("verify --suite structure --scope sl3 --inject-cartan-fault 1").code == 2);
  CHECK(run("verify --suite bogus").code == 2);
  CHECK(run("verify --suite structure --scope sl1").code == 1);
}

TEST_CASE("tables") {
  json t = run_json("tables");
  CHECK(t["passed"] == true);
  bool e7 = false;
  for (const auto& row : t["rows"])
    if (row["table"] == "reflexive_commutative" && row["label"] == "E7") e7 = row["computed"] == json::parse("[[7]]");
  CHECK(e7);
}

TEST_CASE("lab") {
  std::string path = "test_cli_lab_config.json";
  std::ofstream(path) << R"({"algebra":"sl3","theta":[1,2],"height":1,"words":10,"seed":3})";
  json out = run_json("lab --config " + path);
  CHECK(out["seed"] == 3);
  CHECK(out["F_on_lattice"]["within_cap"] == true);
  CHECK(run_json("lab --config " + path, "HOROLIB_SEED=11")["seed"] == 11);
  CHECK(run("lab --config does_not_exist.json").code == 2);
  std::remove(path.c_str());
}
