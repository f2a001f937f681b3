#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "tiltstab/cli.hpp"
#include "tiltstab/serialize.hpp"

using tiltstab::cli::run;
using tiltstab::io::Json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
  args.push_back("--json");
  const auto o = call(args);
  REQUIRE(o.code == 0);
  return Json::parse(o.out);
}

}  // namespace

TEST_CASE("counterexample certificate on the command line") {
  const auto o = call({"counterexample", "--s", "2", "--m", "2", "--json"});
  CHECK(o.code == 0);
  const auto j = Json::parse(o.out);
  CHECK(j["radius_bound"] == "9/119");
  CHECK(j["projected"] == Json::array({"0", "9/4", "9/4", "3/2"}));
  CHECK(j["twisted_beta1"] == Json::array({"0", "9/4", "0", "3/8"}));
  CHECK(j["rez_thresholds"]["omega_sqrt3"] == "1/3");
  CHECK(j["rez_thresholds"]["displayed_formula"] == "1");
  CHECK(j["window"]["nonempty"] == true);
  CHECK(j["certified"] == true);
}

TEST_CASE("verify exit codes") {
  const auto ok = call({"verify", "--model", "P2xC", "--case", "hom_integral", "--m", "2"});
  CHECK(ok.code == 0);
  const auto j = call_json({"verify", "--model", "P1xP1xC", "--case", "hom_rational", "--p", "1", "--q", "3", "--m", "2"});
  CHECK(j["passed"] == true);
  CHECK(j["failures"].empty());
  CHECK(j["residues_checked"].get<int>() > 0);
  // v = 2 with hypotheses relaxed: verification failure, exit 1
  const auto bad = call({"verify", "--model", "P2xC", "--case", "hom_irrational", "--q", "2", "--p", "1", "--v", "2",
                         "--no-enforce"});
  CHECK(bad.code == 1);
  // enforced hypothesis: usage/domain error naming the condition
  const auto pre = call({"verify", "--model", "P2xC", "--case", "hom_irrational", "--q", "2", "--v", "2"});
  CHECK(pre.code == 2);
  CHECK(pre.err.find("v > 2") != std::string::npos);
}

TEST_CASE("usage and domain errors exit 2") {
  CHECK(call({"slope", "--model", "P2xC", "--H", "h:1,f:1", "--char", "0,0,0,0"}).code == 2);
  CHECK(call({"chern", "--model", "P9", "--line", "h"}).code == 2);
  const auto na = call({"chern", "--model", "P2xC", "--H", "h-f", "--line", "h"});
  CHECK(na.code == 2);
  CHECK(na.err.find("not ample") != std::string::npos);
  CHECK(call({"nu", "--char", "1,x,0,0", "--alpha", "1", "--beta", "0"}).code == 2);
  CHECK(call({"nu", "--char", "1,0,0,0", "--alpha", "0", "--beta", "0"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({}).code == 2);
  CHECK(call({"verify", "--case", "nope"}).code == 2);
  CHECK(call({"reduce", "--char", "1,0,0,0", "--format", "svg"}).code == 2);
}

TEST_CASE("nu slope") {
  const auto j = call_json({"nu", "--model", "P2xC", "--H", "h+f", "--char", "0,9/4,9/4,3/2", "--alpha", "1/2", "--beta", "1"});
  CHECK(j["value"] == "0");
  CHECK(j["infinite"] == false);
  const auto inf = call_json({"nu", "--char", "1,1,0,0", "--alpha", "1", "--beta", "1"});
  CHECK(inf["infinite"] == true);
}

TEST_CASE("other subcommands") {
  auto j = call_json({"chern", "--model", "P2xC", "--line", "h+f"});
  CHECK(j["projected"] == Json::array({"3", "3", "3/2", "1/2"}));
  CHECK(j["delta_bar"] == "0");

  j = call_json({"reduce", "--char", "1,0,-1,0"});
  CHECK(j["verdict"] == true);
  CHECK(j["ch3_at_beta_bar"] == Json({{"a", "0"}, {"b", "-2/3"}, {"d", 2}}));

  j = call_json({"thomsen", "--Y", "P2", "--D", "0", "--m", "2"});
  CHECK(j["rank"] == 4);
  CHECK(j["summands"].size() == 2);

  j = call_json({"euler-poly", "--model", "P2xC", "--line", "h+f"});
  CHECK(j["polynomial"] == Json({{"2", "1"}, {"4", "3/2"}, {"6", "1/2"}}));
  CHECK(j["euler_characteristic"] == "3");

  j = call_json({"dirichlet", "--x", "sqrt(2)", "--n", "4"});
  CHECK(j["convergents"].size() == 4);
  CHECK(j["convergents"][3] == Json::array({"17", "12"}));
  CHECK(j["dirichlet_bound_holds"] == true);

  j = call_json({"dirichlet", "--char", "1,0,-1,0", "--n", "5"});
  CHECK(j["x"] == Json({{"a", "0"}, {"b", "-1"}, {"d", 2}}));

  j = call_json({"walls", "--char", "1,0,0,0", "--with", "0,1,1,0"});
  CHECK(j["wall"]["center"] == "1");
  CHECK(j["wall"]["radius"] == "1");

  j = call_json({"walls", "--char", "1,0,0,0", "--bound", "1"});
  CHECK(j["count"].get<int>() >= 1);

  j = call_json({"charge", "--model", "CY", "--s", "2", "--char", "0,-9/4,-9/4,-3/2", "--alpha", "1/10", "--beta", "1"});
  CHECK(j["re"] == "273/800");
  CHECK(j["re_displayed_formula"] == "297/800");

  j = call_json({"scan", "--model", "P2xC", "--multiples", "-1:1", "--betas", "-1:1:1/2"});
  CHECK(j["characters"].size() == 3);
  for (const auto& c : j["characters"]) CHECK(c["overall"] == "saturated");

  j = call_json({"bmt", "--model", "CY", "--s", "2", "--plane", "--beta", "1", "--alpha", "1/2"});
  CHECK(j["inequality_holds"] == false);
  CHECK(j["nu_zero_locus"]["kind"] == "independent");
}

TEST_CASE("json output is byte identical across runs") {
  const std::vector<std::string> args = {"verify", "--model", "P1xP1xC", "--case", "ext2_rational", "--p", "2",
                                         "--q", "3", "--m", "2", "--json"};
  CHECK(call(args).out == call(args).out);
  const std::vector<std::string> w = {"walls", "--char", "2,1,-1,0", "--bound", "2", "--den", "2", "--json"};
  CHECK(call(w).out == call(w).out);
}

TEST_CASE("config file with flag precedence") {
  const std::string path = "tiltstab_test_config.json";
  {
    std::ofstream f(path);
    f << R"({"model": {"kind": "CY", "s": "3"}, "m": 3, "json": true})";
  }
  auto o = call({"counterexample", "--config", path});
  CHECK(o.code == 0);
  auto j = Json::parse(o.out);
  CHECK(j["s"] == "3");
  CHECK(j["m"] == 3);
  o = call({"counterexample", "--config", path, "--m", "2"});
  j = Json::parse(o.out);
  CHECK(j["m"] == 2);
  std::remove(path.c_str());
  CHECK(call({"counterexample", "--config", "does-not-exist.json"}).code == 2);
}

TEST_CASE("text and csv formats") {
  const auto t = call({"thomsen", "--Y", "P2", "--D", "0", "--m", "2"});
  CHECK(t.code == 0);
  CHECK(t.out.find("rank: 4") != std::string::npos);
  const auto c = call({"thomsen", "--Y", "P2", "--D", "0", "--m", "2", "--format", "csv"});
  CHECK(c.out == "divisor,multiplicity\n\"0\",1\n\"-1\",3\n");
  const auto svg = call({"walls", "--char", "1,0,0,0", "--bound", "1", "--format", "svg"});
  CHECK(svg.code == 0);
  CHECK(svg.out.find("<svg") == 0);
}

TEST_CASE("timing is opt-in") {
  const auto plain = call_json({"counterexample"});
  CHECK_FALSE(plain.contains("wall_clock_seconds"));
  const auto timed = call_json({"counterexample", "--timing"});
  CHECK(timed.contains("wall_clock_seconds"));
}
