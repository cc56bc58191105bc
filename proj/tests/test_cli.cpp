// SPDX-License-Identifier: Apache-2.0
#include "doctest.h"

#include <json.hpp>

#include <cstdlib>
#include <sstream>

#include "cli.hpp"

using qts::cli::run;
using Json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "qts");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("exit codes") {
  CHECK(call({"decide", "--field", "-1,1,2,5", "--elem", "1,0,0,0"}).code == 0);
  CHECK(call({"decide", "--field", "1,1,2,5", "--elem", "-1,0,0,0"}).code == 1);
  CHECK(call({"decide", "--elem", "1,0,0,0"}).code == 2);
  CHECK(call({"decide", "--field", "1,1,2,5"}).code == 2);
  CHECK(call({"decide", "--field", "1,1,2,5", "--elem", "1,0,0"}).code == 2);
  CHECK(call({"decide", "--field", "1,1,2,5", "--elem", "1,0,0,0", "--frobnicate"}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"decide", "--field", "2,1,2,5", "--elem", "1,0,0,0"}).code == 3);
  CHECK(call({"decide", "--field", "1,1,1,5", "--elem", "1,0,0,0"}).code == 3);
  CHECK(call({"decide", "--radicand", "17,-2", "--D", "17", "--elem", "1,0,0,0"}).code == 4);
  CHECK(call({"decide", "--radicand", "17,-2", "--D", "18", "--elem", "1,0,0,0"}).code == 3);
  CHECK(call({"decide", "--radicand", "17,-2", "--elem", "1,0,0,0"}).code == 2);
  CHECK(call({"prime", "--field", "1,2,1,5", "--prime", "13"}).code == 0);
  CHECK(call({"prime", "--field", "1,2,1,5", "--prime", "12"}).code == 2);
  CHECK(call({"minus-one", "--field", "1,2,1,5"}).code == 1);
  CHECK(call({"minus-one", "--field", "-1,1,2,5"}).code == 0);
  CHECK(call({"classify", "--field", "1,4,1,17", "--prime", "13"}).code == 0);
  CHECK(call({"selftest"}).code == 0);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("parse diagnostics name the column") {
  auto r = call({"decide", "--field", "1,1,2,5", "--elem", "1,2,x,0"});
  CHECK(r.code == 2);
  CHECK(r.err.find("column 5") != std::string::npos);
  CHECK(qts::cli::parse_element("2,0,-1,3/4")[2] == qts::Rat(-1, 4));
  CHECK(qts::cli::parse_element("+2,0,0,0/2")[0] == 1);
  CHECK_THROWS(qts::cli::parse_element("1,0,0,0/0"));
  CHECK_THROWS(qts::cli::parse_element("1,0,0,0/-2"));
  CHECK_THROWS(qts::cli::parse_element("1,,0,0"));
}

TEST_CASE("json report schema and stability") {
  std::vector<std::string> args = {"decide", "--radicand", "-10,4", "--D", "5", "--elem", "-19,-11,1,-3",
                                   "--format", "json"};
  auto a = call(args), b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Json j = Json::parse(a.out);
  for (const char* key : {"field", "element", "verdict", "certificates", "preprocessing", "failed_conditions"})
    CHECK(j.contains(key));
  CHECK(j["verdict"] == "yes");
  CHECK(j["element"]["norm_K_over_Q"] == "2238736");
  int prod = 1;
  for (const auto& c : j["certificates"]) {
    for (const char* key : {"kind", "p", "label", "type"}) CHECK(c["place"].contains(key));
    CHECK(c.contains("rule"));
    CHECK(c.contains("data"));
    prod *= c["value"].get<int>();
  }
  CHECK(prod == 1);
}

TEST_CASE("failed clauses are listed") {
  auto r = call({"decide", "--field", "1,4,1,17", "--elem", "334,-65,-1,-1", "--format", "json"});
  CHECK(r.code == 1);
  Json j = Json::parse(r.out);
  CHECK(j["failed_conditions"] == Json::array({"odd-place:47", "odd-place:103"}));
}

TEST_CASE("verify runs the oracles") {
  auto r = call({"verify", "--field", "-1,1,2,5", "--elem", "3,0,1,1", "--format", "json"});
  CHECK(r.code == 1);
  Json j = Json::parse(r.out);
  CHECK(j["oracle"]["agrees"] == true);
  CHECK(j["oracle"]["local"].size() == 2);
  auto s = call({"verify", "--field", "-1,1,2,5", "--elem", "2,0,0,0", "--format", "json"});
  CHECK(s.code == 0);
  CHECK(Json::parse(s.out)["oracle"]["search"]["x"].is_array());
}

TEST_CASE("precision override from the environment") {
  setenv("QTS_PRECISION", "30", 1);
  auto a = call({"decide", "--field", "1,4,1,17", "--elem", "334,-65,-1,-1", "--format", "json"});
  unsetenv("QTS_PRECISION");
  auto b = call({"decide", "--field", "1,4,1,17", "--elem", "334,-65,-1,-1", "--format", "json"});
  CHECK(a.code == b.code);
  Json ja = Json::parse(a.out), jb = Json::parse(b.out);
  CHECK(ja["verdict"] == jb["verdict"]);
  CHECK(ja["certificates"][2]["data"]["precision"] != jb["certificates"][2]["data"]["precision"]);
}
