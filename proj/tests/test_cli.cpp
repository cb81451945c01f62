#include "cli.hpp"
#include "json_io.hpp"

#include "pbraid/desingularization.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace pbraid;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("eq decides relation (4)") {
  auto r = run({"eq", "-n", "3", "s1 s2 p1", "p2 s1 s2"});
  CHECK(r.code == cli::kOk);
  CHECK(r.out == "equal\n");
  r = run({"eq", "-n", "3", "p1 p2", "p2 p1"});
  CHECK(r.code == cli::kUnequal);
  CHECK(r.out == "unequal\n");
  r = run({"eq", "-n", "3", "p1", "p2", "--json"});
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["equal"] == false);
  CHECK(j["strands"] == 3);
}

TEST_CASE("nf output is canonical") {
  auto a = run({"nf", "-n", "3", "s1 s2 s1"});
  auto b = run({"nf", "-n", "3", "s2 s1 s2"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out == "1|\n");
  auto c = run({"nf", "-n", "3", "s1 s2 s1", "--word"});
  CHECK(c.out == "1|\ns1 s2 s1\n");
}

TEST_CASE("closure inv reports the three-entry profile") {
  auto r = run({"closure", "inv", "-n", "2", "p1 p1"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["components"] == 2);
  REQUIRE(j["profile"].size() == 3);
  CHECK(j["profile"][0]["doubled_linkings"] == nlohmann::json::array({-2}));
  CHECK(j["profile"][0]["weight"] == "1/4");
  CHECK(j["profile"][1]["doubled_linkings"] == nlohmann::json::array({0}));
  CHECK(j["profile"][1]["weight"] == "1/2");
  CHECK(j["profile"][2]["doubled_linkings"] == nlohmann::json::array({2}));
  CHECK(j["profile"][2]["weight"] == "1/4");
  CHECK(cli::to_json(cli::profile_from_json(j["profile"])) == j["profile"]);
}

TEST_CASE("eta output") {
  auto r = run({"eta", "-n", "2", "p1"});
  CHECK(r.out == "-1*-1|\n1*1|\n");
  r = run({"eta", "-n", "3", "p1 s2 p2", "--json"});
  auto j = nlohmann::json::parse(r.out);
  auto e = cli::ring_from_json(j);
  CHECK(e == eta(parse("p1 s2 p2", 3)));
  CHECK(cli::to_json(e) == j);
}

TEST_CASE("oracle-eq exit codes") {
  CHECK(run({"oracle-eq", "-n", "2", "p1 s1", "s1 p1", "--depth", "1", "--maxlen", "4"}).code == cli::kOk);
  auto r = run({"oracle-eq", "-n", "3", "p1", "p2", "--depth", "3"});
  CHECK(r.code == cli::kUnknown);
  CHECK(r.out == "unknown\n");
}

TEST_CASE("parse and pm2") {
  CHECK(run({"parse", "-n", "3", "p2  s1"}).out == "p2 s1\n");
  CHECK(run({"parse", "-n", "3", "t1 s2", "--singular"}).out == "t1 s2\n");
  CHECK(run({"parse", "-n", "3", "t1 s2"}).out == "p1 s2\n");
  CHECK(run({"parse", "-n", "3", "p1 s2", "--relabel", "singular"}).out == "t1 s2\n");
  CHECK(run({"parse", "-n", "2", "s1 S1 p1", "--reduce"}).out == "p1\n");
  auto j = nlohmann::json::parse(run({"parse", "-n", "3", "s1 s2 p1", "--json"}).out);
  CHECK(j["permutation"] == nlohmann::json::array({3, 2, 1}));
  CHECK(run({"pm2", "-n", "2", "s1 p1 S1"}).out == "0 1\n");
}

TEST_CASE("markov subcommands") {
  CHECK(run({"markov", "apply", "-n", "2", "s1", "M3:+"}).out == "n=3: s1 s2\n");
  CHECK(run({"markov", "apply", "-n", "2", "s1", "M3:+", "M3:+d"}).out == "n=2: s1\n");
  CHECK(run({"markov", "apply", "-n", "2", "s1 p1", "M2:1", "--json"}).out ==
        "{\"strands\":2,\"word\":\"p1 s1\"}\n");
  auto r = run({"markov", "search", "-n", "2", "s1", "-m", "3", "s1 s2", "--budget", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "found M3:+\n");
  r = run({"markov", "search", "-n", "2", "s1", "-m", "2", "", "--budget", "2"});
  CHECK(r.code == cli::kUnknown);
}

TEST_CASE("errors produce distinct one-line diagnostics") {
  auto check_error = [](std::vector<std::string> args, const std::string &prefix) {
    auto r = run(std::move(args));
    CHECK(r.code == cli::kError);
    CHECK(r.err.rfind(prefix, 0) == 0);
    CHECK(std::count(r.err.begin(), r.err.end(), '\n') == 1);
  };
  check_error({"parse", "-n", "3", "s3"}, "error: parse:");
  check_error({"nf", "-n", "2", "p1"}, "error: pre-crossing:");
  check_error({"eta", "-n", "2", "p1 p1 p1", "--cap", "4"}, "error: cap exceeded:");
  check_error({"markov", "apply", "-n", "2", "s1", "M3:-d"}, "error: invalid move:");
  check_error({"pm2", "-n", "3", "s1"}, "error: strand mismatch:");
  check_error({"frobnicate"}, "error: usage:");
  check_error({"eq", "-n", "3", "s1"}, "error: usage:");
}

TEST_CASE("selftest is reproducible") {
  auto a = run({"selftest", "--max-n", "4", "--trials", "30", "--seed", "99"});
  auto b = run({"selftest", "--max-n", "4", "--trials", "30", "--seed", "99"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("seed 99") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
  CHECK(run({"--help"}).code == 0);
}
