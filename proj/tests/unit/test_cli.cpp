#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "hnc/cli.hpp"
#include "hnc/json_io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = hnc::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

hnc::json result(const Run& r) { return hnc::json::parse(r.out).at("result"); }

const char* kInnerU = R"({"dU":{"terms":[]},"dV":{"terms":[{"p":1,"q":1,"r":1,"re":"1","im":"0"},{"p":1,"q":1,"r":0,"re":"-1","im":"0"}]}})";

}  // namespace

TEST_CASE("decomposing the inner derivation of U") {
  const auto r = run({"deriv", "decompose", kInnerU});
  REQUIRE(r.code == 0);
  const auto j = result(r);
  CHECK(hnc::element_from_json(j.at("x")) == hnc::AlgebraElement::U());
  CHECK(j.at("z1").at("terms").empty());
  CHECK(run({"deriv", "decompose", "-"}, kInnerU).out == r.out);
}

TEST_CASE("cyclic cohomology degree three") {
  const auto j = result(run({"group", "hc-dim", "--n", "3"}));
  CHECK(j.at("finite_rank") == 3);
  CHECK(j.at("countable") == false);
}

TEST_CASE("configuration echo and determinism") {
  const auto a = run({"pairing", "table"});
  CHECK(a.code == 0);
  CHECK(a.out == run({"pairing", "table"}).out);
  const auto doc = hnc::json::parse(a.out);
  CHECK(doc.at("config").at("truncation") == 64);
  CHECK(doc.at("result").at("odd").at("provenance").size() == 3);
  CHECK(run({"pairing", "table", "--table"}).out.find("d0(Dirac)") != std::string::npos);
}

TEST_CASE("seed override from the environment") {
  CHECK(hnc::json::parse(run({"chern", "--seed", "5"}).out).at("config").at("seed") == 5);
  setenv("HNC_SEED", "99", 1);
  CHECK(hnc::json::parse(run({"chern", "--seed", "5"}).out).at("config").at("seed") == 99);
  unsetenv("HNC_SEED");
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"chern", "--bogus"}).code == 2);
  CHECK(run({"alg", "mul", R"({"a":)"}).code == 2);
  CHECK(run({"alg", "frobnicate", "{}"}).code == 2);
  CHECK(run({"index", "--module", "nope", "--unitary", "U"}).code == 2);
  CHECK(run({"chern", "--mass", "2"}).code == 2);
  CHECK(run({"table", "--json", "--table"}).code == 2);
  const auto bad = run({"deriv", "check", R"({"dU":{"terms":[{"p":2,"q":0,"r":0,"re":"1","im":"0"}]},"dV":{"terms":[]}})"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("derivation consistency") != std::string::npos);
  const auto obstructed = run({"deriv", "decompose", R"({"dU":{"terms":[{"p":1,"q":1,"r":0,"re":"1","im":"0"}]},"dV":{"terms":[]}})"});
  CHECK(obstructed.code == 1);
  CHECK(result(obstructed).at("decomposable") == false);
}

TEST_CASE("algebra commands") {
  const auto mul = result(run({"alg", "mul", R"({"a":{"terms":[{"p":0,"q":1,"r":0,"re":"1","im":"0"}]},"b":{"terms":[{"p":1,"q":0,"r":0,"re":"1","im":"0"}]}})"}));
  CHECK(hnc::element_from_json(mul.at("product")) == hnc::AlgebraElement::monomial({1, 1, 1}));
  CHECK(result(run({"alg", "central", R"({"terms":[{"p":0,"q":0,"r":3,"re":"2","im":"0"}]})"})).at("central") == true);
  const auto ev = result(run({"alg", "eval", "--angle", "1/3", R"({"terms":[{"p":1,"q":0,"r":0,"re":"1","im":"0"}]})"}));
  CHECK(ev.at("matrix").size() == 3);
}

TEST_CASE("index and sequence commands") {
  const auto j = result(run({"index", "--module", "z1prime", "--unitary", "V", "--truncation", "16"}));
  CHECK(j.at("index") == 1);
  CHECK(j.at("truncations") == hnc::json::array({8, 16, 32}));
  const auto s = run({"sequence", "khomology", "--check"});
  CHECK(s.code == 0);
  CHECK(result(s).at("exact") == true);
  CHECK(result(run({"group", "classify", "--element", "0", "0", "3"})).at("N_g") == "ext:3");
}
