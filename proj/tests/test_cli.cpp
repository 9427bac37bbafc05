#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "diamond/cli.hpp"
#include "diamond/document.hpp"
#include "diamond/error.hpp"

using namespace diamond;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(DIAMOND_TEST_DATA) + "/" + name; }

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

const std::string xyz_doc = R"({"field": "Q", "generators": ["x", "y", "z"],
  "rules": [{"lhs": "x*y*z", "rhs": "x^3 + y^3 + z^3"}],
  "certificate": {"measure": {"x*y*z": 3, "y": 1}}})";

}  // namespace

TEST_CASE("certify") {
  Outcome ok = run_cli({"certify", data("xyz.json"), "--json"});
  CHECK(ok.code == cli::Ok);
  CHECK(Json::parse(ok.out)["verdict"] == "Certified");

  Outcome piped = run_cli({"certify", "--json"}, xyz_doc);
  CHECK(piped.code == cli::Ok);
  CHECK(piped.out == ok.out);

  std::string weak = R"({"field": "Q", "generators": ["x", "y", "z"],
    "rules": [{"lhs": "x*y*z", "rhs": "x^3 + y^3 + z^3"}],
    "certificate": {"measure": {"x*y*z": 1}}})";
  Outcome failed = run_cli({"certify", "--json"}, weak);
  CHECK(failed.code == cli::CertificateFailed);
  CHECK_FALSE(Json::parse(failed.out)["witnesses"].empty());

  std::string none = R"({"field": "Q", "generators": ["x"], "rules": []})";
  CHECK(run_cli({"certify"}, none).code == cli::Invalid);
}

TEST_CASE("check") {
  Outcome xyz = run_cli({"check", data("xyz.json")});
  CHECK(xyz.code == cli::Ok);
  CHECK(xyz.out.find("ambiguities: 0") != std::string::npos);

  Outcome tri = run_cli({"check", data("x3.json"), "--mode", "triangle", "--json"});
  CHECK(tri.code == cli::NotConvergent);
  Json j = Json::parse(tri.out);
  REQUIRE(j["ambiguities"].size() == 1);
  CHECK(j["ambiguities"][0]["grade"] == "x^4");

  Outcome dia = run_cli({"check", data("x3.json"), "--json"});
  CHECK(dia.code == cli::NotConvergent);
  CHECK(Json::parse(dia.out)["ambiguities"].size() == 2);

  CHECK(run_cli({"check", data("x3.json"), "--mode", "square"}).code == cli::Invalid);
}

TEST_CASE("nf") {
  Outcome nf = run_cli({"nf", data("xyz.json"), "--expr", "x*y*z", "--json"});
  CHECK(nf.code == cli::Ok);
  Json j = Json::parse(nf.out);
  CHECK(j["normal_form"] == "x^3 + y^3 + z^3");
  CHECK(j["trace"].size() == 1);

  CHECK(run_cli({"nf", data("xyz.json"), "--expr", "x*w"}).code == cli::Invalid);
  CHECK(run_cli({"nf", data("xyz.json")}).code == cli::Invalid);

  std::string cyclic = R"({"field": "Q", "generators": ["x", "y"],
    "rules": [{"lhs": "x", "rhs": "y"}, {"lhs": "y", "rhs": "x"}],
    "certificate": {"deglex": {}}})";
  CHECK(run_cli({"nf", "--expr", "x"}, cyclic).code == cli::CertificateFailed);
}

TEST_CASE("fuse exhaustion is a resource error") {
  // x^40 needs 40 rewrites to reach y^40.
  std::string doc = R"({"field": "Q", "generators": ["x", "y"],
    "rules": [{"lhs": "x", "rhs": "y"}],
    "certificate": {"deglex": {"order": ["y", "x"]}}})";
  CHECK(run_cli({"nf", "--expr", "x^40", "--fuse", "5"}, doc).code == cli::ResourceExceeded);
  CHECK(run_cli({"nf", "--expr", "x^40", "--fuse", "100"}, doc).code == cli::Ok);
}

TEST_CASE("obstructions, oracle, chains and homology") {
  Outcome obs = run_cli({"obstructions", data("x3.json"), "--json"});
  CHECK(obs.code == cli::Ok);
  CHECK(Json::parse(obs.out)["ambiguities"].size() == 2);

  Outcome oracle = run_cli({"oracle", data("x3.json"), "--json"});
  CHECK(oracle.code == cli::NotConvergent);
  CHECK(Json::parse(oracle.out)["witnesses"][0]["word"] == "x^4");
  CHECK(run_cli({"oracle", data("xyz.json")}).code == cli::Ok);

  Outcome chains = run_cli({"chains", data("x3.json"), "--json"});
  CHECK(chains.code == cli::Ok);

  Outcome homology = run_cli({"homology", data("x3.json"), "--max-length", "5", "--json"});
  CHECK(homology.code == cli::Ok);
  CHECK(run_cli({"homology", data("x3.json"), "--monomial", "--full"}).code == cli::Invalid);
  CHECK(run_cli({"homology", data("x3.json"), "--max-length", "30", "--max-degree", "3"}).code ==
        cli::ResourceExceeded);
}

TEST_CASE("complete round-trips through the document format") {
  Outcome c = run_cli({"complete", data("x3.json"), "--json"});
  CHECK(c.code == cli::Ok);
  Json j = Json::parse(c.out);
  SystemDocument doc = parse_document_json(j["document"]);
  CHECK(doc.system.size() == 3);
  CHECK(document_to_json(doc) == j["document"]);
  Outcome again = run_cli({"check", "--json"}, j["document"].dump());
  CHECK(again.code == cli::Ok);

  CHECK(run_cli({"complete", data("xyz.json")}).code == cli::Invalid);
}

TEST_CASE("reports are byte-identical across runs") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"check", data("x3.json"), "--json"},
           {"obstructions", data("x3.json"), "--json"},
           {"oracle", data("x3.json"), "--json"},
           {"complete", data("x3.json"), "--json"},
           {"homology", data("x3.json"), "--json"},
           {"chains", data("x3.json"), "--json"}}) {
    std::string first = run_cli(args).out;
    CHECK_FALSE(first.empty());
    for (int k = 0; k < 3; ++k) CHECK(run_cli(args).out == first);
  }
}

TEST_CASE("invalid input") {
  CHECK(run_cli({}).code == cli::Invalid);
  CHECK(run_cli({"frobnicate"}).code == cli::Invalid);
  CHECK(run_cli({"certify", data("missing.json")}).code == cli::Invalid);
  CHECK(run_cli({"certify"}, "{not json").code == cli::Invalid);

  Outcome unknown = run_cli({"certify"}, R"({"alphabet": ["x"], "field": "Q", "rules": []})");
  CHECK(unknown.code == cli::Invalid);
  CHECK(unknown.err.find("alphabet") != std::string::npos);

  Outcome bad_rule = run_cli({"certify"}, R"({"field": "Q", "generators": ["x"],
    "rules": [{"lhs": "x^2", "rhs": "0"}, {"lhs": "x", "rhs": "q"}]})");
  CHECK(bad_rule.code == cli::Invalid);
  CHECK(bad_rule.err.find("rules[1].rhs") != std::string::npos);

  CHECK(run_cli({"certify"}, R"({"field": "F4", "generators": ["x"], "rules": []})").code == cli::Invalid);
  CHECK_THROWS_AS(parse_document(slurp(data("x3.json")) + "]"), ParseError);
}
