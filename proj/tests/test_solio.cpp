#include <doctest.h>

#include <json.hpp>

#include "helios/error.hpp"
#include "helios/parse.hpp"
#include "helios/solio.hpp"
#include "helios/solver.hpp"

using namespace helios;

namespace {

const char* kDemoBlock =
    "t :  1.00000000000000E+00   0.00000000000000E+00\n"
    "m : 1\n"
    "the solution for t :\n"
    " x : -1.00000000000000E+00   0.00000000000000E+00\n"
    " y : -1.61803398874989E+00   0.00000000000000E+00\n"
    "== err :  2.143E-101 = rco :  4.775E-02 = res :  2.220E-16 =\n";

Solution sample() {
  Solution s;
  s.variables = {"x", "y"};
  s.coordinates = {{-1.0, 0.0}, {-1.61803398874989, 0.0}};
  s.err = 2.143e-101;
  s.rco = 4.775e-2;
  s.res = 2.220e-16;
  return s;
}

}  // namespace

TEST_CASE("format the demo solution") { CHECK(format_solution(sample()) == kDemoBlock); }

TEST_CASE("x - 2 block") {
  Solution s;
  s.variables = {"x"};
  s.coordinates = {2.0};
  s.rco = 1.0;
  const std::string block = format_solution(s);
  CHECK(block.find(" x :  2.00000000000000E+00   0.00000000000000E+00\n") != std::string::npos);
  CHECK(block.find("== err :  0.000E+00 = rco :  1.000E+00 = res :  0.000E+00 =") != std::string::npos);
}

TEST_CASE("parse the demo block") {
  const Solution s = parse_solution(kDemoBlock);
  CHECK(s.t == Complex(1.0, 0.0));
  CHECK(s.m == 1);
  CHECK(s.variables == std::vector<std::string>{"x", "y"});
  CHECK(s.coordinates[0] == Complex(-1.0, 0.0));
  CHECK(s.coordinates[1].real() == -1.61803398874989);
  CHECK(s.err == 2.143e-101);
  CHECK(s.rco == 4.775e-2);
  CHECK(s.res == 2.220e-16);
}

TEST_CASE("records") {
  const SolutionRecord r = to_record(parse_solution(kDemoBlock));
  std::vector<std::string> keys;
  for (const auto& [k, v] : r) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"err", "m", "rco", "res", "t", "x", "y"});
  CHECK(std::get<int>(r.at("m")) == 1);
  CHECK(std::get<Complex>(r.at("x")) == Complex(-1.0, 0.0));
  CHECK(std::get<double>(r.at("rco")) == 4.775e-2);
}

TEST_CASE("format and parse round trip at printed precision") {
  const SolveReport r = solve(parse_polynomials({"x**2*y**2 + x + y;", "x*y + x + y + 1;"}), SolveOptions{.seed = 4});
  std::string all;
  for (const auto& s : r.solutions) {
    const Solution back = parse_solution(format_solution(s));
    CHECK(format_solution(back) == format_solution(s));
    CHECK(back.m == s.m);
    for (std::size_t i = 0; i < s.coordinates.size(); ++i)
      CHECK(std::abs(back.coordinates[i] - s.coordinates[i]) <= 1e-14 * std::max(1.0, std::abs(s.coordinates[i])));
    CHECK(std::abs(back.rco - s.rco) <= 1e-3 * s.rco);
    all += format_solution(s) + "\n";
  }
  CHECK(parse_solutions(all).size() == r.solutions.size());
}

TEST_CASE("malformed blocks report the line") {
  std::string bad = kDemoBlock;
  bad.replace(bad.find("m : 1"), 5, "m : q");
  try {
    parse_solution(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_solution("t : 1 0\nm : 1\n"), ParseError);
  CHECK_THROWS_AS(parse_solution(std::string(kDemoBlock) + "\n" + kDemoBlock), ParseError);
  std::string quality = kDemoBlock;
  quality.replace(quality.find("rco"), 3, "rca");
  CHECK_THROWS_AS(parse_solution(quality), ParseError);
}

TEST_CASE("JSON schema") {
  const SolveReport r = solve(parse_polynomials({"x**2*y**2 + x + y;", "x*y + x + y + 1;"}), SolveOptions{.seed = 21320});
  const std::string text = to_json(r);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc.at("seed") == 21320);
  CHECK(doc.at("paths") == 8);
  CHECK(doc.at("diverged") == 4);
  REQUIRE(doc.at("solutions").size() == 4);
  const auto& s = doc["solutions"][0];
  CHECK(s.at("t").size() == 2);
  CHECK(s.at("coords").at("x").size() == 2);
  CHECK(s.at("m") == 1);
  CHECK(s.contains("err"));
  CHECK(s.contains("rco"));
  CHECK(s.contains("res"));
  CHECK(text.find("\"coords\"") < text.find("\"err\""));  // sorted keys
  CHECK(doc.at("solutions")[0].at("coords").at("x")[0].get<double>() == r.solutions[0].coordinates[0].real());
}
