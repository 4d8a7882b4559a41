#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "helios/error.hpp"
#include "helios/parse.hpp"
#include "oracles.hpp"

using namespace helios;

TEST_CASE("parse the demo polynomials") {
  const Polynomial a = parse_polynomial("x*y + x + y + 1;");
  CHECK(a.terms().size() == 4);
  CHECK(a.degree() == 2);
  const Polynomial b = parse_polynomial("x**2*y**2 + x + y;");
  CHECK(b.terms().size() == 3);
  CHECK(b.degree() == 4);
  CHECK(b.variables() == std::vector<std::string>{"x", "y"});
}

TEST_CASE("imaginary unit as a factor") {
  const Polynomial p = parse_polynomial("3*i*x - 1;");
  REQUIRE(p.terms().size() == 2);
  CHECK(p.terms()[0].coefficient == Complex(0.0, 3.0));
  CHECK(p.terms()[1].coefficient == Complex(-1.0, 0.0));
  CHECK(parse_polynomial("(1.5 - 2*I)*x^2;").terms()[0].coefficient == Complex(1.5, -2.0));
}

TEST_CASE("formatting is canonical and round-trips") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK(format_polynomial(parse_polynomial("y + x;", xy)) == "x + y;");
  // without a variable list, y appears first and leads
  CHECK(format_polynomial(parse_polynomial("y + x;")) == "y + x;");
  CHECK(format_polynomial(parse_polynomial("x**2*y**2 + x + y;")) == "x**2*y**2 + x + y;");
  CHECK(format_polynomial(parse_polynomial("x - x;")) == "0;");

  std::mt19937_64 gen(23);
  for (int n = 1; n <= 4; ++n) {
    std::vector<std::string> vars;
    for (int k = 0; k < n; ++k) vars.push_back("v" + std::to_string(k));
    for (int trial = 0; trial < 40; ++trial) {
      const Polynomial p = oracle::random_polynomial(gen, vars, 5, 6);
      CHECK(parse_polynomial(format_polynomial(p), vars) == p);
    }
  }
}

TEST_CASE("whitespace does not matter") {
  const Polynomial a = parse_polynomial("x**2*y**2+x+y;");
  CHECK(parse_polynomial("  x ** 2 *\n y**2\t+ x +\n\n y ;") == a);
  CHECK(parse_polynomial("x^2*y^2 + x + y;") == a);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_polynomial("x + y"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x $ y;"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x**0;"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x**1.5;"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("2x;"), ParseError);
  CHECK_THROWS_AS(parse_polynomial("x + z;", std::vector<std::string>{"x", "y"}), ParseError);
  try {
    parse_system("2\nx + y;\nx * * y;\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
    CHECK(e.column() >= 1);
  }
}

TEST_CASE("system files") {
  const PolySystem s = parse_system("2\n x**2*y**2 + x + y;\n x*y + x + y + 1;");
  CHECK(s.equation_count() == 2);
  CHECK(s.variable_count() == 2);

  const PolySystem u = parse_system("1 2\n x + y;");
  CHECK(u.equation_count() == 1);
  CHECK(u.variable_count() == 2);

  CHECK_THROWS_AS(parse_system("2\n x;"), ParseError);
  CHECK_THROWS_AS(parse_system("1\n x + y;"), ParseError);
  CHECK_THROWS_AS(parse_system("1\n x; y;"), ParseError);

  const auto path = std::filesystem::temp_directory_path() / "helios_parse_test.sys";
  write_system_file(s, path);
  CHECK(read_system_file(path) == s);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "2");
  std::filesystem::remove(path);
  CHECK_THROWS_AS(read_system_file(path), Error);
}

TEST_CASE("shortest doubles round trip") {
  for (double v : {0.1, 1.0 / 3.0, 1e-300, 6.02214076e23, -2.5})
    CHECK(std::stod(shortest_double(v)) == v);
  CHECK(shortest_double(0.1) == "0.1");
}
