#include <doctest.h>

#include "helios/counts.hpp"
#include "helios/error.hpp"
#include "helios/families.hpp"
#include "helios/parse.hpp"
#include "oracles.hpp"

using namespace helios;

namespace {

PolySystem demo() { return parse_polynomials({"x**2*y**2 + x + y;", "x*y + x + y + 1;"}); }

// Rational volume of the simplex conv{0, e_1, ..., e_n} scaled by d.
double simplex_volume(int n, double d) {
  double v = 1.0;
  for (int k = 1; k <= n; ++k) v *= d / k;
  return v;
}

}  // namespace

TEST_CASE("total degree") {
  CHECK(total_degree(demo()) == 8);
  CHECK(total_degree(parse_polynomials({"x**2 - 1;"})) == 2);
  CHECK(total_degree(parse_polynomials({"x + 2*y - z;", "3*x - y + 1;", "x + y + z - 4;"})) == 1);
  CHECK_THROWS(total_degree(parse_system("1 2\nx + y;")));
}

TEST_CASE("volumes of small polytopes") {
  const auto triangle = volume(Polytope({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(triangle.normalized == 1);
  CHECK(triangle.value() == doctest::Approx(0.5));
  CHECK(volume(Polytope({{0, 0}, {1, 0}, {0, 1}, {1, 1}})).value() == doctest::Approx(1.0));
  CHECK(volume(Polytope({{0, 0}, {1, 1}, {2, 2}})).normalized == 0);
  CHECK(volume(Polytope({{0}, {5}, {2}})).normalized == 5);
  CHECK_THROWS_AS(volume(Polytope({Exponents(7, 0), Exponents(7, 1)})), Error);
  CHECK_THROWS_AS(Polytope({}), Error);
}

TEST_CASE("volumes agree with the Monte-Carlo hull oracle") {
  std::mt19937_64 gen(77);
  std::uniform_int_distribution<int> coord(0, 4);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<Exponents> pts;
    for (int k = 0; k < 9; ++k) pts.push_back({coord(gen), coord(gen), coord(gen)});
    const double exact = volume(Polytope(pts)).value();
    if (exact < 2.0) continue;  // thin hulls make the sampling estimate noisy
    const double estimate = oracle::monte_carlo_volume(pts, 400000, 1000 + trial);
    CHECK(std::abs(estimate - exact) <= 0.02 * exact);
  }
}

TEST_CASE("higher dimensional simplices") {
  for (int n = 1; n <= 6; ++n) {
    std::vector<Exponents> pts{Exponents(n, 0)};
    for (int k = 0; k < n; ++k) {
      Exponents e(n, 0);
      e[k] = 3;
      pts.push_back(e);
    }
    CHECK(volume(Polytope(pts)).value() == doctest::Approx(simplex_volume(n, 3.0)));
  }
}

TEST_CASE("mixed volume examples") {
  CHECK(mixed_volume(demo()) == 4);
  CHECK(mixed_volume(parse_polynomials({"x**2 - 1;"})) == 2);
  const PolySystem dense = parse_polynomials({"x**2 + x*y + y**2 + x + y + 1;",
                                              "x**3 + x**2*y + x*y**2 + y**3 + x**2 + x*y + y**2 + x + y + 1;"});
  CHECK(mixed_volume(dense) == 6);
  CHECK(mixed_volume(cyclic(3)) == 6);
  CHECK(mixed_volume(noon(2)) <= total_degree(noon(2)));
}

TEST_CASE("mixed volume invariances") {
  const PolySystem s = parse_polynomials({"x**3*y + y**2*z + 1;", "x*z**2 + y + 2;", "x*y*z + x**2 + z + 3;"});
  const std::uint64_t mv = mixed_volume(s);
  CHECK(mv <= total_degree(s));
  // permute equations
  CHECK(mixed_volume(PolySystem(s.variables(), {s[2], s[0], s[1]})) == mv);
  // relabel variables
  const PolySystem r = parse_polynomials({"y**3*z + z**2*x + 1;", "y*x**2 + z + 2;", "y*z*x + y**2 + x + 3;"});
  CHECK(mixed_volume(r) == mv);
  // translate one support by a lattice vector
  const PolySystem t = parse_polynomials({"x**4*y**2 + x*y**3*z + x*y;", "x*z**2 + y + 2;", "x*y*z + x**2 + z + 3;"});
  CHECK(mixed_volume(t) == mv);
}

TEST_CASE("Minkowski sums and hull generators") {
  const auto sum = minkowski_sum({{0, 0}, {1, 0}}, {{0, 0}, {0, 1}});
  CHECK(sum.size() == 4);
  const auto hull = hull_generators({{0, 0}, {2, 0}, {0, 2}, {1, 1}, {2, 2}, {1, 0}});
  CHECK(hull.size() == 4);
}
