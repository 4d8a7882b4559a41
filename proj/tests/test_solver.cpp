#include <doctest.h>

#include "helios/error.hpp"
#include "helios/families.hpp"
#include "helios/parse.hpp"
#include "helios/solio.hpp"
#include "helios/solver.hpp"
#include "oracles.hpp"

using namespace helios;

namespace {

PolySystem demo() { return parse_polynomials({"x**2*y**2 + x + y;", "x*y + x + y + 1;"}); }

std::vector<CVector> points(const SolveReport& r) {
  std::vector<CVector> out;
  for (const auto& s : r.solutions) out.push_back(s.coordinates);
  return out;
}

}  // namespace

TEST_CASE("seed control") {
  set_seed(7);
  CHECK(get_seed() == 7);
  const SolveReport a = solve(demo());
  CHECK(a.seed == 7);
  const SolveReport b = solve(demo());
  CHECK(to_json(a) == to_json(b));
  clear_seed();
  const SolveReport c = solve(demo());
  CHECK(get_seed() == c.seed);
}

TEST_CASE("demo system") {
  const SolveReport r = solve(demo(), SolveOptions{.seed = 21320});
  REQUIRE(r.solutions.size() == 4);
  CHECK(r.paths_tracked == 8);
  CHECK(r.root_count_used == 8);
  CHECK(r.diverged == 4);
  CHECK(r.stalled == 0);
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  bool found = false;
  for (const auto& s : r.solutions) {
    CHECK(s.m == 1);
    CHECK(s.res <= 1e-10);
    CHECK(oracle::max_abs(demo().evaluate(s.coordinates)) <= 1e-10);
    found |= oracle::distance(s.coordinates, CVector{-1.0, -phi}) <= 1e-8;
  }
  CHECK(found);
}

TEST_CASE("solution sets agree across seeds") {
  const SolveReport ref = solve(demo(), SolveOptions{.seed = 21320});
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const SolveReport r = solve(demo(), SolveOptions{.seed = seed});
    CHECK(oracle::same_set(points(r), points(ref), 1e-8));
  }
}

TEST_CASE("univariate examples") {
  const SolveReport r = solve(parse_polynomials({"x**2 - 1;"}), SolveOptions{.seed = 3});
  CHECK(oracle::same_set(points(r), {{1.0}, {-1.0}}, 1e-12));
  for (const auto& s : r.solutions) CHECK(s.m == 1);

  const SolveReport d = solve(parse_polynomials({"x**2 - 2*x + 1;"}), SolveOptions{.seed = 3});
  REQUIRE(d.solutions.size() == 1);
  CHECK(d.solutions[0].m == 2);
  CHECK(d.solutions[0].rco < 1e-6);
}

TEST_CASE("path accounting") {
  for (const PolySystem& s : {demo(), noon(3), cyclic(3)}) {
    const SolveReport r = solve(s, SolveOptions{.seed = 11});
    std::size_t counted = 0;
    for (const auto& sol : r.solutions) counted += static_cast<std::size_t>(sol.m);
    CHECK(counted + r.diverged + r.stalled == r.paths_tracked);
    for (const auto& sol : r.solutions) CHECK((sol.res <= 1e-10 || sol.rco < 1e-8));
  }
}

TEST_CASE("parallel tracking does not change the report") {
  const SolveReport one = solve(noon(3), SolveOptions{.seed = 5, .tasks = 1});
  const SolveReport four = solve(noon(3), SolveOptions{.seed = 5, .tasks = 4});
  CHECK(to_json(one) == to_json(four));
}

TEST_CASE("solve rejects bad input") {
  CHECK_THROWS_AS(solve(parse_system("1 2\nx + y;")), DimensionError);
  CHECK_THROWS_AS(solve(PolySystem({"x"}, {Polynomial({"x"})})), Error);
}

TEST_CASE("clustering") {
  const auto c = cluster_multiplicities({{1.0, 2.0}, {1.0, 2.0}, {5.0, 0.0}});
  REQUIRE(c.size() == 2);
  int total = 0;
  for (const auto& cl : c) total += cl.multiplicity;
  CHECK(total == 3);
  // transitive chain within the radius merges
  const auto chain = cluster_multiplicities({{0.0}, {0.8e-6}, {1.6e-6}});
  REQUIRE(chain.size() == 1);
  CHECK(chain[0].multiplicity == 3);
  CHECK(std::abs(chain[0].representative[0] - 0.8e-6) < 1e-15);
}

TEST_CASE("canonical order ignores tiny noise") {
  std::vector<CVector> a{{2.0}, {Complex(1.0, 1e-12)}, {-1.0}};
  std::vector<CVector> b{{Complex(1.0, -1e-12)}, {-1.0}, {2.0}};
  canonical_sort(a);
  canonical_sort(b);
  for (std::size_t i = 0; i < 3; ++i) CHECK(oracle::distance(a[i], b[i]) < 1e-10);
  CHECK(a[0][0].real() == -1.0);
}

TEST_CASE("nonsingular endpoints are reached by one path only") {
  for (std::uint64_t seed = 1; seed <= 6; ++seed)
    for (const PolySystem& s : {noon(3), cyclic(4), demo()}) {
      const SolveReport r = solve(s, SolveOptions{.seed = seed});
      for (const auto& sol : r.solutions)
        if (sol.m > 1) CHECK(sol.rco <= kJumpRco);
    }
}
