#include <doctest.h>

#include "helios/error.hpp"
#include "helios/homotopy.hpp"
#include "helios/parse.hpp"
#include "helios/startsys.hpp"
#include "oracles.hpp"

using namespace helios;

namespace {

PolySystem demo() { return parse_polynomials({"x**2*y**2 + x + y;", "x*y + x + y + 1;"}); }

}  // namespace

TEST_CASE("gamma homotopy at the ends and its t-derivative") {
  Rng rng(21320);
  const StartPair start = total_degree_start(demo(), rng);
  const Homotopy h = make_gamma_homotopy(demo(), start.g, rng);
  CHECK(std::abs(std::abs(h.gamma()) - 1.0) < 1e-15);

  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 10; ++trial) {
    const CVector x = oracle::random_point(gen, 2);
    const CVector g = start.g.evaluate(x), f = demo().evaluate(x);
    const CVector v0 = h.value(x, 0.0), v1 = h.value(x, 1.0);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(std::abs(v0[i] - h.gamma() * g[i]) < 1e-14);
      CHECK(std::abs(v1[i] - f[i]) < 1e-14);
    }
    const double t = 0.37, dt = 1e-6;
    const HomotopyValue hv = h.evaluate(x, t);
    const CVector plus = h.value(x, t + dt), minus = h.value(x, t - dt);
    const CVector mid = h.value(x, t);
    for (std::size_t i = 0; i < 2; ++i) {
      CHECK(std::abs((plus[i] - minus[i]) / (2 * dt) - hv.dt[i]) < 1e-8);
      CHECK(std::abs(mid[i] - ((1 - t) * v0[i] + t * v1[i])) < 1e-12);
    }
    // Jx against the Jacobian of the expanded polynomial system
    std::vector<Polynomial> expanded;
    for (std::size_t i = 0; i < 2; ++i)
      expanded.push_back(start.g[i].scaled(h.gamma() * (1 - t)) + demo()[i].scaled(t));
    const CMatrix J = PolySystem(demo().variables(), expanded).jacobian(x);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) CHECK(std::abs(J(i, j) - hv.jx(i, j)) < 1e-12);
  }
}

TEST_CASE("gamma is reproducible from the seed") {
  Rng a(5), b(5);
  CHECK(make_gamma_homotopy(demo(), demo(), a).gamma() == make_gamma_homotopy(demo(), demo(), b).gamma());
}

TEST_CASE("homotopy shape checks") {
  const PolySystem one = parse_polynomials({"x - 1;"});
  CHECK_THROWS_AS(Homotopy(demo(), one, 1.0), DimensionError);
  CHECK_THROWS_AS(Homotopy(parse_system("1 2\nx + y;"), parse_system("1 2\nx - y;"), 1.0), DimensionError);
  CHECK_THROWS_AS(Homotopy(one, one, 2.0), Error);
}

TEST_CASE("parameter homotopy") {
  const PolySystem family = parse_polynomials({"x**2 - a;"});
  const Complex l0 = 1.0, l1 = 4.0;
  const Homotopy h = make_parameter_homotopy(family, {"a"}, std::span(&l0, 1), std::span(&l1, 1));
  CHECK(h.gamma() == Complex(1.0));
  CHECK(h.dimension() == 1);
  const CVector x{Complex(0.4, 0.2)};
  CHECK(std::abs(h.value(x, 0.0)[0] - (x[0] * x[0] - 1.0)) < 1e-15);
  CHECK(std::abs(h.value(x, 1.0)[0] - (x[0] * x[0] - 4.0)) < 1e-15);

  const Homotopy still = make_parameter_homotopy(family, {"a"}, std::span(&l1, 1), std::span(&l1, 1));
  CHECK(std::abs(still.evaluate(x, 0.5).dt[0]) == 0.0);

  CHECK_THROWS_AS(make_parameter_homotopy(family, {"b"}, std::span(&l0, 1), std::span(&l1, 1)), Error);
  const PolySystem wide = parse_polynomials({"x**2 - a*y;"});
  CHECK_THROWS_AS(make_parameter_homotopy(wide, {"a"}, std::span(&l0, 1), std::span(&l1, 1)), DimensionError);
}
