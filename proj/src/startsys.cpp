#include "helios/startsys.hpp"

#include <cmath>
#include <numbers>

#include "helios/error.hpp"

namespace helios {

StartPair total_degree_start(const PolySystem& f, Rng& rng) {
  if (!f.is_square()) throw DimensionError("total-degree start system needs a square system");
  const std::size_t n = f.variable_count();
  StartPair pair;
  pair.degrees = f.degrees();

  std::vector<Complex> constants;
  std::vector<Polynomial> polys;
  for (std::size_t i = 0; i < n; ++i) {
    if (pair.degrees[i] < 1) throw Error("total-degree start system needs equations of positive degree");
    const Complex r = rng.unit_circle();
    constants.push_back(r);
    Exponents lead(n, 0);
    lead[i] = pair.degrees[i];
    polys.emplace_back(f.variables(), std::vector<Term>{{1.0, lead}, {-r, Exponents(n, 0)}});
  }
  pair.g = PolySystem(f.variables(), std::move(polys));

  // roots[i][k] = k-th root of x_i^{d_i} = r_i.
  std::vector<CVector> roots(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int d = pair.degrees[i];
    const double base = std::arg(constants[i]);
    for (int k = 0; k < d; ++k) roots[i].push_back(std::polar(1.0, (base + 2.0 * std::numbers::pi * k) / d));
  }
  std::vector<std::size_t> index(n, 0);
  for (;;) {
    CVector x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = roots[i][index[i]];
    pair.solutions.push_back(std::move(x));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++index[i] < roots[i].size()) break;
      index[i] = 0;
      if (i == 0) return pair;
    }
    if (n == 0) return pair;
  }
}

std::vector<Polynomial> random_slices(const std::vector<std::string>& variables, std::size_t count, Rng& rng) {
  const std::size_t n = variables.size();
  if (count < 1 || count > n)
    throw Error("slice count " + std::to_string(count) + " out of range 1.." + std::to_string(n));
  std::vector<Polynomial> slices;
  for (std::size_t j = 0; j < count; ++j) {
    std::vector<Term> terms;
    terms.push_back({rng.unit_circle(), Exponents(n, 0)});
    for (std::size_t i = 0; i < n; ++i) {
      Exponents e(n, 0);
      e[i] = 1;
      terms.push_back({rng.unit_circle(), std::move(e)});
    }
    slices.emplace_back(variables, std::move(terms));
  }
  return slices;
}

PolySystem random_combinations(const PolySystem& s, std::size_t k, Rng& rng) {
  if (k == 0) throw Error("cannot form zero combinations");
  std::vector<Polynomial> out;
  for (std::size_t row = 0; row < k; ++row) {
    Polynomial sum(s.variables());
    for (const auto& p : s.polys()) sum = sum + p.scaled(rng.unit_circle());
    out.push_back(std::move(sum));
  }
  return PolySystem(s.variables(), std::move(out));
}

PolySystem square_up(const PolySystem& s, std::size_t k, Rng& rng) {
  if (k > s.equation_count())
    throw Error("cannot square up " + std::to_string(s.equation_count()) + " equations to " + std::to_string(k));
  return random_combinations(s, k, rng);
}

}  // namespace helios
