#pragma once

#include <vector>

#include "helios/poly.hpp"
#include "helios/rng.hpp"

namespace helios {

/// A start system together with all of its solutions.
struct StartPair {
  PolySystem g;
  std::vector<CVector> solutions;
  std::vector<int> degrees;
};

/// g_i = x_i^{d_i} - r_i with d_i = deg f_i and r_i random on the unit circle.
/// Solutions enumerate every combination of d_i-th roots, last variable fastest.
StartPair total_degree_start(const PolySystem& f, Rng& rng);

/// `count` affine polynomials c_0 + sum_i c_i x_i with unit-modulus random coefficients.
std::vector<Polynomial> random_slices(const std::vector<std::string>& variables, std::size_t count, Rng& rng);

/// k random complex linear combinations of the equations of s, k <= N.
PolySystem square_up(const PolySystem& s, std::size_t k, Rng& rng);

/// Like square_up without the k <= N restriction: for k > N the result has
/// rank N and is used to pad underdetermined systems to n equations.
PolySystem random_combinations(const PolySystem& s, std::size_t k, Rng& rng);

}  // namespace helios
