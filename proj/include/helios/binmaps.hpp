#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "helios/poly.hpp"

namespace helios {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

/// x_i = 0 for i in the zero set, x_i = c_i * lambda^{K_i} otherwise.
struct MonomialMap {
  std::vector<std::string> variables;
  std::vector<bool> zero;       // per variable
  std::size_t parameters = 0;   // k
  CVector coefficients;         // per variable, 0 on the zero set
  IntMatrix exponents;          // per variable, length k, zeros on the zero set

  std::size_t dimension() const noexcept { return parameters; }
  /// Point of the map at the given parameter values (length k).
  CVector point(std::span<const Complex> lambda) const;
};

/// True iff every equation has exactly two terms.
bool is_binomial(const PolySystem& s);

/// All maximal monomial maps of a binomial system. Finite toric parts
/// produce one zero-parameter map per branch of the coefficient roots.
/// Throws Error for non-binomial input or more than 20 variables.
std::vector<MonomialMap> monomial_maps(const PolySystem& s);

/// Substitutes the map and checks every equation collapses to the zero
/// Laurent polynomial (exact exponents, coefficients to 1e-10).
bool verify_map(const PolySystem& s, const MonomialMap& m);

/// Whether the image of `inner` lies in the closure of the image of `outer`,
/// tested at a generic point of `inner`.
bool contained_in(const MonomialMap& inner, const MonomialMap& outer);

/// "(x = 0, y = L1, z = L2)", with powers as L1**2, L1**(-1) and
/// non-unit coefficients as "(a + b*i)*L1".
std::string format_map(const MonomialMap& m);

}  // namespace helios
