#pragma once

#include <optional>
#include <span>
#include <vector>

#include "helios/poly.hpp"

namespace helios {

/// Pivots smaller than this in magnitude make a matrix numerically singular.
inline constexpr double kSingularPivot = 1e-14;

/// LU factorization with partial pivoting of a small dense square matrix.
class LuDecomposition {
 public:
  explicit LuDecomposition(CMatrix a);

  /// False when some pivot fell below kSingularPivot.
  bool nonsingular() const noexcept { return nonsingular_; }
  double smallest_pivot() const noexcept { return smallest_pivot_; }

  /// Solves A x = b. Only valid when nonsingular().
  CVector solve(std::span<const Complex> b) const;
  CMatrix inverse() const;

 private:
  CMatrix lu_;
  std::vector<std::size_t> perm_;
  bool nonsingular_ = true;
  double smallest_pivot_ = 0.0;
};

/// Solves A x = b, or nullopt when A is numerically singular.
std::optional<CVector> solve_linear(const CMatrix& a, std::span<const Complex> b);

/// Max column sum.
double norm1(const CMatrix& a);

}  // namespace helios
