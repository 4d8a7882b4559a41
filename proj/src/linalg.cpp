#include "helios/linalg.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "helios/error.hpp"

namespace helios {

LuDecomposition::LuDecomposition(CMatrix a) : lu_(std::move(a)) {
  const std::size_t n = lu_.rows();
  if (lu_.cols() != n) throw DimensionError("LU needs a square matrix");
  perm_.resize(n);
  std::iota(perm_.begin(), perm_.end(), std::size_t{0});
  smallest_pivot_ = n == 0 ? 0.0 : std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu_(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(lu_(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    smallest_pivot_ = std::min(smallest_pivot_, best);
    if (best < kSingularPivot) {
      nonsingular_ = false;
      continue;
    }
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
      std::swap(perm_[k], perm_[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex factor = lu_(i, k) / lu_(k, k);
      lu_(i, k) = factor;
      for (std::size_t j = k + 1; j < n; ++j) lu_(i, j) -= factor * lu_(k, j);
    }
  }
}

CVector LuDecomposition::solve(std::span<const Complex> b) const {
  const std::size_t n = lu_.rows();
  if (b.size() != n) throw DimensionError("right-hand side length mismatch");
  CVector x(n);
  for (std::size_t i = 0; i < n; ++i) {
    Complex s = b[perm_[i]];
    for (std::size_t j = 0; j < i; ++j) s -= lu_(i, j) * x[j];
    x[i] = s;
  }
  for (std::size_t i = n; i-- > 0;) {
    Complex s = x[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= lu_(i, j) * x[j];
    x[i] = s / lu_(i, i);
  }
  return x;
}

CMatrix LuDecomposition::inverse() const {
  const std::size_t n = lu_.rows();
  CMatrix inv(n, n);
  CVector e(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), Complex{});
    e[j] = 1.0;
    const CVector col = solve(e);
    for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
  }
  return inv;
}

std::optional<CVector> solve_linear(const CMatrix& a, std::span<const Complex> b) {
  LuDecomposition lu(a);
  if (!lu.nonsingular()) return std::nullopt;
  CVector x = lu.solve(b);
  for (const auto& v : x)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return std::nullopt;
  return x;
}

double norm1(const CMatrix& a) {
  double best = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) s += std::abs(a(i, j));
    best = std::max(best, s);
  }
  return best;
}

}  // namespace helios
