#pragma once

#include <cstdint>
#include <vector>

#include "helios/poly.hpp"

namespace helios {

/// Largest dimension accepted by volume() and mixed_volume().
inline constexpr std::size_t kMaxPolytopeDimension = 6;

/// Convex hull of a finite set of integer lattice points.
class Polytope {
 public:
  /// Throws Error if `points` is empty or the points differ in dimension.
  explicit Polytope(std::vector<Exponents> points);

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<Exponents>& points() const noexcept { return points_; }

 private:
  std::size_t dimension_;
  std::vector<Exponents> points_;
};

/// Euclidean volume of a lattice polytope as the exact rational normalized / dimension!.
struct LatticeVolume {
  std::int64_t normalized = 0;  // dimension! times the volume, always an integer
  std::size_t dimension = 0;

  std::int64_t denominator() const;
  double value() const { return static_cast<double>(normalized) / static_cast<double>(denominator()); }
};

/// Bezout number: product of the equation degrees. Throws for non-square systems.
std::uint64_t total_degree(const PolySystem& s);

/// Volume of the convex hull; zero when the hull is lower dimensional.
/// Throws Error when the dimension exceeds kMaxPolytopeDimension.
LatticeVolume volume(const Polytope& p);

/// Points that generate the same hull: the vertex set when the hull is full
/// dimensional, otherwise the deduplicated input.
std::vector<Exponents> hull_generators(const std::vector<Exponents>& points);

/// Minkowski sum of two point sets, deduplicated.
std::vector<Exponents> minkowski_sum(const std::vector<Exponents>& a, const std::vector<Exponents>& b);

/// Mixed volume of the Newton polytopes by inclusion-exclusion over all
/// 2^n - 1 partial Minkowski sums. Counts isolated solutions with all
/// coordinates nonzero (not the stable mixed volume).
std::uint64_t mixed_volume(const PolySystem& s);

}  // namespace helios
