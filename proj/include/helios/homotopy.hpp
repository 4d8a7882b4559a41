#pragma once

#include <string>
#include <vector>

#include "helios/poly.hpp"
#include "helios/rng.hpp"

namespace helios {

/// Value of a homotopy and its derivatives at one (x, t).
struct HomotopyValue {
  CVector value;  // h(x, t)
  CMatrix jx;     // dh/dx
  CVector dt;     // dh/dt
};

/// h(x, t) = gamma (1 - t) g(x) + t f(x), evaluated lazily from f and g.
///
/// A natural-parameter homotopy (1 - t) f(l0, x) + t f(l1, x) is the same
/// object with g = f(l0, .), f = f(l1, .) and gamma = 1.
class Homotopy {
 public:
  /// Throws DimensionError unless f and g are square over identical variables,
  /// Error unless |gamma| = 1.
  Homotopy(PolySystem target, PolySystem start, Complex gamma);

  const PolySystem& target() const noexcept { return target_; }
  const PolySystem& start() const noexcept { return start_; }
  Complex gamma() const noexcept { return gamma_; }
  std::size_t dimension() const noexcept { return target_.variable_count(); }

  HomotopyValue evaluate(std::span<const Complex> x, double t) const;
  CVector value(std::span<const Complex> x, double t) const;

 private:
  PolySystem target_;
  PolySystem start_;
  Complex gamma_;
};

/// Gamma drawn uniformly on the unit circle.
Homotopy make_gamma_homotopy(const PolySystem& f, const PolySystem& g, Rng& rng);

/// Substitutes values for the named variables; the result lives in the remaining variables.
PolySystem substitute(const PolySystem& s, const std::vector<std::string>& names, std::span<const Complex> values);

/// Blend between two instances of a parametric family. Throws Error for an
/// unknown parameter name, DimensionError if an instance is not square.
Homotopy make_parameter_homotopy(const PolySystem& family, const std::vector<std::string>& parameters,
                                 std::span<const Complex> lambda0, std::span<const Complex> lambda1);

}  // namespace helios
