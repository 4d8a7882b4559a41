#pragma once

#include <string>

#include "helios/poly.hpp"

namespace helios {

/// Cyclic n-roots over x0..x{n-1}: e_k = sum_i prod_{j=i}^{i+k-1} x_{j mod n}
/// for k = 1..n-1, then x0*...*x{n-1} - 1. Throws Error for n < 2.
PolySystem cyclic(int n);

/// Noonburg network over x1..xn: x_i * sum_{j != i} x_j^2 - 1.1 x_i + 1.
/// Throws Error for n < 2.
PolySystem noon(int n);

/// Dispatch by name ("cyclic" or "noon").
PolySystem family(const std::string& name, int n);

}  // namespace helios
